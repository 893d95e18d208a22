#include "chevrep/svnrep.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "chevrep/bounds.hpp"

namespace chevrep::svnrep {

namespace {

std::complex<double> root_of_unity(std::int64_t k, std::int64_t m) {
  const double a = 2.0 * std::numbers::pi * static_cast<double>(((k % m) + m) % m) /
                   static_cast<double>(m);
  return {std::cos(a), std::sin(a)};
}

}  // namespace

std::int64_t ExtendedCharacter::exponent(const HeisCoords& u) const {
  const auto& ring = heis.ring();
  for (int k = 0; k < heis.num_t(); ++k)
    if (!heis.is_rep_pos(k) && !ring->is_zero(u.t[k]))
      throw std::invalid_argument("element is not in the polarizing subgroup");
  const std::int64_t m = ring->char_order();
  std::int64_t e = ring->character_exponent(b, u.z);
  for (int i = 0; i < heis.d(); ++i)
    e += ring->character_exponent(c[i], u.t[heis.rep_position(i)]);
  return ((e % m) + m) % m;
}

ExtendedCharacter extend_to_A(const HeisGroup& h, const RingElement& b,
                              std::vector<RingElement> c, bool force_degenerate) {
  if (!heisenberg::is_generic(h, b) && !force_degenerate)
    throw std::invalid_argument("central character is not generic");
  if (c.empty()) c.assign(h.d(), h.ring()->zero());
  if (static_cast<int>(c.size()) != h.d())
    throw std::invalid_argument("extension needs one parameter per pair");
  return ExtendedCharacter{h, b, std::move(c)};
}

MonomialRep::MonomialRep(ExtendedCharacter chi, std::uint64_t cap) : chi_(std::move(chi)) {
  const HeisGroup& h = chi_.heis;
  const std::uint64_t s = h.ring()->size();
  std::uint64_t dim = 1;
  for (int i = 0; i < h.d(); ++i) {
    if (dim > cap / s + 1) throw std::length_error("induced dimension exceeds cap");
    dim *= s;
    mate_positions_.push_back(h.mate_position(i));
  }
  if (dim > cap) throw std::length_error("induced dimension exceeds cap");
  dim_ = static_cast<int>(dim);
}

std::int64_t MonomialRep::order_m() const { return heis().ring()->char_order(); }

HeisCoords MonomialRep::coset_rep(std::uint64_t x) const {
  const HeisGroup& h = chi_.heis;
  const std::uint64_t s = h.ring()->size();
  HeisCoords u = h.identity();
  for (int mp : mate_positions_) {
    u.t[mp] = h.ring()->element_at(x % s);
    x /= s;
  }
  return u;
}

std::uint64_t MonomialRep::coset_index(const HeisCoords& w) const {
  const HeisGroup& h = chi_.heis;
  const std::uint64_t s = h.ring()->size();
  std::uint64_t x = 0;
  for (auto it = mate_positions_.rbegin(); it != mate_positions_.rend(); ++it)
    x = x * s + h.ring()->index_of(w.t[*it]);
  return x;
}

MonomialRep::Image MonomialRep::image(const HeisCoords& g) const {
  const HeisGroup& h = chi_.heis;
  Image im;
  im.col.resize(dim_);
  im.exp.resize(dim_);
  for (int y = 0; y < dim_; ++y) {
    const HeisCoords w = h.multiply(coset_rep(y), g);
    const std::uint64_t x = coset_index(w);
    const HeisCoords a = h.multiply(w, h.inverse(coset_rep(x)));
    im.col[y] = static_cast<int>(x);
    im.exp[y] = chi_.exponent(a);
  }
  return im;
}

std::complex<double> MonomialRep::trace(const HeisCoords& g) const {
  const Image im = image(g);
  std::complex<double> t = 0.0;
  const std::int64_t m = order_m();
  for (int y = 0; y < dim_; ++y)
    if (im.col[y] == y) t += root_of_unity(im.exp[y], m);
  return t;
}

MonomialRep induce(const ExtendedCharacter& chi, std::uint64_t cap) {
  return MonomialRep(chi, cap);
}

double character_self_inner_product(
    const HeisGroup& h, const std::function<std::complex<double>(const HeisCoords&)>& tr,
    std::uint64_t cap) {
  const std::uint64_t n = h.size_u64();
  if (n > cap) throw std::length_error("|U| exceeds the inner-product cap");
  double acc = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) acc += std::norm(tr(h.element_at(i)));
  return acc / static_cast<double>(n);
}

double character_self_inner_product(const MonomialRep& rep, std::uint64_t cap) {
  return character_self_inner_product(
      rep.heis(), [&](const HeisCoords& u) { return rep.trace(u); }, cap);
}

bool is_irreducible(const MonomialRep& rep, double tol, std::uint64_t cap) {
  return std::abs(character_self_inner_product(rep, cap) - 1.0) <= tol;
}

bool svn_uniqueness_check(const HeisGroup& h, const RingElement& b, std::uint64_t sample_limit,
                          std::uint64_t seed, double tol) {
  const auto& ring = h.ring();
  const std::uint64_t s = ring->size();
  std::uint64_t total = 1;
  bool exhaustive = true;
  for (int i = 0; i < h.d(); ++i) {
    if (total > sample_limit / s + 1) { exhaustive = false; break; }
    total *= s;
  }
  if (total > sample_limit) exhaustive = false;

  std::vector<std::vector<RingElement>> cvecs;
  if (exhaustive) {
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<RingElement> c;
      std::uint64_t v = idx;
      for (int i = 0; i < h.d(); ++i) {
        c.push_back(ring->element_at(v % s));
        v /= s;
      }
      cvecs.push_back(std::move(c));
    }
  } else {
    std::mt19937_64 rng(seed);
    cvecs.push_back(std::vector<RingElement>(h.d(), ring->zero()));
    for (std::uint64_t k = 1; k < sample_limit; ++k) {
      std::vector<RingElement> c;
      for (int i = 0; i < h.d(); ++i) c.push_back(ring->element_at(rng() % s));
      cvecs.push_back(std::move(c));
    }
  }

  const std::uint64_t nu = h.size_u64();
  std::vector<std::complex<double>> ref;
  for (std::size_t k = 0; k < cvecs.size(); ++k) {
    const MonomialRep rep = induce(extend_to_A(h, b, cvecs[k]));
    if (k == 0) {
      ref.reserve(nu);
      for (std::uint64_t i = 0; i < nu; ++i) ref.push_back(rep.trace(h.element_at(i)));
      continue;
    }
    for (std::uint64_t i = 0; i < nu; ++i)
      if (std::abs(rep.trace(h.element_at(i)) - ref[i]) > tol) return false;
  }
  return true;
}

RingElement conjugate_character(const HeisGroup& h, const RingElement& b,
                                const RingElement& lambda, int alpha_rootidx) {
  const auto& ring = h.ring();
  if (!ring->is_unit(lambda))
    throw std::invalid_argument("conjugation parameter must be a unit");
  const int pw = h.system().pairing(h.highest(), alpha_rootidx);
  RingElement lam_pow = ring->one();
  if (pw >= 0)
    for (int k = 0; k < pw; ++k) lam_pow = ring->mul(lam_pow, lambda);
  else {
    const RingElement li = ring->inv_unit(lambda);
    for (int k = 0; k < -pw; ++k) lam_pow = ring->mul(lam_pow, li);
  }
  return ring->mul(b, lam_pow);
}

std::uint64_t orbit_count_brute(const rootsys::RootSystem& rs, const RingPtr& ring) {
  const int f = rs.f_phi().first;
  std::set<std::uint64_t> seen;
  for (const RingElement& lam : ring->units())
    seen.insert(ring->index_of(ring->pow(lam, static_cast<std::uint64_t>(f))));
  return seen.size();
}

std::string BoundCertificate::to_json() const {
  std::ostringstream os;
  os << "{\"phi\": \"" << phi << "\", \"q\": " << q << ", \"n\": " << n << ", \"d\": " << d
     << ", \"irrep_dim\": " << irrep_dim.str() << ", \"orbit_count\": " << orbit_count.str()
     << ", \"bound\": " << bound.str() << "}";
  return os.str();
}

BoundCertificate lower_bound_certificate(const rootsys::RootSystem& rs, const RingPtr& ring) {
  bounds::validate_query(rs.id(), static_cast<std::int64_t>(ring->q()));
  BoundCertificate cert;
  cert.phi = rs.id().name();
  cert.q = ring->q();
  cert.n = ring->n();
  cert.d = rs.sigma_plus().d;
  cert.f = rs.f_phi().first;
  cert.irrep_dim = boost::multiprecision::pow(cpp_int(ring->q()),
                                              static_cast<unsigned>(cert.d * cert.n));
  if (ring->unit_count() <= 200000) {
    cert.orbit_count = orbit_count_brute(rs, ring);
  } else {
    cert.orbit_count = bounds::orbit_count_closed(rs.id(), static_cast<std::int64_t>(ring->q()),
                                                  ring->n());
  }
  cert.bound = cert.orbit_count * cert.irrep_dim;
  const cpp_int expect = bounds::h_f(rs.id(), static_cast<std::int64_t>(ring->q()), ring->n());
  if (cert.bound != expect)
    throw std::logic_error("certificate bound disagrees with the closed form");
  return cert;
}

}  // namespace chevrep::svnrep
