#include "chevrep/localring.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace chevrep::localring {

namespace {

std::int64_t ipow_checked(std::int64_t b, int e, std::int64_t cap) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > cap / b) throw std::invalid_argument("ring too large for exact coordinate arithmetic");
    r *= b;
  }
  return r;
}

std::int64_t mod(std::int64_t v, std::int64_t m) {
  v %= m;
  return v < 0 ? v + m : v;
}

// --- dense polynomial arithmetic over Z/m (m = p or p^n), lowest first ---

using Poly = std::vector<std::int64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t m) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = mod(r[i + j] + a[i] * b[j], m);
  }
  trim(r);
  return r;
}

// f monic of degree l (coeffs f[0..l], f[l] = 1); reduces r in place.
void poly_reduce(Poly& r, const Poly& f, std::int64_t m) {
  const int l = static_cast<int>(f.size()) - 1;
  for (int k = static_cast<int>(r.size()) - 1; k >= l; --k) {
    const std::int64_t c = r[k];
    if (c == 0) continue;
    r[k] = 0;
    for (int i = 0; i < l; ++i) r[k - l + i] = mod(r[k - l + i] - c * f[i], m);
  }
  trim(r);
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::int64_t m) {
  Poly r = poly_mul(a, b, m);
  poly_reduce(r, f, m);
  return r;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::int64_t m) {
  Poly r = {1};
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, m);
    base = poly_mulmod(base, base, f, m);
    e >>= 1;
  }
  return r;
}

Poly poly_compose_mod(const Poly& g, const Poly& h, const Poly& f, std::int64_t m) {
  // g(h(x)) mod f, Horner.
  Poly r;
  for (int i = static_cast<int>(g.size()) - 1; i >= 0; --i) {
    r = poly_mulmod(r, h, f, m);
    if (g[i] != 0) {
      if (r.empty()) r.push_back(0);
      r[0] = mod(r[0] + g[i], m);
    }
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
  auto inv_mod_p = [p](std::int64_t v) {
    std::int64_t r = 1, e = p - 2, base = mod(v, p);
    while (e) {
      if (e & 1) r = mod(r * base, p);
      base = mod(base * base, p);
      e >>= 1;
    }
    return r;
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    const std::int64_t lead_inv = inv_mod_p(b.back());
    Poly r = a;
    for (int k = static_cast<int>(r.size()) - 1; k >= static_cast<int>(b.size()) - 1; --k) {
      const std::int64_t c = mod(r[k] * lead_inv, p);
      if (c == 0) continue;
      for (size_t i = 0; i < b.size(); ++i)
        r[k - (b.size() - 1) + i] = mod(r[k - (b.size() - 1) + i] - c * b[i], p);
    }
    trim(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool poly_is_irreducible(const Poly& f, std::int64_t p) {
  const int l = static_cast<int>(f.size()) - 1;
  if (l < 1 || f[l] != 1) return false;
  if (l == 1) return true;
  // Rabin: x^(p^l) == x mod f, and gcd(x^(p^(l/r)) - x, f) = 1 for primes r | l.
  const Poly x = {0, 1};
  Poly frob = poly_powmod(x, static_cast<std::uint64_t>(p), f, p);  // x^p
  std::vector<Poly> frob_pow(l + 1);                                // x^(p^k)
  frob_pow[1] = frob;
  for (int k = 2; k <= l; ++k) frob_pow[k] = poly_compose_mod(frob_pow[k - 1], frob, f, p);
  Poly top = frob_pow[l];
  if (!top.empty()) top[1] = mod(top[1] - 1, p);
  else top = {0, p - 1};
  trim(top);
  if (!top.empty()) return false;
  for (int r = 2; r <= l; ++r) {
    if (l % r != 0 || !is_prime(r)) continue;
    Poly g = frob_pow[l / r];
    if (g.size() < 2) g.resize(2, 0);
    g[1] = mod(g[1] - 1, p);
    trim(g);
    Poly d = poly_gcd(f, g, p);
    if (d.size() != 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::int64_t v) {
  if (v < 2) return false;
  for (std::int64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::pair<std::int64_t, int> prime_power_split(std::int64_t q) {
  if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
  std::int64_t p = q;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) { p = d; break; }
  int l = 0;
  std::int64_t r = q;
  while (r % p == 0) { r /= p; ++l; }
  if (r != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return {p, l};
}

std::string kind_name(RingKind k) {
  switch (k) {
    case RingKind::ZpN: return "zpn";
    case RingKind::Series: return "series";
    case RingKind::Galois: return "galois";
  }
  throw std::logic_error("unreachable ring kind");
}

RingKind kind_from_name(const std::string& s) {
  if (s == "zpn") return RingKind::ZpN;
  if (s == "series") return RingKind::Series;
  if (s == "galois") return RingKind::Galois;
  throw std::invalid_argument("unknown ring kind: " + s);
}

std::vector<std::int64_t> default_modulus(std::int64_t p, int l) {
  if (l == 1) return {0, 1};
  std::int64_t total = 1;
  for (int i = 0; i < l; ++i) total *= p;
  for (std::int64_t v = 0; v < total; ++v) {
    Poly f(l + 1, 0);
    std::int64_t w = v;
    for (int i = 0; i < l; ++i) { f[i] = w % p; w /= p; }
    f[l] = 1;
    if (poly_is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible modulus found");  // cannot happen
}

std::complex<double> RootExp::value() const {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m));
}

RingPtr Ring::make(const RingSpec& spec_in) {
  RingSpec spec = spec_in;
  if (!is_prime(spec.p)) throw std::invalid_argument("p = " + std::to_string(spec.p) + " is not prime");
  if (spec.p == 2) throw std::invalid_argument("p = 2 is not supported");
  if (spec.l < 1 || spec.n < 1) throw std::invalid_argument("l and n must be >= 1");

  if (spec.kind == RingKind::ZpN) {
    if (spec.l != 1) throw std::invalid_argument("zpn requires l = 1");
    spec.modulus.clear();
  } else {
    if (spec.l == 1) {
      spec.modulus = {0, 1};
    } else {
      if (spec.modulus.size() != static_cast<size_t>(spec.l) + 1)
        throw std::invalid_argument("modulus must have degree l");
      for (auto& c : spec.modulus) c = mod(c, spec.p);
      if (spec.modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
      if (!poly_is_irreducible(spec.modulus, spec.p))
        throw std::invalid_argument("modulus is reducible mod p");
    }
  }

  auto ring = RingPtr(new Ring());
  auto* r = const_cast<Ring*>(ring.get());
  r->spec_ = spec;
  r->pn_ = ipow_checked(spec.p, spec.n, std::int64_t(1) << 31);

  double log2size = spec.l * spec.n * std::log2(static_cast<double>(spec.p));
  if (log2size > 62.0) throw std::invalid_argument("ring too large to enumerate exactly");
  r->q_ = 1;
  for (int i = 0; i < spec.l; ++i) r->q_ *= static_cast<std::uint64_t>(spec.p);
  r->size_ = 1;
  for (int i = 0; i < spec.n; ++i) r->size_ *= r->q_;

  switch (spec.kind) {
    case RingKind::ZpN:
      r->clen_ = 1;
      r->radix_ = {r->pn_};
      r->char_m_ = r->pn_;
      break;
    case RingKind::Series:
      r->clen_ = spec.l * spec.n;
      r->radix_.assign(r->clen_, spec.p);
      r->char_m_ = spec.p;
      break;
    case RingKind::Galois:
      r->clen_ = spec.l;
      r->radix_.assign(r->clen_, r->pn_);
      r->char_m_ = r->pn_;
      break;
  }
  return ring;
}

std::uint64_t Ring::unit_count() const { return size_ - size_ / q_; }

void Ring::check(const RingElement& a) const {
  if (a.c.size() != static_cast<size_t>(clen_))
    throw std::invalid_argument("ring element does not belong to this ring");
}

RingElement Ring::zero() const { return {std::vector<std::int64_t>(clen_, 0)}; }

RingElement Ring::one() const {
  RingElement e = zero();
  e.c[0] = 1;
  return e;
}

RingElement Ring::from_int(std::int64_t v) const {
  RingElement e = zero();
  switch (spec_.kind) {
    case RingKind::ZpN: e.c[0] = mod(v, pn_); break;
    case RingKind::Series: e.c[0] = mod(v, spec_.p); break;
    case RingKind::Galois: e.c[0] = mod(v, pn_); break;
  }
  return e;
}

RingElement Ring::add(const RingElement& a, const RingElement& b) const {
  check(a);
  check(b);
  RingElement r = a;
  for (int i = 0; i < clen_; ++i) r.c[i] = mod(r.c[i] + b.c[i], radix_[i]);
  return r;
}

RingElement Ring::sub(const RingElement& a, const RingElement& b) const {
  check(a);
  check(b);
  RingElement r = a;
  for (int i = 0; i < clen_; ++i) r.c[i] = mod(r.c[i] - b.c[i], radix_[i]);
  return r;
}

RingElement Ring::neg(const RingElement& a) const {
  check(a);
  RingElement r = a;
  for (int i = 0; i < clen_; ++i) r.c[i] = mod(-r.c[i], radix_[i]);
  return r;
}

std::vector<std::int64_t> Ring::fq_mul(const std::vector<std::int64_t>& a,
                                       const std::vector<std::int64_t>& b) const {
  Poly r = poly_mul(a, b, spec_.p);
  poly_reduce(r, spec_.modulus, spec_.p);
  r.resize(spec_.l, 0);
  return r;
}

std::vector<std::int64_t> Ring::gr_mul(const std::vector<std::int64_t>& a,
                                       const std::vector<std::int64_t>& b) const {
  Poly r = poly_mul(a, b, pn_);
  poly_reduce(r, spec_.modulus, pn_);
  r.resize(spec_.l, 0);
  return r;
}

RingElement Ring::mul(const RingElement& a, const RingElement& b) const {
  check(a);
  check(b);
  switch (spec_.kind) {
    case RingKind::ZpN:
      return {{mod(a.c[0] * b.c[0], pn_)}};
    case RingKind::Galois:
      return {gr_mul(a.c, b.c)};
    case RingKind::Series: {
      const int l = spec_.l, n = spec_.n;
      RingElement r = zero();
      for (int i = 0; i < n; ++i) {
        std::vector<std::int64_t> ai(a.c.begin() + i * l, a.c.begin() + (i + 1) * l);
        bool ai_zero = std::all_of(ai.begin(), ai.end(), [](auto v) { return v == 0; });
        if (ai_zero) continue;
        for (int j = 0; i + j < n; ++j) {
          std::vector<std::int64_t> bj(b.c.begin() + j * l, b.c.begin() + (j + 1) * l);
          auto prod = fq_mul(ai, bj);
          for (int k = 0; k < l; ++k)
            r.c[(i + j) * l + k] = mod(r.c[(i + j) * l + k] + prod[k], spec_.p);
        }
      }
      return r;
    }
  }
  throw std::logic_error("unreachable");
}

RingElement Ring::pow(const RingElement& a, std::uint64_t e) const {
  RingElement r = one(), base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool Ring::is_zero(const RingElement& a) const {
  check(a);
  return std::all_of(a.c.begin(), a.c.end(), [](auto v) { return v == 0; });
}

bool Ring::is_unit(const RingElement& a) const {
  check(a);
  switch (spec_.kind) {
    case RingKind::ZpN:
      return a.c[0] % spec_.p != 0;
    case RingKind::Galois:
      return std::any_of(a.c.begin(), a.c.end(), [&](auto v) { return v % spec_.p != 0; });
    case RingKind::Series:
      // unit iff the constant F_q coefficient (t^0 block) is nonzero
      for (int i = 0; i < spec_.l; ++i)
        if (a.c[i] != 0) return true;
      return false;
  }
  throw std::logic_error("unreachable");
}

RingElement Ring::inv_unit(const RingElement& a) const {
  if (!is_unit(a)) throw std::domain_error("inverse of a non-unit");
  RingElement r = pow(a, unit_count() - 1);  // unit group has order q^n - q^(n-1)
  if (!(mul(r, a) == one())) throw std::logic_error("unit inversion failed");
  return r;
}

RingElement Ring::element_at(std::uint64_t idx) const {
  if (idx >= size_) throw std::out_of_range("element index out of range");
  RingElement e = zero();
  for (int i = 0; i < clen_; ++i) {
    e.c[i] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(radix_[i]));
    idx /= static_cast<std::uint64_t>(radix_[i]);
  }
  return e;
}

std::uint64_t Ring::index_of(const RingElement& a) const {
  check(a);
  std::uint64_t idx = 0;
  for (int i = clen_ - 1; i >= 0; --i)
    idx = idx * static_cast<std::uint64_t>(radix_[i]) + static_cast<std::uint64_t>(a.c[i]);
  return idx;
}

std::vector<RingElement> Ring::enumerate() const {
  std::vector<RingElement> out;
  out.reserve(size_);
  for (std::uint64_t i = 0; i < size_; ++i) out.push_back(element_at(i));
  return out;
}

std::vector<RingElement> Ring::units() const {
  std::vector<RingElement> out;
  out.reserve(unit_count());
  for (std::uint64_t i = 0; i < size_; ++i) {
    RingElement e = element_at(i);
    if (is_unit(e)) out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::int64_t> Ring::fp_coords(const RingElement& x) const {
  check(x);
  if (spec_.kind != RingKind::Galois) return x.c;
  // digit-expand each Z/p^n coefficient: basis x^i p^j at index j*l + i
  std::vector<std::int64_t> out(static_cast<size_t>(spec_.l) * spec_.n, 0);
  for (int i = 0; i < spec_.l; ++i) {
    std::int64_t v = x.c[i];
    for (int j = 0; j < spec_.n; ++j) { out[j * spec_.l + i] = v % spec_.p; v /= spec_.p; }
  }
  return out;
}

RingPtr Ring::base_ring() const {
  if (spec_.l == 1 && spec_.kind != RingKind::Galois) return shared_from_this();
  if (!base_) {
    RingSpec b;
    b.p = spec_.p;
    b.l = 1;
    b.n = spec_.n;
    b.kind = spec_.kind == RingKind::Series ? RingKind::Series : RingKind::ZpN;
    base_ = Ring::make(b);
  }
  return base_;
}

std::int64_t Ring::fq_trace(const std::vector<std::int64_t>& a) const {
  // trace of multiplication-by-a on F_q over F_p: sum of diagonal entries of
  // the matrix with columns a*y^i
  std::vector<std::int64_t> cur = a;
  std::int64_t tr = cur.empty() ? 0 : cur[0];
  for (int i = 1; i < spec_.l; ++i) {
    cur = fq_mul(cur, {0, 1});  // multiply by y
    tr = mod(tr + cur[i], spec_.p);
  }
  return mod(tr, spec_.p);
}

std::int64_t Ring::gr_trace(const std::vector<std::int64_t>& a) const {
  std::vector<std::int64_t> cur = a;
  std::int64_t tr = cur.empty() ? 0 : cur[0];
  for (int i = 1; i < spec_.l; ++i) {
    cur = gr_mul(cur, {0, 1});
    tr = mod(tr + cur[i], pn_);
  }
  return mod(tr, pn_);
}

RingElement Ring::trace(const RingElement& x) const {
  check(x);
  auto base = base_ring();
  switch (spec_.kind) {
    case RingKind::ZpN:
      return x;
    case RingKind::Galois:
      return {{gr_trace(x.c)}};
    case RingKind::Series: {
      RingElement out = base->zero();
      for (int j = 0; j < spec_.n; ++j) {
        std::vector<std::int64_t> block(x.c.begin() + j * spec_.l,
                                        x.c.begin() + (j + 1) * spec_.l);
        out.c[j] = fq_trace(block);
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

std::int64_t Ring::character_exponent(const RingElement& b, const RingElement& x) const {
  check(b);
  check(x);
  const RingElement y = mul(b, x);
  switch (spec_.kind) {
    case RingKind::ZpN:
      return y.c[0];
    case RingKind::Galois:
      return gr_trace(y.c);
    case RingKind::Series: {
      std::vector<std::int64_t> top(y.c.begin() + (spec_.n - 1) * spec_.l,
                                    y.c.begin() + spec_.n * spec_.l);
      return fq_trace(top);
    }
  }
  throw std::logic_error("unreachable");
}

void Ring::span_addmul(std::int64_t* acc, const std::int64_t* a, const std::int64_t* b) const {
  switch (spec_.kind) {
    case RingKind::ZpN:
      acc[0] = mod(acc[0] + a[0] * b[0], pn_);
      return;
    default: {
      // extension kinds stay on the generic path; desk-scale matrices only
      RingElement ea{std::vector<std::int64_t>(a, a + clen_)};
      RingElement eb{std::vector<std::int64_t>(b, b + clen_)};
      RingElement prod = mul(ea, eb);
      for (int i = 0; i < clen_; ++i) acc[i] = mod(acc[i] + prod.c[i], radix_[i]);
      return;
    }
  }
}

void Ring::span_add(std::int64_t* acc, const std::int64_t* a) const {
  for (int i = 0; i < clen_; ++i) acc[i] = mod(acc[i] + a[i], radix_[i]);
}

void Ring::span_neg(std::int64_t* x) const {
  for (int i = 0; i < clen_; ++i) x[i] = mod(-x[i], radix_[i]);
}

std::string Ring::to_string(const RingElement& x) const {
  auto v = fp_coords(x);
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

RootExp character_value(const AdditiveCharacter& chi, const RingElement& x) {
  std::int64_t k = chi.ring->character_exponent(chi.b, x);
  return {k, chi.ring->char_order()};
}

std::vector<AdditiveCharacter> enumerate_characters(const RingPtr& ring) {
  std::vector<AdditiveCharacter> out;
  out.reserve(ring->size());
  for (std::uint64_t i = 0; i < ring->size(); ++i) {
    AdditiveCharacter chi{ring, ring->element_at(i)};
    if (i != 0) {
      // separating element: some x with psi_b(x) != 1, so distinct b stay
      // distinct by linearity
      bool separated = false;
      for (std::uint64_t j = 0; j < ring->size(); ++j) {
        if (ring->character_exponent(chi.b, ring->element_at(j)) != 0) { separated = true; break; }
      }
      if (!separated)
        throw std::logic_error("nontrivial character with no separating element");
    }
    out.push_back(std::move(chi));
  }
  return out;
}

std::string ring_spec_to_json(const RingSpec& spec) {
  nlohmann::json j;
  j["kind"] = kind_name(spec.kind);
  j["p"] = spec.p;
  j["l"] = spec.l;
  j["n"] = spec.n;
  if (spec.kind != RingKind::ZpN) {
    auto m = spec.modulus.empty() ? std::vector<std::int64_t>{0, 1} : spec.modulus;
    j["modulus"] = m;
  }
  return j.dump();
}

RingSpec ring_spec_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  RingSpec spec;
  spec.kind = kind_from_name(j.at("kind").get<std::string>());
  spec.p = j.at("p").get<std::int64_t>();
  spec.l = j.at("l").get<int>();
  spec.n = j.at("n").get<int>();
  if (j.contains("modulus")) spec.modulus = j["modulus"].get<std::vector<std::int64_t>>();
  if (spec.kind != RingKind::ZpN && spec.modulus.empty() && spec.l > 1)
    throw std::invalid_argument("modulus required for extension rings");
  return spec;
}

}  // namespace chevrep::localring
