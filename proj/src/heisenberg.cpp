#include "chevrep/heisenberg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace chevrep::heisenberg {

HeisGroup HeisGroup::build(StructureTablePtr table, RingPtr ring) {
  const auto& rs = table->system();
  if (rs.id().family == rootsys::Family::G && ring->p() < 5)
    throw std::invalid_argument("G2 requires p >= 5");

  HeisGroup h;
  h.table_ = std::move(table);
  h.ring_ = std::move(ring);
  h.sigma_ = rs.sigma_plus();

  for (const auto& [rep, mate] : h.sigma_.pairs) {
    h.roots_.push_back(rep);
    h.roots_.push_back(mate);
  }
  std::sort(h.roots_.begin(), h.roots_.end());

  const int m = static_cast<int>(h.roots_.size());
  h.partner_.assign(m, -1);
  h.rep_flag_.assign(m, false);
  for (const auto& [rep, mate] : h.sigma_.pairs) {
    const int pr = h.pos_of_root_raw(rep), pm = h.pos_of_root_raw(mate);
    h.partner_[pr] = pm;
    h.partner_[pm] = pr;
    h.rep_flag_[pr] = true;
    h.rep_pos_.push_back(pr);
  }

  // Commutator constants c_i = N_{mate, rep}; on small algebras re-derive
  // them through the matrix peel-off fit and insist the two routes agree.
  for (std::size_t i = 0; i < h.sigma_.pairs.size(); ++i) {
    const auto [rep, mate] = h.sigma_.pairs[i];
    h.cc_.push_back(h.table_->n_const(mate, rep));
  }
  if (h.table_->dim() <= 100 && !h.sigma_.pairs.empty()) {
    adgroup::GroupContext ctx25(
        h.table_, localring::Ring::make({localring::RingKind::ZpN, 5, 1, 2, {}}));
    adgroup::GroupContext ctx27(
        h.table_, localring::Ring::make({localring::RingKind::ZpN, 3, 1, 3, {}}));
    for (std::size_t i = 0; i < h.sigma_.pairs.size(); ++i) {
      const auto [rep, mate] = h.sigma_.pairs[i];
      const auto terms = adgroup::chevalley_constants_with(ctx25, ctx27, mate, rep);
      if (terms.size() != 1 || terms[0].i != 1 || terms[0].j != 1)
        throw std::logic_error("pair commutator is not a single central factor");
      // [x_mate(t), x_rep(s)] = x_h(C_{1,1} (-s) t), so c_i = -C_{1,1}
      if (-terms[0].c != h.cc_[i])
        throw std::logic_error("fitted pair constant disagrees with the structure table");
    }
  }
  for (std::int64_t c : h.cc_)
    if (!h.ring_->is_unit(h.ring_->from_int(c)))
      throw std::logic_error("pair constant is not a unit in the ring");
  return h;
}

int HeisGroup::pos_of_root_raw(int rootidx) const {
  for (std::size_t k = 0; k < roots_.size(); ++k)
    if (roots_[k] == rootidx) return static_cast<int>(k);
  return -1;
}

int HeisGroup::pos_of_root(int rootidx) const { return pos_of_root_raw(rootidx); }

cpp_int HeisGroup::order() const {
  return boost::multiprecision::pow(cpp_int(ring_->size()), num_t() + 1);
}

std::uint64_t HeisGroup::size_u64() const {
  const std::uint64_t s = ring_->size();
  std::uint64_t acc = 1;
  for (int k = 0; k < num_t() + 1; ++k) {
    if (acc > (std::uint64_t(1) << 62) / s) throw std::overflow_error("|U| exceeds 2^62");
    acc *= s;
  }
  return acc;
}

HeisCoords HeisGroup::identity() const {
  HeisCoords u;
  u.t.assign(num_t(), ring_->zero());
  u.z = ring_->zero();
  return u;
}

HeisCoords HeisGroup::generator_coords(int rootidx, const RingElement& v) const {
  HeisCoords u = identity();
  if (rootidx == sigma_.highest) {
    u.z = v;
    return u;
  }
  const int pos = pos_of_root(rootidx);
  if (pos < 0) throw std::invalid_argument("root is not a coordinate of U");
  u.t[pos] = v;
  return u;
}

bool HeisGroup::is_identity(const HeisCoords& u) const {
  if (!ring_->is_zero(u.z)) return false;
  for (const auto& v : u.t)
    if (!ring_->is_zero(v)) return false;
  return true;
}

HeisCoords HeisGroup::multiply(const HeisCoords& u, const HeisCoords& v) const {
  HeisCoords w;
  w.t.resize(num_t());
  for (int k = 0; k < num_t(); ++k) w.t[k] = ring_->add(u.t[k], v.t[k]);
  RingElement z = ring_->add(u.z, v.z);
  for (std::size_t i = 0; i < rep_pos_.size(); ++i) {
    const int r = rep_pos_[i], m = partner_[r];
    z = ring_->add(z, ring_->mul(ring_->from_int(cc_[i]), ring_->mul(v.t[r], u.t[m])));
  }
  w.z = z;
  return w;
}

HeisCoords HeisGroup::inverse(const HeisCoords& u) const {
  HeisCoords w;
  w.t.resize(num_t());
  for (int k = 0; k < num_t(); ++k) w.t[k] = ring_->neg(u.t[k]);
  RingElement z = ring_->neg(u.z);
  for (std::size_t i = 0; i < rep_pos_.size(); ++i) {
    const int r = rep_pos_[i], m = partner_[r];
    z = ring_->add(z, ring_->mul(ring_->from_int(cc_[i]), ring_->mul(u.t[r], u.t[m])));
  }
  w.z = z;
  return w;
}

HeisCoords HeisGroup::commutator(const HeisCoords& u, const HeisCoords& v) const {
  return multiply(inverse(multiply(v, u)), multiply(u, v));
}

std::uint64_t HeisGroup::index_of(const HeisCoords& u) const {
  const std::uint64_t s = ring_->size();
  std::uint64_t idx = ring_->index_of(u.z);
  for (int k = num_t() - 1; k >= 0; --k) idx = idx * s + ring_->index_of(u.t[k]);
  return idx;
}

HeisCoords HeisGroup::element_at(std::uint64_t idx) const {
  const std::uint64_t s = ring_->size();
  HeisCoords u;
  u.t.resize(num_t());
  for (int k = 0; k < num_t(); ++k) {
    u.t[k] = ring_->element_at(idx % s);
    idx /= s;
  }
  u.z = ring_->element_at(idx % s);
  return u;
}

ringmat::RMatrix HeisGroup::to_matrix(const adgroup::GroupContext& ctx,
                                      const HeisCoords& u) const {
  ringmat::RMatrix m = ctx.identity_matrix();
  for (int k = 0; k < num_t(); ++k) m = m.mul(ctx.generator(roots_[k], u.t[k]));
  return m.mul(ctx.generator(sigma_.highest, u.z));
}

std::string HeisGroup::coords_json(const HeisCoords& u) const {
  nlohmann::json j;
  nlohmann::json ts = nlohmann::json::array();
  for (const auto& v : u.t) ts.push_back(ring_->fp_coords(v));
  j["t"] = std::move(ts);
  j["z"] = ring_->fp_coords(u.z);
  return j.dump();
}

CenterDerived center_and_derived(const HeisGroup& h, std::uint64_t cap) {
  const std::uint64_t n = h.size_u64();
  if (n > cap) throw std::length_error("|U| exceeds the enumeration cap");
  CenterDerived out;
  for (std::uint64_t i = 0; i < n; ++i) {
    const HeisCoords u = h.element_at(i);
    bool central = true;
    for (std::uint64_t j = 0; j < n && central; ++j) {
      const HeisCoords v = h.element_at(j);
      central = h.multiply(u, v) == h.multiply(v, u);
    }
    if (central) out.center.push_back(u);
  }
  std::set<std::uint64_t> comm_vals;
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = i + 1; j < n; ++j)
      comm_vals.insert(h.index_of(h.commutator(h.element_at(i), h.element_at(j))));
  // close the distinct commutator values under multiplication (they are
  // central here, but closure is cheap enough not to assume it)
  std::set<std::uint64_t> der = comm_vals;
  der.insert(h.index_of(h.identity()));
  std::vector<std::uint64_t> frontier(der.begin(), der.end());
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t ei : frontier)
      for (std::uint64_t gi : comm_vals) {
        const std::uint64_t k = h.index_of(h.multiply(h.element_at(ei), h.element_at(gi)));
        if (der.insert(k).second) next.push_back(k);
      }
    frontier = std::move(next);
  }
  for (std::uint64_t k : der) out.derived.push_back(h.element_at(k));
  return out;
}

bool is_generic(const HeisGroup& h, const RingElement& b) { return h.ring()->is_unit(b); }

namespace {

// z coordinate of [u, v] for coset representatives (z = 0 sections)
RingElement pairing_z(const HeisGroup& h, const HeisCoords& u, const HeisCoords& v) {
  return h.commutator(u, v).z;
}

std::uint64_t coset_count(const HeisGroup& h, std::uint64_t cap) {
  const std::uint64_t s = h.ring()->size();
  std::uint64_t n = 1;
  for (int k = 0; k < h.num_t(); ++k) {
    if (n > cap / s + 1) throw std::length_error("|U/Z| exceeds the enumeration cap");
    n *= s;
  }
  if (n > cap) throw std::length_error("|U/Z| exceeds the enumeration cap");
  return n;
}

HeisCoords coset_at(const HeisGroup& h, std::uint64_t idx) {
  const std::uint64_t s = h.ring()->size();
  HeisCoords u = h.identity();
  for (int k = 0; k < h.num_t(); ++k) {
    u.t[k] = h.ring()->element_at(idx % s);
    idx /= s;
  }
  return u;
}

}  // namespace

bool pairing_nondegenerate(const HeisGroup& h, const RingElement& b, std::uint64_t cap) {
  const std::uint64_t n = coset_count(h, cap);
  const auto& ring = h.ring();
  for (std::uint64_t i = 1; i < n; ++i) {
    const HeisCoords u = coset_at(h, i);
    bool paired = false;
    for (std::uint64_t j = 1; j < n && !paired; ++j)
      paired = ring->character_exponent(b, pairing_z(h, u, coset_at(h, j))) != 0;
    if (!paired) return false;
  }
  return true;
}

Polarizing polarizing(const HeisGroup& h) {
  Polarizing p;
  for (int i = 0; i < h.d(); ++i) p.span_positions.push_back(h.rep_position(i));
  // no two span positions may be partners (that is what makes A abelian)
  for (int a : p.span_positions)
    for (int b : p.span_positions)
      if (h.partner(a) == b) throw std::logic_error("polarizing span is not abelian");
  const cpp_int s(h.ring()->size());
  p.order = boost::multiprecision::pow(s, h.d() + 1);
  p.index = boost::multiprecision::pow(s, h.d());
  return p;
}

bool polarizing_self_perp(const HeisGroup& h, const RingElement& b, std::uint64_t cap) {
  if (!is_generic(h, b)) throw std::invalid_argument("self-perp check needs a generic b");
  const std::uint64_t n = coset_count(h, cap);
  const auto& ring = h.ring();
  auto in_abar = [&](const HeisCoords& u) {
    for (int k = 0; k < h.num_t(); ++k)
      if (!h.is_rep_pos(k) && !ring->is_zero(u.t[k])) return false;
    return true;
  };
  for (std::uint64_t i = 0; i < n; ++i) {
    const HeisCoords u = coset_at(h, i);
    bool perp = true;
    for (std::uint64_t j = 0; j < n && perp; ++j) {
      const HeisCoords a = coset_at(h, j);
      if (!in_abar(a)) continue;
      perp = ring->character_exponent(b, pairing_z(h, u, a)) == 0;
    }
    if (perp != in_abar(u)) return false;
  }
  return true;
}

}  // namespace chevrep::heisenberg
