#include "chevrep/adgroup.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace chevrep::adgroup {

GroupContext::GroupContext(StructureTablePtr table, RingPtr ring)
    : table_(std::move(table)), ring_(std::move(ring)) {
  const int n = table_->system().num_roots();
  exps_.reserve(n);
  for (int a = 0; a < n; ++a) exps_.push_back(chevalley::exp_ad(*table_, a));
}

RMatrix GroupContext::identity_matrix() const { return RMatrix::identity(ring_, dim()); }

RMatrix GroupContext::generator(int rootidx, const RingElement& t) const {
  return chevalley::specialize(exps_.at(rootidx), ring_, t);
}

RMatrix GroupContext::torus(int rootidx, const RingElement& lambda) const {
  if (!ring_->is_unit(lambda))
    throw std::invalid_argument("torus element requires a unit parameter");
  const int neg = table_->system().negate_index(rootidx);
  auto w = [&](const RingElement& u) {
    const RMatrix x = generator(rootidx, u);
    return x.mul(generator(neg, ring_->neg(ring_->inv_unit(u)))).mul(x);
  };
  return w(lambda).mul(w(ring_->from_int(-1)));
}

RMatrix GroupContext::commutator(const RMatrix& g, const RMatrix& h) {
  return g.inverse().mul(h.inverse()).mul(g).mul(h);
}

namespace {

// Terms of the product for (a, b): all (i,j) in [1,3]^2 with ib+ja a root,
// sorted by (i+j, i).  Root strings cap i and j at 3.
std::vector<CommTerm> term_shapes(const rootsys::RootSystem& rs, int a, int b) {
  std::vector<CommTerm> terms;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      std::vector<std::int64_t> v = rs.root(b).coords2;
      const auto& va = rs.root(a).coords2;
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = v[k] * i + va[k] * j;
      const int idx = rs.index_of(v);
      if (idx >= 0) terms.push_back({i, j, idx, 0});
    }
  std::sort(terms.begin(), terms.end(), [](const CommTerm& x, const CommTerm& y) {
    return std::make_pair(x.i + x.j, x.i) < std::make_pair(y.i + y.j, y.i);
  });
  return terms;
}

// Single peel-off fit over one probe ring.  Every factor's argument is read
// off an (e_gamma, H_delta) entry -- exact because x_gamma(s) H_delta =
// H_delta - <gamma,delta> s e_gamma with no higher terms, and cross products
// of the remaining factors only reach levels strictly above the factor being
// read -- then the factor is cancelled from the left before reading the next.
std::vector<CommTerm> fit_over(const GroupContext& ctx, int a, int b,
                               std::int64_t t1v, std::int64_t t2v) {
  const auto& rs = ctx.table().system();
  const auto& ring = ctx.ring();
  std::vector<CommTerm> terms = term_shapes(rs, a, b);
  const RingElement t1 = ring->from_int(t1v), t2 = ring->from_int(t2v);
  RMatrix w = GroupContext::commutator(ctx.generator(a, t2), ctx.generator(b, t1));
  for (CommTerm& term : terms) {
    const int gamma = term.root;
    int delta = -1, pair_val = 0;
    for (int k = 0; k < rs.rank(); ++k) {
      const int pv = rs.pairing(gamma, rs.simples()[k]);
      if (pv == 1 || pv == -1 || pv == 2 || pv == -2) { delta = k; pair_val = pv; break; }
    }
    if (delta < 0) throw std::logic_error("no simple root pairs with the factor root in {1,2}");
    const RingElement entry =
        w.get(ctx.table().basis_of_root(gamma), ctx.table().cartan_basis(delta));
    const RingElement s =
        ring->neg(ring->mul(entry, ring->inv_unit(ring->from_int(pair_val))));
    // c = s / ((-t1)^i t2^j); lift to the unique integer with |c| <= 3
    RingElement denom = ring->pow(ring->neg(t1), term.i);
    denom = ring->mul(denom, ring->pow(t2, term.j));
    const RingElement cval = ring->mul(s, ring->inv_unit(denom));
    term.c = 99;
    for (std::int64_t c = -3; c <= 3; ++c)
      if (ring->from_int(c) == cval) { term.c = c; break; }
    if (term.c == 99)
      throw std::logic_error("commutator-formula constant outside {-3..3}");
    w = ctx.generator(gamma, ring->neg(s)).mul(w);
  }
  if (!w.is_identity())
    throw std::logic_error("commutator does not collect to the product form");
  return terms;
}

}  // namespace

std::vector<CommTerm> chevalley_constants_with(const GroupContext& ctx25,
                                               const GroupContext& ctx27, int alpha, int beta) {
  const auto& rs = ctx25.table().system();
  if (alpha == beta || rs.negate_index(alpha) == beta)
    throw std::invalid_argument("commutator formula requires a != +-b");
  if (term_shapes(rs, alpha, beta).empty()) return {};

  const auto fit_ring = [&](const GroupContext& ctx) {
    std::vector<CommTerm> f1 = fit_over(ctx, alpha, beta, 1, 1);
    std::vector<CommTerm> f2 = fit_over(ctx, alpha, beta, 2, 1);
    for (std::size_t k = 0; k < f1.size(); ++k)
      if (f1[k].c != f2[k].c)
        throw std::logic_error("constant fit disagrees between probe values");
    return f1;
  };
  std::vector<CommTerm> over25 = fit_ring(ctx25);
  std::vector<CommTerm> over27 = fit_ring(ctx27);
  for (std::size_t k = 0; k < over25.size(); ++k)
    if (over25[k].c != over27[k].c)
      throw std::logic_error("constant fit disagrees between Z/25 and Z/27");
  return over25;
}

std::vector<CommTerm> chevalley_constants(const StructureTablePtr& table, int alpha, int beta) {
  GroupContext ctx25(table, localring::Ring::make({localring::RingKind::ZpN, 5, 1, 2, {}}));
  GroupContext ctx27(table, localring::Ring::make({localring::RingKind::ZpN, 3, 1, 3, {}}));
  return chevalley_constants_with(ctx25, ctx27, alpha, beta);
}

RMatrix commutator_product(const GroupContext& ctx, const std::vector<CommTerm>& terms,
                           const RingElement& t1, const RingElement& t2) {
  const auto& ring = ctx.ring();
  RMatrix acc = ctx.identity_matrix();
  for (const CommTerm& term : terms) {
    RingElement arg = ring->mul(ring->from_int(term.c), ring->pow(ring->neg(t1), term.i));
    arg = ring->mul(arg, ring->pow(t2, term.j));
    acc = acc.mul(ctx.generator(term.root, arg));
  }
  return acc;
}

ClosureResult enumerate_group(const std::vector<RMatrix>& generators, std::size_t cap) {
  ClosureResult res;
  if (generators.empty()) return res;
  const auto& ring = generators.front().ring();
  const int dim = generators.front().dim();

  std::unordered_map<std::uint64_t, std::vector<int>> buckets;
  auto find_or_add = [&](const RMatrix& m) -> int {
    const std::uint64_t key = m.hash_key();
    auto& bucket = buckets[key];
    for (int idx : bucket)
      if (res.elements[idx] == m) return idx;
    res.elements.push_back(m);
    bucket.push_back(static_cast<int>(res.elements.size()) - 1);
    return -static_cast<int>(res.elements.size());  // negative marks "new"
  };

  find_or_add(RMatrix::identity(ring, dim));
  std::size_t next = 0;
  while (next < res.elements.size()) {
    if (res.elements.size() > cap) { res.overflowed = true; return res; }
    const RMatrix cur = res.elements[next++];
    for (const RMatrix& g : generators) find_or_add(cur.mul(g));
  }
  return res;
}

std::vector<RMatrix> adjoint_generators(const GroupContext& ctx) {
  const auto& rs = ctx.table().system();
  const auto& ring = ctx.ring();
  std::vector<RMatrix> gens;
  for (int a = 0; a < rs.num_roots(); ++a)
    for (int k = 0; k < ring->clen(); ++k) {
      RingElement u = ring->zero();
      u.c[k] = 1;
      gens.push_back(ctx.generator(a, u));
    }
  return gens;
}

}  // namespace chevrep::adgroup
