#pragma once

// Elementary adjoint Chevalley group over a finite local ring, acting on the
// Lie algebra: one-parameter generators x_a(t), torus elements h_a(lambda),
// commutators in the [x,y] = x^-1 y^-1 x y convention, the fitted constants
// of the commutator formula
//
//   [x_a(t2), x_b(t1)] = prod_{i,j>0} x_{ib+ja}( C_{i,j,b,a} (-t1)^i t2^j ),
//
// and breadth-first closure of small generated groups.

#include <cstdint>
#include <memory>
#include <vector>

#include "chevrep/chevalley.hpp"
#include "chevrep/localring.hpp"
#include "chevrep/ringmat.hpp"

namespace chevrep::adgroup {

using chevalley::StructureTable;
using localring::RingElement;
using localring::RingPtr;
using ringmat::RMatrix;

using StructureTablePtr = std::shared_ptr<const StructureTable>;

class GroupContext {
 public:
  GroupContext(StructureTablePtr table, RingPtr ring);

  const StructureTable& table() const { return *table_; }
  const StructureTablePtr& table_ptr() const { return table_; }
  const RingPtr& ring() const { return ring_; }
  int dim() const { return table_->dim(); }

  RMatrix identity_matrix() const;
  RMatrix generator(int rootidx, const RingElement& t) const;
  // h_a(lambda) = w_a(lambda) w_a(-1), w_a(u) = x_a(u) x_{-a}(-u^-1) x_a(u);
  // throws std::invalid_argument unless lambda is a unit.
  RMatrix torus(int rootidx, const RingElement& lambda) const;

  static RMatrix commutator(const RMatrix& g, const RMatrix& h);

 private:
  StructureTablePtr table_;
  RingPtr ring_;
  std::vector<chevalley::ExpPolyMatrix> exps_;  // indexed by root
};

// One factor x_{ib+ja}(c * (-t1)^i t2^j) of the commutator product for the
// ordered root pair (a, b); factors are listed by increasing (i+j, i), the
// order in which the product must be taken (equal-level factors commute).
struct CommTerm {
  int i = 0;
  int j = 0;
  int root = -1;  // index of ib + ja
  std::int64_t c = 0;
};

// Fit the constants by peeling the matrix commutator factor by factor over
// Z/25, twice with independent probe values, then repeat over Z/27 and demand
// identical integer lifts (|c| <= 3 is unambiguous mod either modulus, and
// the double fit rules out small-modulus aliasing).  Requires a != +-b with
// both indices valid; returns an empty list when no ib+ja is a root.
std::vector<CommTerm> chevalley_constants(const StructureTablePtr& table, int alpha, int beta);

// Same fit against caller-supplied probe contexts (must be over Z/25 and
// Z/27); lets bulk fits share the exponential tables.
std::vector<CommTerm> chevalley_constants_with(const GroupContext& ctx25,
                                               const GroupContext& ctx27, int alpha, int beta);

// Right-hand side of the commutator formula evaluated over ctx's ring.
RMatrix commutator_product(const GroupContext& ctx, const std::vector<CommTerm>& terms,
                           const RingElement& t1, const RingElement& t2);

struct ClosureResult {
  std::vector<RMatrix> elements;  // BFS order, identity first
  bool overflowed = false;        // true when cap was hit before closing
};

ClosureResult enumerate_group(const std::vector<RMatrix>& generators, std::size_t cap);

// Generating matrices of the full adjoint group over ctx's ring: x_a(u) for
// every root a and every coordinate-basis element u of the ring.
std::vector<RMatrix> adjoint_generators(const GroupContext& ctx);

}  // namespace chevrep::adgroup
