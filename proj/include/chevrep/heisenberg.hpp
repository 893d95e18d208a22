#pragma once

// The Heisenberg subgroup U of the adjoint group: normal-form coordinates
// over Sigma+ plus one central coordinate, closed-form multiplication via the
// central cocycle, evaluation into matrices for cross-validation, brute-force
// center/derived-subgroup scans, the genericity pairing, and the polarizing
// subgroup A.
//
// An element is written uniquely as  prod_{g in Sigma+, < order} x_g(t_g)
// times x_h(z) with h the highest root; multiplying two such words only ever
// creates central corrections because g + g' is a root iff g + g' = h.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chevrep/adgroup.hpp"
#include "chevrep/chevalley.hpp"
#include "chevrep/localring.hpp"
#include "chevrep/ringmat.hpp"
#include "chevrep/rootsys.hpp"

namespace chevrep::heisenberg {

using adgroup::StructureTablePtr;
using boost::multiprecision::cpp_int;
using chevalley::StructureTable;
using localring::RingElement;
using localring::RingPtr;

struct HeisCoords {
  std::vector<RingElement> t;  // Sigma+ coordinates, ascending < order
  RingElement z;               // central coordinate
  friend bool operator==(const HeisCoords&, const HeisCoords&) = default;
};

class HeisGroup {
 public:
  // Throws std::invalid_argument when the hypotheses fail (G2 needs p >= 5);
  // commutator constants come from the peel-off fit (asserted against the
  // structure table) on algebras of dimension <= 100, directly from the
  // structure table above that.
  static HeisGroup build(StructureTablePtr table, RingPtr ring);

  const StructureTable& table() const { return *table_; }
  const StructureTablePtr& table_ptr() const { return table_; }
  const rootsys::RootSystem& system() const { return table_->system(); }
  const RingPtr& ring() const { return ring_; }
  const rootsys::SigmaData& sigma() const { return sigma_; }
  int d() const { return sigma_.d; }
  int num_t() const { return 2 * sigma_.d; }
  int highest() const { return sigma_.highest; }

  int sigma_root(int pos) const { return roots_.at(pos); }
  int pos_of_root(int rootidx) const;  // -1 when not in Sigma+
  int partner(int pos) const { return partner_.at(pos); }
  bool is_rep_pos(int pos) const { return rep_flag_.at(pos); }
  int rep_position(int pair) const { return rep_pos_.at(pair); }
  int mate_position(int pair) const { return partner_.at(rep_pos_.at(pair)); }
  // c_i of [x_{mate}(t), x_{rep}(s)] = x_highest(c_i * s t)
  std::int64_t comm_const(int pair) const { return cc_.at(pair); }

  cpp_int order() const;  // |R|^(2d+1)
  // |U| as a machine integer for enumeration; throws std::overflow_error
  // when it does not fit.
  std::uint64_t size_u64() const;

  HeisCoords identity() const;
  // x_root(v) for root in Sigma+ or the highest root
  HeisCoords generator_coords(int rootidx, const RingElement& v) const;
  bool is_identity(const HeisCoords& u) const;

  HeisCoords multiply(const HeisCoords& u, const HeisCoords& v) const;
  HeisCoords inverse(const HeisCoords& u) const;
  HeisCoords commutator(const HeisCoords& u, const HeisCoords& v) const;

  // Mixed-radix enumeration: t coordinates are the low digits, z the high one.
  std::uint64_t index_of(const HeisCoords& u) const;
  HeisCoords element_at(std::uint64_t idx) const;

  // Evaluation homomorphism into the adjoint group; ctx must share this
  // group's structure table and ring.
  ringmat::RMatrix to_matrix(const adgroup::GroupContext& ctx, const HeisCoords& u) const;

  std::string coords_json(const HeisCoords& u) const;

 private:
  HeisGroup() = default;
  int pos_of_root_raw(int rootidx) const;

  StructureTablePtr table_;
  RingPtr ring_;
  rootsys::SigmaData sigma_;
  std::vector<int> roots_;        // Sigma+ root indices, ascending
  std::vector<int> partner_;      // position -> mate position
  std::vector<bool> rep_flag_;    // position -> is the <-smaller of its pair
  std::vector<int> rep_pos_;      // pair -> rep position
  std::vector<std::int64_t> cc_;  // pair -> commutator constant
};

struct CenterDerived {
  std::vector<HeisCoords> center;
  std::vector<HeisCoords> derived;
};
// Brute-force scans over all of U; throws std::length_error above cap.
CenterDerived center_and_derived(const HeisGroup& h, std::uint64_t cap = 10000);

// Valuation criterion for the central character psi_b to be generic.
bool is_generic(const HeisGroup& h, const RingElement& b);

// Ground truth: non-degeneracy of (uZ, vZ) -> psi_b([u,v]) on U/Z(U),
// scanning all coset pairs; throws std::length_error when |U/Z| exceeds cap.
bool pairing_nondegenerate(const HeisGroup& h, const RingElement& b,
                           std::uint64_t cap = 10000);

struct Polarizing {
  std::vector<int> span_positions;  // rep coordinate positions (z implicit)
  cpp_int order;                    // |A| = |R|^(d+1)
  cpp_int index;                    // [U:A] = |R|^d
};
Polarizing polarizing(const HeisGroup& h);

// Brute-force check that the image of A in U/Z(U) equals its own orthogonal
// complement under the b-pairing; requires generic b and enumerable U/Z.
bool polarizing_self_perp(const HeisGroup& h, const RingElement& b,
                          std::uint64_t cap = 10000);

}  // namespace chevrep::heisenberg
