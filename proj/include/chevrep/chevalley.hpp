#pragma once

// Chevalley basis {H_a : a simple} u {e_a : a root} with integer structure
// constants, the nilpotent one-parameter matrices exp(xi ad e_a), and their
// specialization over a finite local ring.
//
// Sign normalization: for every non-simple positive root g, the extraspecial
// pair (a, g-a) -- a the <-least positive root with g-a positive -- carries
// N_{a,g-a} = +(r+1), r the chain-down length.  All other constants follow
// from antisymmetry, N_{-a,-b} = -N_{a,b}, and the standard Jacobi
// reductions; the build refuses to return a table that fails either the
// |N| = r+1 audit or (on demand) the full Jacobi sweep.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chevrep/localring.hpp"
#include "chevrep/ringmat.hpp"
#include "chevrep/rootsys.hpp"

namespace chevrep::chevalley {

using rootsys::RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

class StructureTable {
 public:
  static StructureTable build(RootSystemPtr rs);

  const RootSystem& system() const { return *rs_; }
  const RootSystemPtr& system_ptr() const { return rs_; }

  // Basis order: e_a for negative roots ascending by <, then H_a over the
  // base in conventional order, then e_a for positive roots ascending.
  int dim() const { return dim_; }
  int basis_of_root(int rootidx) const;
  int cartan_basis(int simple_pos) const;  // 0..rank-1
  bool basis_is_root(int b) const;
  int root_of_basis(int b) const;  // -1 on the Cartan block

  bool has_pair(int a, int b) const;        // a+b a root?
  std::int64_t n_const(int a, int b) const; // N_{a,b}, throws unless a+b a root
  const std::vector<std::int64_t>& coroot_coeffs(int rootidx) const;

  // [basis b1, basis b2] as a sparse combination, appended to out.
  void bracket_basis(int b1, int b2,
                     std::vector<std::pair<int, std::int64_t>>& out) const;

  // Exhaustive Jacobi sweep over all basis triples; throws std::logic_error
  // with the offending triple on failure.
  void verify_jacobi() const;

  std::string dump_json() const;  // {"system": ..., "N": [[a,b,N],...]}
  static StructureTable from_json(RootSystemPtr rs, const std::string& text);

 private:
  StructureTable() = default;
  void finish_from_n();  // coroots + |N| audit, shared by build/from_json

  RootSystemPtr rs_;
  int dim_ = 0, nneg_ = 0, rank_ = 0;
  std::map<std::pair<int, int>, std::int64_t> n_;
  std::vector<std::vector<std::int64_t>> coroot_;
};

// Load from "<dir>/structconsts_<system>.json" when present, else build and
// write the cache file (best-effort).
StructureTable load_or_build(RootSystemPtr rs, const std::optional<std::string>& cache_dir);

struct ExpPolyMatrix {
  int root = -1;
  int dim = 0;
  // entry (r,c) -> polynomial in xi, constant coefficient first
  std::map<std::pair<int, int>, std::vector<std::int64_t>> entries;
};

// exp(xi ad e_a): each power (ad e_a)^k is checked for divisibility by k!
// before the division, and the series must terminate by k = 5.
ExpPolyMatrix exp_ad(const StructureTable& table, int rootidx);

ringmat::RMatrix specialize(const ExpPolyMatrix& xm, const localring::RingPtr& ring,
                            const localring::RingElement& t);

}  // namespace chevrep::chevalley
