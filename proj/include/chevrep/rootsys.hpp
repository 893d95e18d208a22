#pragma once

// Irreducible root systems A-G in their standard orthonormal-coordinate
// realizations, with exact arithmetic throughout.  Euclidean coordinates are
// stored doubled (every family here lives in the half-integer lattice), so
// inner products are plain integer dot products up to a factor 4 that cancels
// from every Cartan pairing.
//
// Supported ranks follow the main bound table: A_m (m>=1), B_m (m>=3),
// C_m (m>=2), D_m (m>=4), E_6, E_7, E_8, F_4, G_2.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace chevrep::rootsys {

enum class Family { A, B, C, D, E, F, G };

struct RootSystemId {
  Family family = Family::A;
  int rank = 1;

  static RootSystemId parse(const std::string& s);  // "A1".."E8"
  std::string name() const;
  friend bool operator==(const RootSystemId&, const RootSystemId&) = default;
};

struct Root {
  std::vector<std::int64_t> coords2;        // doubled Euclidean coordinates
  std::vector<std::int64_t> simple_coeffs;  // integer coords over the base
  int height = 0;                           // sum of simple coefficients
  int index = 0;                            // position in the <-sorted list
};

// Highest root, the paired set Sigma+ = {a > 0 : <a, hr> = 1}, and d.
struct SigmaData {
  int highest = -1;
  // (rep, mate): rep is the <-smaller element, rep + mate = highest root
  std::vector<std::pair<int, int>> pairs;
  int d = 0;
};

class RootSystem {
 public:
  static RootSystem build(const RootSystemId& id);

  const RootSystemId& id() const { return id_; }
  int rank() const { return static_cast<int>(simple_.size()); }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  const Root& root(int i) const { return roots_.at(i); }
  const std::vector<int>& positives() const { return positive_; }
  const std::vector<int>& simples() const { return simple_; }
  bool is_positive(int i) const { return roots_[i].height > 0; }

  // Cartan pairing <a,b> = 2(a,b)/(b,b); exact, always an integer for roots.
  int pairing(int a, int b) const;
  std::int64_t norm4(int a) const;  // 4*(a,a), integer

  int index_of(const std::vector<std::int64_t>& coords2) const;  // -1 if absent
  int sum_index(int a, int b) const;                             // a+b, -1 if not a root
  int negate_index(int a) const;
  int highest_root() const { return highest_; }

  SigmaData sigma_plus() const;
  // F(Phi) = min positive <highest, a>, with a witness root index.
  std::pair<int, int> f_phi() const;

  std::string dump_json() const;

 private:
  RootSystemId id_;
  std::vector<Root> roots_;    // all roots sorted by (height, lex simple coeffs)
  std::vector<int> positive_;  // ascending
  std::vector<int> simple_;    // base, in conventional order
  int highest_ = -1;
  std::map<std::vector<std::int64_t>, int> coord_index_;
};

}  // namespace chevrep::rootsys
