#pragma once

// Brute-force ground truth for tiny finite groups: conjugacy classes, exact
// character tables by the class-matrix eigenvector method over a prime field
// l = 1 (mod exponent), and the minimal faithful representation dimension by
// kernel-intersection search over subsets of irreducibles.
//
// Character values are recovered as exact root-of-unity multiplicities, so
// kernel membership (chi(g) = chi(1)) is decided exactly; the complex values
// are only used for the orthogonality sanity checks and the JSON dump.

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chevrep/heisenberg.hpp"
#include "chevrep/ringmat.hpp"

namespace chevrep::mforacle {

// A fully materialized finite group: elements are indices 0..n-1.
struct GroupTable {
  int n = 0;
  int identity = 0;
  std::vector<int> gens;  // generating set (drives conjugation orbits)
  std::function<int(int, int)> mult;
  std::function<int(int)> inv;
};

// BFS closure of matrix generators; throws std::length_error beyond cap.
GroupTable group_from_matrices(const std::vector<ringmat::RMatrix>& generators,
                               std::size_t cap);

GroupTable group_from_heis(const heisenberg::HeisGroup& h, std::uint64_t cap = 10000);

GroupTable cyclic_group(int n);  // synthetic abelian reference

struct ConjClasses {
  std::vector<int> class_of;    // element -> class
  std::vector<int> reps;        // class -> representative element
  std::vector<int> sizes;       // class -> |C|
  std::vector<std::vector<int>> members;
  std::vector<int> inverse_class;  // class of the inverses
  int identity_class = 0;
};
ConjClasses conjugacy_classes(const GroupTable& g);

std::int64_t group_exponent(const GroupTable& g, const ConjClasses& cc);

struct CharacterTable {
  int order = 0;
  ConjClasses classes;
  std::int64_t exponent = 1;
  std::int64_t ell = 0;  // working prime, = 1 mod exponent, > 2 sqrt(order)
  std::vector<int> degrees;  // ascending
  std::vector<std::vector<std::complex<double>>> values;  // [chi][class]
  std::vector<std::vector<bool>> in_kernel;                // exact
};

CharacterTable character_table(const GroupTable& g);

int minimal_faithful_dimension(const CharacterTable& t);

std::string character_table_json(const CharacterTable& t);

}  // namespace chevrep::mforacle
