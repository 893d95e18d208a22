#pragma once

// Stone-von Neumann machinery: central characters of U, their extensions to
// the polarizing subgroup A, induction to U as monomial matrices, the
// irreducibility and uniqueness checks, the unit-orbit count, and the
// resulting dimension-bound certificate.

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chevrep/heisenberg.hpp"
#include "chevrep/localring.hpp"
#include "chevrep/rootsys.hpp"

namespace chevrep::svnrep {

using boost::multiprecision::cpp_int;
using heisenberg::HeisCoords;
using heisenberg::HeisGroup;
using localring::RingElement;
using localring::RingPtr;

// A character of A = < X_rep coordinates, center >: psi_b on the center and
// psi_{c_i} on the i-th rep coordinate (A is a coordinate direct product, so
// these are exactly its |R|^d extensions of psi_b).
struct ExtendedCharacter {
  HeisGroup heis;
  RingElement b;
  std::vector<RingElement> c;  // length d

  // exponent (mod the ring's character order) at an element of A; throws
  // std::invalid_argument when u has a nonzero non-rep coordinate
  std::int64_t exponent(const HeisCoords& u) const;
};

// Default extension has c = 0; pass force_degenerate to build one over a
// non-generic b (for oracle experiments).
ExtendedCharacter extend_to_A(const HeisGroup& h, const RingElement& b,
                              std::vector<RingElement> c = {}, bool force_degenerate = false);

// Induced representation Ind_A^U as monomial matrices over cosets A\u_x,
// coset representatives being the mate-coordinate sections, indexed in mixed
// radix.  Dimension is |R|^d = q^{nd}.
class MonomialRep {
 public:
  MonomialRep(ExtendedCharacter chi, std::uint64_t cap = 4096);

  int dim() const { return dim_; }
  std::int64_t order_m() const;  // root-of-unity order of the entries
  const ExtendedCharacter& character() const { return chi_; }
  const HeisGroup& heis() const { return chi_.heis; }

  struct Image {
    std::vector<int> col;           // row y holds the single nonzero at col[y]
    std::vector<std::int64_t> exp;  // its value is e(exp[y] / m)
  };
  Image image(const HeisCoords& g) const;
  std::complex<double> trace(const HeisCoords& g) const;

  HeisCoords coset_rep(std::uint64_t x) const;
  std::uint64_t coset_index(const HeisCoords& w) const;  // reads mate coords

 private:
  ExtendedCharacter chi_;
  int dim_ = 1;
  std::vector<int> mate_positions_;  // by pair, the coordinate order of cosets
};

MonomialRep induce(const ExtendedCharacter& chi, std::uint64_t cap = 4096);

// (1/|U|) sum_u |tr rep(u)|^2 for any trace function on U.
double character_self_inner_product(const HeisGroup& h,
                                    const std::function<std::complex<double>(const HeisCoords&)>& tr,
                                    std::uint64_t cap = 100000);
double character_self_inner_product(const MonomialRep& rep, std::uint64_t cap = 100000);
bool is_irreducible(const MonomialRep& rep, double tol = 1e-6, std::uint64_t cap = 100000);

// All (or, above sample_limit, a seeded sample of) extensions of psi_b give
// pairwise equal characters as class functions.
bool svn_uniqueness_check(const HeisGroup& h, const RingElement& b,
                          std::uint64_t sample_limit = 64, std::uint64_t seed = 0,
                          double tol = 1e-6);

// b . lambda^{<highest, alpha>} -- the central parameter of the h_alpha(lambda)
// conjugate representation.
RingElement conjugate_character(const HeisGroup& h, const RingElement& b,
                                const RingElement& lambda, int alpha_rootidx);

// Distinct values of b0 * lambda^{F(Phi)} over units lambda, b0 = 1: the
// number of pairwise non-isomorphic unit conjugates of one generic character.
std::uint64_t orbit_count_brute(const rootsys::RootSystem& rs, const RingPtr& ring);

struct BoundCertificate {
  std::string phi;
  std::uint64_t q = 0;
  int n = 1;
  int d = 0;
  int f = 1;  // F(Phi)
  cpp_int irrep_dim;
  cpp_int orbit_count;
  cpp_int bound;
  std::string to_json() const;  // arbitrary-precision fields as raw integers
};

// Assembles orbit_count x q^{nd} and checks it against the closed form;
// throws std::logic_error on mismatch (cannot happen unless a table is wrong).
BoundCertificate lower_bound_certificate(const rootsys::RootSystem& rs, const RingPtr& ring);

}  // namespace chevrep::svnrep
