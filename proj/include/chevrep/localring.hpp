#pragma once

// Finite local principal ideal rings O/p^n with residue field F_q, q = p^l,
// p an odd prime, in the three unramified presentations used throughout:
//
//   zpn     Z/p^n                    (characteristic 0 quotient, l = 1)
//   series  F_q[t]/(t^n)             (equal characteristic, F_q = F_p[y]/(f))
//   galois  GR(p^n, l) = Z[x]/(p^n, f)   (unramified char-0 extension)
//
// plus their additive characters.  Character values are kept exact as
// root-of-unity exponents k mod m; m = p^n for the characteristic-zero kinds
// and m = p for truncated series.

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace chevrep::localring {

enum class RingKind { ZpN, Series, Galois };

std::string kind_name(RingKind k);
RingKind kind_from_name(const std::string& s);

struct RingSpec {
  RingKind kind = RingKind::ZpN;
  std::int64_t p = 3;
  int l = 1;  // residue extension degree, q = p^l
  int n = 1;  // length of the quotient
  // Monic modulus of degree l, lowest coefficient first, leading 1 included
  // (coefficients read mod p).  Empty means x for l = 1; required irreducible
  // mod p when l > 1.  Unused by zpn.
  std::vector<std::int64_t> modulus;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

// Deterministic default modulus: lexicographically least monic irreducible of
// degree l over F_p (constant coefficient varies fastest).
std::vector<std::int64_t> default_modulus(std::int64_t p, int l);

struct RingElement {
  std::vector<std::int64_t> c;  // canonical operational coords, see Ring docs
  friend bool operator==(const RingElement&, const RingElement&) = default;
  friend auto operator<=>(const RingElement&, const RingElement&) = default;
};

// Exact root-of-unity value e(k/m) = exp(2 pi i k / m).
struct RootExp {
  std::int64_t k = 0;
  std::int64_t m = 1;
  std::complex<double> value() const;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring : public std::enable_shared_from_this<Ring> {
 public:
  // Validates: p odd prime, l,n >= 1, modulus monic irreducible mod p,
  // and |R| = q^n small enough that coordinate arithmetic cannot overflow.
  static RingPtr make(const RingSpec& spec);

  const RingSpec& spec() const { return spec_; }
  RingKind kind() const { return spec_.kind; }
  std::int64_t p() const { return spec_.p; }
  int l() const { return spec_.l; }
  int n() const { return spec_.n; }
  std::uint64_t q() const { return q_; }              // residue field size p^l
  std::uint64_t size() const { return size_; }        // q^n
  std::uint64_t unit_count() const;                   // q^n - q^(n-1)
  std::int64_t char_order() const { return char_m_; } // m of the characters

  // Coordinate layout of RingElement::c:
  //   zpn     [v]                       with 0 <= v < p^n
  //   series  l*n entries in [0,p),     index j*l+i = coeff of y^i t^j
  //   galois  l entries in [0,p^n),     index i = coeff of x^i
  int clen() const { return clen_; }

  // F_p coordinate vector in the declared basis (length l*n for the extension
  // kinds: y^i t^j resp. x^i p^j), used for printing and serialization.
  std::vector<std::int64_t> fp_coords(const RingElement& x) const;

  RingElement zero() const;
  RingElement one() const;
  RingElement from_int(std::int64_t v) const;

  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement neg(const RingElement& a) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  RingElement pow(const RingElement& a, std::uint64_t e) const;

  bool is_zero(const RingElement& a) const;
  bool is_unit(const RingElement& a) const;
  RingElement inv_unit(const RingElement& a) const;  // throws on non-unit

  // Mixed-radix enumeration, stable across runs.
  RingElement element_at(std::uint64_t idx) const;
  std::uint64_t index_of(const RingElement& a) const;
  std::vector<RingElement> enumerate() const;
  std::vector<RingElement> units() const;

  // Trace of multiplication-by-x down to the base ring:
  //   zpn -> itself, series -> F_p[t]/(t^n), galois -> Z/p^n.
  RingPtr base_ring() const;
  RingElement trace(const RingElement& x) const;

  // Additive character psi_b evaluated at x, as an exponent mod char_order():
  //   zpn      k = b x mod p^n
  //   series   k = Tr_{F_q/F_p}( t^(n-1) coefficient of b x )
  //   galois   k = Tr(b x) lifted to [0, p^n)
  std::int64_t character_exponent(const RingElement& b, const RingElement& x) const;

  // Raw-span helpers for matrix kernels; spans are clen() longs, and acc/out
  // must be already reduced.  addmul: acc += a*b.
  void span_addmul(std::int64_t* acc, const std::int64_t* a, const std::int64_t* b) const;
  void span_add(std::int64_t* acc, const std::int64_t* a) const;
  void span_neg(std::int64_t* x) const;

  std::string to_string(const RingElement& x) const;

 private:
  Ring() = default;
  void check(const RingElement& a) const;

  // F_q helpers (series kind): vectors of l coefficients mod p.
  std::vector<std::int64_t> fq_mul(const std::vector<std::int64_t>& a,
                                   const std::vector<std::int64_t>& b) const;
  std::int64_t fq_trace(const std::vector<std::int64_t>& a) const;  // to F_p

  // Galois helpers: vectors of l coefficients mod p^n.
  std::vector<std::int64_t> gr_mul(const std::vector<std::int64_t>& a,
                                   const std::vector<std::int64_t>& b) const;
  std::int64_t gr_trace(const std::vector<std::int64_t>& a) const;  // to Z/p^n

  RingSpec spec_;
  std::uint64_t q_ = 0, size_ = 0;
  std::int64_t pn_ = 0;      // p^n
  std::int64_t char_m_ = 0;  // character order
  int clen_ = 1;
  std::vector<std::int64_t> radix_;  // per-coordinate radix
  mutable RingPtr base_;             // lazily built base ring
};

struct AdditiveCharacter {
  RingPtr ring;
  RingElement b;
  std::int64_t order() const { return ring->char_order(); }
};

RootExp character_value(const AdditiveCharacter& chi, const RingElement& x);

// All q^n characters psi_b, b in enumeration order; verifies each nontrivial
// one against a separating element before returning.
std::vector<AdditiveCharacter> enumerate_characters(const RingPtr& ring);

// JSON round-trip of a RingSpec: {"kind","p","l","n","modulus"} with modulus
// omitted for zpn.
std::string ring_spec_to_json(const RingSpec& spec);
RingSpec ring_spec_from_json(const std::string& text);

// Primality / prime-power helpers shared with the bounds module.
bool is_prime(std::int64_t v);
// q = p^l with p prime; returns {p, l} or throws.
std::pair<std::int64_t, int> prime_power_split(std::int64_t q);

}  // namespace chevrep::localring
