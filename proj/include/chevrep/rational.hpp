#pragma once

// Small exact fraction over int64, used for root-space linear algebra and the
// structure-constant recursion.  All quantities handled here are tiny (root
// coordinates, Cartan integers, constants bounded by 3); every operation
// checks for overflow anyway so a silent wrap can never corrupt a table.

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace chevrep {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational: mul overflow");
    return r;
  }
  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational: add overflow");
    return r;
  }

  void normalize() {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  std::int64_t as_integer() const {
    if (den != 1) throw std::domain_error("rational: not an integer");
    return num;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
            checked_mul(a.den, b.den)};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {checked_add(checked_mul(a.num, b.den), -checked_mul(b.num, a.den)),
            checked_mul(a.den, b.den)};
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {checked_mul(a.num, b.num), checked_mul(a.den, b.den)};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::domain_error("rational: division by zero");
    return {checked_mul(a.num, b.den), checked_mul(a.den, b.num)};
  }
  Rational operator-() const { return {-num, den}; }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
};

}  // namespace chevrep
