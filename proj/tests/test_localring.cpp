#include <set>
#include <stdexcept>

#include "chevrep/localring.hpp"
#include "doctest.h"

using namespace chevrep::localring;

namespace {

RingPtr make(RingKind k, std::int64_t p, int l, int n) {
  RingSpec spec{k, p, l, n, {}};
  if (l > 1) spec.modulus = default_modulus(p, l);
  return Ring::make(spec);
}

void check_axioms_exhaustive(const RingPtr& r) {
  const auto all = r->enumerate();
  REQUIRE(all.size() == r->size());
  for (const auto& a : all) {
    CHECK(r->add(a, r->zero()) == a);
    CHECK(r->mul(a, r->one()) == a);
    CHECK(r->is_zero(r->add(a, r->neg(a))));
    CHECK(r->index_of(r->element_at(r->index_of(a))) == r->index_of(a));
  }
  for (const auto& a : all)
    for (const auto& b : all) {
      CHECK(r->add(a, b) == r->add(b, a));
      CHECK(r->mul(a, b) == r->mul(b, a));
    }
  // associativity and distributivity on a fixed slice to keep the cube small
  const auto c = r->element_at(r->size() - 1);
  for (const auto& a : all)
    for (const auto& b : all) {
      CHECK(r->add(r->add(a, b), c) == r->add(a, r->add(b, c)));
      CHECK(r->mul(r->mul(a, b), c) == r->mul(a, r->mul(b, c)));
      CHECK(r->mul(a, r->add(b, c)) == r->add(r->mul(a, b), r->mul(a, c)));
    }
}

void check_units(const RingPtr& r) {
  std::uint64_t units = 0;
  for (const auto& a : r->enumerate())
    if (r->is_unit(a)) {
      ++units;
      CHECK(r->mul(a, r->inv_unit(a)) == r->one());
    } else {
      CHECK_THROWS_WITH_AS(r->inv_unit(a), "inverse of a non-unit", std::domain_error);
    }
  CHECK(units == r->unit_count());
  CHECK(r->units().size() == units);
}

void check_characters(const RingPtr& r) {
  const auto chars = enumerate_characters(r);
  REQUIRE(chars.size() == r->size());
  const auto all = r->enumerate();
  for (const auto& chi : chars)
    for (const auto& x : all)
      for (const auto& y : all) {
        const auto lhs = r->character_exponent(chi.b, r->add(x, y));
        const auto rhs = (r->character_exponent(chi.b, x) + r->character_exponent(chi.b, y)) %
                         r->char_order();
        CHECK(lhs == rhs);
      }
  // distinct characters differ somewhere
  std::set<std::vector<std::int64_t>> tables;
  for (const auto& chi : chars) {
    std::vector<std::int64_t> tab;
    for (const auto& x : all) tab.push_back(r->character_exponent(chi.b, x));
    tables.insert(tab);
  }
  CHECK(tables.size() == chars.size());
}

}  // namespace

TEST_CASE("ring axioms, units and characters across the three kinds") {
  for (const auto& r : {make(RingKind::ZpN, 3, 1, 2), make(RingKind::ZpN, 5, 1, 1),
                        make(RingKind::Series, 3, 1, 2), make(RingKind::Series, 3, 2, 1),
                        make(RingKind::Galois, 3, 2, 1), make(RingKind::Galois, 3, 2, 2)}) {
    CAPTURE(kind_name(r->kind()));
    check_axioms_exhaustive(r);
    check_units(r);
    if (r->size() <= 30) check_characters(r);
  }
}

TEST_CASE("sizes and radices") {
  auto gr = make(RingKind::Galois, 3, 2, 2);  // GR(9, 2), 81 elements
  CHECK(gr->q() == 9);
  CHECK(gr->size() == 81);
  CHECK(gr->unit_count() == 72);
  CHECK(gr->char_order() == 9);

  auto series = make(RingKind::Series, 3, 2, 2);  // F9[t]/(t^2)
  CHECK(series->q() == 9);
  CHECK(series->size() == 81);
  CHECK(series->unit_count() == 72);
  CHECK(series->char_order() == 3);  // characteristic p
  CHECK(series->fp_coords(series->one()).size() == 4);
}

TEST_CASE("series characters read the top coefficient") {
  auto r = make(RingKind::Series, 3, 1, 2);  // F3[t]/(t^2), coords [c0, c1]
  RingElement t = r->zero();
  t.c[1] = 1;
  CHECK(r->character_exponent(r->one(), t) == 1);       // psi_1(t) = e(1/3)
  CHECK(r->character_exponent(r->one(), r->one()) == 0);  // constant term invisible
  CHECK(r->character_exponent(t, r->one()) == 1);
  CHECK(r->character_exponent(t, t) == 0);  // t*t = 0
}

TEST_CASE("galois trace is additive and Tr(1) = l") {
  auto r = make(RingKind::Galois, 3, 2, 2);
  auto base = r->base_ring();
  CHECK(base->size() == 9);
  for (std::uint64_t i = 0; i < r->size(); i += 7)
    for (std::uint64_t j = 0; j < r->size(); j += 5) {
      const auto x = r->element_at(i), y = r->element_at(j);
      CHECK(r->trace(r->add(x, y)) == base->add(r->trace(x), r->trace(y)));
    }
  CHECK(r->trace(r->one()) == base->from_int(2));
}

TEST_CASE("constraint validation") {
  CHECK_THROWS_AS(make(RingKind::ZpN, 2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(make(RingKind::ZpN, 9, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(make(RingKind::ZpN, 3, 1, 0), std::invalid_argument);
  RingSpec reducible{RingKind::Galois, 3, 2, 1, {2, 0, 1}};  // x^2 - 1 = (x-1)(x+1) mod 3
  CHECK_THROWS_AS(Ring::make(reducible), std::invalid_argument);
}

TEST_CASE("prime power helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));
  CHECK(prime_power_split(27) == std::pair<std::int64_t, int>{3, 3});
  CHECK(prime_power_split(7) == std::pair<std::int64_t, int>{7, 1});
  CHECK_THROWS_AS(prime_power_split(12), std::invalid_argument);
}

TEST_CASE("ring spec json round trip") {
  for (const auto& r : {make(RingKind::ZpN, 3, 1, 2), make(RingKind::Galois, 5, 2, 1),
                        make(RingKind::Series, 3, 2, 2)}) {
    const auto back = ring_spec_from_json(ring_spec_to_json(r->spec()));
    CHECK(back == r->spec());
  }
}

TEST_CASE("root of unity values") {
  RootExp e{1, 4};
  CHECK(std::abs(e.value() - std::complex<double>(0.0, 1.0)) < 1e-12);
  auto r = make(RingKind::ZpN, 3, 1, 1);
  const auto chars = enumerate_characters(r);
  std::complex<double> sum = 0.0;
  for (const auto& chi : chars) sum += character_value(chi, r->one()).value();
  CHECK(std::abs(sum) < 1e-12);  // column orthogonality at x = 1
}
