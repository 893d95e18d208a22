#include <complex>
#include <memory>
#include <random>
#include <stdexcept>
#include <vector>

#include "chevrep/svnrep.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace chevrep;
using heisenberg::HeisCoords;
using heisenberg::HeisGroup;
using localring::Ring;
using localring::RingKind;
using localring::RingPtr;
using rootsys::RootSystem;
using rootsys::RootSystemId;
using svnrep::cpp_int;

namespace {

adgroup::StructureTablePtr table_of(const char* name) {
  auto rs = std::make_shared<const RootSystem>(RootSystem::build(RootSystemId::parse(name)));
  return std::make_shared<const chevalley::StructureTable>(chevalley::StructureTable::build(rs));
}

RingPtr zpn(std::int64_t p, int n) { return Ring::make({RingKind::ZpN, p, 1, n, {}}); }

std::vector<std::vector<std::complex<double>>> dense(const svnrep::MonomialRep& rep,
                                                     const HeisCoords& g) {
  const auto img = rep.image(g);
  const double m = static_cast<double>(rep.order_m());
  std::vector<std::vector<std::complex<double>>> mat(
      rep.dim(), std::vector<std::complex<double>>(rep.dim(), 0.0));
  for (int y = 0; y < rep.dim(); ++y) {
    const double a = 2.0 * 3.14159265358979323846 * static_cast<double>(img.exp[y]) / m;
    mat[y][img.col[y]] = {std::cos(a), std::sin(a)};
  }
  return mat;
}

}  // namespace

TEST_CASE("extended characters are homomorphisms on A") {
  auto h = HeisGroup::build(table_of("C2"), zpn(3, 1));
  const auto ring = h.ring();
  for (const auto& c0 : ring->enumerate()) {
    const auto chi = svnrep::extend_to_A(h, ring->one(), {c0});
    // A = rep coordinate x center: enumerate it directly
    std::vector<HeisCoords> a_elems;
    for (const auto& tv : ring->enumerate())
      for (const auto& zv : ring->enumerate()) {
        HeisCoords u = h.identity();
        u.t[h.rep_position(0)] = tv;
        u.z = zv;
        a_elems.push_back(u);
      }
    for (const auto& x : a_elems)
      for (const auto& y : a_elems) {
        const auto lhs = chi.exponent(h.multiply(x, y));
        const auto rhs = (chi.exponent(x) + chi.exponent(y)) % ring->char_order();
        CHECK(lhs == rhs);
      }
  }
  HeisCoords bad = h.identity();
  bad.t[h.mate_position(0)] = ring->one();
  CHECK_THROWS_AS(svnrep::extend_to_A(h, ring->one()).exponent(bad), std::invalid_argument);
  CHECK_THROWS_AS(svnrep::extend_to_A(h, ring->zero()), std::invalid_argument);
  CHECK_NOTHROW(svnrep::extend_to_A(h, ring->zero(), {}, true));
}

TEST_CASE("induction gives a monomial homomorphism") {
  auto h = HeisGroup::build(table_of("C2"), zpn(3, 2));
  const auto ring = h.ring();
  const auto rep = svnrep::induce(svnrep::extend_to_A(h, ring->one()));
  CHECK(rep.dim() == 9);
  CHECK(rep.order_m() == 9);
  const auto n = h.size_u64();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto u = h.element_at(rng() % n);
    const auto v = h.element_at(rng() % n);
    const auto a = dense(rep, u), b = dense(rep, v), ab = dense(rep, h.multiply(u, v));
    for (int r = 0; r < rep.dim(); ++r)
      for (int c = 0; c < rep.dim(); ++c) {
        std::complex<double> acc = 0.0;
        for (int k = 0; k < rep.dim(); ++k) acc += a[r][k] * b[k][c];
        CHECK(std::abs(acc - ab[r][c]) < 1e-9);
      }
    // trace matches the fixed-point sum
    std::complex<double> diag = 0.0;
    for (int r = 0; r < rep.dim(); ++r) diag += a[r][r];
    CHECK(std::abs(diag - rep.trace(u)) < 1e-9);
  }
  // the image columns are permutations
  for (int trial = 0; trial < 40; ++trial) {
    const auto img = rep.image(h.element_at(rng() % n));
    std::vector<bool> hit(rep.dim(), false);
    for (int y = 0; y < rep.dim(); ++y) {
      CHECK(!hit[img.col[y]]);
      hit[img.col[y]] = true;
    }
  }
  // class function: conjugates share traces
  for (int trial = 0; trial < 40; ++trial) {
    const auto u = h.element_at(rng() % n);
    const auto g = h.element_at(rng() % n);
    const auto conj = h.multiply(h.multiply(g, u), h.inverse(g));
    CHECK(std::abs(rep.trace(u) - rep.trace(conj)) < 1e-9);
  }
}

TEST_CASE("irreducibility detects genericity") {
  auto h = HeisGroup::build(table_of("C2"), zpn(3, 1));
  const auto ring = h.ring();
  for (const auto& b : ring->units()) {
    const auto rep = svnrep::induce(svnrep::extend_to_A(h, b));
    CHECK(svnrep::is_irreducible(rep));
    CHECK(svnrep::character_self_inner_product(rep) == doctest::Approx(1.0).epsilon(1e-9));
  }
  const auto degenerate = svnrep::induce(svnrep::extend_to_A(h, ring->zero(), {}, true));
  CHECK(!svnrep::is_irreducible(degenerate));
  CHECK(svnrep::character_self_inner_product(degenerate) == doctest::Approx(3.0).epsilon(1e-9));
  // the function-based overload agrees
  const auto rep1 = svnrep::induce(svnrep::extend_to_A(h, ring->one()));
  const double via_fn = svnrep::character_self_inner_product(
      h, [&](const HeisCoords& u) { return rep1.trace(u); });
  CHECK(via_fn == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("all extensions induce the same character") {
  CHECK(svnrep::svn_uniqueness_check(HeisGroup::build(table_of("C2"), zpn(3, 1)),
                                     zpn(3, 1)->one()));
  auto h9 = HeisGroup::build(table_of("C2"), zpn(3, 2));
  CHECK(svnrep::svn_uniqueness_check(h9, h9.ring()->one(), 5, 42));  // sampled branch
  auto a2 = HeisGroup::build(table_of("A2"), zpn(5, 1));
  CHECK(svnrep::svn_uniqueness_check(a2, a2.ring()->from_int(2)));
}

TEST_CASE("unit conjugation orbit") {
  auto rs5 = RootSystem::build(RootSystemId::parse("A2"));
  CHECK(svnrep::orbit_count_brute(rs5, zpn(5, 1)) == 4);  // F = 1: all units
  auto rsc = RootSystem::build(RootSystemId::parse("C2"));
  CHECK(svnrep::orbit_count_brute(rsc, zpn(5, 1)) == 2);  // F = 2: squares only
  CHECK(svnrep::orbit_count_brute(rsc, zpn(3, 2)) == 3);
  // conjugate_character really tracks the torus scaling exponent
  auto h = HeisGroup::build(table_of("C2"), zpn(5, 1));
  const auto ring = h.ring();
  for (const auto& lam : ring->units()) {
    const auto moved = svnrep::conjugate_character(h, ring->one(), lam, h.system().simples()[0]);
    const int pr = h.system().pairing(h.highest(), h.system().simples()[0]);
    CHECK(moved == ring->pow(lam, static_cast<std::uint64_t>(pr)));
  }
}

TEST_CASE("certificates multiply out and serialize raw integers") {
  struct Row {
    const char* phi;
    std::int64_t q;
    int n;
    const char* bound;
  };
  for (const Row& row : {Row{"A2", 3, 1, "6"}, Row{"C2", 3, 1, "3"}, Row{"C2", 3, 2, "27"},
                         Row{"B3", 3, 1, "54"}, Row{"G2", 5, 1, "100"},
                         Row{"D4", 3, 2, "39366"}, Row{"E8", 3, 1, "45753584909922"}}) {
    CAPTURE(row.phi);
    auto rs = std::make_shared<const RootSystem>(
        RootSystem::build(RootSystemId::parse(row.phi)));
    const auto [p, l] = localring::prime_power_split(row.q);
    const auto cert = svnrep::lower_bound_certificate(*rs, zpn(p, row.n));
    CHECK(cert.bound == cpp_int(row.bound));
    CHECK(cert.orbit_count * cert.irrep_dim == cert.bound);
    const auto j = nlohmann::json::parse(cert.to_json());
    CHECK(j["phi"] == row.phi);
    CHECK(j["bound"].dump() == row.bound);  // raw integer literal, not a string
  }
}
