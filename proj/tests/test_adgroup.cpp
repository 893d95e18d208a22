#include <algorithm>
#include <memory>
#include <random>
#include <stdexcept>

#include "chevrep/adgroup.hpp"
#include "doctest.h"

using namespace chevrep;
using adgroup::GroupContext;
using localring::Ring;
using localring::RingKind;
using localring::RingPtr;
using rootsys::RootSystem;
using rootsys::RootSystemId;

namespace {

adgroup::StructureTablePtr table_of(const char* name) {
  auto rs = std::make_shared<const RootSystem>(RootSystem::build(RootSystemId::parse(name)));
  return std::make_shared<const chevalley::StructureTable>(chevalley::StructureTable::build(rs));
}

RingPtr zpn(std::int64_t p, int n) { return Ring::make({RingKind::ZpN, p, 1, n, {}}); }

}  // namespace

TEST_CASE("one-parameter subgroups and the torus") {
  auto t = table_of("C2");
  for (const RingPtr& ring :
       {zpn(3, 2), Ring::make({RingKind::Series, 3, 1, 2, {}}),
        Ring::make({RingKind::Galois, 3, 2, 1, localring::default_modulus(3, 2)})}) {
    CAPTURE(localring::kind_name(ring->kind()));
    GroupContext ctx(t, ring);
    const auto all = ring->enumerate();
    for (int a = 0; a < t->system().num_roots(); ++a) {
      CHECK(ctx.generator(a, ring->zero()).is_identity());
      for (const auto& s : all)
        for (const auto& u : all)
          CHECK(ctx.generator(a, s).mul(ctx.generator(a, u)) ==
                ctx.generator(a, ring->add(s, u)));
    }
    CHECK(ctx.torus(0, ring->one()).is_identity());
    for (const auto& lam : ring->units())
      for (const auto& mu : ring->units())
        CHECK(ctx.torus(0, lam).mul(ctx.torus(0, mu)) == ctx.torus(0, ring->mul(lam, mu)));
    CHECK_THROWS_AS(ctx.torus(0, ring->zero()), std::invalid_argument);
  }
}

TEST_CASE("fitted commutator terms for the A2 simple pair") {
  auto t = table_of("A2");
  const auto& rs = t->system();
  const int a = rs.simples()[0], b = rs.simples()[1];
  const auto terms = adgroup::chevalley_constants(t, a, b);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].i == 1);
  CHECK(terms[0].j == 1);
  CHECK(terms[0].root == rs.sum_index(a, b));
  CHECK(std::abs(terms[0].c) == 1);
  // the lone constant is N_{b,a} in this orientation
  CHECK(terms[0].c == t->n_const(b, a));
}

TEST_CASE("term shapes across bond types") {
  auto c2 = table_of("C2");
  {
    const auto& rs = c2->system();
    int s = rs.simples()[0], l = rs.simples()[1];
    if (rs.norm4(s) > rs.norm4(l)) std::swap(s, l);  // short, long
    const auto terms = adgroup::chevalley_constants(c2, s, l);
    REQUIRE(terms.size() == 2);  // (1,1) at s+l and (2,1) at 2s+l
    CHECK(terms[0].i + terms[0].j == 2);
    CHECK(terms[1].i + terms[1].j == 3);
    for (const auto& tm : terms) CHECK(std::abs(tm.c) <= 3);
  }
  auto g2 = table_of("G2");
  {
    const auto& rs = g2->system();
    int s = rs.simples()[0], l = rs.simples()[1];
    if (rs.norm4(s) > rs.norm4(l)) std::swap(s, l);
    // alpha = long, beta = short: roots i*beta + j*alpha reach (3,1) and (3,2)
    const auto terms = adgroup::chevalley_constants(g2, l, s);
    REQUIRE(terms.size() == 4);
    CHECK(terms.back().i == 3);
    CHECK(terms.back().j == 2);
  }
  // orthogonal pair: empty product, commuting generators
  auto a3 = table_of("A3");
  {
    const auto& rs = a3->system();
    const int a = rs.simples()[0], c = rs.simples()[2];
    REQUIRE(rs.pairing(a, c) == 0);
    CHECK(adgroup::chevalley_constants(a3, a, c).empty());
  }
}

TEST_CASE("commutator formula over rings beyond the probe moduli") {
  auto t = table_of("C2");
  for (const RingPtr& ring :
       {zpn(7, 1), Ring::make({RingKind::Series, 3, 1, 2, {}}),
        Ring::make({RingKind::Galois, 3, 2, 1, localring::default_modulus(3, 2)})}) {
    CAPTURE(localring::kind_name(ring->kind()));
    GroupContext ctx(t, ring);
    std::mt19937_64 rng(11);
    const auto& rs = t->system();
    for (int a = 0; a < rs.num_roots(); ++a)
      for (int b = 0; b < rs.num_roots(); ++b) {
        if (a == b || b == rs.negate_index(a)) continue;
        const auto terms = adgroup::chevalley_constants(t, a, b);
        for (int trial = 0; trial < 10; ++trial) {
          const auto t1 = ring->element_at(rng() % ring->size());
          const auto t2 = ring->element_at(rng() % ring->size());
          CHECK(GroupContext::commutator(ctx.generator(a, t2), ctx.generator(b, t1)) ==
                adgroup::commutator_product(ctx, terms, t1, t2));
        }
      }
  }
}

TEST_CASE("group closure") {
  auto t = table_of("A1");
  GroupContext ctx(t, zpn(3, 1));
  const auto gens = adgroup::adjoint_generators(ctx);
  const auto full = adgroup::enumerate_group(gens, 100);
  CHECK(!full.overflowed);
  CHECK(full.elements.size() == 12);
  CHECK(full.elements[0].is_identity());

  const auto capped = adgroup::enumerate_group(gens, 5);
  CHECK(capped.overflowed);

  // closure really is closed
  for (const auto& g : full.elements)
    for (const auto& h : full.elements) {
      const auto prod = g.mul(h);
      CHECK(std::find(full.elements.begin(), full.elements.end(), prod) != full.elements.end());
    }
}

TEST_CASE("torus scaling on the unipotents") {
  auto t = table_of("G2");
  const auto ring = zpn(5, 1);
  GroupContext ctx(t, ring);
  const auto& rs = t->system();
  for (int a = 0; a < rs.num_roots(); ++a)
    for (const auto& lam : ring->units()) {
      const auto h = ctx.torus(a, lam);
      const auto hinv = ctx.torus(a, ring->inv_unit(lam));
      CHECK(h.mul(hinv).is_identity());
      for (int b = 0; b < rs.num_roots(); ++b) {
        const int p = rs.pairing(b, a);
        const auto scale = p >= 0 ? ring->pow(lam, static_cast<std::uint64_t>(p))
                                  : ring->pow(ring->inv_unit(lam), static_cast<std::uint64_t>(-p));
        CHECK(h.mul(ctx.generator(b, ring->one())).mul(hinv) == ctx.generator(b, scale));
      }
    }
}
