#include <map>
#include <set>
#include <stdexcept>

#include "chevrep/rootsys.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace chevrep::rootsys;

namespace {

RootSystem build(const char* name) { return RootSystem::build(RootSystemId::parse(name)); }

// s_b(a) = a - <a,b> b on doubled coordinates
std::vector<std::int64_t> reflect(const RootSystem& rs, int a, int b) {
  auto v = rs.root(a).coords2;
  const auto& w = rs.root(b).coords2;
  const int pair = rs.pairing(a, b);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= pair * w[i];
  return v;
}

}  // namespace

TEST_CASE("root counts match the classical formulas") {
  const std::map<std::string, int> expected{
      {"A1", 2},  {"A2", 6},  {"A3", 12}, {"A4", 20},  {"B3", 18}, {"B4", 32},
      {"C2", 8},  {"C3", 18}, {"C4", 32}, {"D4", 24},  {"D5", 40}, {"G2", 12},
      {"F4", 48}, {"E6", 72}, {"E7", 126}, {"E8", 240}};
  for (const auto& [name, count] : expected) {
    CAPTURE(name);
    const auto rs = build(name.c_str());
    CHECK(rs.num_roots() == count);
    CHECK(static_cast<int>(rs.positives().size()) * 2 == count);
  }
}

TEST_CASE("reflection closure and pairing integrality") {
  for (const char* name : {"A2", "A3", "B3", "C2", "C3", "D4", "G2", "F4", "E6"}) {
    CAPTURE(name);
    const auto rs = build(name);
    for (int a = 0; a < rs.num_roots(); ++a)
      for (int b = 0; b < rs.num_roots(); ++b) {
        const int p = rs.pairing(a, b);
        CHECK(p >= -3);
        CHECK(p <= 3);
        CHECK(rs.index_of(reflect(rs, a, b)) >= 0);
      }
  }
}

TEST_CASE("cartan matrices of the bases") {
  const auto g2 = build("G2");
  const auto& s = g2.simples();
  REQUIRE(s.size() == 2);
  const int off = g2.pairing(s[0], s[1]) * g2.pairing(s[1], s[0]);
  CHECK(off == 3);  // the G2 bond
  for (const char* name : {"A3", "D4"}) {
    const auto rs = build(name);
    for (int i : rs.simples())
      for (int j : rs.simples()) {
        if (i == j)
          CHECK(rs.pairing(i, j) == 2);
        else
          CHECK((rs.pairing(i, j) == 0 || rs.pairing(i, j) == -1));
      }
  }
  const auto c3 = build("C3");
  int min_off = 0;
  for (int i : c3.simples())
    for (int j : c3.simples())
      if (i != j) min_off = std::min(min_off, c3.pairing(i, j));
  CHECK(min_off == -2);  // the double bond
}

TEST_CASE("ordering, negation and sums") {
  const auto rs = build("C3");
  for (int i = 0; i + 1 < rs.num_roots(); ++i) {
    const auto &a = rs.root(i), &b = rs.root(i + 1);
    CHECK(std::pair(a.height, a.coords2) < std::pair(b.height, b.coords2));
    CHECK(rs.root(i).index == i);
  }
  for (int i = 0; i < rs.num_roots(); ++i) {
    CHECK(rs.negate_index(rs.negate_index(i)) == i);
    CHECK(rs.root(rs.negate_index(i)).height == -rs.root(i).height);
  }
  for (int a = 0; a < rs.num_roots(); ++a)
    for (int b = 0; b < rs.num_roots(); ++b) {
      const int s = rs.sum_index(a, b);
      if (s < 0) continue;
      auto v = rs.root(a).coords2;
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += rs.root(b).coords2[k];
      CHECK(rs.root(s).coords2 == v);
    }
}

TEST_CASE("highest root dominates") {
  for (const char* name : {"A2", "B3", "C2", "G2", "F4", "E6"}) {
    CAPTURE(name);
    const auto rs = build(name);
    const int hr = rs.highest_root();
    for (int p : rs.positives()) {
      CHECK(rs.root(p).height <= rs.root(hr).height);
      CHECK(rs.pairing(hr, p) >= 0);
    }
  }
}

TEST_CASE("sigma pairs split off the highest root") {
  const std::map<std::string, int> dtab{{"A1", 0}, {"A2", 1}, {"A3", 2}, {"A4", 3}, {"B3", 3},
                                        {"B4", 5}, {"C2", 1}, {"C3", 2}, {"C4", 3}, {"D4", 4},
                                        {"D5", 6}, {"G2", 2}, {"F4", 7}, {"E6", 10}};
  for (const auto& [name, d] : dtab) {
    CAPTURE(name);
    const auto rs = build(name.c_str());
    const auto sig = rs.sigma_plus();
    CHECK(sig.d == d);
    CHECK(sig.highest == rs.highest_root());
    std::set<int> seen;
    for (const auto& [rep, mate] : sig.pairs) {
      CHECK(rep < mate);  // rep is the <-smaller of its pair
      CHECK(rs.sum_index(rep, mate) == sig.highest);
      CHECK(rs.pairing(rep, sig.highest) == 1);
      CHECK(seen.insert(rep).second);
      CHECK(seen.insert(mate).second);
    }
  }
}

TEST_CASE("F(Phi) is 2 exactly for A1 and the C family") {
  const std::map<std::string, int> f{{"A1", 2}, {"A2", 1}, {"B3", 1}, {"C2", 2},
                                     {"C3", 2}, {"C4", 2}, {"D4", 1}, {"G2", 1},
                                     {"F4", 1}, {"E6", 1}};
  for (const auto& [name, expect] : f) {
    CAPTURE(name);
    const auto rs = build(name.c_str());
    const auto [fv, witness] = rs.f_phi();
    CHECK(fv == expect);
    CHECK(rs.pairing(rs.highest_root(), witness) == fv);
  }
}

TEST_CASE("name parsing") {
  CHECK(RootSystemId::parse("E8").name() == "E8");
  CHECK(RootSystemId::parse("A12").rank == 12);
  CHECK_THROWS_AS(RootSystemId::parse("H2"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystemId::parse("B2"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystemId::parse("D3"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystemId::parse("E9"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystemId::parse(""), std::invalid_argument);
}

TEST_CASE("json dump is well formed") {
  const auto rs = build("C2");
  const auto j = nlohmann::json::parse(rs.dump_json());
  CHECK(j["system"] == "C2");
  CHECK(j["roots"].size() == 8);
}
