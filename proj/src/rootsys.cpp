#include "chevrep/rootsys.hpp"

#include <algorithm>
#include <stdexcept>

#include "chevrep/rational.hpp"
#include "json.hpp"

namespace chevrep::rootsys {

namespace {

using Vec = std::vector<std::int64_t>;

std::int64_t dot2(const Vec& a, const Vec& b) {
  std::int64_t s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec scaled_unit(int dim, int i, std::int64_t v) {
  Vec e(dim, 0);
  e[i] = v;
  return e;
}

void push_both_signs(std::vector<Vec>& out, Vec v) {
  Vec neg(v.size());
  for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
  out.push_back(std::move(v));
  out.push_back(std::move(neg));
}

// All vectors with entries +-1 at the given positions, filtered by parity of
// the number of -1 entries among the first `parity_span` coordinates.
void push_half_sum_vectors(std::vector<Vec>& out, int dim, int span, int parity,
                           const Vec& suffix_pattern) {
  for (std::uint32_t mask = 0; mask < (1u << span); ++mask) {
    if (__builtin_popcount(mask) % 2 != parity) continue;
    Vec v(dim, 0);
    for (int i = 0; i < span; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
    for (int i = span; i < dim; ++i) v[i] = suffix_pattern[i - span];
    out.push_back(std::move(v));
  }
}

struct Ambient {
  std::vector<Vec> roots;    // doubled coordinates
  std::vector<Vec> simples;  // doubled, conventional order
};

Ambient make_ambient(const RootSystemId& id) {
  const int m = id.rank;
  Ambient a;
  switch (id.family) {
    case Family::A: {
      const int dim = m + 1;
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          if (i != j) {
            Vec v(dim, 0);
            v[i] = 2;
            v[j] = -2;
            a.roots.push_back(std::move(v));
          }
      for (int i = 0; i < m; ++i) {
        Vec v(dim, 0);
        v[i] = 2;
        v[i + 1] = -2;
        a.simples.push_back(std::move(v));
      }
      break;
    }
    case Family::B:
    case Family::C:
    case Family::D: {
      const int dim = m;
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) {
              Vec v(dim, 0);
              v[i] = 2 * si;
              v[j] = 2 * sj;
              a.roots.push_back(std::move(v));
            }
      if (id.family == Family::B)
        for (int i = 0; i < m; ++i) push_both_signs(a.roots, scaled_unit(dim, i, 2));
      if (id.family == Family::C)
        for (int i = 0; i < m; ++i) push_both_signs(a.roots, scaled_unit(dim, i, 4));
      for (int i = 0; i + 1 < m; ++i) {
        Vec v(dim, 0);
        v[i] = 2;
        v[i + 1] = -2;
        a.simples.push_back(std::move(v));
      }
      if (id.family == Family::B) a.simples.push_back(scaled_unit(dim, m - 1, 2));
      if (id.family == Family::C) a.simples.push_back(scaled_unit(dim, m - 1, 4));
      if (id.family == Family::D) {
        Vec v(dim, 0);
        v[m - 2] = 2;
        v[m - 1] = 2;
        a.simples.push_back(std::move(v));
      }
      break;
    }
    case Family::G: {
      // short +-(e_i - e_j), long +-(2e_i - e_j - e_k) in the sum-zero plane
      const int dim = 3;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          Vec v(dim, 0);
          v[i] = 2;
          v[j] = -2;
          push_both_signs(a.roots, std::move(v));
        }
      for (int i = 0; i < 3; ++i) {
        Vec v(dim, -2);
        v[i] = 4;
        push_both_signs(a.roots, std::move(v));
      }
      a.simples.push_back({2, -2, 0});   // short
      a.simples.push_back({-4, 2, 2});   // long
      break;
    }
    case Family::F: {
      const int dim = 4;
      for (int i = 0; i < 4; ++i) push_both_signs(a.roots, scaled_unit(dim, i, 2));
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) {
              Vec v(dim, 0);
              v[i] = 2 * si;
              v[j] = 2 * sj;
              a.roots.push_back(std::move(v));
            }
      for (std::uint32_t mask = 0; mask < 16; ++mask) {
        Vec v(dim);
        for (int i = 0; i < 4; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
        a.roots.push_back(std::move(v));
      }
      a.simples.push_back({0, 2, -2, 0});
      a.simples.push_back({0, 0, 2, -2});
      a.simples.push_back({0, 0, 0, 2});
      a.simples.push_back({1, -1, -1, -1});
      break;
    }
    case Family::E: {
      const int dim = 8;
      auto pair_roots = [&](int span) {
        for (int i = 0; i < span; ++i)
          for (int j = i + 1; j < span; ++j)
            for (int si : {1, -1})
              for (int sj : {1, -1}) {
                Vec v(dim, 0);
                v[i] = 2 * si;
                v[j] = 2 * sj;
                a.roots.push_back(std::move(v));
              }
      };
      if (m == 8) {
        pair_roots(8);
        push_half_sum_vectors(a.roots, dim, 8, 0, {});
      } else if (m == 7) {
        pair_roots(6);
        push_both_signs(a.roots, Vec{0, 0, 0, 0, 0, 0, 2, -2});
        push_half_sum_vectors(a.roots, dim, 6, 1, {-1, 1});
        push_half_sum_vectors(a.roots, dim, 6, 1, {1, -1});  // negatives of the above
      } else {  // m == 6
        pair_roots(5);
        push_half_sum_vectors(a.roots, dim, 5, 0, {-1, -1, 1});
        push_half_sum_vectors(a.roots, dim, 5, 1, {1, 1, -1});
      }
      a.simples.push_back({1, -1, -1, -1, -1, -1, -1, 1});
      a.simples.push_back({2, 2, 0, 0, 0, 0, 0, 0});
      a.simples.push_back({-2, 2, 0, 0, 0, 0, 0, 0});
      a.simples.push_back({0, -2, 2, 0, 0, 0, 0, 0});
      a.simples.push_back({0, 0, -2, 2, 0, 0, 0, 0});
      a.simples.push_back({0, 0, 0, -2, 2, 0, 0, 0});
      a.simples.push_back({0, 0, 0, 0, -2, 2, 0, 0});
      a.simples.push_back({0, 0, 0, 0, 0, -2, 2, 0});
      a.simples.resize(m);
      break;
    }
  }
  return a;
}

int expected_count(const RootSystemId& id) {
  const int m = id.rank;
  switch (id.family) {
    case Family::A: return m * (m + 1);
    case Family::B:
    case Family::C: return 2 * m * m;
    case Family::D: return 2 * m * (m - 1);
    case Family::G: return 12;
    case Family::F: return 48;
    case Family::E: return m == 6 ? 72 : (m == 7 ? 126 : 240);
  }
  throw std::logic_error("unreachable");
}

// Solve gamma = sum n_i alpha_i exactly; throws unless integral.
Vec simple_coefficients(const std::vector<Vec>& simples, const Vec& gamma) {
  const int r = static_cast<int>(simples.size());
  std::vector<std::vector<Rational>> aug(r, std::vector<Rational>(r + 1));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) aug[i][j] = Rational(dot2(simples[j], simples[i]));
    aug[i][r] = Rational(dot2(gamma, simples[i]));
  }
  for (int col = 0; col < r; ++col) {
    int piv = -1;
    for (int row = col; row < r; ++row)
      if (!aug[row][col].is_zero()) { piv = row; break; }
    if (piv < 0) throw std::logic_error("simple roots not independent");
    std::swap(aug[col], aug[piv]);
    for (int row = 0; row < r; ++row) {
      if (row == col || aug[row][col].is_zero()) continue;
      const Rational f = aug[row][col] / aug[col][col];
      for (int c = col; c <= r; ++c) aug[row][c] = aug[row][c] - f * aug[col][c];
    }
  }
  Vec out(r);
  for (int i = 0; i < r; ++i) out[i] = (aug[i][r] / aug[i][i]).as_integer();
  return out;
}

bool rank_supported(Family family, int rank) {
  const int max_rank = 12;
  switch (family) {
    case Family::A: return rank >= 1 && rank <= max_rank;
    case Family::B: return rank >= 3 && rank <= max_rank;
    case Family::C: return rank >= 2 && rank <= max_rank;
    case Family::D: return rank >= 4 && rank <= max_rank;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

}  // namespace

RootSystemId RootSystemId::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad root system name: " + s);
  RootSystemId id;
  switch (s[0]) {
    case 'A': id.family = Family::A; break;
    case 'B': id.family = Family::B; break;
    case 'C': id.family = Family::C; break;
    case 'D': id.family = Family::D; break;
    case 'E': id.family = Family::E; break;
    case 'F': id.family = Family::F; break;
    case 'G': id.family = Family::G; break;
    default: throw std::invalid_argument("bad root system name: " + s);
  }
  try {
    size_t used = 0;
    id.rank = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("bad root system name: " + s);
  }
  if (!rank_supported(id.family, id.rank))
    throw std::invalid_argument(id.name() + ": rank out of the supported range");
  return id;
}

std::string RootSystemId::name() const {
  static const char* letters = "ABCDEFG";
  return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
}

RootSystem RootSystem::build(const RootSystemId& id) {
  if (!rank_supported(id.family, id.rank))
    throw std::invalid_argument(id.name() + ": rank out of the supported range");

  Ambient amb = make_ambient(id);
  if (static_cast<int>(amb.roots.size()) != expected_count(id))
    throw std::logic_error(id.name() + ": unexpected root count");

  RootSystem rs;
  rs.id_ = id;
  for (auto& v : amb.roots) {
    Root r;
    r.simple_coeffs = simple_coefficients(amb.simples, v);
    bool any_pos = false, any_neg = false;
    int h = 0;
    for (auto c : r.simple_coeffs) {
      h += static_cast<int>(c);
      any_pos |= c > 0;
      any_neg |= c < 0;
    }
    if (any_pos && any_neg) throw std::logic_error("root with mixed-sign coefficients");
    r.height = h;
    r.coords2 = std::move(v);
    rs.roots_.push_back(std::move(r));
  }
  std::sort(rs.roots_.begin(), rs.roots_.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.simple_coeffs < b.simple_coeffs;
  });
  for (int i = 0; i < static_cast<int>(rs.roots_.size()); ++i) {
    rs.roots_[i].index = i;
    rs.coord_index_[rs.roots_[i].coords2] = i;
    if (rs.roots_[i].height > 0) rs.positive_.push_back(i);
  }
  if (rs.positive_.size() * 2 != rs.roots_.size())
    throw std::logic_error("positive roots are not half of the system");

  for (const auto& s : amb.simples) {
    auto it = rs.coord_index_.find(s);
    if (it == rs.coord_index_.end()) throw std::logic_error("simple root missing");
    rs.simple_.push_back(it->second);
  }
  rs.highest_ = rs.roots_.back().index;
  if (rs.roots_[rs.highest_].height == rs.roots_[rs.roots_.size() - 2].height)
    throw std::logic_error("highest root is not unique");
  return rs;
}

int RootSystem::pairing(int a, int b) const {
  const std::int64_t num = 2 * dot2(roots_.at(a).coords2, roots_.at(b).coords2);
  const std::int64_t den = dot2(roots_.at(b).coords2, roots_.at(b).coords2);
  if (num % den != 0) throw std::logic_error("non-integral Cartan pairing");
  return static_cast<int>(num / den);
}

std::int64_t RootSystem::norm4(int a) const {
  return dot2(roots_.at(a).coords2, roots_.at(a).coords2);
}

int RootSystem::index_of(const std::vector<std::int64_t>& coords2) const {
  auto it = coord_index_.find(coords2);
  return it == coord_index_.end() ? -1 : it->second;
}

int RootSystem::sum_index(int a, int b) const {
  Vec s = roots_.at(a).coords2;
  const Vec& t = roots_.at(b).coords2;
  for (size_t i = 0; i < s.size(); ++i) s[i] += t[i];
  return index_of(s);
}

int RootSystem::negate_index(int a) const {
  Vec s = roots_.at(a).coords2;
  for (auto& v : s) v = -v;
  const int i = index_of(s);
  if (i < 0) throw std::logic_error("root system not symmetric");
  return i;
}

SigmaData RootSystem::sigma_plus() const {
  SigmaData sd;
  sd.highest = highest_;
  std::vector<int> members;
  for (int i : positive_)
    if (pairing(i, highest_) == 1) members.push_back(i);
  std::vector<bool> used(roots_.size(), false);
  for (int i : members) {
    if (used[i]) continue;
    // mate = highest - i; the pairing-1 wall is stable under this involution
    Vec mate = roots_[highest_].coords2;
    const Vec& v = roots_[i].coords2;
    for (size_t k = 0; k < mate.size(); ++k) mate[k] -= v[k];
    const int j = index_of(mate);
    if (j < 0 || pairing(j, highest_) != 1 || j == i)
      throw std::logic_error("sigma pairing is not an involution");
    used[i] = used[j] = true;
    sd.pairs.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(sd.pairs.begin(), sd.pairs.end());
  sd.d = static_cast<int>(sd.pairs.size());
  if (2 * sd.d != static_cast<int>(members.size()))
    throw std::logic_error("sigma set has odd size");
  return sd;
}

std::pair<int, int> RootSystem::f_phi() const {
  int best = 0, witness = -1;
  for (const auto& r : roots_) {
    const int v = pairing(highest_, r.index);
    if (v > 0 && (witness < 0 || v < best)) {
      best = v;
      witness = r.index;
    }
  }
  return {best, witness};
}

std::string RootSystem::dump_json() const {
  nlohmann::json j;
  j["system"] = id_.name();
  j["rank"] = rank();
  j["num_roots"] = num_roots();
  j["highest"] = highest_;
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& r : roots_) {
    nlohmann::json e;
    e["coords2"] = r.coords2;
    e["simple"] = r.simple_coeffs;
    e["height"] = r.height;
    roots.push_back(std::move(e));
  }
  j["roots"] = std::move(roots);
  nlohmann::json pm = nlohmann::json::array();
  for (int a = 0; a < num_roots(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (int b = 0; b < num_roots(); ++b) row.push_back(pairing(a, b));
    pm.push_back(std::move(row));
  }
  j["pairing"] = std::move(pm);
  return j.dump(2);
}

}  // namespace chevrep::rootsys
