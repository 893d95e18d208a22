#include "chevrep/mforacle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "chevrep/adgroup.hpp"
#include "chevrep/localring.hpp"
#include "json.hpp"

namespace chevrep::mforacle {

GroupTable group_from_matrices(const std::vector<ringmat::RMatrix>& generators,
                               std::size_t cap) {
  auto closure = adgroup::enumerate_group(generators, cap);
  if (closure.overflowed) throw std::length_error("group closure exceeds cap");

  struct State {
    std::vector<ringmat::RMatrix> elements;
    std::unordered_map<std::uint64_t, std::vector<int>> buckets;
    std::vector<int> inv;
  };
  auto st = std::make_shared<State>();
  st->elements = std::move(closure.elements);
  const int n = static_cast<int>(st->elements.size());
  for (int i = 0; i < n; ++i) st->buckets[st->elements[i].hash_key()].push_back(i);

  auto lookup = [st](const ringmat::RMatrix& m) -> int {
    auto it = st->buckets.find(m.hash_key());
    if (it != st->buckets.end())
      for (int idx : it->second)
        if (st->elements[idx] == m) return idx;
    throw std::logic_error("product left the closed element set");
  };
  st->inv.resize(n);
  for (int i = 0; i < n; ++i) st->inv[i] = lookup(st->elements[i].inverse());

  GroupTable g;
  g.n = n;
  g.identity = lookup(ringmat::RMatrix::identity(st->elements[0].ring(), st->elements[0].dim()));
  for (const auto& gen : generators) g.gens.push_back(lookup(gen));
  g.mult = [st, lookup](int a, int b) { return lookup(st->elements[a].mul(st->elements[b])); };
  g.inv = [st](int a) { return st->inv[a]; };
  return g;
}

GroupTable group_from_heis(const heisenberg::HeisGroup& h, std::uint64_t cap) {
  const std::uint64_t n = h.size_u64();
  if (n > cap) throw std::length_error("|U| exceeds cap");
  GroupTable g;
  g.n = static_cast<int>(n);
  g.identity = static_cast<int>(h.index_of(h.identity()));
  const auto& ring = h.ring();
  for (int pos = 0; pos <= h.num_t(); ++pos)
    for (int k = 0; k < ring->clen(); ++k) {
      localring::RingElement u = ring->zero();
      u.c[k] = 1;
      const int root = pos < h.num_t() ? h.sigma_root(pos) : h.highest();
      g.gens.push_back(static_cast<int>(h.index_of(h.generator_coords(root, u))));
    }
  g.mult = [h](int a, int b) {
    return static_cast<int>(h.index_of(h.multiply(h.element_at(a), h.element_at(b))));
  };
  g.inv = [h](int a) { return static_cast<int>(h.index_of(h.inverse(h.element_at(a)))); };
  return g;
}

GroupTable cyclic_group(int n) {
  GroupTable g;
  g.n = n;
  g.identity = 0;
  g.gens = {1 % n};
  g.mult = [n](int a, int b) { return (a + b) % n; };
  g.inv = [n](int a) { return (n - a) % n; };
  return g;
}

ConjClasses conjugacy_classes(const GroupTable& g) {
  ConjClasses cc;
  cc.class_of.assign(g.n, -1);
  for (int seed = 0; seed < g.n; ++seed) {
    if (cc.class_of[seed] >= 0) continue;
    const int cls = static_cast<int>(cc.reps.size());
    cc.reps.push_back(seed);
    cc.members.push_back({});
    std::vector<int> frontier{seed};
    cc.class_of[seed] = cls;
    cc.members[cls].push_back(seed);
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier)
        for (int s : g.gens) {
          const int y = g.mult(g.mult(s, x), g.inv(s));
          if (cc.class_of[y] < 0) {
            cc.class_of[y] = cls;
            cc.members[cls].push_back(y);
            next.push_back(y);
          }
        }
      frontier = std::move(next);
    }
    cc.sizes.push_back(static_cast<int>(cc.members[cls].size()));
  }
  cc.identity_class = cc.class_of[g.identity];
  for (std::size_t i = 0; i < cc.reps.size(); ++i)
    cc.inverse_class.push_back(cc.class_of[g.inv(cc.reps[i])]);
  return cc;
}

namespace {

int element_order(const GroupTable& g, int x) {
  int ord = 1;
  int cur = x;
  while (cur != g.identity) {
    cur = g.mult(cur, x);
    ++ord;
    if (ord > g.n) throw std::logic_error("element order exceeds group order");
  }
  return ord;
}

std::int64_t mpow(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::int64_t minv(std::int64_t a, std::int64_t m) { return mpow(((a % m) + m) % m, m - 2, m); }

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;

// Row echelon over F_ell in place; returns pivot columns.
std::vector<int> rref(Mat& a, std::int64_t ell) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(a.size());
  if (rows == 0) return pivots;
  const int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) { pr = i; break; }
    if (pr < 0) continue;
    std::swap(a[r], a[pr]);
    const std::int64_t s = minv(a[r][c], ell);
    for (int j = 0; j < cols; ++j) a[r][j] = a[r][j] * s % ell;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::int64_t f = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % ell + ell) % ell;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Kernel basis of a square matrix over F_ell.
std::vector<Vec> kernel_basis(Mat a, std::int64_t ell) {
  const int dim = static_cast<int>(a.size());
  const std::vector<int> pivots = rref(a, ell);
  std::vector<bool> is_pivot(dim, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < dim; ++c) {
    if (is_pivot[c]) continue;
    Vec v(dim, 0);
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = ((-a[r][c]) % ell + ell) % ell;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::int64_t> prime_factors(std::int64_t v) {
  std::vector<std::int64_t> fs;
  for (std::int64_t p = 2; p * p <= v; ++p)
    if (v % p == 0) {
      fs.push_back(p);
      while (v % p == 0) v /= p;
    }
  if (v > 1) fs.push_back(v);
  return fs;
}

std::int64_t primitive_root(std::int64_t ell) {
  const auto fs = prime_factors(ell - 1);
  for (std::int64_t g = 2; g < ell; ++g) {
    bool ok = true;
    for (std::int64_t f : fs)
      if (mpow(g, (ell - 1) / f, ell) == 1) { ok = false; break; }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

}  // namespace

std::int64_t group_exponent(const GroupTable& g, const ConjClasses& cc) {
  std::int64_t e = 1;
  for (int rep : cc.reps) e = std::lcm<std::int64_t>(e, element_order(g, rep));
  return e;
}

CharacterTable character_table(const GroupTable& g) {
  if (g.n > 10000) throw std::length_error("group exceeds the character-table cap");
  CharacterTable t;
  t.order = g.n;
  t.classes = conjugacy_classes(g);
  const ConjClasses& cc = t.classes;
  const int c = static_cast<int>(cc.reps.size());
  t.exponent = group_exponent(g, cc);

  std::int64_t ell = t.exponent + 1;
  const double floor_ell = 2.0 * std::sqrt(static_cast<double>(g.n));
  while (!localring::is_prime(ell) || static_cast<double>(ell) <= floor_ell ||
         g.n % ell == 0)
    ell += t.exponent;
  t.ell = ell;

  // class matrices: B_i[j][k] = #{x in C_i : x^-1 z_k in C_j}
  std::vector<Mat> bmats(c, Mat(c, Vec(c, 0)));
  for (int i = 0; i < c; ++i)
    for (int x : cc.members[i]) {
      const int xi = g.inv(x);
      for (int k = 0; k < c; ++k) ++bmats[i][cc.class_of[g.mult(xi, cc.reps[k])]][k];
    }
  for (auto& m : bmats)
    for (auto& row : m)
      for (auto& v : row) v %= ell;

  // eigenvalues of each class matrix on the full space
  std::vector<std::vector<std::int64_t>> evals(c);
  for (int i = 0; i < c; ++i) {
    if (i == cc.identity_class) continue;
    for (std::int64_t lam = 0; lam < ell; ++lam) {
      Mat a = bmats[i];
      for (int j = 0; j < c; ++j) a[j][j] = ((a[j][j] - lam) % ell + ell) % ell;
      if (static_cast<int>(rref(a, ell).size()) < c) evals[i].push_back(lam);
    }
  }

  // split into common eigenspaces
  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> full;
    for (int k = 0; k < c; ++k) {
      Vec v(c, 0);
      v[k] = 1;
      full.push_back(std::move(v));
    }
    spaces.push_back(std::move(full));
  }
  for (int i = 0; i < c; ++i) {
    if (i == cc.identity_class) continue;
    bool all_one = true;
    for (const auto& s : spaces)
      if (s.size() > 1) all_one = false;
    if (all_one) break;
    std::vector<std::vector<Vec>> next;
    for (auto& s : spaces) {
      const int r = static_cast<int>(s.size());
      if (r == 1) {
        next.push_back(std::move(s));
        continue;
      }
      // restriction N of B_i to the subspace, acting on coordinates
      Mat sys(c, Vec(r + r, 0));  // [ basis columns | image columns ]
      for (int u = 0; u < r; ++u)
        for (int j = 0; j < c; ++j) sys[j][u] = s[u][j];
      for (int tt = 0; tt < r; ++tt)
        for (int j = 0; j < c; ++j) {
          std::int64_t acc = 0;
          for (int k = 0; k < c; ++k) acc = (acc + bmats[i][j][k] * s[tt][k]) % ell;
          sys[j][r + tt] = acc;
        }
      rref(sys, ell);
      Mat nmat(r, Vec(r, 0));  // nmat[u][t]: coefficient of basis u in image of t
      for (int row = 0; row < r; ++row) {
        int pc = -1;
        for (int u = 0; u < r; ++u)
          if (sys[row][u] != 0) { pc = u; break; }
        if (pc < 0) continue;
        if (sys[row][pc] != 1) throw std::logic_error("basis system not reduced");
        for (int tt = 0; tt < r; ++tt) nmat[pc][tt] = sys[row][r + tt];
      }
      int found = 0;
      for (std::int64_t lam : evals[i]) {
        Mat a = nmat;
        for (int u = 0; u < r; ++u) a[u][u] = ((a[u][u] - lam) % ell + ell) % ell;
        const auto kb = kernel_basis(std::move(a), ell);
        if (kb.empty()) continue;
        std::vector<Vec> sub;
        for (const Vec& y : kb) {
          Vec v(c, 0);
          for (int tt = 0; tt < r; ++tt)
            for (int j = 0; j < c; ++j) v[j] = (v[j] + y[tt] * s[tt][j]) % ell;
          sub.push_back(std::move(v));
        }
        found += static_cast<int>(sub.size());
        next.push_back(std::move(sub));
      }
      if (found != r) throw std::logic_error("class matrix failed to split the space");
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != c)
    throw std::logic_error("eigenspace count does not match class count");

  // central characters -> degrees -> lifted values
  const std::int64_t z = mpow(primitive_root(ell), (ell - 1) / t.exponent, ell);
  const std::int64_t zinv = minv(z, ell);
  const std::int64_t einv = minv(t.exponent % ell, ell);

  // powers of class representatives, as classes
  std::vector<std::vector<int>> pcls(c, std::vector<int>(t.exponent));
  for (int j = 0; j < c; ++j) {
    int cur = g.identity;
    for (int s = 0; s < t.exponent; ++s) {
      pcls[j][s] = cc.class_of[cur];
      cur = g.mult(cur, cc.reps[j]);
    }
  }

  struct Row {
    int degree;
    std::vector<std::vector<std::int64_t>> mults;  // [class][exponent]
  };
  std::vector<Row> rows;
  for (auto& s : spaces) {
    Vec w = s[0];
    if (w[cc.identity_class] == 0)
      throw std::logic_error("central character vanishes on the identity class");
    const std::int64_t scale = minv(w[cc.identity_class], ell);
    for (auto& v : w) v = v * scale % ell;

    std::int64_t ssum = 0;
    for (int j = 0; j < c; ++j)
      ssum = (ssum + w[j] * w[cc.inverse_class[j]] % ell * minv(cc.sizes[j], ell)) % ell;
    const std::int64_t d2 = static_cast<std::int64_t>(g.n) % ell * minv(ssum, ell) % ell;
    int degree = -1;
    for (std::int64_t r2 = 1; 2 * r2 < ell; ++r2)
      if (r2 * r2 % ell == d2) { degree = static_cast<int>(r2); break; }
    if (degree < 0) throw std::logic_error("degree is not a small square root");

    Vec chi(c);
    for (int j = 0; j < c; ++j) chi[j] = degree * w[j] % ell * minv(cc.sizes[j], ell) % ell;

    Row row;
    row.degree = degree;
    row.mults.assign(c, std::vector<std::int64_t>(t.exponent, 0));
    for (int j = 0; j < c; ++j) {
      for (std::int64_t tt = 0; tt < t.exponent; ++tt) {
        std::int64_t acc = 0;
        for (std::int64_t sx = 0; sx < t.exponent; ++sx)
          acc = (acc + chi[pcls[j][sx]] * mpow(zinv, sx * tt % (ell - 1), ell)) % ell;
        const std::int64_t mu = acc * einv % ell;
        if (mu > degree)
          throw std::logic_error("root-of-unity multiplicity exceeds the degree");
        row.mults[j][tt] = mu;
      }
      std::int64_t tot = 0;
      for (std::int64_t v : row.mults[j]) tot += v;
      if (tot != degree) throw std::logic_error("multiplicities do not sum to the degree");
    }
    rows.push_back(std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::make_pair(a.degree, a.mults) < std::make_pair(b.degree, b.mults);
  });

  std::int64_t degsum = 0;
  for (const Row& r : rows) degsum += static_cast<std::int64_t>(r.degree) * r.degree;
  if (degsum != g.n) throw std::logic_error("degree squares do not sum to the order");

  for (const Row& r : rows) {
    t.degrees.push_back(r.degree);
    std::vector<std::complex<double>> vals(c);
    std::vector<bool> ker(c);
    for (int j = 0; j < c; ++j) {
      std::complex<double> v = 0.0;
      for (std::int64_t tt = 0; tt < t.exponent; ++tt) {
        if (r.mults[j][tt] == 0) continue;
        const double a = 2.0 * std::numbers::pi * static_cast<double>(tt) /
                         static_cast<double>(t.exponent);
        v += static_cast<double>(r.mults[j][tt]) * std::complex<double>(std::cos(a), std::sin(a));
      }
      vals[j] = v;
      ker[j] = (r.mults[j][0] == r.degree);
    }
    t.values.push_back(std::move(vals));
    t.in_kernel.push_back(std::move(ker));
  }

  // orthogonality sanity checks on the lifted values
  for (int a = 0; a < c; ++a)
    for (int b = 0; b < c; ++b) {
      std::complex<double> ip = 0.0;
      for (int j = 0; j < c; ++j)
        ip += static_cast<double>(cc.sizes[j]) * t.values[a][j] * std::conj(t.values[b][j]);
      ip /= static_cast<double>(g.n);
      if (std::abs(ip - (a == b ? 1.0 : 0.0)) > 1e-6)
        throw std::logic_error("row orthogonality failed");
    }
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) {
      std::complex<double> ip = 0.0;
      for (int a = 0; a < c; ++a) ip += t.values[a][i] * std::conj(t.values[a][j]);
      const double expect = i == j ? static_cast<double>(g.n) / cc.sizes[i] : 0.0;
      if (std::abs(ip - expect) > 1e-6) throw std::logic_error("column orthogonality failed");
    }
  return t;
}

int minimal_faithful_dimension(const CharacterTable& t) {
  const int c = static_cast<int>(t.classes.reps.size());
  struct Cand {
    int degree;
    std::vector<bool> ker;
  };
  std::vector<Cand> cands;
  for (std::size_t i = 0; i < t.degrees.size(); ++i) {
    bool trivial = true;
    for (int j = 0; j < c; ++j)
      if (!t.in_kernel[i][j]) { trivial = false; break; }
    if (!trivial) cands.push_back({t.degrees[i], t.in_kernel[i]});
  }
  std::sort(cands.begin(), cands.end(),
            [](const Cand& a, const Cand& b) { return a.degree < b.degree; });

  auto trivial_kernel = [&](const std::vector<bool>& ker) {
    for (int j = 0; j < c; ++j)
      if (ker[j] && j != t.classes.identity_class) return false;
    return true;
  };

  int best = -1;
  std::vector<bool> cur(c, true);
  std::function<void(std::size_t, int, std::vector<bool>&)> dfs =
      [&](std::size_t idx, int sum, std::vector<bool>& ker) {
        if (trivial_kernel(ker)) {
          if (best < 0 || sum < best) best = sum;
          return;
        }
        if (idx >= cands.size()) return;
        if (best >= 0 && sum + cands[idx].degree >= best) return;
        std::vector<bool> merged(c);
        for (int j = 0; j < c; ++j) merged[j] = ker[j] && cands[idx].ker[j];
        dfs(idx + 1, sum + cands[idx].degree, merged);
        dfs(idx + 1, sum, ker);
      };
  dfs(0, 0, cur);
  if (best < 0) throw std::logic_error("no faithful collection of irreducibles exists");
  return best;
}

std::string character_table_json(const CharacterTable& t) {
  nlohmann::json j;
  j["order"] = t.order;
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t i = 0; i < t.classes.reps.size(); ++i)
    classes.push_back({{"size", t.classes.sizes[i]}});
  j["classes"] = std::move(classes);
  j["degrees"] = t.degrees;
  nlohmann::json values = nlohmann::json::array();
  for (const auto& row : t.values) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back({v.real(), v.imag()});
    values.push_back(std::move(r));
  }
  j["values"] = std::move(values);
  return j.dump();
}

}  // namespace chevrep::mforacle
