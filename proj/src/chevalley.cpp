#include "chevrep/chevalley.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "chevrep/rational.hpp"
#include "json.hpp"

namespace chevrep::chevalley {

namespace {

// max k with b - k*a still a root (chain-down length r of the pair)
int chain_down(const RootSystem& rs, int a, int b) {
  int k = 0;
  std::vector<std::int64_t> cur = rs.root(b).coords2;
  const auto& va = rs.root(a).coords2;
  for (;;) {
    for (size_t i = 0; i < cur.size(); ++i) cur[i] -= va[i];
    if (rs.index_of(cur) < 0) return k;
    ++k;
  }
}

class NSolver {
 public:
  explicit NSolver(const RootSystem& rs) : rs_(rs) {}

  std::int64_t n(int a, int b) {
    const auto key = std::make_pair(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const std::int64_t v = compute(a, b);
    memo_.emplace(key, v);
    return v;
  }

 private:
  std::int64_t compute(int a, int b) {
    const int s = rs_.sum_index(a, b);
    if (s < 0) throw std::logic_error("structure constant requested for a non-root sum");
    const bool pa = rs_.is_positive(a), pb = rs_.is_positive(b);
    if (pa && pb) return positive_pair(a, b, s);
    if (!pa && !pb) return -n(rs_.negate_index(a), rs_.negate_index(b));
    if (!pa) return -n(b, a);
    // a positive, b negative
    const Rational nz(rs_.norm4(s), 1);
    if (rs_.is_positive(s)) {
      // N_{a,b} = -(s,s)/(a,a) * N_{-b, s}
      const Rational v = -(nz / Rational(rs_.norm4(a))) * Rational(n(rs_.negate_index(b), s));
      return v.as_integer();
    }
    // N_{a,b} = -(s,s)/(b,b) * N_{a, -s}
    const Rational v = -(nz / Rational(rs_.norm4(b))) * Rational(n(a, rs_.negate_index(s)));
    return v.as_integer();
  }

  int extraspecial_first(int g) const {
    // <-least positive a with g-a positive; positives are index-ascending
    std::vector<std::int64_t> diff;
    for (int a : rs_.positives()) {
      if (a >= g) break;
      diff = rs_.root(g).coords2;
      const auto& va = rs_.root(a).coords2;
      for (size_t i = 0; i < diff.size(); ++i) diff[i] -= va[i];
      const int rest = rs_.index_of(diff);
      if (rest >= 0 && rs_.is_positive(rest)) return a;
    }
    throw std::logic_error("no extraspecial decomposition for a non-simple positive root");
  }

  std::int64_t positive_pair(int a, int b, int g) {
    const int a1 = extraspecial_first(g);
    if (a == a1) return chain_down(rs_, a, b) + 1;  // extraspecial, sign +
    if (b == a1) return -n(b, a);
    const int b1 = rs_.sum_index(g, rs_.negate_index(a1));
    if (b1 < 0) throw std::logic_error("extraspecial mate missing");
    // Jacobi on (e_{-a1}, e_a, e_b):
    //   N_{a,b} N_{g,-a1} = -N_{-a1,a} N_{a-a1,b} - N_{b,-a1} N_{b-a1,a}
    const Rational denom =
        -(Rational(rs_.norm4(b1)) / Rational(rs_.norm4(g))) * Rational(n(a1, b1));
    Rational acc(0);
    const int a_minus = rs_.sum_index(a, rs_.negate_index(a1));
    if (a_minus >= 0)
      acc = acc - Rational(n(rs_.negate_index(a1), a)) * Rational(n(a_minus, b));
    const int b_minus = rs_.sum_index(b, rs_.negate_index(a1));
    if (b_minus >= 0)
      acc = acc - Rational(n(b, rs_.negate_index(a1))) * Rational(n(b_minus, a));
    return (acc / denom).as_integer();
  }

  const RootSystem& rs_;
  std::map<std::pair<int, int>, std::int64_t> memo_;
};

}  // namespace

int StructureTable::basis_of_root(int rootidx) const {
  return rootidx < nneg_ ? rootidx : rootidx + rank_;
}

int StructureTable::cartan_basis(int simple_pos) const { return nneg_ + simple_pos; }

bool StructureTable::basis_is_root(int b) const { return b < nneg_ || b >= nneg_ + rank_; }

int StructureTable::root_of_basis(int b) const {
  if (b < nneg_) return b;
  if (b >= nneg_ + rank_) return b - rank_;
  return -1;
}

bool StructureTable::has_pair(int a, int b) const {
  return n_.count(std::make_pair(a, b)) != 0;
}

std::int64_t StructureTable::n_const(int a, int b) const {
  auto it = n_.find(std::make_pair(a, b));
  if (it == n_.end()) throw std::invalid_argument("N requested for a non-root sum");
  return it->second;
}

const std::vector<std::int64_t>& StructureTable::coroot_coeffs(int rootidx) const {
  return coroot_.at(rootidx);
}

void StructureTable::finish_from_n() {
  const auto& rs = *rs_;
  rank_ = rs.rank();
  nneg_ = rs.num_roots() / 2;
  dim_ = rs.num_roots() + rank_;

  // audit: antisymmetry, Chevalley involution, |N| = r+1
  for (const auto& [key, v] : n_) {
    const auto [a, b] = key;
    if (n_const(b, a) != -v) throw std::logic_error("N antisymmetry violated");
    if (n_const(rs.negate_index(a), rs.negate_index(b)) != -v)
      throw std::logic_error("N involution violated");
    const std::int64_t mag = chain_down(rs, a, b) + 1;
    if (v != mag && v != -mag) throw std::logic_error("|N| != r+1");
  }

  coroot_.resize(rs.num_roots());
  for (int a = 0; a < rs.num_roots(); ++a) {
    const auto& coeffs = rs.root(a).simple_coeffs;
    std::vector<std::int64_t> cv(rank_);
    for (int i = 0; i < rank_; ++i) {
      const Rational v =
          Rational(coeffs[i]) * Rational(rs.norm4(rs.simples()[i])) / Rational(rs.norm4(a));
      cv[i] = v.as_integer();  // coroot coefficients are integers
    }
    coroot_[a] = std::move(cv);
  }
}

StructureTable StructureTable::build(RootSystemPtr rs) {
  StructureTable t;
  t.rs_ = std::move(rs);
  NSolver solver(*t.rs_);
  const int n = t.rs_->num_roots();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (t.rs_->sum_index(a, b) < 0) continue;
      t.n_[{a, b}] = solver.n(a, b);
    }
  t.finish_from_n();
  return t;
}

void StructureTable::bracket_basis(int b1, int b2,
                                   std::vector<std::pair<int, std::int64_t>>& out) const {
  const auto& rs = *rs_;
  const bool r1 = basis_is_root(b1), r2 = basis_is_root(b2);
  if (!r1 && !r2) return;  // [H,H] = 0
  if (!r1 || !r2) {
    // [H_i, e_b] = <b, a_i> e_b
    const int h = r1 ? b2 : b1;
    const int e = r1 ? b1 : b2;
    const int sgn = r1 ? -1 : 1;  // [e,H] = -[H,e]
    const int beta = root_of_basis(e);
    const int pi = rs.pairing(beta, rs.simples()[h - nneg_]);
    if (pi != 0) out.emplace_back(e, sgn * pi);
    return;
  }
  const int a = root_of_basis(b1), b = root_of_basis(b2);
  if (rs.negate_index(a) == b) {
    // [e_a, e_-a] = H_a = sum of coroot coefficients over the base
    const auto& cv = coroot_[a];
    for (int i = 0; i < rank_; ++i)
      if (cv[i] != 0) out.emplace_back(cartan_basis(i), cv[i]);
    return;
  }
  const int s = rs.sum_index(a, b);
  if (s >= 0) out.emplace_back(basis_of_root(s), n_const(a, b));
}

void StructureTable::verify_jacobi() const {
  // [[x,y],z] + [[y,z],x] + [[z,x],y] over every basis triple
  std::vector<std::int64_t> acc(dim_, 0);
  std::vector<int> touched;
  std::vector<std::pair<int, std::int64_t>> inner, outer;
  auto add_term = [&](int x, int y, int z) {
    inner.clear();
    bracket_basis(x, y, inner);
    for (const auto& [bi, ci] : inner) {
      outer.clear();
      bracket_basis(bi, z, outer);
      for (const auto& [bo, co] : outer) {
        if (acc[bo] == 0) touched.push_back(bo);
        acc[bo] += ci * co;
      }
    }
  };
  for (int x = 0; x < dim_; ++x)
    for (int y = x + 1; y < dim_; ++y)
      for (int z = y + 1; z < dim_; ++z) {
        add_term(x, y, z);
        add_term(y, z, x);
        add_term(z, x, y);
        bool ok = true;
        for (int b : touched)
          if (acc[b] != 0) { ok = false; break; }
        for (int b : touched) acc[b] = 0;
        touched.clear();
        if (!ok)
          throw std::logic_error("Jacobi identity failed on basis triple (" +
                                 std::to_string(x) + "," + std::to_string(y) + "," +
                                 std::to_string(z) + ") in " + rs_->id().name());
      }
}

std::string StructureTable::dump_json() const {
  nlohmann::json j;
  j["system"] = rs_->id().name();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, v] : n_) rows.push_back({key.first, key.second, v});
  j["N"] = std::move(rows);
  return j.dump();
}

StructureTable StructureTable::from_json(RootSystemPtr rs, const std::string& text) {
  auto j = nlohmann::json::parse(text);
  if (j.at("system").get<std::string>() != rs->id().name())
    throw std::invalid_argument("structure-constant cache is for a different system");
  StructureTable t;
  t.rs_ = std::move(rs);
  for (const auto& row : j.at("N")) {
    if (!row.is_array() || row.size() != 3) throw std::invalid_argument("bad cache row");
    t.n_[{row[0].get<int>(), row[1].get<int>()}] = row[2].get<std::int64_t>();
  }
  // completeness: every root-sum pair must be present
  const int n = t.rs_->num_roots();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && t.rs_->sum_index(a, b) >= 0 && !t.has_pair(a, b))
        throw std::invalid_argument("structure-constant cache is incomplete");
  t.finish_from_n();
  return t;
}

StructureTable load_or_build(RootSystemPtr rs, const std::optional<std::string>& cache_dir) {
  if (!cache_dir || cache_dir->empty()) return StructureTable::build(std::move(rs));
  const std::filesystem::path path =
      std::filesystem::path(*cache_dir) / ("structconsts_" + rs->id().name() + ".json");
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return StructureTable::from_json(std::move(rs), text);
  }
  StructureTable t = StructureTable::build(std::move(rs));
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path);
  if (out) out << t.dump_json();
  return t;
}

ExpPolyMatrix exp_ad(const StructureTable& table, int rootidx) {
  const int dim = table.dim();
  ExpPolyMatrix xm;
  xm.root = rootidx;
  xm.dim = dim;

  // columns of ad e_a, sparse
  using Col = std::vector<std::pair<int, std::int64_t>>;
  std::vector<Col> ad(dim);
  const int ea = table.basis_of_root(rootidx);
  std::vector<std::pair<int, std::int64_t>> out;
  for (int c = 0; c < dim; ++c) {
    out.clear();
    table.bracket_basis(ea, c, out);
    ad[c] = out;
  }

  auto set_coeff = [&](int r, int c, int k, std::int64_t v) {
    auto& poly = xm.entries[{r, c}];
    if (static_cast<int>(poly.size()) <= k) poly.resize(k + 1, 0);
    poly[k] += v;
  };
  for (int i = 0; i < dim; ++i) set_coeff(i, i, 0, 1);

  std::vector<Col> power(dim);
  for (int c = 0; c < dim; ++c) power[c] = ad[c];
  std::int64_t factorial = 1;
  for (int k = 1;; ++k) {
    factorial *= k;
    bool all_zero = true;
    for (int c = 0; c < dim; ++c) {
      for (const auto& [r, v] : power[c]) {
        if (v % factorial != 0)
          throw std::logic_error("exp series entry not divisible by k! in " +
                                 table.system().id().name());
        if (v != 0) {
          set_coeff(r, c, k, v / factorial);
          all_zero = false;
        }
      }
    }
    if (all_zero) break;
    if (k >= 5) throw std::logic_error("ad e_a not nilpotent of degree <= 5");
    // next power: column c of T^(k+1) = sum_r w * (column r of T)
    std::vector<Col> next(dim);
    for (int c = 0; c < dim; ++c) {
      std::map<int, std::int64_t> acc;
      for (const auto& [r, w] : power[c])
        for (const auto& [r2, v2] : ad[r]) acc[r2] += w * v2;
      Col col;
      for (const auto& [r2, v2] : acc)
        if (v2 != 0) col.emplace_back(r2, v2);
      next[c] = std::move(col);
    }
    power = std::move(next);
  }
  return xm;
}

ringmat::RMatrix specialize(const ExpPolyMatrix& xm, const localring::RingPtr& ring,
                            const localring::RingElement& t) {
  ringmat::RMatrix m(ring, xm.dim);
  for (const auto& [rc, poly] : xm.entries) {
    localring::RingElement acc = ring->zero();
    localring::RingElement tp = ring->one();
    for (size_t k = 0; k < poly.size(); ++k) {
      if (poly[k] != 0) acc = ring->add(acc, ring->mul(ring->from_int(poly[k]), tp));
      if (k + 1 < poly.size()) tp = ring->mul(tp, t);
    }
    m.set(rc.first, rc.second, acc);
  }
  return m;
}

}  // namespace chevrep::chevalley
