#include "chevrep/ringmat.hpp"

#include <stdexcept>

namespace chevrep::ringmat {

RMatrix::RMatrix(RingPtr ring, int dim)
    : ring_(std::move(ring)), dim_(dim), clen_(ring_->clen()),
      data_(static_cast<size_t>(dim) * dim * ring_->clen(), 0) {}

RMatrix RMatrix::identity(RingPtr ring, int dim) {
  RMatrix m(std::move(ring), dim);
  const RingElement one = m.ring_->one();
  for (int i = 0; i < dim; ++i) m.set(i, i, one);
  return m;
}

RingElement RMatrix::get(int r, int c) const {
  const auto* p = data_.data() + (static_cast<size_t>(r) * dim_ + c) * clen_;
  return {std::vector<std::int64_t>(p, p + clen_)};
}

void RMatrix::set(int r, int c, const RingElement& v) {
  auto* p = data_.data() + (static_cast<size_t>(r) * dim_ + c) * clen_;
  std::copy(v.c.begin(), v.c.end(), p);
}

RMatrix RMatrix::mul(const RMatrix& other) const {
  if (dim_ != other.dim_ || !(ring_->spec() == other.ring_->spec()))
    throw std::invalid_argument("matrix shape/ring mismatch");
  RMatrix out(ring_, dim_);
  const auto* a = data_.data();
  const auto* b = other.data_.data();
  auto* o = out.data_.data();
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const auto* aik = a + (static_cast<size_t>(i) * dim_ + k) * clen_;
      bool zero = true;
      for (int t = 0; t < clen_; ++t)
        if (aik[t] != 0) { zero = false; break; }
      if (zero) continue;
      for (int j = 0; j < dim_; ++j)
        ring_->span_addmul(o + (static_cast<size_t>(i) * dim_ + j) * clen_, aik,
                           b + (static_cast<size_t>(k) * dim_ + j) * clen_);
    }
  return out;
}

RMatrix RMatrix::inverse() const {
  RMatrix a = *this;
  RMatrix inv = identity(ring_, dim_);
  const auto& R = *ring_;
  for (int col = 0; col < dim_; ++col) {
    int pivot = -1;
    for (int r = col; r < dim_; ++r)
      if (R.is_unit(a.get(r, col))) { pivot = r; break; }
    if (pivot < 0) throw std::domain_error("matrix not invertible over local ring");
    if (pivot != col) {
      for (int c = 0; c < dim_; ++c) {
        auto t = a.get(col, c); a.set(col, c, a.get(pivot, c)); a.set(pivot, c, t);
        auto u = inv.get(col, c); inv.set(col, c, inv.get(pivot, c)); inv.set(pivot, c, u);
      }
    }
    const RingElement piv_inv = R.inv_unit(a.get(col, col));
    for (int c = 0; c < dim_; ++c) {
      a.set(col, c, R.mul(a.get(col, c), piv_inv));
      inv.set(col, c, R.mul(inv.get(col, c), piv_inv));
    }
    for (int r = 0; r < dim_; ++r) {
      if (r == col) continue;
      const RingElement f = a.get(r, col);
      if (R.is_zero(f)) continue;
      for (int c = 0; c < dim_; ++c) {
        a.set(r, c, R.sub(a.get(r, c), R.mul(f, a.get(col, c))));
        inv.set(r, c, R.sub(inv.get(r, c), R.mul(f, inv.get(col, c))));
      }
    }
  }
  return inv;
}

bool RMatrix::is_identity() const {
  return *this == identity(ring_, dim_);
}

std::uint64_t RMatrix::hash_key() const {
  // FNV-1a over the flat coordinates
  std::uint64_t h = 1469598103934665603ull;
  for (std::int64_t v : data_) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace chevrep::ringmat
