#pragma once

// Dense square matrices over a finite local ring, with exact inversion by
// Gauss-Jordan elimination.  Over a local ring every invertible matrix admits
// a unit pivot in each elimination column (invertibility survives reduction
// to the residue field), so plain unit-pivot sweeps terminate.

#include <cstdint>
#include <string>
#include <vector>

#include "chevrep/localring.hpp"

namespace chevrep::ringmat {

using localring::Ring;
using localring::RingElement;
using localring::RingPtr;

class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(RingPtr ring, int dim);  // zero matrix
  static RMatrix identity(RingPtr ring, int dim);

  int dim() const { return dim_; }
  const RingPtr& ring() const { return ring_; }

  RingElement get(int r, int c) const;
  void set(int r, int c, const RingElement& v);

  RMatrix mul(const RMatrix& other) const;
  RMatrix inverse() const;  // throws std::domain_error if not invertible
  bool is_identity() const;

  friend bool operator==(const RMatrix& a, const RMatrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

  // stable content key for hashing/dedup in closures
  std::uint64_t hash_key() const;
  const std::vector<std::int64_t>& flat() const { return data_; }

 private:
  RingPtr ring_;
  int dim_ = 0;
  int clen_ = 0;
  std::vector<std::int64_t> data_;  // row-major, stride clen_ per entry
};

}  // namespace chevrep::ringmat
