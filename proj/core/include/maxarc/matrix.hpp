#pragma once

#include <cstdint>
#include <vector>

#include "maxarc/bitset.hpp"
#include "maxarc/errors.hpp"

namespace maxarc {

// 0/1 matrix with bit-packed rows. Rank over GF(2) runs on the packed
// words; rank over an odd prime falls back to scalar elimination.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
        bits_(size_t(rows) * size_t((cols + 63) / 64), 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const {
    return (bits_[row_off(r) + size_t(c >> 6)] >> (c & 63)) & 1;
  }
  void set(int r, int c, bool v = true) {
    uint64_t mask = uint64_t{1} << (c & 63);
    if (v)
      bits_[row_off(r) + size_t(c >> 6)] |= mask;
    else
      bits_[row_off(r) + size_t(c >> 6)] &= ~mask;
  }

  BinaryMatrix transposed() const;

  int row_sum(int r) const;
  int col_sum(int c) const;
  // Number of columns where rows r and s are both 1.
  int row_inner_product(int r, int s) const;

  bool operator==(const BinaryMatrix& o) const = default;

 private:
  size_t row_off(int r) const { return size_t(r) * words_per_row_; }

  friend int p_rank(const BinaryMatrix& M, int p);

  int rows_ = 0;
  int cols_ = 0;
  size_t words_per_row_ = 0;
  std::vector<uint64_t> bits_;
};

// Rank of M over GF(p), p prime. Entries are taken as-is (0/1).
int p_rank(const BinaryMatrix& M, int p);

bool is_prime(int p);

}  // namespace maxarc
