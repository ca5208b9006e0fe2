#include "maxarc/matrix.hpp"

#include <bit>

namespace maxarc {

BinaryMatrix BinaryMatrix::transposed() const {
  BinaryMatrix T(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (get(r, c)) T.set(c, r);
  return T;
}

int BinaryMatrix::row_sum(int r) const {
  int s = 0;
  for (size_t w = 0; w < words_per_row_; ++w)
    s += std::popcount(bits_[row_off(r) + w]);
  return s;
}

int BinaryMatrix::col_sum(int c) const {
  int s = 0;
  for (int r = 0; r < rows_; ++r) s += get(r, c);
  return s;
}

int BinaryMatrix::row_inner_product(int r, int s) const {
  int n = 0;
  for (size_t w = 0; w < words_per_row_; ++w)
    n += std::popcount(bits_[row_off(r) + w] & bits_[row_off(s) + w]);
  return n;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; int64_t(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

int rank_gf2(const BinaryMatrix& M, const std::vector<uint64_t>& bits,
             size_t wpr) {
  std::vector<uint64_t> work(bits);
  int rank = 0;
  int rows = M.rows(), cols = M.cols();
  for (int c = 0; c < cols && rank < rows; ++c) {
    size_t word = size_t(c >> 6);
    uint64_t mask = uint64_t{1} << (c & 63);
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (work[size_t(r) * wpr + word] & mask) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (size_t w = 0; w < wpr; ++w)
        std::swap(work[size_t(pivot) * wpr + w], work[size_t(rank) * wpr + w]);
    for (int r = rank + 1; r < rows; ++r) {
      if (work[size_t(r) * wpr + word] & mask)
        for (size_t w = word; w < wpr; ++w)
          work[size_t(r) * wpr + w] ^= work[size_t(rank) * wpr + w];
    }
    ++rank;
  }
  return rank;
}

int rank_mod_p(const BinaryMatrix& M, int p) {
  int rows = M.rows(), cols = M.cols();
  std::vector<std::vector<int>> work(size_t(rows), std::vector<int>(size_t(cols)));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) work[size_t(r)][size_t(c)] = M.get(r, c) ? 1 : 0;

  auto inv_mod = [p](int a) {
    // p is prime, a != 0 mod p
    int res = 1, base = a % p, e = p - 2;
    while (e) {
      if (e & 1) res = int(int64_t(res) * base % p);
      base = int(int64_t(base) * base % p);
      e >>= 1;
    }
    return res;
  };

  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (work[size_t(r)][size_t(c)] % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(work[size_t(pivot)], work[size_t(rank)]);
    int piv_inv = inv_mod(work[size_t(rank)][size_t(c)]);
    for (int cc = c; cc < cols; ++cc)
      work[size_t(rank)][size_t(cc)] =
          int(int64_t(work[size_t(rank)][size_t(cc)]) * piv_inv % p);
    for (int r = rank + 1; r < rows; ++r) {
      int f = work[size_t(r)][size_t(c)] % p;
      if (f == 0) continue;
      for (int cc = c; cc < cols; ++cc) {
        int v = work[size_t(r)][size_t(cc)] - int(int64_t(f) * work[size_t(rank)][size_t(cc)] % p);
        work[size_t(r)][size_t(cc)] = ((v % p) + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int p_rank(const BinaryMatrix& M, int p) {
  if (!is_prime(p)) throw parameter_error("p_rank: p must be prime");
  if (M.rows() == 0 || M.cols() == 0) return 0;
  if (p == 2) return rank_gf2(M, M.bits_, M.words_per_row_);
  return rank_mod_p(M, p);
}

}  // namespace maxarc
