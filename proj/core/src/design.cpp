#include "maxarc/design.hpp"

#include <algorithm>

#include "maxarc/errors.hpp"

namespace maxarc {

Design Design::from_blocks(int v, std::vector<std::vector<int>> blocks, int lambda) {
  if (v <= 0) throw parameter_error("design: v must be positive");
  Design D;
  D.v = v;
  D.lambda = lambda;
  for (auto& blk : blocks) {
    std::sort(blk.begin(), blk.end());
    if (blk.empty()) throw parameter_error("design: empty block");
    if (blk.front() < 0 || blk.back() >= v)
      throw parameter_error("design: block point out of range");
    if (std::adjacent_find(blk.begin(), blk.end()) != blk.end())
      throw parameter_error("design: repeated point in block");
  }
  std::sort(blocks.begin(), blocks.end());
  D.blocks = std::move(blocks);
  D.block_bits.reserve(D.blocks.size());
  for (const auto& blk : D.blocks)
    D.block_bits.push_back(Bitset::from_indices(v, blk));
  return D;
}

int Design::find_block(const std::vector<int>& pts) const {
  auto it = std::lower_bound(blocks.begin(), blocks.end(), pts);
  if (it == blocks.end() || *it != pts) return -1;
  return int(it - blocks.begin());
}

DesignReport validate_design(const Design& D) {
  DesignReport rep;
  rep.v = D.v;
  rep.b = D.b();
  rep.k = D.k();
  rep.lambda = D.lambda;
  auto fail = [&rep](std::string msg) {
    rep.valid = false;
    rep.violations.push_back(std::move(msg));
  };

  if (D.b() == 0) {
    fail("design has no blocks");
    return rep;
  }
  for (int j = 0; j < D.b(); ++j)
    if (int(D.blocks[size_t(j)].size()) != rep.k) {
      fail("block " + std::to_string(j) + " has size " +
           std::to_string(D.blocks[size_t(j)].size()) + ", expected k=" +
           std::to_string(rep.k));
      break;
    }
  if (rep.k < 2) {
    fail("block size k must be at least 2");
    return rep;
  }

  if ((int64_t(D.lambda) * (D.v - 1)) % (rep.k - 1) != 0)
    fail("replication number lambda*(v-1)/(k-1) is not an integer");
  rep.r = int(int64_t(D.lambda) * (D.v - 1) / (rep.k - 1));

  std::vector<int> point_degree(size_t(D.v), 0);
  for (const auto& blk : D.blocks)
    for (int p : blk) ++point_degree[size_t(p)];
  for (int p = 0; p < D.v; ++p)
    if (point_degree[size_t(p)] != rep.r) {
      fail("point " + std::to_string(p) + " lies in " +
           std::to_string(point_degree[size_t(p)]) + " blocks, expected r=" +
           std::to_string(rep.r));
      break;
    }

  // Pair coverage: every unordered pair in exactly lambda blocks.
  std::vector<int> pair_count(size_t(D.v) * size_t(D.v), 0);
  for (const auto& blk : D.blocks)
    for (size_t a = 0; a < blk.size(); ++a)
      for (size_t bb = a + 1; bb < blk.size(); ++bb)
        ++pair_count[size_t(blk[a]) * size_t(D.v) + size_t(blk[bb])];
  for (int x = 0; x < D.v; ++x)
    for (int y = x + 1; y < D.v; ++y)
      if (pair_count[size_t(x) * size_t(D.v) + size_t(y)] != D.lambda) {
        fail("pair {" + std::to_string(x) + "," + std::to_string(y) +
             "} lies in " +
             std::to_string(pair_count[size_t(x) * size_t(D.v) + size_t(y)]) +
             " blocks, expected lambda=" + std::to_string(D.lambda));
        x = D.v;  // report only the first bad pair
        break;
      }

  int64_t expect_b = int64_t(D.lambda) * D.v * (D.v - 1) / (int64_t(rep.k) * (rep.k - 1));
  if (int64_t(D.b()) != expect_b)
    fail("block count " + std::to_string(D.b()) + " != lambda*v*(v-1)/(k*(k-1)) = " +
         std::to_string(expect_b));

  return rep;
}

BinaryMatrix incidence_matrix(const Design& D) {
  BinaryMatrix M(D.v, D.b());
  for (int j = 0; j < D.b(); ++j)
    for (int p : D.blocks[size_t(j)]) M.set(p, j);
  return M;
}

}  // namespace maxarc
