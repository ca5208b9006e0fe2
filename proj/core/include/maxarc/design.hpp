#pragma once

#include <string>
#include <vector>

#include "maxarc/bitset.hpp"
#include "maxarc/matrix.hpp"

namespace maxarc {

// A block design on points 0..v-1. Blocks are kept as sorted point lists
// in lexicographic order, with a parallel array of point bitsets, so block
// indices are reproducible across runs and serializations.
struct Design {
  int v = 0;
  int lambda = 1;
  std::vector<std::vector<int>> blocks;
  std::vector<Bitset> block_bits;

  static Design from_blocks(int v, std::vector<std::vector<int>> blocks,
                            int lambda = 1);

  int b() const { return int(blocks.size()); }
  int k() const { return blocks.empty() ? 0 : int(blocks.front().size()); }
  // Replication number lambda*(v-1)/(k-1); meaningful when the design is valid.
  int r() const { return k() > 1 ? lambda * (v - 1) / (k() - 1) : 0; }

  // Index of the block with this (sorted) point list, or -1.
  int find_block(const std::vector<int>& pts) const;

  bool operator==(const Design& o) const {
    return v == o.v && lambda == o.lambda && blocks == o.blocks;
  }
};

struct DesignReport {
  bool valid = true;
  int v = 0, b = 0, r = 0, k = 0, lambda = 1;
  std::vector<std::string> violations;
};

// Checks block sizes, replication, pair coverage and the block-count
// identity b = lambda*v*(v-1)/(k*(k-1)); collects every violation.
DesignReport validate_design(const Design& D);

// v x b point/block incidence matrix.
BinaryMatrix incidence_matrix(const Design& D);

}  // namespace maxarc
