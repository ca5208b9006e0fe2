#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace maxarc {

// Fixed-size bitset sized at runtime, packed into 64-bit words.
// Used for block/point/class incidence throughout; comparisons are
// lexicographic on the word array so sorted containers are deterministic.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }

  void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  int intersection_count(const Bitset& o) const {
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  bool is_subset_of(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  // Lowest set bit, or -1 when empty.
  int first() const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  // Lowest index >= from whose bit is clear, or -1 when all of [from, size) is set.
  int first_clear(int from = 0) const {
    for (int i = from; i < nbits_; ++i)
      if (!test(i)) return i;
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w) {
        f(int(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  static Bitset from_indices(int nbits, const std::vector<int>& idx) {
    Bitset b(nbits);
    for (int i : idx) b.set(i);
    return b;
  }

  bool operator==(const Bitset& o) const = default;
  auto operator<=>(const Bitset& o) const = default;

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  int nbits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace maxarc
