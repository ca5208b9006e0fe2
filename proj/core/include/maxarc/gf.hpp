#pragma once

#include <cstdint>
#include <vector>

#include "maxarc/errors.hpp"

namespace maxarc {

// GF(2^m), 1 <= m <= 8, in polynomial basis. Elements are bit patterns
// 0 .. 2^m-1; multiplication goes through exp/log tables built from a
// generator of the multiplicative group, so the modulus only needs to be
// irreducible, not primitive.
class GaloisField {
 public:
  // Default modulus per degree; pass a nonzero modulus to override.
  explicit GaloisField(int m, uint32_t modulus = 0);

  int degree() const { return m_; }
  uint32_t order() const { return q_; }
  uint32_t modulus() const { return modulus_; }

  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  uint32_t inverse(uint32_t a) const {
    if (a == 0) throw parameter_error("gf: inverse of zero");
    if (a == 1) return 1;
    return exp_[(q_ - 1) - log_[a]];
  }
  uint32_t add(uint32_t a, uint32_t b) const { return a ^ b; }
  uint32_t pow(uint32_t a, uint64_t e) const;

  // Multiplicative order of a nonzero element.
  uint32_t element_order(uint32_t a) const;

  // The canonical generator used for the log table.
  uint32_t generator() const { return generator_; }

  bool operator==(const GaloisField& o) const {
    return m_ == o.m_ && modulus_ == o.modulus_;
  }

  // Carry-less multiply + reduction, independent of the tables. Exposed so
  // the table construction stays checkable against first principles.
  static uint32_t polymul_mod(uint32_t a, uint32_t b, uint32_t modulus, int m);
  static bool is_irreducible(uint32_t poly, int m);

 private:
  int m_;
  uint32_t q_;
  uint32_t modulus_;
  uint32_t generator_;
  std::vector<uint32_t> exp_;  // length 2(q-1), doubled to skip a mod
  std::vector<uint32_t> log_;  // index by element, defined for 1..q-1
};

// An element tagged with its field, for code paths where mixing fields
// would be a bug rather than a typo.
struct FieldElement {
  uint32_t value = 0;
  const GaloisField* field = nullptr;
};

FieldElement gf_mul(FieldElement a, FieldElement b);
FieldElement gf_inverse(FieldElement a);

}  // namespace maxarc
