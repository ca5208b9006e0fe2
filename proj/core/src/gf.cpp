#include "maxarc/gf.hpp"

#include <array>

namespace maxarc {

namespace {

// Irreducible (in fact primitive) polynomials of degree 1..8 over GF(2).
constexpr std::array<uint32_t, 9> kDefaultModulus = {
    0,
    0b11,         // x + 1
    0b111,        // x^2 + x + 1
    0b1011,       // x^3 + x + 1
    0b10011,      // x^4 + x + 1
    0b100101,     // x^5 + x^2 + 1
    0b1000011,    // x^6 + x + 1
    0b10000011,   // x^7 + x + 1
    0b100011101,  // x^8 + x^4 + x^3 + x^2 + 1
};

int poly_degree(uint32_t p) {
  int d = -1;
  while (p) {
    ++d;
    p >>= 1;
  }
  return d;
}

}  // namespace

uint32_t GaloisField::polymul_mod(uint32_t a, uint32_t b, uint32_t modulus, int m) {
  uint32_t prod = 0;
  while (b) {
    if (b & 1) prod ^= a;
    a <<= 1;
    b >>= 1;
  }
  for (int d = poly_degree(prod); d >= m; --d)
    if ((prod >> d) & 1) prod ^= modulus << (d - m);
  return prod;
}

bool GaloisField::is_irreducible(uint32_t poly, int m) {
  if (poly_degree(poly) != m) return false;
  // Trial division by every polynomial of degree 1 .. m/2.
  for (uint32_t d = 2; poly_degree(d) <= m / 2; ++d) {
    uint32_t rem = poly;
    int dd = poly_degree(d);
    for (int shift = poly_degree(rem) - dd; shift >= 0; shift = poly_degree(rem) - dd) {
      rem ^= d << shift;
      if (rem == 0) return false;
    }
  }
  return true;
}

GaloisField::GaloisField(int m, uint32_t modulus) : m_(m) {
  if (m < 1 || m > 8) throw parameter_error("gf: degree must be in [1, 8]");
  q_ = uint32_t{1} << m;
  modulus_ = modulus ? modulus : kDefaultModulus[size_t(m)];
  if (!is_irreducible(modulus_, m))
    throw parameter_error("gf: modulus is not irreducible of the stated degree");

  // Find a generator of the (cyclic) multiplicative group and tabulate.
  log_.assign(q_, 0);
  exp_.assign(2 * (q_ - 1), 0);
  for (uint32_t g = 2; g < q_ || (q_ == 2 && g < 3); ++g) {
    uint32_t cand = (q_ == 2) ? 1 : g;
    uint32_t x = 1;
    uint32_t ord = 0;
    do {
      x = polymul_mod(x, cand, modulus_, m);
      ++ord;
    } while (x != 1);
    if (ord == q_ - 1) {
      generator_ = cand;
      break;
    }
  }
  uint32_t x = 1;
  for (uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = x;
    exp_[i + (q_ - 1)] = x;
    log_[x] = i;
    x = polymul_mod(x, generator_, modulus_, m);
  }
}

uint32_t GaloisField::pow(uint32_t a, uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  uint64_t le = (uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
  return exp_[le];
}

uint32_t GaloisField::element_order(uint32_t a) const {
  if (a == 0) throw parameter_error("gf: order of zero");
  uint32_t ord = 1;
  uint32_t x = a;
  while (x != 1) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

FieldElement gf_mul(FieldElement a, FieldElement b) {
  if (!a.field || !b.field || !(*a.field == *b.field))
    throw context_error("gf: elements from different field contexts");
  return {a.field->mul(a.value, b.value), a.field};
}

FieldElement gf_inverse(FieldElement a) {
  if (!a.field) throw context_error("gf: element without field context");
  return {a.field->inverse(a.value), a.field};
}

}  // namespace maxarc
