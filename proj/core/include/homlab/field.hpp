#pragma once

#include <cstdint>
#include <stdexcept>

namespace homlab {

/// Residues are plain uint32_t values in [0, p); all arithmetic goes through
/// a PrimeField, which carries the modulus.
using FieldElement = std::uint32_t;

bool is_prime_u32(std::uint32_t n);

/// Session default modulus: HOMLAB_PRIME from the environment, else 32003.
std::uint32_t default_prime();

/// Arithmetic of GF(p) for a word-sized prime p. Products of two residues
/// fit in 64 bits, so a single multiply + reduce suffices everywhere.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime_u32(p)) throw std::invalid_argument("PrimeField: modulus is not prime");
  }

  std::uint32_t p() const { return p_; }

  FieldElement add(FieldElement a, FieldElement b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  FieldElement sub(FieldElement a, FieldElement b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  FieldElement neg(FieldElement a) const { return a == 0 ? 0 : p_ - a; }
  FieldElement mul(FieldElement a, FieldElement b) const {
    return static_cast<FieldElement>(std::uint64_t(a) * b % p_);
  }
  FieldElement reduce(std::uint64_t v) const { return static_cast<FieldElement>(v % p_); }
  /// Reduce a signed value (used when lifting integer data).
  FieldElement reduce_signed(std::int64_t v) const {
    std::int64_t r = v % std::int64_t(p_);
    if (r < 0) r += p_;
    return static_cast<FieldElement>(r);
  }

  FieldElement pow(FieldElement a, std::uint64_t e) const {
    FieldElement r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  FieldElement inv(FieldElement a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    return pow(a, p_ - 2);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace homlab
