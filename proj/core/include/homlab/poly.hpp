#pragma once

#include <span>
#include <vector>

#include "homlab/field.hpp"
#include "homlab/monomial.hpp"

namespace homlab {

/// Homogeneous trivariate polynomial: degree plus a dense coefficient vector
/// over the monomial basis of that degree.
struct Poly {
  int degree = 0;
  std::vector<FieldElement> coeffs;  // size mono_count(degree)

  Poly() = default;
  Poly(int deg, std::vector<FieldElement> c) : degree(deg), coeffs(std::move(c)) {}
  static Poly zero(int deg) { return Poly(deg, std::vector<FieldElement>(mono_count(deg), 0)); }

  bool is_zero() const {
    for (auto v : coeffs)
      if (v) return false;
    return true;
  }
  bool operator==(const Poly& o) const = default;
};

Poly multiply(const PrimeField& f, const Poly& a, const Poly& b);
Poly add(const PrimeField& f, const Poly& a, const Poly& b);
Poly scale(const PrimeField& f, const Poly& a, FieldElement c);

/// The linear form x, y or z (var: 0, 1, 2).
Poly variable_form(int var);

/// Multiplication of a degree-t coefficient vector by one variable, written
/// into a degree-(t+1) vector through the precomputed index map.
void shift_accumulate(const PrimeField& f, std::span<const FieldElement> src,
                      const std::vector<int>& map, FieldElement scalar,
                      std::span<FieldElement> dst);

}  // namespace homlab
