#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "homlab/field.hpp"

namespace homlab {

/// Monomials of fixed degree t in x, y, z, indexed in degree-lexicographic
/// order with x > y > z: (a,b,c) with a descending, then b descending.
/// Index 0 is x^t, the last index is z^t.

inline int mono_count(int t) { return (t + 1) * (t + 2) / 2; }

inline int mono_index(int t, int a, int b) {
  int k = t - a;
  return k * (k + 1) / 2 + (k - b);
}

/// Exponents (a, b, c) of the monomial at `index` in degree t.
std::array<int, 3> mono_exponents(int t, int index);

/// Index maps for multiplication by x, y, z from degree t to degree t+1.
/// var: 0 = x, 1 = y, 2 = z.
std::vector<int> mono_shift(int t, int var);

/// Pascal-triangle binomial coefficients mod p, valid for n < p.
class BinomialTable {
 public:
  BinomialTable(PrimeField f, int max_n);
  FieldElement at(int n, int k) const {
    if (k < 0 || k > n) return 0;
    return rows_[n][k];
  }

 private:
  std::vector<std::vector<FieldElement>> rows_;
};

}  // namespace homlab
