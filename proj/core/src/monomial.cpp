#include "homlab/monomial.hpp"

#include <stdexcept>

namespace homlab {

std::array<int, 3> mono_exponents(int t, int index) {
  // invert k(k+1)/2 + (k-b) with k = t-a
  int k = 0;
  while ((k + 1) * (k + 2) / 2 <= index) ++k;
  int a = t - k;
  int b = k - (index - k * (k + 1) / 2);
  return {a, b, t - a - b};
}

std::vector<int> mono_shift(int t, int var) {
  if (var < 0 || var > 2) throw std::invalid_argument("mono_shift: var must be 0, 1 or 2");
  std::vector<int> map(mono_count(t));
  for (int i = 0; i < mono_count(t); ++i) {
    auto [a, b, c] = mono_exponents(t, i);
    if (var == 0) ++a;
    else if (var == 1) ++b;
    map[i] = mono_index(t + 1, a, b);
  }
  return map;
}

BinomialTable::BinomialTable(PrimeField f, int max_n) {
  rows_.resize(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    rows_[n].resize(n + 1);
    rows_[n][0] = rows_[n][n] = 1;
    for (int k = 1; k < n; ++k) rows_[n][k] = f.add(rows_[n - 1][k - 1], rows_[n - 1][k]);
  }
}

}  // namespace homlab
