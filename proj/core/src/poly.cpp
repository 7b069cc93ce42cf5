#include "homlab/poly.hpp"

#include <stdexcept>

namespace homlab {

Poly multiply(const PrimeField& f, const Poly& a, const Poly& b) {
  Poly r = Poly::zero(a.degree + b.degree);
  const int ta = a.degree, tb = b.degree;
  for (int i = 0; i < mono_count(ta); ++i) {
    if (!a.coeffs[i]) continue;
    auto [ai, bi, ci] = mono_exponents(ta, i);
    for (int j = 0; j < mono_count(tb); ++j) {
      if (!b.coeffs[j]) continue;
      auto [aj, bj, cj] = mono_exponents(tb, j);
      int k = mono_index(ta + tb, ai + aj, bi + bj);
      r.coeffs[k] = f.add(r.coeffs[k], f.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return r;
}

Poly add(const PrimeField& f, const Poly& a, const Poly& b) {
  if (a.degree != b.degree) throw std::invalid_argument("Poly add: degree mismatch");
  Poly r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = f.add(r.coeffs[i], b.coeffs[i]);
  return r;
}

Poly scale(const PrimeField& f, const Poly& a, FieldElement c) {
  Poly r = a;
  for (auto& v : r.coeffs) v = f.mul(v, c);
  return r;
}

Poly variable_form(int var) {
  Poly r = Poly::zero(1);
  int a = var == 0 ? 1 : 0, b = var == 1 ? 1 : 0;
  r.coeffs[mono_index(1, a, b)] = 1;
  return r;
}

void shift_accumulate(const PrimeField& f, std::span<const FieldElement> src,
                      const std::vector<int>& map, FieldElement scalar,
                      std::span<FieldElement> dst) {
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (!src[i]) continue;
    dst[map[i]] = f.add(dst[map[i]], f.mul(src[i], scalar));
  }
}

}  // namespace homlab
