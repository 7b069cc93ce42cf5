#include "homlab/syzygy.hpp"

#include <random>
#include <stdexcept>

namespace homlab {

int FreeModule::dim_at(int u) const {
  int d = 0;
  for (int e : twists_)
    if (u - e >= 0) d += mono_count(u - e);
  return d;
}

int FreeModule::offset(std::size_t k, int u) const {
  int off = 0;
  for (std::size_t j = 0; j < k; ++j)
    if (u - twists_[j] >= 0) off += mono_count(u - twists_[j]);
  return off;
}

std::vector<int> FreeModule::mult_map(int u, int var) const {
  std::vector<int> map(dim_at(u));
  int src = 0;
  for (std::size_t k = 0; k < twists_.size(); ++k) {
    const int deg = u - twists_[k];
    if (deg < 0) continue;
    const int dst_off = offset(k, u + 1);
    const auto shift = mono_shift(deg, var);
    for (int i = 0; i < mono_count(deg); ++i) map[src++] = dst_off + shift[i];
  }
  return map;
}

std::vector<FieldElement> FreeModule::mult_monomial(std::span<const FieldElement> vec, int u,
                                                    int a, int b, int c) const {
  const int m = a + b + c;
  std::vector<FieldElement> out(dim_at(u + m), 0);
  int src = 0;
  for (std::size_t k = 0; k < twists_.size(); ++k) {
    const int deg = u - twists_[k];
    if (deg < 0) continue;
    const int dst_off = offset(k, u + m);
    for (int i = 0; i < mono_count(deg); ++i, ++src) {
      if (!vec[src]) continue;
      auto e = mono_exponents(deg, i);
      out[dst_off + mono_index(deg + m, e[0] + a, e[1] + b)] = vec[src];
    }
  }
  return out;
}

SyzygyEngine::SyzygyEngine(PrimeField f, FreeModule target,
                           std::vector<std::pair<int, std::vector<FieldElement>>> images)
    : field_(f),
      source_([&] {
        std::vector<int> tw;
        for (const auto& [deg, vec] : images) tw.push_back(deg);
        return FreeModule(std::move(tw));
      }()),
      target_(std::move(target)),
      images_(std::move(images)) {
  for (const auto& [deg, vec] : images_)
    if (static_cast<int>(vec.size()) != target_.dim_at(deg))
      throw std::invalid_argument("SyzygyEngine: image vector has wrong length");
}

const Subspace& SyzygyEngine::kernel_at(int u) const {
  auto it = kernels_.find(u);
  if (it != kernels_.end()) return it->second;

  const int dom = source_.dim_at(u);
  const int cod = target_.dim_at(u);
  // evaluation matrix: one row per source basis element
  DenseMatrix eval(field_, static_cast<std::size_t>(dom), static_cast<std::size_t>(cod));
  int row = 0;
  for (std::size_t k = 0; k < images_.size(); ++k) {
    const auto& [deg, vec] = images_[k];
    const int mdeg = u - deg;
    if (mdeg < 0) continue;
    for (int i = 0; i < mono_count(mdeg); ++i, ++row) {
      auto e = mono_exponents(mdeg, i);
      auto img = target_.mult_monomial(vec, deg, e[0], e[1], e[2]);
      std::copy(img.begin(), img.end(), eval.row(row).begin());
    }
  }
  return kernels_.emplace(u, kernel_basis(eval.transpose())).first->second;
}

RowReducer SyzygyEngine::lower_span(int u) const {
  RowReducer red(field_, source_.dim_at(u));
  const Subspace& below = kernel_at(u - 1);
  if (below.dim() > 0) {
    for (int var = 0; var < 3; ++var) {
      const auto map = source_.mult_map(u - 1, var);
      for (std::size_t r = 0; r < below.dim(); ++r) {
        auto src = below.basis().row(r);
        std::vector<std::uint64_t> scratch(source_.dim_at(u), 0);
        for (std::size_t i = 0; i < src.size(); ++i)
          if (src[i]) scratch[map[i]] = src[i];
        red.insert_scratch(scratch);
      }
    }
  }
  return red;
}

int SyzygyEngine::minimal_count(int u) const {
  RowReducer red = lower_span(u);
  return static_cast<int>(kernel_at(u).dim() - red.rank());
}

std::vector<std::vector<FieldElement>> SyzygyEngine::minimal_basis(int u,
                                                                   std::uint64_t mix_seed) const {
  RowReducer red = lower_span(u);
  const Subspace& k = kernel_at(u);
  std::vector<std::vector<FieldElement>> rows;
  for (std::size_t r = 0; r < k.dim(); ++r)
    rows.emplace_back(k.basis().row(r).begin(), k.basis().row(r).end());
  if (mix_seed != 0) {
    std::mt19937_64 rng(mix_seed);
    // a few random elementary passes keep the matrix invertible
    for (int pass = 0; pass < 3; ++pass) {
      for (std::size_t i = 0; i < rows.size(); ++i) {
        std::size_t j = rng() % rows.size();
        if (j == i) continue;
        FieldElement c = static_cast<FieldElement>(1 + rng() % (field_.p() - 1));
        for (std::size_t t = 0; t < rows[i].size(); ++t)
          rows[i][t] = field_.add(rows[i][t], field_.mul(c, rows[j][t]));
      }
    }
  }
  std::vector<std::vector<FieldElement>> picked;
  for (auto& r : rows)
    if (red.insert(r)) picked.push_back(std::move(r));
  return picked;
}

}  // namespace homlab
