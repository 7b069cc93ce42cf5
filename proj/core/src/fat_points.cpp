#include "homlab/fat_points.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "homlab/monomial.hpp"

namespace homlab {

FatScheme make_scheme(PointConfig config, std::vector<int> mults) {
  if (config.points.size() != mults.size())
    throw std::invalid_argument("make_scheme: one multiplicity per point required");
  for (int m : mults)
    if (m < 0) throw std::invalid_argument("make_scheme: multiplicities must be >= 0");
  return FatScheme{std::move(config), std::move(mults)};
}

FatScheme scheme_from_mults(const MultiplicitySet& m, std::uint32_t p, std::uint64_t seed,
                            bool pin_coordinate_triangle) {
  PointConfig cfg = make_config(p, seed, m.mults.size(), pin_coordinate_triangle);
  return make_scheme(std::move(cfg), m.mults);
}

FatScheme symbolic_square(const FatScheme& s) {
  FatScheme out = s;
  for (int& m : out.mults) m *= 2;
  return out;
}

DenseMatrix vanishing_conditions(const PrimeField& f, const ProjPoint& pt, int mu, int t) {
  if (mu < 1 || t < 0) throw std::invalid_argument("vanishing_conditions: need mu >= 1, t >= 0");
  // chart index: the normalized leading coordinate (equal to 1)
  int k = 0;
  while (k < 3 && pt.h[k] == 0) ++k;
  const int i1 = (k == 0) ? 1 : 0;
  const int i2 = (k == 2) ? 1 : 2;
  const FieldElement p1 = pt.h[i1], p2 = pt.h[i2];

  BinomialTable binom(f, t);
  std::vector<std::vector<FieldElement>> pow1(t + 1), pow2(t + 1);
  // cache p1^j, p2^j
  std::vector<FieldElement> p1pow(t + 1), p2pow(t + 1);
  p1pow[0] = p2pow[0] = 1;
  for (int j = 1; j <= t; ++j) {
    p1pow[j] = f.mul(p1pow[j - 1], p1);
    p2pow[j] = f.mul(p2pow[j - 1], p2);
  }

  const int n = mono_count(t);
  DenseMatrix cond(f, static_cast<std::size_t>(mu) * (mu + 1) / 2, n);
  std::size_t row = 0;
  for (int s = 0; s < mu; ++s) {
    for (int alpha = s; alpha >= 0; --alpha) {
      const int beta = s - alpha;
      // coefficient of u^alpha v^beta in m((u + p1 w, v + p2 w, w) permuted by chart)
      for (int col = 0; col < n; ++col) {
        auto e = mono_exponents(t, col);
        const int e1 = e[static_cast<std::size_t>(i1)];
        const int e2 = e[static_cast<std::size_t>(i2)];
        if (alpha > e1 || beta > e2) continue;
        FieldElement v = f.mul(binom.at(e1, alpha), binom.at(e2, beta));
        v = f.mul(v, f.mul(p1pow[e1 - alpha], p2pow[e2 - beta]));
        cond.at(row, col) = v;
      }
      ++row;
    }
  }
  return cond;
}

GradedPiece graded_piece(const FatScheme& s, int t) {
  if (t < 0) throw std::invalid_argument("graded_piece: t must be >= 0");
  const PrimeField& f = s.config.field;
  std::size_t total_rows = 0;
  for (int m : s.mults) total_rows += static_cast<std::size_t>(m) * (m + 1) / 2;
  const int n = mono_count(t);
  DenseMatrix stacked(f, total_rows, n);
  std::size_t at = 0;
  for (std::size_t j = 0; j < s.mults.size(); ++j) {
    if (s.mults[j] == 0) continue;
    DenseMatrix c = vanishing_conditions(f, s.config.points[j], s.mults[j], t);
    for (std::size_t r = 0; r < c.rows(); ++r)
      std::copy(c.row(r).begin(), c.row(r).end(), stacked.row(at + r).begin());
    at += c.rows();
  }
  return GradedPiece{t, kernel_basis(stacked)};
}

std::vector<int> FatIdealProfile::generator_degrees() const {
  std::vector<int> out;
  for (auto [deg, cnt] : gens)
    if (cnt > 0) out.push_back(deg);
  return out;
}

FatIdealProfile profile(const FatScheme& s, int bound) {
  if (bound < 0) throw std::invalid_argument("profile: bound must be >= 0");
  const PrimeField& f = s.config.field;
  long long e = 0;
  for (int m : s.mults) e += static_cast<long long>(m) * (m + 1) / 2;

  std::vector<Subspace> pieces;
  pieces.reserve(bound + 1);
  for (int t = 0; t <= bound; ++t) pieces.push_back(graded_piece(s, t).space);

  FatIdealProfile out;
  out.bound = bound;
  out.e = e;
  out.indeg = -1;
  out.regularity = -1;
  for (int t = 0; t <= bound; ++t) {
    long h = static_cast<long>(mono_count(t) - pieces[t].dim());
    out.hilbert.push_back(h);
    if (out.indeg < 0 && pieces[t].dim() > 0) out.indeg = t;
    if (out.regularity < 0 && h == e) out.regularity = t;
  }
  if (out.regularity < 0 || out.hilbert.back() != e)
    throw std::runtime_error("profile: Hilbert function not stabilized at bound " +
                             std::to_string(bound) + "; raise the bound");
  for (int t = 0; t + 1 < out.regularity; ++t)
    if (out.hilbert[t + 1] <= out.hilbert[t])
      throw std::runtime_error("profile: Hilbert function failed to strictly increase");

  // n_t = dim J_t - dim R1*J_{t-1}
  for (int t = 0; t <= bound; ++t) {
    std::size_t prev_span = 0;
    if (t > 0 && pieces[t - 1].dim() > 0) {
      RowReducer red(f, mono_count(t));
      std::vector<int> maps[3] = {mono_shift(t - 1, 0), mono_shift(t - 1, 1),
                                  mono_shift(t - 1, 2)};
      for (int var = 0; var < 3; ++var) {
        for (std::size_t r = 0; r < pieces[t - 1].dim(); ++r) {
          auto src = pieces[t - 1].basis().row(r);
          std::vector<std::uint64_t> scratch(mono_count(t), 0);
          for (std::size_t i = 0; i < src.size(); ++i) scratch[maps[var][i]] = src[i];
          red.insert_scratch(scratch);
        }
      }
      prev_span = red.rank();
    }
    int n_t = static_cast<int>(pieces[t].dim() - prev_span);
    if (n_t > 0) out.gens.emplace_back(t, n_t);
    if (n_t > 0 && t > out.regularity + 1)
      throw std::runtime_error("profile: minimal generator past regularity + 1");
  }
  return out;
}

FatIdealProfile auto_profile(const FatScheme& s) {
  long long e = 0;
  for (int m : s.mults) e += static_cast<long long>(m) * (m + 1) / 2;
  int t = 0;
  while (mono_count(t) < e) ++t;
  int bound = t + 2;
  for (int attempt = 0; attempt < 8; ++attempt) {
    try {
      return profile(s, bound);
    } catch (const std::runtime_error&) {
      bound += 4;
    }
  }
  return profile(s, bound);
}

// ---------------------------------------------------------------------------
// GeneratedIdeal

GeneratedIdeal::GeneratedIdeal(PrimeField f, std::vector<GradedPiece> generators, int bound)
    : field_(f), gens_(std::move(generators)) {
  if (gens_.empty()) throw std::invalid_argument("GeneratedIdeal: no generators");
  for (const auto& g : gens_) {
    if (g.space.ambient_dim() != static_cast<std::size_t>(mono_count(g.degree)))
      throw std::invalid_argument("GeneratedIdeal: piece has wrong ambient dimension");
    if (g.space.dim() > 0) gen_degrees_.push_back(g.degree);
  }
  std::sort(gen_degrees_.begin(), gen_degrees_.end());
  gen_degrees_.erase(std::unique(gen_degrees_.begin(), gen_degrees_.end()), gen_degrees_.end());
  if (gen_degrees_.empty())
    throw std::invalid_argument("GeneratedIdeal: all generator pieces are zero");
  if (bound < max_generator_degree())
    throw std::invalid_argument("GeneratedIdeal: bound below the largest generator degree");
  levels_.emplace_back(field_, mono_count(0));
  extend_to(bound);
}

void GeneratedIdeal::extend_to(int bound) {
  while (this->bound() < bound) step();
}

void GeneratedIdeal::step() {
  const int t = bound() + 1;  // degree being built
  RowReducer next(field_, mono_count(t));
  const RowReducer& cur = levels_.back();
  if (cur.rank() > 0) {
    const auto xmap = mono_shift(t - 1, 0);
    const auto ymap = mono_shift(t - 1, 1);
    const auto zmap = mono_shift(t - 1, 2);
    // x-shifted rows keep their echelon pattern (the index map is monotone),
    // so they seed the new level without any elimination work
    auto rows = cur.rows();
    auto pivots = cur.pivot_columns();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::vector<FieldElement> nr(mono_count(t), 0);
      for (std::size_t i = 0; i < rows[r].size(); ++i) nr[xmap[i]] = rows[r][i];
      next.preload(std::move(nr), xmap[pivots[r]]);
    }
    for (const auto& map : {ymap, zmap}) {
      for (auto row : rows) {
        std::vector<std::uint64_t> scratch(mono_count(t), 0);
        for (std::size_t i = 0; i < row.size(); ++i) scratch[map[i]] = row[i];
        next.insert_scratch(scratch);
      }
    }
  }
  for (const auto& g : gens_) {
    if (g.degree != t) continue;
    for (std::size_t r = 0; r < g.space.dim(); ++r) next.insert(g.space.basis().row(r));
  }
  levels_.push_back(std::move(next));
}

std::size_t GeneratedIdeal::dim(int t) const {
  if (t < 0 || t > bound()) throw std::out_of_range("GeneratedIdeal::dim: degree out of range");
  return levels_[static_cast<std::size_t>(t)].rank();
}

Subspace GeneratedIdeal::piece(int t) const {
  if (t < 0 || t > bound()) throw std::out_of_range("GeneratedIdeal::piece: degree out of range");
  return levels_[static_cast<std::size_t>(t)].to_subspace();
}

GeneratedIdeal span_ideal(const PrimeField& f, std::vector<GradedPiece> generators, int bound) {
  return GeneratedIdeal(f, std::move(generators), bound);
}

GrowthClass growth_class(const GeneratedIdeal& i, int window_lo, int window_hi) {
  const int maxgen = i.max_generator_degree();
  if (window_lo <= maxgen)
    throw std::invalid_argument("growth_class: window must start past the last generator degree");
  if (window_hi - window_lo < 3)
    throw std::invalid_argument("growth_class: window must span at least four degrees");
  if (window_hi < 2 * maxgen + 3)
    throw std::invalid_argument("growth_class: window top must reach twice the largest "
                                "generator degree plus three");
  if (window_hi > i.bound())
    throw std::invalid_argument("growth_class: ideal not spanned through the window");

  std::vector<long> q;
  for (int t = window_lo; t <= window_hi; ++t)
    q.push_back(static_cast<long>(mono_count(t)) - static_cast<long>(i.dim(t)));
  for (std::size_t k = 0; k + 2 < q.size(); ++k)
    if (q[k + 2] - 2 * q[k + 1] + q[k] != 0)
      throw std::runtime_error("growth_class: second differences not zero on the window; "
                               "widen the window and retry");
  const long slope = q[1] - q[0];
  if (slope < 0) throw std::logic_error("growth_class: negative slope");
  if (slope == 0) return GrowthClass{GrowthKind::FinitelySupportedQuotient, 0};
  return GrowthClass{GrowthKind::CurveComponent, static_cast<int>(slope)};
}

GradedSlices descend_colon(const PrimeField& f, const Subspace& top, int top_degree,
                           int out_bound) {
  if (out_bound > top_degree) throw std::invalid_argument("descend_colon: bound above the top");
  std::vector<Subspace> pieces(static_cast<std::size_t>(top_degree) + 1,
                               Subspace::zero(f, 1));
  pieces[static_cast<std::size_t>(top_degree)] = top;
  for (int t = top_degree - 1; t >= 0; --t) {
    const Subspace& above = pieces[static_cast<std::size_t>(t + 1)];
    const int n_lo = mono_count(t);
    if (above.dim() == above.ambient_dim()) {
      // everything multiplies into a full piece
      pieces[static_cast<std::size_t>(t)] = Subspace::full(f, n_lo);
      continue;
    }
    Subspace checks = kernel_basis(above.basis());  // functionals vanishing on S_{t+1}
    DenseMatrix cond(f, 3 * checks.dim(), n_lo);
    for (int var = 0; var < 3; ++var) {
      const auto map = mono_shift(t, var);
      for (std::size_t r = 0; r < checks.dim(); ++r) {
        auto c = checks.basis().row(r);
        auto dst = cond.row(var * checks.dim() + r);
        for (int i = 0; i < n_lo; ++i) dst[i] = c[map[i]];
      }
    }
    pieces[static_cast<std::size_t>(t)] = kernel_basis(cond);
  }
  pieces.resize(static_cast<std::size_t>(out_bound) + 1, Subspace::zero(f, 1));
  return GradedSlices{out_bound, std::move(pieces)};
}

GradedSlices saturate(const GeneratedIdeal& i, int inspect_bound) {
  const PrimeField& f = i.field();
  const int margin = std::max(6, i.max_generator_degree());
  const int start = i.bound() - 2;
  if (start < inspect_bound + margin)
    throw std::invalid_argument(
        "saturate: ideal must be spanned to inspect_bound + max(6, maxgen) + 2");
  GradedSlices a = descend_colon(f, i.piece(start), start, inspect_bound);
  GradedSlices b = descend_colon(f, i.piece(start + 2), start + 2, inspect_bound);
  for (int t = 0; t <= inspect_bound; ++t)
    if (!(a.at(t) == b.at(t)))
      throw std::runtime_error("saturate: certification failed at degree " + std::to_string(t) +
                               "; raise the span bound");
  return b;
}

}  // namespace homlab
