#include "homlab/cremona.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace homlab {

namespace {

Poly poly_from_row(int degree, std::span<const FieldElement> row) {
  return Poly(degree, std::vector<FieldElement>(row.begin(), row.end()));
}

std::vector<std::pair<int, std::vector<FieldElement>>> ring_images(
    const std::vector<std::pair<int, Poly>>& gens) {
  std::vector<std::pair<int, std::vector<FieldElement>>> images;
  images.reserve(gens.size());
  for (const auto& [deg, p] : gens) images.emplace_back(deg, p.coeffs);
  return images;
}

}  // namespace

CremonaNet build_net(const PlaneType& t, std::uint32_t p, std::uint64_t seed,
                     bool pin_coordinate_triangle, int span_bound) {
  if (!hudson_test(t).proper)
    throw std::invalid_argument("build_net: type fails the properness test: " +
                                to_string(t.stripped()));
  PlaneType st = t.stripped();
  PointConfig cfg = make_config(p, seed, st.mults.size(), pin_coordinate_triangle);
  FatScheme scheme = make_scheme(std::move(cfg), st.mults);
  GradedPiece jd = graded_piece(scheme, st.degree);
  if (jd.space.dim() != 3)
    throw std::runtime_error("build_net: dim J_d = " + std::to_string(jd.space.dim()) +
                             " (genericity failure, re-seed)");
  if (span_bound < 0) span_bound = st.degree + 3;
  GeneratedIdeal base(scheme.config.field, {jd}, span_bound);
  return CremonaNet{st, std::move(scheme), std::move(jd), std::move(base)};
}

int linear_syzygy_count(const CremonaNet& net) {
  const PrimeField& f = net.scheme.config.field;
  const int d = net.degree();
  RowReducer red(f, mono_count(d + 1));
  for (int var = 0; var < 3; ++var) {
    const auto map = mono_shift(d, var);
    for (std::size_t r = 0; r < 3; ++r) {
      auto src = net.jd.space.basis().row(r);
      std::vector<std::uint64_t> scratch(mono_count(d + 1), 0);
      for (std::size_t i = 0; i < src.size(); ++i) scratch[map[i]] = src[i];
      red.insert_scratch(scratch);
    }
  }
  const int s = 9 - static_cast<int>(red.rank());
  if (d >= 4 && s > 1)
    throw std::runtime_error("linear_syzygy_count: s = " + std::to_string(s) +
                             " contradicts dim R1*J_d >= 8 for degree >= 4");
  return s;
}

namespace {

// Minimal generators of J as a syzygy engine over R: the three net forms in
// degree d plus a complement basis B of R1*J_d inside J_{d+1}. With
// lift_seed != 0 every B element is perturbed by a seeded combination of
// R1*J_d, which must not change any basis-independent output.
struct GeneratorCover {
  SyzygyEngine engine;
  int n;  // number of degree-(d+1) generators
};

GeneratorCover generator_cover(const CremonaNet& net, std::uint64_t lift_seed) {
  const PrimeField& f = net.scheme.config.field;
  const int d = net.degree();
  RowReducer span1(f, mono_count(d + 1));
  for (int var = 0; var < 3; ++var) {
    const auto map = mono_shift(d, var);
    for (std::size_t r = 0; r < 3; ++r) {
      auto src = net.jd.space.basis().row(r);
      std::vector<std::uint64_t> scratch(mono_count(d + 1), 0);
      for (std::size_t i = 0; i < src.size(); ++i) scratch[map[i]] = src[i];
      span1.insert_scratch(scratch);
    }
  }
  const auto span_rows = span1.rows();

  GradedPiece jd1 = graded_piece(net.scheme, d + 1);
  std::vector<std::vector<FieldElement>> complement;
  {
    RowReducer probe = span1;
    for (std::size_t r = 0; r < jd1.space.dim(); ++r) {
      auto row = jd1.space.basis().row(r);
      if (probe.insert(row)) complement.emplace_back(row.begin(), row.end());
    }
  }
  if (lift_seed != 0 && !span_rows.empty()) {
    std::mt19937_64 rng(lift_seed);
    for (auto& b : complement) {
      for (int k = 0; k < 2; ++k) {
        const auto& add = span_rows[rng() % span_rows.size()];
        FieldElement c = static_cast<FieldElement>(1 + rng() % (f.p() - 1));
        for (std::size_t i = 0; i < b.size(); ++i) b[i] = f.add(b[i], f.mul(c, add[i]));
      }
    }
  }

  std::vector<std::pair<int, Poly>> gens;
  for (std::size_t r = 0; r < 3; ++r)
    gens.emplace_back(d, poly_from_row(d, net.jd.space.basis().row(r)));
  for (const auto& b : complement) gens.emplace_back(d + 1, Poly(d + 1, b));
  return GeneratorCover{SyzygyEngine(f, FreeModule::ring(), ring_images(gens)),
                        static_cast<int>(complement.size())};
}

}  // namespace

ResolutionProfile resolution_profile(const CremonaNet& net) {
  const int d = net.degree();
  if (d < 4) throw std::invalid_argument("resolution_profile: requires degree >= 4");

  ResolutionProfile out;
  out.d = d;
  out.s = linear_syzygy_count(net);

  FatIdealProfile prof = profile(net.scheme, d + 3);
  out.gens = prof.gens;

  GeneratorCover cover = generator_cover(net, 0);
  for (int u = d + 1; u <= d + 3; ++u) {
    int c = cover.engine.minimal_count(u);
    if (c != 0) out.syzygies.emplace_back(u, c);
  }

  std::vector<std::pair<int, int>> expect_gens{{d, 3}};
  if (d - 4 + out.s > 0) expect_gens.emplace_back(d + 1, d - 4 + out.s);
  std::vector<std::pair<int, int>> expect_syz;
  if (out.s > 0) expect_syz.emplace_back(d + 1, out.s);
  expect_syz.emplace_back(d + 2, d - 2);
  out.matches_template = (out.gens == expect_gens) && (out.syzygies == expect_syz);
  return out;
}

SquareProfile square_profile(const CremonaNet& net) {
  const PrimeField& f = net.scheme.config.field;
  const int d = net.degree();
  if (d < 4) throw std::invalid_argument("square_profile: requires degree >= 4");
  if (linear_syzygy_count(net) != 0)
    throw std::invalid_argument("square_profile: requires a net without linear syzygies");

  GradedPiece jd1 = graded_piece(net.scheme, d + 1);
  SquareProfile out;
  out.generator_count = static_cast<int>(jd1.space.dim());

  std::vector<std::pair<int, Poly>> gens;
  for (std::size_t r = 0; r < jd1.space.dim(); ++r)
    gens.emplace_back(d + 1, poly_from_row(d + 1, jd1.space.basis().row(r)));
  SyzygyEngine first(f, FreeModule::ring(), ring_images(gens));
  out.syzygy_count = first.minimal_count(d + 2);

  auto relations = first.minimal_basis(d + 2, 0);
  std::vector<std::pair<int, std::vector<FieldElement>>> images;
  images.reserve(relations.size());
  for (auto& r : relations) images.emplace_back(d + 2, std::move(r));
  SyzygyEngine second(f, first.source(), std::move(images));
  out.second_layer_count = second.minimal_count(d + 3);

  out.matches_template = out.generator_count == d + 5 && out.syzygy_count == d + 7 &&
                         out.second_layer_count == 3;
  return out;
}

SaturationReport saturation_report(CremonaNet& net, int bound) {
  const int d = net.degree();
  if (bound < d) throw std::invalid_argument("saturation_report: bound below the degree");
  const int start = bound + std::max(6, d);
  net.base.extend_to(start + 2);
  GradedSlices sat = saturate(net.base, bound);

  SaturationReport out;
  out.bound = bound;
  out.saturated = true;
  out.j_equals_sat = true;
  for (int t = 0; t <= bound; ++t) {
    Subspace it = net.base.piece(t);
    const Subspace& st = sat.at(t);
    if (!(st == it)) {
      out.saturated = false;
      out.gap.emplace_back(t, static_cast<int>(quotient_dim(st, it)));
    }
    if (out.j_equals_sat) {
      Subspace jt = graded_piece(net.scheme, t).space;
      if (!(st == jt)) out.j_equals_sat = false;
    }
  }
  return out;
}

namespace {

int linear_block_dim(const CremonaNet& net, std::uint64_t seed) {
  const PrimeField& f = net.scheme.config.field;
  const int d = net.degree();
  GeneratorCover cover = generator_cover(net, seed);
  auto rels = cover.engine.minimal_basis(d + 2, seed);
  // entries over the degree-(d+1) generators are linear forms (3 coefficients)
  DenseMatrix entries(f, rels.size() * cover.n, 3);
  const FreeModule& F0 = cover.engine.source();
  std::size_t row = 0;
  for (const auto& rel : rels) {
    for (int k = 0; k < cover.n; ++k) {
      const int off = F0.offset(3 + static_cast<std::size_t>(k), d + 2);
      for (int c = 0; c < 3; ++c) entries.at(row, c) = rel[off + c];
      ++row;
    }
  }
  return static_cast<int>(rank(entries));
}

}  // namespace

LinearBlock linear_block(CremonaNet& net) {
  const int d = net.degree();
  if (d < 5) throw std::invalid_argument("linear_block: requires degree >= 5");
  LinearBlock out;
  out.dim = linear_block_dim(net, 0);
  int again = linear_block_dim(net, 0x9e3779b97f4a7c15ull);
  if (again != out.dim)
    throw std::logic_error("linear_block: extraction is basis-dependent (dim " +
                           std::to_string(out.dim) + " vs " + std::to_string(again) + ")");
  GeneratorCover cover = generator_cover(net, 0);
  out.syzygy_count = cover.engine.minimal_count(d + 2);
  return out;
}

PrincipalTriple principal_curves(const PlaneType& t, std::uint32_t p, std::uint64_t seed) {
  PlaneType st = t.stripped();
  auto half = halved(st);
  if (!half) throw std::invalid_argument("principal_curves: type is not a doubled type");
  auto sub = is_sub_homaloidal(*half);
  if (!sub) throw std::invalid_argument("principal_curves: halved set is not sub-homaloidal");
  const int s = *sub;
  if (s < 3 || s % 2 == 0)
    throw std::invalid_argument("principal_curves: needs odd degree parameter s >= 3");
  if (half->mults.size() < 3 || half->mults[0] != (s - 1) / 2 || half->mults[2] != (s - 1) / 2)
    throw std::invalid_argument(
        "principal_curves: the three highest halved multiplicities must equal (s-1)/2");
  if (!hudson_test(st).proper)
    throw std::invalid_argument("principal_curves: doubled type is not proper: " +
                                to_string(st));

  PrincipalTriple out{s, build_net(st, p, seed, /*pin=*/true), {}, {}, {}};
  const PrimeField& f = out.net.scheme.config.field;
  const int d = st.degree;  // 2s - 1

  for (int i = 0; i < 3; ++i) {
    std::vector<int> mults = half->mults;
    mults[static_cast<std::size_t>(i)] = (s - 3) / 2;
    FatScheme lowered = make_scheme(out.net.scheme.config, mults);
    GradedPiece piece = graded_piece(lowered, s - 1);
    if (piece.space.dim() != 1)
      throw std::runtime_error("principal_curves: lowered scheme piece has dimension " +
                               std::to_string(piece.space.dim()) +
                               " at degree s-1 (genericity failure, re-seed)");
    out.f[static_cast<std::size_t>(i)] = poly_from_row(s - 1, piece.space.basis().row(0));
  }

  out.ell = {variable_form(1), variable_form(2), variable_form(0)};  // y, z, x
  out.gens = {multiply(f, out.ell[2], multiply(f, out.f[0], out.f[1])),
              multiply(f, out.ell[1], multiply(f, out.f[0], out.f[2])),
              multiply(f, out.ell[0], multiply(f, out.f[1], out.f[2]))};

  DenseMatrix span(f, 3, mono_count(d));
  for (int i = 0; i < 3; ++i)
    std::copy(out.gens[static_cast<std::size_t>(i)].coeffs.begin(),
              out.gens[static_cast<std::size_t>(i)].coeffs.end(), span.row(i).begin());
  Subspace generated(mono_count(d), span);
  if (generated.dim() != 3)
    throw std::runtime_error("principal_curves: the three products are linearly dependent");
  if (!(generated == out.net.jd.space))
    throw std::runtime_error("principal_curves: products do not span the net");
  return out;
}

NonSaturatedReport verify_non_saturated_structure(PrincipalTriple& triple, int bound) {
  const PrimeField& f = triple.net.scheme.config.field;
  const int s = triple.s;
  const int d = 2 * s - 1;
  if (bound < 3 * s - 1)
    throw std::invalid_argument("verify_non_saturated_structure: bound must reach 3s-1");

  NonSaturatedReport out;
  out.s = s;

  // (1) minimal relation degrees of I
  {
    std::vector<std::pair<int, Poly>> gens;
    for (const auto& g : triple.gens) gens.emplace_back(d, g);
    SyzygyEngine engine(f, FreeModule::ring(), ring_images(gens));
    out.syzygy_degrees_ok = true;
    for (int u = d + 1; u <= 3 * s + 1; ++u) {
      const int expected = (u == 3 * s - 1) ? 3 : 0;
      if (engine.minimal_count(u) != expected) out.syzygy_degrees_ok = false;
    }
  }

  // (2) the explicit complex: relation rows against the generators, and the
  // linear column against the rows
  {
    const auto& [f1, f2, f3] = triple.f;
    const auto& [l1, l2, l3] = triple.ell;
    const Poly z1 = Poly::zero(s);
    const std::array<std::array<Poly, 3>, 3> rows = {{
        {multiply(f, l2, f3), scale(f, multiply(f, l3, f2), f.neg(1)), z1},
        {scale(f, multiply(f, l1, f3), f.neg(1)), z1, multiply(f, l3, f1)},
        {z1, multiply(f, l1, f2), scale(f, multiply(f, l2, f1), f.neg(1))},
    }};
    out.complex_identities_ok = true;
    for (const auto& row : rows) {
      Poly acc = Poly::zero(3 * s - 1);
      for (int j = 0; j < 3; ++j)
        acc = add(f, acc, multiply(f, row[static_cast<std::size_t>(j)],
                                   triple.gens[static_cast<std::size_t>(j)]));
      if (!acc.is_zero()) out.complex_identities_ok = false;
    }
    const std::array<Poly, 3> psi = {l1, l2, l3};
    for (int j = 0; j < 3; ++j) {
      Poly acc = Poly::zero(s + 1);
      for (int i = 0; i < 3; ++i)
        acc = add(f, acc, multiply(f, psi[static_cast<std::size_t>(i)],
                                   rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
      if (!acc.is_zero()) out.complex_identities_ok = false;
    }
  }

  // (3) saturation closes on exactly one product form
  Poly f123 = multiply(f, triple.f[0], multiply(f, triple.f[1], triple.f[2]));
  {
    const int start = bound + std::max(6, d);
    triple.net.base.extend_to(start + 2);
    GradedSlices sat = saturate(triple.net.base, bound);

    DenseMatrix one(f, 1, mono_count(3 * s - 3));
    std::copy(f123.coeffs.begin(), f123.coeffs.end(), one.row(0).begin());
    GeneratedIdeal closed(f,
                          {triple.net.jd, GradedPiece{3 * s - 3, Subspace(one.cols(), one)}},
                          bound);
    out.saturation_matches = true;
    for (int t = 0; t <= bound; ++t)
      if (!(sat.at(t) == closed.piece(t))) out.saturation_matches = false;

    // (4) minimal generators of the saturation: 3 at 2s-1, one extra at 3s-3
    out.single_extra_generator = true;
    for (int t = 0; t <= bound; ++t) {
      std::size_t prev = 0;
      if (t > 0 && sat.at(t - 1).dim() > 0) {
        RowReducer red(f, mono_count(t));
        for (int var = 0; var < 3; ++var) {
          const auto map = mono_shift(t - 1, var);
          for (std::size_t r = 0; r < sat.at(t - 1).dim(); ++r) {
            auto src = sat.at(t - 1).basis().row(r);
            std::vector<std::uint64_t> scratch(mono_count(t), 0);
            for (std::size_t i = 0; i < src.size(); ++i) scratch[map[i]] = src[i];
            red.insert_scratch(scratch);
          }
        }
        prev = red.rank();
      }
      const int n_t = static_cast<int>(sat.at(t).dim() - prev);
      int expected = 0;
      if (t == d) expected = 3;
      if (t == 3 * s - 3) expected = 1;
      if (n_t != expected) out.single_extra_generator = false;
    }
  }
  return out;
}

}  // namespace homlab
