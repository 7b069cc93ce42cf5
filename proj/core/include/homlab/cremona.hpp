#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "homlab/fat_points.hpp"
#include "homlab/hudson.hpp"
#include "homlab/syzygy.hpp"

namespace homlab {

/// Base ideal I = (J_d) of a proper type on general points, with the ambient
/// fat ideal J at hand. Construction fails unless dim J_d = 3.
struct CremonaNet {
  PlaneType type;
  FatScheme scheme;
  GradedPiece jd;       // degree-d piece of the fat ideal, dim 3
  GeneratedIdeal base;  // (J_d), spanned to a working bound

  int degree() const { return type.degree; }
};

CremonaNet build_net(const PlaneType& t, std::uint32_t p, std::uint64_t seed,
                     bool pin_coordinate_triangle = false, int span_bound = -1);

/// Number of independent linear relations among {x,y,z} times the net basis:
/// 9 - dim R1*J_d. Must be 0 or 1 for degree >= 4; 2 or more throws.
int linear_syzygy_count(const CremonaNet& net);

struct ResolutionProfile {
  int d = 0;
  int s = 0;
  std::vector<std::pair<int, int>> gens;      // minimal generator counts of J
  std::vector<std::pair<int, int>> syzygies;  // minimal first-syzygy counts (window d+1..d+3)
  bool matches_template = false;  // gens (3 at d, d-4+s at d+1); syzygies (s at d+1, d-2 at d+2)
};

/// Degreewise kernel verification of the expected shape of the minimal free
/// resolution of J for d >= 4.
ResolutionProfile resolution_profile(const CremonaNet& net);

struct SquareProfile {
  int generator_count = 0;    // dim J_{d+1}; expected d+5
  int syzygy_count = 0;       // minimal relations at d+2; expected d+7
  int second_layer_count = 0; // minimal second-layer relations at d+3; expected 3
  bool matches_template = false;
};

/// Counts for the ideal generated by J_{d+1} (degree >= 4, non-de-Jonquieres
/// nets only: requires s = 0).
SquareProfile square_profile(const CremonaNet& net);

struct SaturationReport {
  int bound = 0;
  bool saturated = false;     // I^sat = I degreewise on [0, bound]
  bool j_equals_sat = false;  // I^sat = J degreewise on [0, bound]
  std::vector<std::pair<int, int>> gap;  // (degree, dim I^sat_t - dim I_t), nonzero only
};

SaturationReport saturation_report(CremonaNet& net, int bound);

struct LinearBlock {
  int dim = 0;            // c = dim of the span of the linear entries, in {0,..,3}
  int syzygy_count = 0;   // minimal syzygies of J at degree d+2 feeding the block
};

/// Linear part of the minimal first syzygies of J over the degree-(d+1)
/// generators. The span dimension is basis-independent: changing the
/// complement lift of the degree-(d+1) generators only perturbs the
/// quadratic coordinates, and rows mix by constants. Extraction runs twice
/// (plain and seeded-perturbed) and must agree; d >= 5.
LinearBlock linear_block(CremonaNet& net);

struct PrincipalTriple {
  int s = 0;
  CremonaNet net;            // pinned-triangle net of the doubled type
  std::array<Poly, 3> f;     // principal curve forms of degree s-1
  std::array<Poly, 3> ell;   // ell1 = y, ell2 = z, ell3 = x
  std::array<Poly, 3> gens;  // ell3*f1*f2, ell2*f1*f3, ell1*f2*f3
};

/// For t = (2s-1; (s-1)^3, 2m4, ...) proper with the triangle pinned: builds
/// the three lowered fat schemes, extracts their 1-dimensional degree-(s-1)
/// pieces, and checks that the three products span I_{2s-1}.
PrincipalTriple principal_curves(const PlaneType& t, std::uint32_t p, std::uint64_t seed);

struct NonSaturatedReport {
  int s = 0;
  bool syzygy_degrees_ok = false;      // exactly 3 minimal relations, all at 3s-1
  bool complex_identities_ok = false;  // relation rows kill the generators; psi kills the rows
  bool saturation_matches = false;     // saturate(I) = I + (f1 f2 f3) degreewise
  bool single_extra_generator = false; // one extra minimal generator, at 3(s-1)
  bool ok() const {
    return syzygy_degrees_ok && complex_identities_ok && saturation_matches &&
           single_extra_generator;
  }
};

NonSaturatedReport verify_non_saturated_structure(PrincipalTriple& triple, int bound);

}  // namespace homlab
