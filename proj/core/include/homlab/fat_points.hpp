#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "homlab/linalg.hpp"
#include "homlab/plane_type.hpp"
#include "homlab/points.hpp"
#include "homlab/poly.hpp"

namespace homlab {

/// Points with attached multiplicities; mults align positionally with
/// config.points. A zero entry imposes no condition at that point.
struct FatScheme {
  PointConfig config;
  std::vector<int> mults;
};

FatScheme make_scheme(PointConfig config, std::vector<int> mults);
FatScheme scheme_from_mults(const MultiplicitySet& m, std::uint32_t p, std::uint64_t seed,
                            bool pin_coordinate_triangle = false);
/// Same config, doubled multiplicities.
FatScheme symbolic_square(const FatScheme& s);

/// The mu(mu+1)/2 x C(t+2,2) matrix whose kernel is the degree-t forms
/// vanishing to order >= mu at the point. Rows are coefficient extractions
/// after the linear change of coordinates that moves the point to a
/// coordinate point, expanded through binomials (valid for any degree < p).
DenseMatrix vanishing_conditions(const PrimeField& f, const ProjPoint& pt, int mu, int t);

struct GradedPiece {
  int degree;
  Subspace space;
};

/// Kernel of the stacked condition matrices of all points: the degree-t
/// piece of the ideal of fat points.
GradedPiece graded_piece(const FatScheme& s, int t);

struct FatIdealProfile {
  int bound;
  std::vector<long> hilbert;               // h_{R/J}(t) for t = 0..bound
  long long e;                             // sum mu_j(mu_j+1)/2, equals the stable value
  int regularity;                          // least t with h(t) = e
  int indeg;                               // least t with J_t != 0
  std::vector<std::pair<int, int>> gens;   // (degree, minimal generator count), count > 0

  std::vector<int> generator_degrees() const;
};

/// Hilbert data and minimal generator counts up to `bound`. Throws if the
/// Hilbert function has not stabilized at e by `bound`.
FatIdealProfile profile(const FatScheme& s, int bound);
/// profile() with the bound grown automatically until stabilization plus a
/// two-degree margin past the last generator candidate.
FatIdealProfile auto_profile(const FatScheme& s);

/// Ideal generated by graded pieces, spanned degree by degree:
/// (ideal)_{t+1} = R1 * (ideal)_t + (generators in degree t+1).
class GeneratedIdeal {
 public:
  GeneratedIdeal(PrimeField f, std::vector<GradedPiece> generators, int bound);

  void extend_to(int bound);
  int bound() const { return static_cast<int>(levels_.size()) - 1; }
  const std::vector<int>& generator_degrees() const { return gen_degrees_; }
  int max_generator_degree() const { return gen_degrees_.empty() ? 0 : gen_degrees_.back(); }
  const PrimeField& field() const { return field_; }

  std::size_t dim(int t) const;
  Subspace piece(int t) const;  // canonical form, built on demand

 private:
  void step();

  PrimeField field_;
  std::vector<GradedPiece> gens_;
  std::vector<int> gen_degrees_;
  std::vector<RowReducer> levels_;  // index = degree
};

GeneratedIdeal span_ideal(const PrimeField& f, std::vector<GradedPiece> generators, int bound);

enum class GrowthKind { FinitelySupportedQuotient, CurveComponent };

struct GrowthClass {
  GrowthKind kind;
  int slope;  // fixed-part degree; 0 for the finitely supported case
};

/// Examines q_t = C(t+2,2) - dim(ideal)_t on [window_lo, window_hi]. The
/// window must start past the last generator degree, span at least four
/// degrees, and reach 2*maxgen+3. Second differences of q must vanish on the
/// window (otherwise the span bound was too small: widen and retry).
GrowthClass growth_class(const GeneratedIdeal& i, int window_lo, int window_hi);

struct GradedSlices {
  int bound;
  std::vector<Subspace> pieces;  // index = degree, 0..bound

  const Subspace& at(int t) const { return pieces.at(static_cast<std::size_t>(t)); }
};

/// Degreewise descent S_t = { f : x f, y f, z f in S_{t+1} } starting from
/// the given top piece; returns pieces for 0..out_bound.
GradedSlices descend_colon(const PrimeField& f, const Subspace& top, int top_degree,
                           int out_bound);

/// Saturation slices S_t for t <= inspect_bound, computed by two descents
/// from the top two spanned degrees of i (which must exceed inspect_bound by
/// max(6, maxgen) + 2). Disagreement between the runs throws: the caller
/// must extend the span and retry.
GradedSlices saturate(const GeneratedIdeal& i, int inspect_bound);

}  // namespace homlab
