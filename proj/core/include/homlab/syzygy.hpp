#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "homlab/linalg.hpp"
#include "homlab/monomial.hpp"

namespace homlab {

/// Graded free module F = (+)_k R(-e_k) with a dense coordinate basis per
/// degree: the degree-u slot of summand k is the monomial basis of degree
/// u - e_k (empty when negative). Coordinates are laid out summand-major.
class FreeModule {
 public:
  explicit FreeModule(std::vector<int> twists) : twists_(std::move(twists)) {}
  static FreeModule ring() { return FreeModule({0}); }

  const std::vector<int>& twists() const { return twists_; }
  int dim_at(int u) const;
  int offset(std::size_t k, int u) const;

  /// Coordinate index map of multiplication by variable var from degree u to
  /// degree u+1 (componentwise shift in every summand).
  std::vector<int> mult_map(int u, int var) const;

  /// vec (coordinates at degree u) times the monomial x^a y^b z^c; the result
  /// lives at degree u + a + b + c.
  std::vector<FieldElement> mult_monomial(std::span<const FieldElement> vec, int u, int a,
                                          int b, int c) const;

 private:
  std::vector<int> twists_;
};

/// Kernel machinery for a graded map F -> G of free modules, where the k-th
/// generator of F (twist e_k) maps to a given coordinate vector in G_{e_k}.
/// kernel_at(u) is the space of degree-u relations; minimal_count(u) strips
/// the part generated in lower degree.
class SyzygyEngine {
 public:
  SyzygyEngine(PrimeField f, FreeModule target,
               std::vector<std::pair<int, std::vector<FieldElement>>> images);

  const FreeModule& source() const { return source_; }
  const FreeModule& target() const { return target_; }

  const Subspace& kernel_at(int u) const;
  int minimal_count(int u) const;
  /// A basis of a complement of R1 * kernel_{u-1} inside kernel_u, i.e. a
  /// choice of the minimal relations at degree u. With mix_seed != 0 the
  /// kernel basis is mixed by a seeded invertible transformation first; the
  /// count and every basis-independent invariant must not change.
  std::vector<std::vector<FieldElement>> minimal_basis(int u, std::uint64_t mix_seed = 0) const;

 private:
  RowReducer lower_span(int u) const;  // R1 * kernel_{u-1} inside F_u

  PrimeField field_;
  FreeModule source_, target_;
  std::vector<std::pair<int, std::vector<FieldElement>>> images_;
  mutable std::map<int, Subspace> kernels_;
};

}  // namespace homlab
