#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homlab/plane_type.hpp"

namespace homlab {

/// sum(m) = 3d-3 and sum(m^2) = d^2-1, entries >= 1 after zero stripping
/// (the empty type (1;) qualifies).
bool is_homaloidal(const PlaneType& t);

/// sum(m) = 3(s-1) and sum(m^2) = s(s-1) for the unique candidate
/// s = sum(m)/3 + 1 >= 2; returns s on success.
std::optional<int> is_sub_homaloidal(const MultiplicitySet& m);

/// sum(m) = 3t-1 and sum(m^2) = t^2+1 for a type of degree t. Any type whose
/// transformation chain can reach (0;-1,0,...,0) satisfies these: both
/// 3d-sum(m) and d^2-sum(m^2) are transform invariants, and the terminal
/// type has values 1 and -1.
bool is_exceptional(const PlaneType& t);

/// (2s-1; 2m) for a multiplicity set that is sub-homaloidal in degree s.
PlaneType doubled(const MultiplicitySet& m);

/// Inverse of doubled: requires odd degree and all-even entries.
std::optional<MultiplicitySet> halved(const PlaneType& t);

/// (d; m1,m2,m3,...) -> (2d-m1-m2-m3; d-m2-m3, d-m1-m3, d-m1-m2, ...),
/// re-sorted; the entry count is preserved (padded to >= 3 with zeros).
PlaneType quadratic_transform(const PlaneType& t);

struct TransformChain {
  std::vector<PlaneType> steps;  // from the input to the terminal type
  bool proper = false;
  std::string reason;  // set when not proper
};

/// Iterated quadratic transforms on the three highest multiplicities.
/// Proper iff the chain reaches (1; 0,...,0); stops at the first negative
/// entry or non-decreasing degree. Input must be homaloidal.
TransformChain hudson_test(const PlaneType& t);

/// Chain test for exceptional types; proper iff (0; -1, 0,...,0) is reached.
TransformChain exceptional_proper_test(const PlaneType& t);

/// All homaloidal types of degree d (positive entries, m1 <= d-1), in
/// lexicographically decreasing multiplicity order. proper_only filters by
/// hudson_test.
std::vector<PlaneType> enumerate_homaloidal(int d, bool proper_only, int max_degree = 12);

/// Closed-form list of the proper types with m1 = d - gap, gap in {1,2,3,4}.
/// Thresholds: gap 1 needs d >= 2, gap 2 needs d >= 4, gap 3 needs d >= 6,
/// gap 4 needs d >= 7.
std::vector<PlaneType> classify_family(int d, int gap);

/// Enumeration of multiplicity sets that are sub-homaloidal in degree s
/// (used as a brute-force cross-check).
std::vector<MultiplicitySet> enumerate_sub_homaloidal(int s);

}  // namespace homlab
