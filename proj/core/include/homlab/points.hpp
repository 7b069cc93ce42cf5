#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "homlab/field.hpp"

namespace homlab {

/// Point of the projective plane over GF(p), stored with its first nonzero
/// coordinate normalized to 1 so classes compare as triples.
struct ProjPoint {
  std::array<FieldElement, 3> h{0, 0, 0};
  bool operator==(const ProjPoint& o) const = default;
};

ProjPoint normalize_point(const PrimeField& f, std::array<FieldElement, 3> v);
bool collinear(const PrimeField& f, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

struct PointConfig {
  PrimeField field;
  std::uint64_t seed = 0;
  bool pinned = false;  // first three points at (0:0:1), (0:1:0), (1:0:0)
  std::vector<ProjPoint> points;

  std::size_t size() const { return points.size(); }
};

/// r distinct seeded random points with no three collinear, deterministic in
/// (p, seed, r, pin). Candidates failing the screen are redrawn from the same
/// stream; throws when the retry budget runs out (the plane is too small).
PointConfig make_config(std::uint32_t p, std::uint64_t seed, std::size_t r,
                        bool pin_coordinate_triangle = false);

}  // namespace homlab
