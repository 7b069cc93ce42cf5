#include "homlab/points.hpp"

#include <random>
#include <stdexcept>

namespace homlab {

ProjPoint normalize_point(const PrimeField& f, std::array<FieldElement, 3> v) {
  for (auto& c : v) c = f.reduce(c);
  int lead = -1;
  for (int i = 0; i < 3; ++i)
    if (v[i]) {
      lead = i;
      break;
    }
  if (lead < 0) throw std::invalid_argument("normalize_point: zero triple");
  FieldElement s = f.inv(v[lead]);
  ProjPoint p;
  for (int i = 0; i < 3; ++i) p.h[i] = f.mul(v[i], s);
  return p;
}

bool collinear(const PrimeField& f, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  // 3x3 determinant of the stacked coordinates
  FieldElement det = f.sub(
      f.add(f.mul(a.h[0], f.sub(f.mul(b.h[1], c.h[2]), f.mul(b.h[2], c.h[1]))),
            f.mul(a.h[2], f.sub(f.mul(b.h[0], c.h[1]), f.mul(b.h[1], c.h[0])))),
      f.mul(a.h[1], f.sub(f.mul(b.h[0], c.h[2]), f.mul(b.h[2], c.h[0]))));
  return det == 0;
}

namespace {

// rejection sampling keeps draws uniform and identical across platforms
// (mt19937_64 output is fully specified; distributions are not)
FieldElement next_below(std::mt19937_64& rng, std::uint32_t p) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % p;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return static_cast<FieldElement>(v % p);
}

bool screen_ok(const PrimeField& f, const std::vector<ProjPoint>& pts, const ProjPoint& cand) {
  for (const auto& q : pts)
    if (q == cand) return false;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (collinear(f, pts[i], pts[j], cand)) return false;
  return true;
}

}  // namespace

PointConfig make_config(std::uint32_t p, std::uint64_t seed, std::size_t r,
                        bool pin_coordinate_triangle) {
  if (r < 1) throw std::invalid_argument("make_config: r must be >= 1");
  if (pin_coordinate_triangle && r < 3)
    throw std::invalid_argument("make_config: pinning needs r >= 3");
  PrimeField f(p);
  PointConfig cfg{f, seed, pin_coordinate_triangle, {}};
  if (pin_coordinate_triangle) {
    cfg.points.push_back(ProjPoint{{0, 0, 1}});
    cfg.points.push_back(ProjPoint{{0, 1, 0}});
    cfg.points.push_back(ProjPoint{{1, 0, 0}});
  }
  std::mt19937_64 rng(seed);
  std::size_t budget = 1000 * r + 1000;
  while (cfg.points.size() < r) {
    if (budget-- == 0)
      throw std::runtime_error(
          "make_config: retry budget exhausted, no generic configuration of this size");
    std::array<FieldElement, 3> v{next_below(rng, p), next_below(rng, p), next_below(rng, p)};
    if (v[0] == 0 && v[1] == 0 && v[2] == 0) continue;
    ProjPoint cand = normalize_point(f, v);
    if (!screen_ok(f, cfg.points, cand)) continue;
    cfg.points.push_back(cand);
  }
  return cfg;
}

}  // namespace homlab
