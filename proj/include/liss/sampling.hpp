// sampling.hpp - discretizing curves into polylines
#pragma once

#include <cstddef>

#include "liss/curve.hpp"

namespace liss {

// Ordered samples of a curve; parameters strictly increasing. closed is set
// when the sampled interval spans exactly one period.
struct Polyline {
  std::vector<CurvePoint> points;
  bool closed = false;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

// Uniform grid t_i = t0 + i*(t1-t0)/(count-1); both endpoints land exactly
// on t0 and t1. Requires t0 < t1 and count >= 2. Sample evaluation is
// index-parallel with deterministic assembly.
Polyline sample_curve(const Curve& curve, double t0, double t1,
                      std::size_t count);

// max(4096, 16*max_frequency), rounded up to even, plus one: an odd count
// whose grid over a full period is reflection-closed about the midpoint.
std::size_t default_sample_count(const Curve& curve);

}  // namespace liss
