// reference.hpp - straightforward serial implementations of the parallel
// kernels. Kept for equivalence tests and the benchmark harness; each must
// produce bit-identical results to its production counterpart.
#pragma once

#include <span>

#include "liss/curve.hpp"
#include "liss/geometry.hpp"
#include "liss/sampling.hpp"
#include "liss/ulam.hpp"

namespace liss::ref {

// Plain index loop, no threading.
Polyline sample_curve(const Curve& curve, double t0, double t1,
                      std::size_t count);

// Brute-force O(|a|*|b|) directed Hausdorff, serial.
double directed_hausdorff(std::span<const CurvePoint> from,
                          std::span<const CurvePoint> to);

double trace_distance(const Polyline& a, const Polyline& b);

double mirror_asymmetry(const Polyline& line);

// Fills the grid by walking n = 1..side^2 through the forward spiral map.
SpiralRaster build_raster(std::uint64_t side);

// Same panel decomposition and per-panel integrator as arc_length, reduced
// in a single serial loop.
double arc_length(const Curve& curve, double t0, double t1,
                  const QuadratureConfig& cfg = {});

}  // namespace liss::ref
