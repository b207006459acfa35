// geometry.hpp - arc length, curvature, bounding boxes, and point-set
// distances between sampled traces.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "liss/curve.hpp"
#include "liss/sampling.hpp"

namespace liss {

struct QuadratureConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  // Total interval-bisection budget, split evenly across panels.
  std::uint64_t max_subdivisions = std::uint64_t{1} << 24;
};

// Adaptive quadrature failed to converge; carries the best estimate.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double estimate)
      : std::runtime_error(what), best_estimate(estimate) {}
  double best_estimate;
};

// Curvature is undefined where the parametrization is (nearly) stationary.
class SingularPointError : public std::domain_error {
  using std::domain_error::domain_error;
};

struct BoundingBox {
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
};

// Arc length L = integral over [t0,t1] of sqrt(dx^2 + dy^2) dt by adaptive
// Simpson quadrature with interval bisection. The interval is pre-split
// into at least 8 panels per fastest oscillation so an aliased coarse
// estimate cannot converge early; panels integrate independently (in
// parallel) and reduce in index order. Throws QuadratureError when the
// subdivision budget runs out, std::invalid_argument unless t0 < t1.
double arc_length(const Curve& curve, double t0, double t1,
                  const QuadratureConfig& cfg = {});

// |dx*ddy - dy*ddx| / speed^3 with analytic derivatives. Throws
// SingularPointError when speed(t) < speed_floor.
double curvature(const Curve& curve, double t, double speed_floor = 1e-9);

// Componentwise extremes of a non-empty polyline.
BoundingBox bounding_box(const Polyline& line);

// One-sided Hausdorff distance between the sample set and its reflection
// across the y axis: max over points p of the distance from (-p.x, p.y) to
// the nearest sample. Zero iff the sample set is mirror-symmetric.
double mirror_asymmetry(const Polyline& line);

// Symmetric Hausdorff distance between two non-empty sample sets.
double trace_distance(const Polyline& a, const Polyline& b);

// Sum of segment lengths of a polyline; lower bound on the arc length of
// the underlying curve.
double chord_length(const Polyline& line);

// Arc length plus polyline-derived metrics for one curve.
struct GeometrySummary {
  double length = 0.0;
  BoundingBox bbox;
  double max_abs_curvature = 0.0;
  bool curvature_bounded = true;  // false if any sample sat below the floor
  double asymmetry = 0.0;
};

// Assembles a summary from a sampled trace: bbox and asymmetry from the
// points, max |curvature| scanned over the sample parameters (samples below
// the speed floor clear curvature_bounded). `length` is passed in so the
// caller chooses the route (quadrature or chord sum).
GeometrySummary summarize_samples(const Curve& curve, const Polyline& line,
                                  double length, double speed_floor = 1e-9);

}  // namespace liss
