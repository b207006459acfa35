#include "liss/reference.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "detail/quadrature.hpp"
#include "liss/primes.hpp"

namespace liss::ref {

Polyline sample_curve(const Curve& curve, double t0, double t1,
                      std::size_t count) {
  if (!(std::isfinite(t0) && std::isfinite(t1)) || !(t0 < t1)) {
    throw std::invalid_argument("sample_curve: requires finite t0 < t1");
  }
  if (count < 2) {
    throw std::invalid_argument("sample_curve: requires count >= 2");
  }
  Polyline line;
  line.points.resize(count);
  const double span = t1 - t0;
  const double denom = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    double t;
    if (i == 0) {
      t = t0;
    } else if (i == count - 1) {
      t = t1;
    } else {
      t = t0 + span * (static_cast<double>(i) / denom);
    }
    line.points[i] = curve.point(t);
  }
  if (const auto period = curve.period()) {
    line.closed = std::abs(span - *period) <=
                  8.0 * std::numeric_limits<double>::epsilon() * *period;
  }
  return line;
}

double directed_hausdorff(std::span<const CurvePoint> from,
                          std::span<const CurvePoint> to) {
  if (from.empty() || to.empty()) {
    throw std::invalid_argument("directed_hausdorff: empty point set");
  }
  double best = 0.0;
  for (const CurvePoint& p : from) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const CurvePoint& q : to) {
      const double dx = p.x - q.x;
      const double dy = p.y - q.y;
      nearest = std::min(nearest, dx * dx + dy * dy);
    }
    best = std::max(best, nearest);
  }
  return std::sqrt(best);
}

double trace_distance(const Polyline& a, const Polyline& b) {
  return std::max(directed_hausdorff(a.points, b.points),
                  directed_hausdorff(b.points, a.points));
}

double mirror_asymmetry(const Polyline& line) {
  std::vector<CurvePoint> mirrored(line.points);
  for (CurvePoint& p : mirrored) p.x = -p.x;
  return directed_hausdorff(mirrored, line.points);
}

SpiralRaster build_raster(std::uint64_t side) {
  if (side == 0 || side % 2 == 0) {
    throw std::invalid_argument("build_raster: side must be odd and >= 1");
  }
  SpiralRaster raster;
  raster.side = side;
  raster.cells.resize(side * side);
  const std::vector<std::uint8_t> table = prime_table(side * side);
  const std::int64_t half = static_cast<std::int64_t>(side / 2);
  const std::int64_t iside = static_cast<std::int64_t>(side);

  // Stepping walk: right 1, up 1, left 2, down 2, right 3, ... Leg j moves
  // in direction j mod 4 for j/2 + 1 cells. Ring h = side/2 closes exactly
  // at n = side^2, so every visited cell lands inside the grid.
  static constexpr std::int64_t kDx[4] = {1, 0, -1, 0};
  static constexpr std::int64_t kDy[4] = {0, 1, 0, -1};
  const auto fill = [&](std::uint64_t n, std::int64_t gx, std::int64_t gy) {
    const std::int64_t row = half - gy;
    const std::int64_t col = gx + half;
    raster.cells[static_cast<std::size_t>(row * iside + col)] = {
        n, gx, gy, table[n] != 0};
  };
  const std::uint64_t total = side * side;
  std::int64_t gx = 0, gy = 0;
  std::uint64_t n = 1;
  fill(n, gx, gy);
  for (std::uint64_t leg = 0; n < total; ++leg) {
    const std::uint64_t run = leg / 2 + 1;
    for (std::uint64_t step = 0; step < run && n < total; ++step) {
      gx += kDx[leg % 4];
      gy += kDy[leg % 4];
      fill(++n, gx, gy);
    }
  }
  return raster;
}

double arc_length(const Curve& curve, double t0, double t1,
                  const QuadratureConfig& cfg) {
  if (!(std::isfinite(t0) && std::isfinite(t1)) || !(t0 < t1)) {
    throw std::invalid_argument("arc_length: requires finite t0 < t1");
  }
  if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0) ||
      cfg.max_subdivisions == 0) {
    throw std::invalid_argument("arc_length: invalid quadrature config");
  }
  const auto plan = detail::make_panel_plan(
      t0, t1, curve.max_frequency(), cfg.abs_tol, cfg.max_subdivisions);
  const auto speed = [&curve](double t) { return curve.speed(t); };
  const auto result =
      detail::integrate_panels(speed, plan, cfg.rel_tol, /*parallel=*/false);
  if (!result.converged) {
    throw QuadratureError(
        "arc_length: subdivision budget exhausted before convergence",
        result.value);
  }
  return result.value;
}

}  // namespace liss::ref
