#include "liss/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "detail/quadrature.hpp"

namespace liss {

namespace {

void check_quadrature_config(const QuadratureConfig& cfg) {
  if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0)) {
    throw std::invalid_argument("arc_length: tolerances must be positive");
  }
  if (cfg.max_subdivisions == 0) {
    throw std::invalid_argument("arc_length: max_subdivisions must be > 0");
  }
}

struct XY {
  double x, y;
};

inline double sqdist(XY a, XY b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Uniform-grid bucket index over the target point set, used for nearest-
// neighbour pruning once the set is too large for the brute scan. The grid
// only prunes: every query still minimizes the exact squared distance, so
// the result matches the brute-force value bit for bit.
class PointGrid {
 public:
  explicit PointGrid(const std::vector<XY>& pts) : pts_(pts) {
    xmin_ = ymin_ = std::numeric_limits<double>::infinity();
    xmax_ = ymax_ = -std::numeric_limits<double>::infinity();
    for (const XY& p : pts) {
      xmin_ = std::min(xmin_, p.x);
      xmax_ = std::max(xmax_, p.x);
      ymin_ = std::min(ymin_, p.y);
      ymax_ = std::max(ymax_, p.y);
    }
    const double side = std::ceil(std::sqrt(static_cast<double>(pts.size())));
    cells_ = static_cast<std::size_t>(std::clamp(side, 1.0, 4096.0));
    cell_w_ = (xmax_ - xmin_) / static_cast<double>(cells_);
    cell_h_ = (ymax_ - ymin_) / static_cast<double>(cells_);

    // Counting sort of point indices into row-major cells.
    starts_.assign(cells_ * cells_ + 1, 0);
    std::vector<std::size_t> cell_of(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      cell_of[i] = cell_index(cx_of(pts[i].x), cy_of(pts[i].y));
      ++starts_[cell_of[i] + 1];
    }
    for (std::size_t c = 1; c < starts_.size(); ++c) starts_[c] += starts_[c - 1];
    order_.resize(pts.size());
    std::vector<std::size_t> cursor(starts_.begin(), starts_.end() - 1);
    for (std::size_t i = 0; i < pts.size(); ++i) order_[cursor[cell_of[i]]++] = i;
  }

  // Exact min squared distance from q to the point set. Scans the query's
  // cell first, then expanding Chebyshev rings; ring k can be skipped once
  // the running minimum beats (k-1)*min(cell_w, cell_h), the least distance
  // any point k cells away can have. The bound is shrunk by 1e-9 relative
  // so cell-assignment rounding can never prune the true minimizer.
  double min_sqdist(XY q) const {
    const std::int64_t cx = cx_of(q.x);
    const std::int64_t cy = cy_of(q.y);
    const std::int64_t n = static_cast<std::int64_t>(cells_);
    const std::int64_t kmax =
        std::max({cx, n - 1 - cx, cy, n - 1 - cy});
    const double cell_min = std::min(cell_w_, cell_h_);
    double best = std::numeric_limits<double>::infinity();
    for (std::int64_t k = 0; k <= kmax; ++k) {
      if (k > 0) {
        const double lb = static_cast<double>(k - 1) * cell_min * (1.0 - 1e-9);
        if (lb * lb >= best) break;
      }
      scan_ring(q, cx, cy, k, best);
    }
    return best;
  }

 private:
  std::int64_t cx_of(double x) const {
    if (!(cell_w_ > 0.0)) return 0;
    const double r = std::floor((x - xmin_) / cell_w_);
    return std::clamp(static_cast<std::int64_t>(r), std::int64_t{0},
                      static_cast<std::int64_t>(cells_) - 1);
  }
  std::int64_t cy_of(double y) const {
    if (!(cell_h_ > 0.0)) return 0;
    const double r = std::floor((y - ymin_) / cell_h_);
    return std::clamp(static_cast<std::int64_t>(r), std::int64_t{0},
                      static_cast<std::int64_t>(cells_) - 1);
  }
  std::size_t cell_index(std::int64_t cx, std::int64_t cy) const {
    return static_cast<std::size_t>(cy) * cells_ + static_cast<std::size_t>(cx);
  }

  void scan_cell(XY q, std::int64_t cx, std::int64_t cy, double& best) const {
    const std::size_t c = cell_index(cx, cy);
    for (std::size_t s = starts_[c]; s < starts_[c + 1]; ++s) {
      best = std::min(best, sqdist(q, pts_[order_[s]]));
    }
  }

  void scan_ring(XY q, std::int64_t cx, std::int64_t cy, std::int64_t k,
                 double& best) const {
    const std::int64_t n = static_cast<std::int64_t>(cells_);
    if (k == 0) {
      scan_cell(q, cx, cy, best);
      return;
    }
    const std::int64_t x0 = std::max(cx - k, std::int64_t{0});
    const std::int64_t x1 = std::min(cx + k, n - 1);
    if (cy - k >= 0) {
      for (std::int64_t x = x0; x <= x1; ++x) scan_cell(q, x, cy - k, best);
    }
    if (cy + k <= n - 1) {
      for (std::int64_t x = x0; x <= x1; ++x) scan_cell(q, x, cy + k, best);
    }
    const std::int64_t y0 = std::max(cy - k + 1, std::int64_t{0});
    const std::int64_t y1 = std::min(cy + k - 1, n - 1);
    if (cx - k >= 0) {
      for (std::int64_t y = y0; y <= y1; ++y) scan_cell(q, cx - k, y, best);
    }
    if (cx + k <= n - 1) {
      for (std::int64_t y = y0; y <= y1; ++y) scan_cell(q, cx + k, y, best);
    }
  }

  const std::vector<XY>& pts_;
  double xmin_, xmax_, ymin_, ymax_;
  double cell_w_ = 0.0, cell_h_ = 0.0;
  std::size_t cells_ = 1;
  std::vector<std::size_t> starts_;
  std::vector<std::size_t> order_;
};

constexpr std::size_t kBruteLimit = 10'000;

// Directed Hausdorff distance h(from, to) = max over from of the nearest
// `to` distance. Queries are independent, so they run index-parallel; max
// of exact per-query minima is order-free, keeping the result bitwise
// stable across thread counts.
double directed_hausdorff_xy(const std::vector<XY>& from,
                             const std::vector<XY>& to) {
  const std::int64_t n = static_cast<std::int64_t>(from.size());
  double best = 0.0;
  if (to.size() <= kBruteLimit) {
#pragma omp parallel for schedule(static) reduction(max : best)
    for (std::int64_t i = 0; i < n; ++i) {
      double m = std::numeric_limits<double>::infinity();
      for (const XY& q : to) m = std::min(m, sqdist(from[i], q));
      best = std::max(best, m);
    }
  } else {
    const PointGrid grid(to);
#pragma omp parallel for schedule(static) reduction(max : best)
    for (std::int64_t i = 0; i < n; ++i) {
      best = std::max(best, grid.min_sqdist(from[i]));
    }
  }
  return std::sqrt(best);
}

std::vector<XY> to_xy(const Polyline& line) {
  std::vector<XY> out(line.size());
  for (std::size_t i = 0; i < line.size(); ++i) {
    out[i] = {line.points[i].x, line.points[i].y};
  }
  return out;
}

}  // namespace

double arc_length(const Curve& curve, double t0, double t1,
                  const QuadratureConfig& cfg) {
  if (!(std::isfinite(t0) && std::isfinite(t1)) || !(t0 < t1)) {
    throw std::invalid_argument("arc_length: requires finite t0 < t1");
  }
  check_quadrature_config(cfg);
  const auto plan = detail::make_panel_plan(
      t0, t1, curve.max_frequency(), cfg.abs_tol, cfg.max_subdivisions);
  const auto speed = [&curve](double t) { return curve.speed(t); };
  const auto result =
      detail::integrate_panels(speed, plan, cfg.rel_tol, /*parallel=*/true);
  if (!result.converged) {
    throw QuadratureError(
        "arc_length: subdivision budget exhausted before convergence",
        result.value);
  }
  return result.value;
}

double curvature(const Curve& curve, double t, double speed_floor) {
  const CurveState s = curve.state(t);
  const double sp = std::sqrt(s.dx * s.dx + s.dy * s.dy);
  if (!(sp >= speed_floor)) {
    throw SingularPointError("curvature: speed below floor, point singular");
  }
  const long double cross = static_cast<long double>(s.dx) * s.ddy -
                            static_cast<long double>(s.dy) * s.ddx;
  return static_cast<double>(fabsl(cross)) / (sp * sp * sp);
}

BoundingBox bounding_box(const Polyline& line) {
  if (line.empty()) {
    throw std::invalid_argument("bounding_box: empty polyline");
  }
  const std::int64_t n = static_cast<std::int64_t>(line.size());
  const CurvePoint* pts = line.points.data();
  double xmin = std::numeric_limits<double>::infinity();
  double ymin = std::numeric_limits<double>::infinity();
  double xmax = -std::numeric_limits<double>::infinity();
  double ymax = -std::numeric_limits<double>::infinity();
#pragma omp parallel for schedule(static) reduction(min : xmin, ymin) \
    reduction(max : xmax, ymax)
  for (std::int64_t i = 0; i < n; ++i) {
    xmin = std::min(xmin, pts[i].x);
    xmax = std::max(xmax, pts[i].x);
    ymin = std::min(ymin, pts[i].y);
    ymax = std::max(ymax, pts[i].y);
  }
  return {xmin, xmax, ymin, ymax};
}

double mirror_asymmetry(const Polyline& line) {
  if (line.empty()) {
    throw std::invalid_argument("mirror_asymmetry: empty polyline");
  }
  const std::vector<XY> original = to_xy(line);
  std::vector<XY> mirrored(original.size());
  for (std::size_t i = 0; i < original.size(); ++i) {
    mirrored[i] = {-original[i].x, original[i].y};
  }
  return directed_hausdorff_xy(mirrored, original);
}

double trace_distance(const Polyline& a, const Polyline& b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("trace_distance: empty polyline");
  }
  const std::vector<XY> pa = to_xy(a);
  const std::vector<XY> pb = to_xy(b);
  return std::max(directed_hausdorff_xy(pa, pb), directed_hausdorff_xy(pb, pa));
}

double chord_length(const Polyline& line) {
  if (line.size() < 2) return 0.0;
  const std::size_t nseg = line.size() - 1;
  const CurvePoint* pts = line.points.data();
  // Fixed chunk boundaries decouple the partial sums from the thread count;
  // the serial index-order combine keeps the total bit-stable.
  const std::size_t nchunks = std::min<std::size_t>(256, nseg);
  std::vector<long double> partial(nchunks, 0.0L);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(nchunks); ++c) {
    const std::size_t lo = nseg * static_cast<std::size_t>(c) / nchunks;
    const std::size_t hi = nseg * (static_cast<std::size_t>(c) + 1) / nchunks;
    long double sum = 0.0L;
    for (std::size_t i = lo; i < hi; ++i) {
      const double dx = pts[i + 1].x - pts[i].x;
      const double dy = pts[i + 1].y - pts[i].y;
      sum += std::sqrt(dx * dx + dy * dy);
    }
    partial[c] = sum;
  }
  long double total = 0.0L;
  for (std::size_t c = 0; c < nchunks; ++c) total += partial[c];
  return static_cast<double>(total);
}

GeometrySummary summarize_samples(const Curve& curve, const Polyline& line,
                                  double length, double speed_floor) {
  if (line.empty()) {
    throw std::invalid_argument("summarize_samples: empty polyline");
  }
  GeometrySummary summary;
  summary.length = length;
  summary.bbox = bounding_box(line);

  const std::int64_t n = static_cast<std::int64_t>(line.size());
  const CurvePoint* pts = line.points.data();
  double max_kappa = 0.0;
  int singular = 0;
#pragma omp parallel for schedule(static) reduction(max : max_kappa) \
    reduction(| : singular)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      max_kappa = std::max(max_kappa, curvature(curve, pts[i].t, speed_floor));
    } catch (const SingularPointError&) {
      singular |= 1;
    }
  }
  summary.max_abs_curvature = max_kappa;
  summary.curvature_bounded = singular == 0;
  summary.asymmetry = mirror_asymmetry(line);
  return summary;
}

}  // namespace liss
