#include "liss/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace liss {

namespace {

// Relative slack when deciding whether [t0, t1] spans exactly one period;
// tight enough that closed polylines still meet the 1e-9 endpoint
// coincidence contract at the highest supported frequencies.
constexpr double kPeriodMatchUlps = 8.0;

bool spans_one_period(const Curve& curve, double t0, double t1) {
  const auto period = curve.period();
  if (!period) return false;
  const double span = t1 - t0;
  return std::abs(span - *period) <=
         kPeriodMatchUlps * std::numeric_limits<double>::epsilon() * *period;
}

}  // namespace

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
  CurvePoint* pts = line.points.data();
  const double span = t1 - t0;
  const double denom = static_cast<double>(count - 1);
  const std::int64_t icount = static_cast<std::int64_t>(count);

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < icount; ++i) {
    double t;
    if (i == 0) {
      t = t0;
    } else if (i == icount - 1) {
      t = t1;
    } else {
      t = t0 + span * (static_cast<double>(i) / denom);
    }
    pts[i] = curve.point(t);
  }

  line.closed = spans_one_period(curve, t0, t1);
  return line;
}

std::size_t default_sample_count(const Curve& curve) {
  const double raw = std::max(4096.0, 16.0 * curve.max_frequency());
  std::uint64_t c = static_cast<std::uint64_t>(std::ceil(raw));
  if (c % 2 != 0) ++c;  // up to even, then +1: odd, reflection-closed grid
  return static_cast<std::size_t>(c + 1);
}

}  // namespace liss
