#include "liss/curve.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "liss/primes.hpp"

namespace liss {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

// glibc's sincos shares one argument reduction between sin and cos.
inline void sin_cos(double a, double& s, double& c) {
#if defined(__GLIBC__)
  ::sincos(a, &s, &c);
#else
  s = std::sin(a);
  c = std::cos(a);
#endif
}

bool integer_valued(double v) { return std::rint(v) == v; }

void validate_warp(const FrequencyWarp& w) {
  if (w.kind == WarpKind::power_law &&
      !(std::isfinite(w.exponent) && w.exponent > 0.0)) {
    throw std::invalid_argument(
        "FrequencyWarp: power-law exponent must be finite and positive");
  }
}

}  // namespace

double FrequencyWarp::operator()(double freq) const {
  switch (kind) {
    case WarpKind::identity:
      return freq;
    case WarpKind::logarithmic:
      return std::log(freq);
    case WarpKind::square_root:
      return std::sqrt(freq);
    case WarpKind::power_law:
      return std::pow(freq, exponent);
  }
  return freq;
}

void Curve::add_term(Axis& ax, double freq, double phase, long double norm) {
  ax.freq.push_back(freq);
  ax.phase.push_back(phase);
  ax.coef.push_back(1.0L / norm);
  ax.vcoef.push_back(static_cast<long double>(freq) / norm);
  ax.acoef.push_back(static_cast<long double>(freq) * freq / norm);
}

Curve::Curve(CurveSpec spec) : spec_(std::move(spec)) {
  if (const auto* c = std::get_if<ClassicSpec>(&spec_)) {
    if (!(std::isfinite(c->a) && c->a > 0.0) ||
        !(std::isfinite(c->b) && c->b > 0.0)) {
      throw std::invalid_argument(
          "ClassicSpec: frequencies must be finite and positive");
    }
    if (!std::isfinite(c->delta)) {
      throw std::invalid_argument("ClassicSpec: phase must be finite");
    }
    add_term(x_, c->a, c->delta, 1.0L);
    add_term(y_, c->b, 0.0, 1.0L);
    if (integer_valued(c->a) && integer_valued(c->b)) period_ = kTwoPi;
  } else {
    int n = 0;
    FrequencyWarp warp;
    bool alternating = false;
    if (const auto* ps = std::get_if<PrimeSumSpec>(&spec_)) {
      n = ps->n;
      warp = ps->warp;
    } else {
      const auto& as = std::get<AltPrimeSumSpec>(spec_);
      n = as.n;
      warp = as.warp;
      alternating = true;
    }
    if (n < 1) {
      throw std::invalid_argument("prime-sum curve: n must be >= 1");
    }
    validate_warp(warp);

    const std::size_t count = static_cast<std::size_t>(n);
    if (alternating) {
      const AlternatingSplit split =
          split_alternating(first_n_primes(2 * count));
      for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t px = split.odd_indexed[i];
        const std::uint64_t py = split.even_indexed[i];
        add_term(x_, warp(static_cast<double>(px)), 0.0,
                 static_cast<long double>(px));
        add_term(y_, warp(static_cast<double>(py)), 0.0,
                 static_cast<long double>(py));
      }
    } else {
      const PrimeSequence primes = first_n_primes(count);
      for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t p = primes[i];
        add_term(x_, warp(static_cast<double>(p)), 0.0,
                 static_cast<long double>(p));
        add_term(y_, warp(static_cast<double>(p)), 0.0,
                 static_cast<long double>(p));
      }
      fused_ = true;  // x and y terms share arguments index by index
    }
    if (warp.is_identity()) period_ = kTwoPi;
  }

  long double xa = 0.0L, ya = 0.0L;
  for (long double c : x_.coef) xa += std::abs(c);
  for (long double c : y_.coef) ya += std::abs(c);
  x_amp_ = static_cast<double>(xa);
  y_amp_ = static_cast<double>(ya);
  for (double f : x_.freq) max_freq_ = std::max(max_freq_, std::abs(f));
  for (double f : y_.freq) max_freq_ = std::max(max_freq_, std::abs(f));
}

CurvePoint Curve::point(double t) const {
  long double x = 0.0L, y = 0.0L;
  if (fused_) {
    const std::size_t n = x_.freq.size();
    for (std::size_t i = 0; i < n; ++i) {
      double s, c;
      sin_cos(x_.freq[i] * t, s, c);
      x += x_.coef[i] * s;
      y += y_.coef[i] * c;
    }
  } else {
    for (std::size_t i = 0; i < x_.freq.size(); ++i) {
      x += x_.coef[i] * std::sin(x_.freq[i] * t + x_.phase[i]);
    }
    for (std::size_t i = 0; i < y_.freq.size(); ++i) {
      y += y_.coef[i] * std::cos(y_.freq[i] * t + y_.phase[i]);
    }
  }
  return {t, static_cast<double>(x), static_cast<double>(y)};
}

CurveVelocity Curve::velocity(double t) const {
  long double dx = 0.0L, dy = 0.0L;
  if (fused_) {
    const std::size_t n = x_.freq.size();
    for (std::size_t i = 0; i < n; ++i) {
      double s, c;
      sin_cos(x_.freq[i] * t, s, c);
      dx += x_.vcoef[i] * c;
      dy -= y_.vcoef[i] * s;
    }
  } else {
    for (std::size_t i = 0; i < x_.freq.size(); ++i) {
      dx += x_.vcoef[i] * std::cos(x_.freq[i] * t + x_.phase[i]);
    }
    for (std::size_t i = 0; i < y_.freq.size(); ++i) {
      dy -= y_.vcoef[i] * std::sin(y_.freq[i] * t + y_.phase[i]);
    }
  }
  return {t, static_cast<double>(dx), static_cast<double>(dy)};
}

CurveAcceleration Curve::acceleration(double t) const {
  long double ddx = 0.0L, ddy = 0.0L;
  if (fused_) {
    const std::size_t n = x_.freq.size();
    for (std::size_t i = 0; i < n; ++i) {
      double s, c;
      sin_cos(x_.freq[i] * t, s, c);
      ddx -= x_.acoef[i] * s;
      ddy -= y_.acoef[i] * c;
    }
  } else {
    for (std::size_t i = 0; i < x_.freq.size(); ++i) {
      ddx -= x_.acoef[i] * std::sin(x_.freq[i] * t + x_.phase[i]);
    }
    for (std::size_t i = 0; i < y_.freq.size(); ++i) {
      ddy -= y_.acoef[i] * std::cos(y_.freq[i] * t + y_.phase[i]);
    }
  }
  return {t, static_cast<double>(ddx), static_cast<double>(ddy)};
}

CurveState Curve::state(double t) const {
  long double x = 0.0L, y = 0.0L;
  long double dx = 0.0L, dy = 0.0L;
  long double ddx = 0.0L, ddy = 0.0L;
  if (fused_) {
    const std::size_t n = x_.freq.size();
    for (std::size_t i = 0; i < n; ++i) {
      double s, c;
      sin_cos(x_.freq[i] * t, s, c);
      x += x_.coef[i] * s;
      y += y_.coef[i] * c;
      dx += x_.vcoef[i] * c;
      dy -= y_.vcoef[i] * s;
      ddx -= x_.acoef[i] * s;
      ddy -= y_.acoef[i] * c;
    }
  } else {
    for (std::size_t i = 0; i < x_.freq.size(); ++i) {
      double s, c;
      sin_cos(x_.freq[i] * t + x_.phase[i], s, c);
      x += x_.coef[i] * s;
      dx += x_.vcoef[i] * c;
      ddx -= x_.acoef[i] * s;
    }
    for (std::size_t i = 0; i < y_.freq.size(); ++i) {
      double s, c;
      sin_cos(y_.freq[i] * t + y_.phase[i], s, c);
      y += y_.coef[i] * c;
      dy -= y_.vcoef[i] * s;
      ddy -= y_.acoef[i] * c;
    }
  }
  return {t,
          static_cast<double>(x),   static_cast<double>(y),
          static_cast<double>(dx),  static_cast<double>(dy),
          static_cast<double>(ddx), static_cast<double>(ddy)};
}

double Curve::speed(double t) const {
  const CurveVelocity v = velocity(t);
  return std::sqrt(v.dx * v.dx + v.dy * v.dy);
}

}  // namespace liss
