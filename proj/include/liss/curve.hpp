// curve.hpp - parametric curve families: classic Lissajous figures and
// finite harmonic sums over consecutive prime frequencies, with analytic
// first and second parameter derivatives.
#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

namespace liss {

enum class WarpKind { identity, logarithmic, square_root, power_law };

// Optional transform applied to each term's frequency before evaluation.
// Logarithmic uses the natural log. PowerLaw requires a finite positive
// exponent. The 1/prime normalization is never warped.
struct FrequencyWarp {
  WarpKind kind = WarpKind::identity;
  double exponent = 1.0;  // power_law only

  double operator()(double freq) const;
  bool is_identity() const { return kind == WarpKind::identity; }

  static FrequencyWarp identity() { return {}; }
  static FrequencyWarp logarithmic() { return {WarpKind::logarithmic, 1.0}; }
  static FrequencyWarp square_root() { return {WarpKind::square_root, 1.0}; }
  static FrequencyWarp power_law(double e) { return {WarpKind::power_law, e}; }
};

// x(t) = sin(a*t + delta), y(t) = cos(b*t); a, b finite and positive.
struct ClassicSpec {
  double a = 1.0;
  double b = 1.0;
  double delta = 0.0;
};

// x(t) = sum_i sin(w(p_i)*t)/p_i, y(t) = sum_i cos(w(p_i)*t)/p_i over the
// first n primes p_i, each term divided by its own prime.
struct PrimeSumSpec {
  int n = 1;
  FrequencyWarp warp;
};

// Same construction, but x draws its n frequencies from the odd-indexed
// prime class (2, 5, 11, ...) and y from the even-indexed class
// (3, 7, 13, ...); consumes the first 2n primes.
struct AltPrimeSumSpec {
  int n = 1;
  FrequencyWarp warp;
};

using CurveSpec = std::variant<ClassicSpec, PrimeSumSpec, AltPrimeSumSpec>;

struct CurvePoint {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
};

struct CurveVelocity {
  double t = 0.0;
  double dx = 0.0;
  double dy = 0.0;
};

struct CurveAcceleration {
  double t = 0.0;
  double ddx = 0.0;
  double ddy = 0.0;
};

// Position and first two derivatives at one parameter value, evaluated in a
// single pass so each trigonometric argument is reduced only once.
struct CurveState {
  double t = 0.0;
  double x = 0.0, y = 0.0;
  double dx = 0.0, dy = 0.0;
  double ddx = 0.0, ddy = 0.0;
};

// Prepared evaluator for one CurveSpec. Construction generates the primes,
// applies the frequency warp, and fixes the term order (smallest prime
// first); evaluation accumulates in long double in that order, so results
// are bit-reproducible and safe to compute from many threads at once.
class Curve {
 public:
  explicit Curve(CurveSpec spec);

  const CurveSpec& spec() const { return spec_; }

  CurvePoint point(double t) const;
  CurveVelocity velocity(double t) const;
  CurveAcceleration acceleration(double t) const;
  CurveState state(double t) const;
  double speed(double t) const;

  // 2*pi for integer-frequency specs (classic with integer a, b; unwarped
  // prime sums), nothing for warped or fractional-frequency specs.
  std::optional<double> period() const { return period_; }

  // Triangle-inequality bounds sum |coef| on |x(t)| and |y(t)|.
  double x_amplitude_bound() const { return x_amp_; }
  double y_amplitude_bound() const { return y_amp_; }

  // Largest (warped) frequency across both axes; drives sampling density
  // and quadrature panel counts.
  double max_frequency() const { return max_freq_; }

  std::size_t term_count() const { return x_.freq.size() + y_.freq.size(); }

 private:
  // One axis is sum_i coef[i] * sin(freq[i]*t + phase[i]) (x) or the same
  // with cos (y). vcoef/acoef carry the derivative factors coef*f, coef*f^2.
  struct Axis {
    std::vector<double> freq;
    std::vector<double> phase;
    std::vector<long double> coef;
    std::vector<long double> vcoef;
    std::vector<long double> acoef;
  };

  void add_term(Axis& ax, double freq, double phase, long double norm);

  CurveSpec spec_;
  Axis x_, y_;
  bool fused_ = false;  // x and y share per-index arguments (prime-sum case)
  std::optional<double> period_;
  double x_amp_ = 0.0, y_amp_ = 0.0, max_freq_ = 0.0;
};

}  // namespace liss
