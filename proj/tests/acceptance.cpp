// acceptance - one binary, nine release criteria, one pass/fail line each.
// Run with no arguments for the full gate or with an index (1-9) for a
// single criterion. Exit status is the number of failed criteria.

#include <liss/cli.hpp>
#include <liss/curve.hpp>
#include <liss/geometry.hpp>
#include <liss/primes.hpp>
#include <liss/reference.hpp>
#include <liss/render.hpp>
#include <liss/sampling.hpp>
#include <liss/ulam.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace liss;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

struct Outcome {
  bool ok = true;
  std::string detail;  // appended to the status line when non-empty

  void fail(const std::string& why) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream data;
  data << in.rdbuf();
  return data.str();
}

double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

std::string fmt(double v) { return format_double(v); }

// --- C1: prime landmark values ------------------------------------------

Outcome c1_prime_landmarks() {
  Outcome r;
  const struct {
    std::size_t n;
    std::uint64_t want;
  } landmarks[] = {{100, 541}, {1000, 7919}, {5000, 104729}};
  for (const auto& lm : landmarks) {
    const std::uint64_t got = first_n_primes(lm.n).last();
    if (got != lm.want) {
      r.fail("first_n_primes(" + std::to_string(lm.n) + ") ends in " +
             std::to_string(got) + ", landmark says " +
             std::to_string(lm.want) +
             (lm.want == 104729
                  ? " (104729 is the 10000th prime, not the 5000th)"
                  : ""));
    }
  }
  return r;
}

// --- C2: unit-circle arc length ------------------------------------------

Outcome c2_unit_circle() {
  Outcome r;
  const Curve c{ClassicSpec{1.0, 1.0, 0.0}};
  const double len = arc_length(c, 0.0, kTwoPi);
  if (rel_diff(len, kTwoPi) > 1e-9) {
    r.fail("got " + fmt(len) + ", want 2*pi within 1e-9 relative");
  }
  return r;
}

// --- C3: quadrature vs chord-doubling oracle ------------------------------

double chord_oracle(const Curve& c, std::size_t start, bool& converged) {
  // Inscribed-polygon lengths on nested grids increase monotonically toward
  // the arc length; stop when one doubling moves the sum by < 1e-7 relative.
  std::size_t count = start;
  double prev = chord_length(ref::sample_curve(c, 0.0, kTwoPi, count));
  for (int i = 0; i < 12; ++i) {
    count = 2 * count - 1;
    const double cur = chord_length(ref::sample_curve(c, 0.0, kTwoPi, count));
    if (std::abs(cur - prev) <= 1e-7 * std::abs(cur)) {
      converged = true;
      return cur;
    }
    prev = cur;
  }
  converged = false;
  return prev;
}

Outcome c3_quadrature_oracle() {
  Outcome r;
  const struct {
    const char* name;
    CurveSpec spec;
  } cases[] = {
      {"classic(1,2,pi/2)", ClassicSpec{1.0, 2.0, kPi / 2}},
      {"classic(3,2,pi/2)", ClassicSpec{3.0, 2.0, kPi / 2}},
      {"classic(3,4,pi/4)", ClassicSpec{3.0, 4.0, kPi / 4}},
      {"primesum(1)", PrimeSumSpec{1, {}}},
      {"primesum(3)", PrimeSumSpec{3, {}}},
      {"primesum(10)", PrimeSumSpec{10, {}}},
      {"primesum(100)", PrimeSumSpec{100, {}}},
  };
  for (const auto& cs : cases) {
    const Curve c{cs.spec};
    bool converged = false;
    const double oracle =
        chord_oracle(c, default_sample_count(c), converged);
    if (!converged) {
      r.fail(std::string(cs.name) + ": chord oracle did not settle");
      continue;
    }
    const double quad = arc_length(c, 0.0, kTwoPi);
    if (rel_diff(quad, oracle) > 1e-6) {
      r.fail(std::string(cs.name) + ": quadrature " + fmt(quad) +
             " vs oracle " + fmt(oracle));
    }
  }
  return r;
}

// --- C4: closed-form arc length and curvature -----------------------------

Outcome c4_closed_forms() {
  Outcome r;
  const double diag = arc_length(Curve{ClassicSpec{1.0, 1.0, kPi / 2}}, 0.0,
                                 kTwoPi);
  if (std::abs(diag - 4.0 * std::sqrt(2.0)) > 1e-8) {
    r.fail("degenerate-diagonal length " + fmt(diag) + ", want 4*sqrt(2)");
  }

  const Curve half{PrimeSumSpec{1, {}}};  // radius-1/2 circle: curvature 2
  std::mt19937 rng(20260819);
  std::uniform_real_distribution<double> dist(0.0, kTwoPi);
  for (int i = 0; i < 20; ++i) {
    const double t = dist(rng);
    const double kappa = curvature(half, t);
    if (std::abs(kappa - 2.0) > 1e-8) {
      r.fail("curvature(t=" + fmt(t) + ") = " + fmt(kappa) + ", want 2");
      break;
    }
  }
  return r;
}

// --- C5: mirror symmetry -------------------------------------------------

Outcome c5_symmetry() {
  Outcome r;
  for (int n : {3, 100}) {
    const Curve c{PrimeSumSpec{n, {}}};
    const Polyline line =
        sample_curve(c, 0.0, kTwoPi, default_sample_count(c));
    const double asym = mirror_asymmetry(line);
    if (asym >= 1e-10) {
      r.fail("n=" + std::to_string(n) + ": asymmetry " + fmt(asym) +
             " >= 1e-10");
    }

    std::mt19937 rng(987654321u + unsigned(n));
    std::uniform_real_distribution<double> dist(0.0, kTwoPi);
    for (int i = 0; i < 1000; ++i) {
      const double t = dist(rng);
      const CurvePoint p = c.point(t);
      const CurvePoint q = c.point(kTwoPi - t);
      if (std::abs(q.x + p.x) > 1e-12 || std::abs(q.y - p.y) > 1e-12) {
        r.fail("n=" + std::to_string(n) +
               ": reflection identity broken at t=" + fmt(t));
        break;
      }
    }
  }
  return r;
}

// --- C6: amplitude bound --------------------------------------------------

Outcome c6_amplitude_bound() {
  Outcome r;
  for (int n : {1, 3, 10, 100}) {
    const Curve c{PrimeSumSpec{n, {}}};
    const Polyline line =
        sample_curve(c, 0.0, kTwoPi, default_sample_count(c));
    const double bound_x = c.x_amplitude_bound() + 1e-12;
    const double bound_y = c.y_amplitude_bound() + 1e-12;
    for (const CurvePoint& p : line.points) {
      if (std::abs(p.x) > bound_x || std::abs(p.y) > bound_y) {
        r.fail("n=" + std::to_string(n) + ": sample (" + fmt(p.x) + ", " +
               fmt(p.y) + ") exceeds coefficient-sum bound " + fmt(bound_x));
        break;
      }
    }
  }
  return r;
}

// --- C7: convergence ordering of trace distances --------------------------

Outcome c7_convergence_order() {
  Outcome r;
  const std::size_t count = 65537;
  const auto sample = [&](const CurveSpec& spec) {
    return sample_curve(Curve{spec}, 0.0, kTwoPi, count);
  };

  const Polyline ps100 = sample(PrimeSumSpec{100, {}});
  const Polyline ps1000 = sample(PrimeSumSpec{1000, {}});
  const Polyline ps5000 = sample(PrimeSumSpec{5000, {}});
  const double coarse = trace_distance(ps100, ps1000);
  const double fine = trace_distance(ps1000, ps5000);
  r.note("d(100,1000)=" + fmt(coarse) + " d(1000,5000)=" + fmt(fine));
  if (!(fine < coarse)) {
    r.fail("later traces do not draw closer");
  }

  const Polyline alt100 = sample(AltPrimeSumSpec{100, {}});
  const Polyline alt1000 = sample(AltPrimeSumSpec{1000, {}});
  const double alt = trace_distance(alt100, alt1000);
  r.note("d_alt(100,1000)=" + fmt(alt));
  if (!(alt < coarse)) {
    r.fail("alternating family does not converge faster");
  }
  return r;
}

// --- C8: spiral invariants -------------------------------------------------

Outcome c8_spiral() {
  Outcome r;
  for (std::int64_t k = 0; k <= 50; ++k) {
    const std::uint64_t n = std::uint64_t(2 * k + 1) * std::uint64_t(2 * k + 1);
    const GridCoord g = spiral_coord(n);
    if (g.gx != k || g.gy != -k) {
      r.fail("odd square " + std::to_string(n) + " off the diagonal");
      break;
    }
  }
  for (std::uint64_t n = 1; n <= 101 * 101; ++n) {
    const GridCoord g = spiral_coord(n);
    if (spiral_index(g.gx, g.gy) != n) {
      r.fail("coordinate map not bijective at n=" + std::to_string(n));
      break;
    }
  }

  const SpiralRaster raster = build_raster(21);
  std::size_t marked = 0;
  for (const SpiralCell& cell : raster.cells) {
    if (cell.prime) ++marked;
  }
  std::size_t expect = 0;
  for (std::uint64_t v = 1; v <= 441; ++v) {
    if (trial_division_prime(v)) ++expect;
  }
  if (marked != expect) {
    r.fail("raster(21) marks " + std::to_string(marked) + " primes, want " +
           std::to_string(expect));
  }
  return r;
}

// --- C9: determinism of the figure pipeline --------------------------------

Outcome c9_determinism() {
  Outcome r;
  const fs::path base = fs::temp_directory_path() / "liss_acceptance_c9";
  const fs::path dir_a = base / "a";
  const fs::path dir_b = base / "b";
  fs::remove_all(base);

  std::ostringstream out_a, out_b, err_a, err_b;
  if (reproduce_all(dir_a, false, out_a, err_a) != 0 ||
      reproduce_all(dir_b, false, out_b, err_b) != 0) {
    r.fail("figure regeneration failed: " + err_a.str() + err_b.str());
    fs::remove_all(base);
    return r;
  }
  if (out_a.str() != out_b.str()) {
    r.fail("manifest lines differ between runs");
  }

  const char* files[] = {"fig1.pgm",  "fig2a.svg", "fig2b.svg",
                         "fig2c.svg", "fig3a.svg", "fig3b.svg",
                         "fig3c.svg", "fig4a.svg", "fig4b.svg"};
  for (const char* name : files) {
    const std::string a = slurp(dir_a / name);
    const std::string b = slurp(dir_b / name);
    if (a.empty()) {
      r.fail(std::string(name) + " missing or empty");
    } else if (a != b) {
      r.fail(std::string(name) + " differs between runs");
    }
  }
  fs::remove_all(base);

  // CSV round-trip: every written cell parses back to its source value.
  const Curve c{PrimeSumSpec{10, {}}};
  const Polyline line = sample_curve(c, 0.0, kTwoPi, 4097);
  std::istringstream csv(csv_document(line));
  std::string header;
  std::getline(csv, header);
  std::size_t i = 0;
  double worst = 0.0;
  for (std::string row; std::getline(csv, row); ++i) {
    std::istringstream cells(row);
    std::string cell;
    const double want[3] = {line.points[i].t, line.points[i].x,
                            line.points[i].y};
    for (double w : want) {
      std::getline(cells, cell, ',');
      worst = std::max(worst, rel_diff(std::stod(cell), w));
    }
  }
  if (i != line.size() || worst > 1e-15) {
    r.fail("csv round-trip drift " + fmt(worst) + " over " +
           std::to_string(i) + " rows");
  }
  return r;
}

// --- driver ----------------------------------------------------------------

struct Criterion {
  const char* label;
  std::function<Outcome()> fn;
  double budget_s;  // 0 = no stated bound
};

const Criterion kCriteria[] = {
    {"C1 prime landmarks 541/7919/104729", c1_prime_landmarks, 1.0},
    {"C2 unit-circle arc length = 2*pi (1e-9 rel)", c2_unit_circle, 1.0},
    {"C3 quadrature matches chord-doubling oracle (1e-6 rel)",
     c3_quadrature_oracle, 60.0},
    {"C4 closed forms: 4*sqrt(2) length, curvature 2 (1e-8)",
     c4_closed_forms, 0.0},
    {"C5 mirror symmetry: asymmetry < 1e-10, reflection identity 1e-12",
     c5_symmetry, 0.0},
    {"C6 samples respect coefficient-sum amplitude bound", c6_amplitude_bound,
     0.0},
    {"C7 trace distances shrink with more terms", c7_convergence_order,
     300.0},
    {"C8 spiral bijection, diagonal squares, prime count", c8_spiral, 1.0},
    {"C9 byte-identical figure reruns, exact csv round-trip",
     c9_determinism, 0.0},
};

int run_criterion(std::size_t idx) {
  const Criterion& c = kCriteria[idx];
  const auto start = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = c.fn();
  } catch (const std::exception& e) {
    r.fail(std::string("unexpected exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (c.budget_s > 0.0 && secs > c.budget_s) {
    r.fail("runtime " + fmt(secs) + " s exceeds " + fmt(c.budget_s) + " s");
  }

  std::ostringstream line;
  line << (r.ok ? "[PASS] " : "[FAIL] ") << c.label;
  if (!r.detail.empty()) line << " -- " << r.detail;
  line << " (" << std::fixed << std::setprecision(2) << secs << " s)";
  std::cout << line.str() << std::endl;
  return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t total = std::size(kCriteria);
  if (argc > 1) {
    const long idx = std::strtol(argv[1], nullptr, 10);
    if (idx < 1 || std::size_t(idx) > total) {
      std::cerr << "usage: " << argv[0] << " [1.." << total << "]\n";
      return 2;
    }
    return run_criterion(std::size_t(idx) - 1);
  }

  int failures = 0;
  for (std::size_t i = 0; i < total; ++i) failures += run_criterion(i);
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) +
                                    " criterion(s) failed")
            << std::endl;
  return failures;
}
