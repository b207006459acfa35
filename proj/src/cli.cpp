#include "liss/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "liss/curve.hpp"
#include "liss/geometry.hpp"
#include "liss/primes.hpp"
#include "liss/render.hpp"
#include "liss/sampling.hpp"
#include "liss/ulam.hpp"

namespace liss {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

// Auto-chosen sample counts above this need an explicit --big (or --count);
// n=5000 prime sums default to 777k+ points, which is past desk scale.
constexpr std::size_t kBigSampleGate = 500'000;

// Decimal radians, or the exact tokens pi, pi/2, pi/4, 2pi (optionally
// negated) so the classic phases and full-period bounds need no truncation.
double parse_angle(std::string text) {
  std::erase(text, ' ');
  if (text.empty()) throw std::invalid_argument("angle: empty value");
  bool negative = false;
  std::string body = text;
  if (body.front() == '-') {
    negative = true;
    body.erase(0, 1);
  }
  double value = 0.0;
  if (body == "pi") {
    value = kPi;
  } else if (body == "pi/2") {
    value = kPi / 2.0;
  } else if (body == "pi/4") {
    value = kPi / 4.0;
  } else if (body == "2pi") {
    value = 2.0 * kPi;
  } else {
    const char* begin = body.data();
    const char* end = begin + body.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end) {
      throw std::invalid_argument("angle: cannot parse '" + text + "'");
    }
  }
  return negative ? -value : value;
}

FrequencyWarp make_warp(const std::string& name, double exponent) {
  if (name == "identity") return FrequencyWarp::identity();
  if (name == "log") return FrequencyWarp::logarithmic();
  if (name == "sqrt") return FrequencyWarp::square_root();
  if (name == "power") return FrequencyWarp::power_law(exponent);
  throw std::invalid_argument("unknown warp: " + name);
}

const char* warp_name(WarpKind kind) {
  switch (kind) {
    case WarpKind::identity: return "identity";
    case WarpKind::logarithmic: return "log";
    case WarpKind::square_root: return "sqrt";
    default: return "power";
  }
}

std::string describe_prime(const char* family, int n,
                           const FrequencyWarp& warp) {
  std::string s = "family=";
  s += family;
  s += " n=" + std::to_string(n) + " warp=" + warp_name(warp.kind);
  if (warp.kind == WarpKind::power_law) {
    s += " exponent=" + format_double(warp.exponent);
  }
  return s;
}

std::string describe(const CurveSpec& spec) {
  if (const auto* c = std::get_if<ClassicSpec>(&spec)) {
    return "family=classic a=" + format_double(c->a) +
           " b=" + format_double(c->b) + " delta=" + format_double(c->delta);
  }
  if (const auto* p = std::get_if<PrimeSumSpec>(&spec)) {
    return describe_prime("primesum", p->n, p->warp);
  }
  const auto& alt = std::get<AltPrimeSumSpec>(spec);
  return describe_prime("altprimesum", alt.n, alt.warp);
}

std::string summary_keys(const GeometrySummary& s) {
  return "length=" + format_double(s.length) +
         " xmin=" + format_double(s.bbox.xmin) +
         " xmax=" + format_double(s.bbox.xmax) +
         " ymin=" + format_double(s.bbox.ymin) +
         " ymax=" + format_double(s.bbox.ymax) +
         " max_abs_curvature=" + format_double(s.max_abs_curvature) +
         " curvature_bounded=" + (s.curvature_bounded ? "1" : "0") +
         " asymmetry=" + format_double(s.asymmetry);
}

// Flag storage for one invocation; subcommands share slots they have in
// common, and only the chosen subcommand's values are read back.
struct Flags {
  double a = 1.0;
  double b = 1.0;
  std::string delta = "0";
  int n = 1;
  std::string warp = "identity";
  double exponent = 1.0;
  std::string spec_name;
  std::string t0 = "0";
  std::string t1 = "2pi";
  std::uint64_t count = 0;  // 0 = default_sample_count
  std::string out;
  int width = 1000;
  int height = 1000;
  double stroke = 1.0;
  double margin = 0.05;
  double decimate = 0.0;
  bool big = false;
  std::uint64_t side = 1;
  std::string outdir;
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  std::uint64_t max_subdiv = std::uint64_t{1} << 24;
};

void add_classic_params(CLI::App* sub, Flags& f) {
  sub->add_option("--a", f.a, "x frequency (positive)");
  sub->add_option("--b", f.b, "y frequency (positive)");
  sub->add_option("--delta", f.delta,
                  "x phase in radians (accepts pi, pi/2, pi/4, 2pi)");
}

void add_prime_params(CLI::App* sub, Flags& f) {
  sub->add_option("--n", f.n, "number of prime-frequency terms per axis")
      ->required()
      ->check(CLI::PositiveNumber);
  sub->add_option("--warp", f.warp, "frequency warp")
      ->check(CLI::IsMember({"identity", "log", "sqrt", "power"}));
  sub->add_option("--exponent", f.exponent, "power-law warp exponent");
}

void add_interval_params(CLI::App* sub, Flags& f) {
  sub->add_option("--t0", f.t0, "interval start (default 0)");
  sub->add_option("--t1", f.t1, "interval end (default 2pi)");
}

void add_emit_params(CLI::App* sub, Flags& f) {
  sub->add_option("--out", f.out, "output file (.svg or .csv)")->required();
  sub->add_option("--count", f.count,
                  "sample count override (default: 16 per oscillation)");
  sub->add_option("--width", f.width, "SVG width in px")
      ->check(CLI::PositiveNumber);
  sub->add_option("--height", f.height, "SVG height in px")
      ->check(CLI::PositiveNumber);
  sub->add_option("--stroke", f.stroke, "SVG stroke width");
  sub->add_option("--margin", f.margin, "margin fraction in [0, 0.45]");
  sub->add_option("--decimate", f.decimate,
                  "SVG-only vertex decimation threshold in px (0 = off)");
  sub->add_flag("--big", f.big, "allow auto sample counts above 500k");
}

void add_quadrature_params(CLI::App* sub, Flags& f) {
  sub->add_option("--rel-tol", f.rel_tol, "quadrature relative tolerance");
  sub->add_option("--abs-tol", f.abs_tol, "quadrature absolute tolerance");
  sub->add_option("--max-subdiv", f.max_subdiv,
                  "total interval-bisection budget");
}

void add_spec_params(CLI::App* sub, Flags& f) {
  sub->add_option("--spec", f.spec_name, "curve family")
      ->required()
      ->check(CLI::IsMember({"classic", "primesum", "altprimesum"}));
  add_classic_params(sub, f);
  sub->add_option("--n", f.n, "number of prime-frequency terms per axis")
      ->check(CLI::PositiveNumber);
  sub->add_option("--warp", f.warp, "frequency warp")
      ->check(CLI::IsMember({"identity", "log", "sqrt", "power"}));
  sub->add_option("--exponent", f.exponent, "power-law warp exponent");
}

CurveSpec spec_from_flags(const std::string& family, const Flags& f) {
  if (family == "classic") {
    return ClassicSpec{f.a, f.b, parse_angle(f.delta)};
  }
  const FrequencyWarp warp = make_warp(f.warp, f.exponent);
  if (family == "primesum") return PrimeSumSpec{f.n, warp};
  return AltPrimeSumSpec{f.n, warp};
}

std::size_t choose_count(const Curve& curve, const Flags& f) {
  if (f.count != 0) return static_cast<std::size_t>(f.count);
  const std::size_t count = default_sample_count(curve);
  if (count > kBigSampleGate && !f.big) {
    throw std::invalid_argument(
        "default sample count " + std::to_string(count) +
        " exceeds 500000 points; pass --big to proceed or --count to "
        "override");
  }
  return count;
}

int emit_curve(const CurveSpec& spec, const Flags& f, std::ostream& out) {
  const Curve curve(spec);
  const double t0 = parse_angle(f.t0);
  const double t1 = parse_angle(f.t1);
  const Polyline line = sample_curve(curve, t0, t1, choose_count(curve, f));

  const std::filesystem::path path(f.out);
  const std::string ext = path.extension().string();
  if (ext == ".svg") {
    const RenderStyle style{f.width, f.height, f.stroke, f.margin};
    emit_svg(line, style, path, f.decimate);
  } else if (ext == ".csv") {
    emit_csv(line, path);
  } else {
    throw std::invalid_argument("--out must end in .svg or .csv, got '" +
                                f.out + "'");
  }
  out << describe(spec) << " t0=" << format_double(t0)
      << " t1=" << format_double(t1) << " points=" << line.size()
      << " closed=" << (line.closed ? "1" : "0") << " out=" << f.out << "\n";
  return 0;
}

int run_length(const Flags& f, std::ostream& out) {
  const CurveSpec spec = spec_from_flags(f.spec_name, f);
  const Curve curve(spec);
  const QuadratureConfig cfg{f.rel_tol, f.abs_tol, f.max_subdiv};
  const double length =
      arc_length(curve, parse_angle(f.t0), parse_angle(f.t1), cfg);
  out << "length=" << format_double(length) << " " << describe(spec) << "\n";
  return 0;
}

int run_metrics(const Flags& f, std::ostream& out) {
  const CurveSpec spec = spec_from_flags(f.spec_name, f);
  const Curve curve(spec);
  const double t0 = parse_angle(f.t0);
  const double t1 = parse_angle(f.t1);
  const Polyline line = sample_curve(curve, t0, t1, choose_count(curve, f));
  const GeometrySummary summary =
      summarize_samples(curve, line, chord_length(line));
  out << describe(spec) << " points=" << line.size() << " "
      << summary_keys(summary) << "\n";
  return 0;
}

int run_ulam(const Flags& f, std::ostream& out) {
  const std::filesystem::path path(f.out);
  if (path.extension().string() != ".pgm") {
    throw std::invalid_argument("--out must end in .pgm, got '" + f.out + "'");
  }
  const SpiralRaster raster = build_raster(f.side);
  emit_spiral_pgm(raster, path);
  const auto primes = std::count_if(raster.cells.begin(), raster.cells.end(),
                                    [](const SpiralCell& c) { return c.prime; });
  out << "side=" << raster.side << " primes=" << primes << " out=" << f.out
      << "\n";
  return 0;
}

}  // namespace

int reproduce_all(const std::filesystem::path& outdir, bool big,
                  std::ostream& out, std::ostream& err) {
  try {
    std::filesystem::create_directories(outdir);

    struct Panel {
      const char* file;
      CurveSpec spec;
    };
    const Panel panels[] = {
        {"fig2a.svg", ClassicSpec{1.0, 2.0, kPi / 2.0}},
        {"fig2b.svg", ClassicSpec{3.0, 2.0, kPi / 2.0}},
        {"fig2c.svg", ClassicSpec{3.0, 4.0, kPi / 4.0}},
        {"fig3a.svg", PrimeSumSpec{100, {}}},
        {"fig3b.svg", PrimeSumSpec{1000, {}}},
        {"fig3c.svg", PrimeSumSpec{5000, {}}},
        {"fig4a.svg", AltPrimeSumSpec{100, {}}},
        {"fig4b.svg", AltPrimeSumSpec{1000, {}}},
    };
    const RenderStyle style;
    for (const Panel& panel : panels) {
      const Curve curve(panel.spec);
      std::size_t count = default_sample_count(curve);
      if (!big) count = std::min<std::size_t>(count, 65537);
      const Polyline line = sample_curve(curve, 0.0, 2.0 * kPi, count);
      // summaries use the polyline's own chord length: full quadrature at
      // n=5000 frequencies is far past desk scale
      const GeometrySummary summary =
          summarize_samples(curve, line, chord_length(line));
      emit_svg(line, style, outdir / panel.file, /*decimate_px=*/0.1);
      out << "file=" << panel.file << " " << describe(panel.spec)
          << " points=" << line.size() << " " << summary_keys(summary)
          << "\n";
    }

    const SpiralRaster raster = build_raster(201);
    emit_spiral_pgm(raster, outdir / "fig1.pgm");
    const auto primes = std::count_if(
        raster.cells.begin(), raster.cells.end(),
        [](const SpiralCell& c) { return c.prime; });
    out << "file=fig1.pgm side=201 primes=" << primes << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "reproduce_all: " << e.what() << "\n";
    return 1;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Flags f;
  CLI::App app{"prime-frequency Lissajous curves: generation, geometry, and "
               "figure emission"};
  app.require_subcommand(1);

  CLI::App* classic = app.add_subcommand(
      "classic", "emit a classic two-frequency curve (SVG or CSV)");
  add_classic_params(classic, f);
  add_interval_params(classic, f);
  add_emit_params(classic, f);

  CLI::App* primesum = app.add_subcommand(
      "primesum", "emit a consecutive-prime harmonic-sum curve");
  add_prime_params(primesum, f);
  add_interval_params(primesum, f);
  add_emit_params(primesum, f);

  CLI::App* altprimesum = app.add_subcommand(
      "altprimesum",
      "emit the second-neighbor variant (x odd-indexed, y even-indexed "
      "primes)");
  add_prime_params(altprimesum, f);
  add_interval_params(altprimesum, f);
  add_emit_params(altprimesum, f);

  CLI::App* ulam =
      app.add_subcommand("ulam", "emit a square-spiral prime raster (PGM)");
  ulam->add_option("--side", f.side, "odd raster side length")->required();
  ulam->add_option("--out", f.out, "output file (.pgm)")->required();

  CLI::App* length = app.add_subcommand(
      "length", "arc length over [t0, t1] by adaptive quadrature");
  add_spec_params(length, f);
  add_interval_params(length, f);
  add_quadrature_params(length, f);

  CLI::App* metrics = app.add_subcommand(
      "metrics",
      "sampled-trace summary: chord length, bounding box, curvature, "
      "mirror asymmetry");
  add_spec_params(metrics, f);
  add_interval_params(metrics, f);
  metrics->add_option("--count", f.count, "sample count override");
  metrics->add_flag("--big", f.big, "allow auto sample counts above 500k");

  CLI::App* reproduce = app.add_subcommand(
      "reproduce_all", "regenerate every figure analogue into a directory");
  reproduce->add_option("--outdir", f.outdir, "output directory")->required();
  reproduce->add_flag("--big", f.big,
                      "full-resolution sampling (minutes of runtime)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    // Print the help of the subcommand the flag appeared under, if any.
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(classic)) {
      return emit_curve(ClassicSpec{f.a, f.b, parse_angle(f.delta)}, f, out);
    }
    if (app.got_subcommand(primesum)) {
      return emit_curve(PrimeSumSpec{f.n, make_warp(f.warp, f.exponent)}, f,
                        out);
    }
    if (app.got_subcommand(altprimesum)) {
      return emit_curve(AltPrimeSumSpec{f.n, make_warp(f.warp, f.exponent)},
                        f, out);
    }
    if (app.got_subcommand(ulam)) return run_ulam(f, out);
    if (app.got_subcommand(length)) return run_length(f, out);
    if (app.got_subcommand(metrics)) return run_metrics(f, out);
    return reproduce_all(f.outdir, f.big, out, err);
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const QuadratureError& e) {
    err << e.what()
        << " (best estimate: " << format_double(e.best_estimate) << ")\n";
    return 1;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

}  // namespace liss
