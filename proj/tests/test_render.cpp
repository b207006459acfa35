#include <doctest.h>

#include <liss/curve.hpp>
#include <liss/render.hpp>
#include <liss/sampling.hpp>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace liss;

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

Polyline make_line(std::initializer_list<CurvePoint> pts) {
  Polyline line;
  line.points = pts;
  return line;
}

// Pulls the points="..." payload out of the (single) polyline element and
// parses it back into coordinate pairs.
std::vector<double> parse_polyline_numbers(const std::string& svg) {
  const std::string key = "points=\"";
  const std::size_t begin = svg.find(key);
  REQUIRE(begin != std::string::npos);
  const std::size_t end = svg.find('"', begin + key.size());
  REQUIRE(end != std::string::npos);

  std::vector<double> out;
  std::istringstream in(svg.substr(begin + key.size(), end - begin - key.size()));
  std::string tok;
  while (in >> tok) {
    const std::size_t comma = tok.find(',');
    REQUIRE(comma != std::string::npos);
    out.push_back(std::stod(tok.substr(0, comma)));
    out.push_back(std::stod(tok.substr(comma + 1)));
  }
  return out;
}

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("format_double round-trips exactly") {
  for (double v : {0.0, 1.0, -1.0, 0.1, 1.0 / 3.0, kTwoPi, 1e-300, -6.25}) {
    const std::string s = format_double(v);
    double back = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), back);
    REQUIRE(ec == std::errc());
    CHECK(ptr == s.data() + s.size());
    CHECK(back == v);
  }
  // Shortest form: no trailing zero noise on representable values.
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(2.0) == "2");
}

TEST_CASE("svg viewport mapping places a known vertex") {
  // Five-point unit circle into a 100x100 viewport with 5% margin: the
  // first sample (0, 1) maps to x = 50, y = 100/22.
  const Polyline line = make_line({{0.0, 0.0, 1.0},
                                   {1.0, 1.0, 0.0},
                                   {2.0, 0.0, -1.0},
                                   {3.0, -1.0, 0.0},
                                   {4.0, 0.0, 1.0}});
  RenderStyle style;
  style.width_px = 100;
  style.height_px = 100;
  const std::string svg = svg_document(line, style);
  const std::vector<double> nums = parse_polyline_numbers(svg);
  REQUIRE(nums.size() == 10);
  CHECK(nums[0] == doctest::Approx(50.0).epsilon(1e-12));
  CHECK(nums[1] == doctest::Approx(100.0 / 22.0).epsilon(1e-12));
  // (1, 0) is the rightmost point: x lands on the inner margin edge.
  CHECK(nums[2] == doctest::Approx(100.0 - 100.0 / 22.0).epsilon(1e-12));
  CHECK(nums[3] == doctest::Approx(50.0).epsilon(1e-12));
}

TEST_CASE("svg document structure") {
  const Curve c{ClassicSpec{3.0, 2.0, 0.5}};
  const Polyline line = sample_curve(c, 0.0, kTwoPi, 257);
  const std::string svg = svg_document(line, RenderStyle{});

  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count_occurrences(svg, "<polyline") == 1);
  CHECK(count_occurrences(svg, "</svg>") == 1);
  CHECK(svg.find("fill=\"none\"") != std::string::npos);

  // Every vertex stays inside the declared viewport.
  const std::vector<double> nums = parse_polyline_numbers(svg);
  REQUIRE(nums.size() == 2 * line.size());
  for (std::size_t i = 0; i < nums.size(); i += 2) {
    CHECK(nums[i] >= 0.0);
    CHECK(nums[i] <= 1000.0);
    CHECK(nums[i + 1] >= 0.0);
    CHECK(nums[i + 1] <= 1000.0);
  }
}

TEST_CASE("svg output is byte-deterministic") {
  const Curve c{PrimeSumSpec{5, {}}};
  const Polyline line = sample_curve(c, 0.0, kTwoPi, 1025);
  CHECK(svg_document(line, RenderStyle{}) == svg_document(line, RenderStyle{}));
  CHECK(svg_document(line, RenderStyle{}, 0.5) ==
        svg_document(line, RenderStyle{}, 0.5));
}

TEST_CASE("svg rejects empty polylines and bad styles") {
  const Polyline ok = make_line({{0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}});
  CHECK_THROWS_AS(svg_document(Polyline{}, RenderStyle{}),
                  std::invalid_argument);

  RenderStyle bad;
  bad.width_px = 0;
  CHECK_THROWS_AS(svg_document(ok, bad), std::invalid_argument);
  bad = {};
  bad.margin_fraction = 0.5;
  CHECK_THROWS_AS(svg_document(ok, bad), std::invalid_argument);
  bad = {};
  bad.margin_fraction = -0.01;
  CHECK_THROWS_AS(svg_document(ok, bad), std::invalid_argument);
  bad = {};
  bad.stroke_width = 0.0;
  CHECK_THROWS_AS(svg_document(ok, bad), std::invalid_argument);
}

TEST_CASE("degenerate extents center on the viewport") {
  // A vertical segment has zero x span; x should sit mid-viewport.
  const Polyline seg = make_line({{0.0, 2.0, 0.0}, {1.0, 2.0, 5.0}});
  RenderStyle style;
  style.width_px = 200;
  style.height_px = 100;
  const std::vector<double> nums =
      parse_polyline_numbers(svg_document(seg, style));
  REQUIRE(nums.size() == 4);
  CHECK(nums[0] == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(nums[2] == doctest::Approx(100.0).epsilon(1e-12));
}

TEST_CASE("collinear interior vertices decimate away") {
  Polyline line;
  for (int i = 0; i <= 10; ++i) {
    line.points.push_back({double(i), double(i), double(i)});
  }
  const std::string svg = svg_document(line, RenderStyle{}, 0.25);
  const std::vector<double> nums = parse_polyline_numbers(svg);
  CHECK(nums.size() == 4);  // endpoints only

  // Without decimation every vertex is kept.
  const std::vector<double> full =
      parse_polyline_numbers(svg_document(line, RenderStyle{}));
  CHECK(full.size() == 22);
}

TEST_CASE("decimation keeps genuine corners") {
  const Polyline corner = make_line(
      {{0.0, 0.0, 0.0}, {1.0, 1.0, 0.0}, {2.0, 2.0, 0.0}, {3.0, 2.0, 2.0}});
  const std::vector<double> nums =
      parse_polyline_numbers(svg_document(corner, RenderStyle{}, 0.5));
  // The interior corner at (2, 0) survives; the straight-run vertex at
  // (1, 0) does not.
  CHECK(nums.size() == 6);
}

TEST_CASE("csv document shape and exact round-trip") {
  const Polyline line =
      make_line({{0.25, 1.0 / 3.0, -0.7}, {0.5, kTwoPi, 1e-12}});
  const std::string csv = csv_document(line);

  std::istringstream in(csv);
  std::string header;
  REQUIRE(std::getline(in, header));
  CHECK(header == "t,x,y");

  std::string row;
  std::size_t i = 0;
  while (std::getline(in, row)) {
    REQUIRE(i < line.size());
    std::istringstream cells(row);
    std::string cell;
    double vals[3];
    for (double& v : vals) {
      REQUIRE(std::getline(cells, cell, ','));
      v = std::stod(cell);
    }
    CHECK(vals[0] == line.points[i].t);
    CHECK(vals[1] == line.points[i].x);
    CHECK(vals[2] == line.points[i].y);
    ++i;
  }
  CHECK(i == line.size());
}

TEST_CASE("csv of an empty polyline is header-only") {
  CHECK(csv_document(Polyline{}) == "t,x,y\n");
}

TEST_CASE("emit helpers write the documents to disk") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "liss_render_test";
  fs::create_directories(dir);

  const Curve c{ClassicSpec{2.0, 3.0, 0.0}};
  const Polyline line = sample_curve(c, 0.0, kTwoPi, 65);

  const fs::path svg_path = dir / "out.svg";
  emit_svg(line, RenderStyle{}, svg_path);
  std::ifstream svg_in(svg_path);
  std::stringstream svg_data;
  svg_data << svg_in.rdbuf();
  CHECK(svg_data.str() == svg_document(line, RenderStyle{}));

  const fs::path csv_path = dir / "out.csv";
  emit_csv(line, csv_path);
  std::ifstream csv_in(csv_path);
  std::stringstream csv_data;
  csv_data << csv_in.rdbuf();
  CHECK(csv_data.str() == csv_document(line));

  fs::remove_all(dir);
}

TEST_CASE("emitting into a missing directory reports the path") {
  const Polyline line = make_line({{0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}});
  const std::filesystem::path bogus =
      "/nonexistent_dir_for_liss_tests/out.svg";
  CHECK_THROWS_AS(emit_svg(line, RenderStyle{}, bogus), std::runtime_error);
  CHECK_THROWS_AS(emit_csv(line, bogus), std::runtime_error);
}
