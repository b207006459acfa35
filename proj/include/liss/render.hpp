// render.hpp - SVG and CSV emission for sampled curves
#pragma once

#include <filesystem>
#include <string>

#include "liss/sampling.hpp"

namespace liss {

struct RenderStyle {
  int width_px = 1000;
  int height_px = 1000;
  double stroke_width = 1.0;
  double margin_fraction = 0.05;  // in [0, 0.45]
};

// Standalone SVG 1.1 document with a single polyline element. Curve
// coordinates are mapped affinely from the polyline bounding box (expanded
// by margin_fraction per side) onto the pixel viewport with the y axis
// flipped. decimate_px > 0 drops vertices closer than that perpendicular
// distance (in pixels) to the simplified path; endpoints always survive.
// Output is byte-deterministic for fixed inputs.
std::string svg_document(const Polyline& line, const RenderStyle& style,
                         double decimate_px = 0.0);

// Header `t,x,y`, one row per point, shortest round-trip decimals, LF line
// endings. An empty polyline yields a header-only document.
std::string csv_document(const Polyline& line);

void emit_svg(const Polyline& line, const RenderStyle& style,
              const std::filesystem::path& path, double decimate_px = 0.0);

void emit_csv(const Polyline& line, const std::filesystem::path& path);

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

}  // namespace liss
