#include "liss/render.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace liss {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

struct Pixel {
  double x, y;
};

void check_style(const RenderStyle& style) {
  if (style.width_px < 1 || style.height_px < 1) {
    throw std::invalid_argument("render: viewport must be at least 1x1");
  }
  if (!(style.stroke_width > 0.0)) {
    throw std::invalid_argument("render: stroke_width must be positive");
  }
  if (!(style.margin_fraction >= 0.0 && style.margin_fraction <= 0.45)) {
    throw std::invalid_argument("render: margin_fraction outside [0, 0.45]");
  }
}

// Affine map from the margin-expanded data bounding box onto the pixel
// viewport, y axis flipped so larger y is higher in the image.
std::vector<Pixel> map_to_viewport(const Polyline& line,
                                   const RenderStyle& style) {
  double xmin = line.points[0].x, xmax = xmin;
  double ymin = line.points[0].y, ymax = ymin;
  for (const CurvePoint& p : line.points) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double pad_x = style.margin_fraction * (xmax - xmin);
  const double pad_y = style.margin_fraction * (ymax - ymin);
  const double x0 = xmin - pad_x;
  const double y1 = ymax + pad_y;
  const double span_x = (xmax - xmin) + 2.0 * pad_x;
  const double span_y = (ymax - ymin) + 2.0 * pad_y;
  const double w = static_cast<double>(style.width_px);
  const double h = static_cast<double>(style.height_px);

  std::vector<Pixel> px(line.size());
  for (std::size_t i = 0; i < line.size(); ++i) {
    const CurvePoint& p = line.points[i];
    px[i].x = span_x > 0.0 ? (p.x - x0) / span_x * w : 0.5 * w;
    px[i].y = span_y > 0.0 ? (y1 - p.y) / span_y * h : 0.5 * h;
  }
  return px;
}

double point_segment_distance(Pixel p, Pixel a, Pixel b) {
  const double ux = b.x - a.x;
  const double uy = b.y - a.y;
  const double len_sq = ux * ux + uy * uy;
  if (len_sq == 0.0) return std::hypot(p.x - a.x, p.y - a.y);
  // distance to the infinite chord line, the usual simplification criterion
  return std::abs(ux * (a.y - p.y) - uy * (a.x - p.x)) / std::sqrt(len_sq);
}

// Ramer-Douglas-Peucker with an explicit stack; endpoints always survive.
std::vector<char> decimate_mask(const std::vector<Pixel>& px,
                                double threshold) {
  std::vector<char> keep(px.size(), 0);
  if (px.size() < 2) return keep;
  keep[0] = 1;
  keep[px.size() - 1] = 1;
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  stack.emplace_back(0, px.size() - 1);
  while (!stack.empty()) {
    const auto [lo, hi] = stack.back();
    stack.pop_back();
    if (hi - lo < 2) continue;
    double worst = -1.0;
    std::size_t split = lo;
    for (std::size_t i = lo + 1; i < hi; ++i) {
      const double d = point_segment_distance(px[i], px[lo], px[hi]);
      if (d > worst) {
        worst = d;
        split = i;
      }
    }
    if (worst > threshold) {
      keep[split] = 1;
      stack.emplace_back(lo, split);
      stack.emplace_back(split, hi);
    }
  }
  return keep;
}

}  // namespace

std::string svg_document(const Polyline& line, const RenderStyle& style,
                         double decimate_px) {
  if (line.empty()) {
    throw std::invalid_argument("svg_document: empty polyline");
  }
  check_style(style);
  const std::vector<Pixel> px = map_to_viewport(line, style);
  std::vector<char> keep;
  if (decimate_px > 0.0 && px.size() > 2) {
    keep = decimate_mask(px, decimate_px);
  }

  std::string doc;
  doc.reserve(px.size() * 24 + 256);
  doc += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  doc += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"";
  doc += std::to_string(style.width_px);
  doc += "\" height=\"";
  doc += std::to_string(style.height_px);
  doc += "\" viewBox=\"0 0 ";
  doc += std::to_string(style.width_px);
  doc += " ";
  doc += std::to_string(style.height_px);
  doc += "\">\n<polyline fill=\"none\" stroke=\"black\" stroke-width=\"";
  doc += format_double(style.stroke_width);
  doc += "\" points=\"";
  bool first = true;
  for (std::size_t i = 0; i < px.size(); ++i) {
    if (!keep.empty() && !keep[i]) continue;
    if (!first) doc += " ";
    first = false;
    doc += format_double(px[i].x);
    doc += ",";
    doc += format_double(px[i].y);
  }
  doc += "\"/>\n</svg>\n";
  return doc;
}

std::string csv_document(const Polyline& line) {
  std::string doc = "t,x,y\n";
  doc.reserve(doc.size() + line.size() * 56);
  for (const CurvePoint& p : line.points) {
    doc += format_double(p.t);
    doc += ",";
    doc += format_double(p.x);
    doc += ",";
    doc += format_double(p.y);
    doc += "\n";
  }
  return doc;
}

namespace {

void write_file(const std::string& doc, const std::filesystem::path& path,
                const char* who) {
  std::ofstream out(path, std::ios::binary);
  out.write(doc.data(), static_cast<std::streamsize>(doc.size()));
  if (!out) {
    throw std::runtime_error(std::string(who) + ": cannot write " +
                             path.string());
  }
}

}  // namespace

void emit_svg(const Polyline& line, const RenderStyle& style,
              const std::filesystem::path& path, double decimate_px) {
  write_file(svg_document(line, style, decimate_px), path, "emit_svg");
}

void emit_csv(const Polyline& line, const std::filesystem::path& path) {
  write_file(csv_document(line), path, "emit_csv");
}

}  // namespace liss
