#include "liss/ulam.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "liss/primes.hpp"

namespace liss {

namespace {

// Exact integer square root; the double seed is refined so values beyond
// 2^53 still come out right.
std::uint64_t isqrt_u64(std::uint64_t v) {
  std::uint64_t r =
      static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  if (r > 0xFFFFFFFFull) r = 0xFFFFFFFFull;
  while (r != 0 && r * r > v) --r;
  while (r < 0xFFFFFFFFull && (r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

GridCoord spiral_coord(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("spiral_coord: requires n >= 1");
  if (n == 1) return {0, 0};
  // Ring k holds (2k-1)^2 < n <= (2k+1)^2; its walk starts just right of
  // the previous ring's closing corner and runs counterclockwise through
  // four edges of 2k cells each.
  const std::int64_t k =
      static_cast<std::int64_t>((isqrt_u64(n - 1) + 1) / 2);
  const std::uint64_t ring_start =
      static_cast<std::uint64_t>(2 * k - 1) * static_cast<std::uint64_t>(2 * k - 1) + 1;
  const std::int64_t s = static_cast<std::int64_t>(n - ring_start);
  const std::int64_t edge = s / (2 * k);
  const std::int64_t off = s % (2 * k);
  switch (edge) {
    case 0:  return {k, -k + 1 + off};   // right edge, heading up
    case 1:  return {k - 1 - off, k};    // top edge, heading left
    case 2:  return {-k, k - 1 - off};   // left edge, heading down
    default: return {-k + 1 + off, -k};  // bottom edge, heading right
  }
}

std::uint64_t spiral_index(std::int64_t gx, std::int64_t gy) {
  const std::int64_t k = std::max(gx < 0 ? -gx : gx, gy < 0 ? -gy : gy);
  if (k == 0) return 1;
  std::int64_t s;
  if (gx == k && gy > -k) {
    s = gy + k - 1;
  } else if (gy == k) {
    s = 2 * k + (k - 1 - gx);
  } else if (gx == -k) {
    s = 4 * k + (k - 1 - gy);
  } else {
    s = 6 * k + (gx + k - 1);
  }
  const std::uint64_t ring_start =
      static_cast<std::uint64_t>(2 * k - 1) * static_cast<std::uint64_t>(2 * k - 1) + 1;
  return ring_start + static_cast<std::uint64_t>(s);
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
  SpiralCell* cells = raster.cells.data();

#pragma omp parallel for schedule(static)
  for (std::int64_t row = 0; row < iside; ++row) {
    const std::int64_t gy = half - row;
    for (std::int64_t col = 0; col < iside; ++col) {
      const std::int64_t gx = col - half;
      const std::uint64_t n = spiral_index(gx, gy);
      cells[row * iside + col] = {n, gx, gy, table[n] != 0};
    }
  }
  return raster;
}

std::string pgm_document(const SpiralRaster& raster) {
  std::string doc = "P5\n" + std::to_string(raster.side) + " " +
                    std::to_string(raster.side) + "\n255\n";
  doc.reserve(doc.size() + raster.cells.size());
  for (const SpiralCell& cell : raster.cells) {
    doc.push_back(cell.prime ? '\0' : '\xff');
  }
  return doc;
}

void emit_spiral_pgm(const SpiralRaster& raster,
                     const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  const std::string doc = pgm_document(raster);
  out.write(doc.data(), static_cast<std::streamsize>(doc.size()));
  if (!out) {
    throw std::runtime_error("emit_spiral_pgm: cannot write " + path.string());
  }
}

}  // namespace liss
