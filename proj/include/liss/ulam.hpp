// ulam.hpp - the Ulam square spiral: integer-to-grid mapping, prime mask,
// and raster emission.
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace liss {

struct GridCoord {
  std::int64_t gx = 0;
  std::int64_t gy = 0;
  bool operator==(const GridCoord&) const = default;
};

// Grid coordinate of n under the canonical walk: 1 at the origin, first
// step right, then counterclockwise with run lengths 1,1,2,2,3,3,...
// Computed in O(1) from the enclosing ring. Requires n >= 1.
GridCoord spiral_coord(std::uint64_t n);

// Inverse of spiral_coord: the integer placed at (gx, gy).
std::uint64_t spiral_index(std::int64_t gx, std::int64_t gy);

struct SpiralCell {
  std::uint64_t n = 0;
  std::int64_t gx = 0;
  std::int64_t gy = 0;
  bool prime = false;
};

// side x side centered spiral covering n = 1..side^2 exactly once.
// Cells are stored row-major with row 0 at the top (maximum gy).
struct SpiralRaster {
  std::uint64_t side = 0;
  std::vector<SpiralCell> cells;

  const SpiralCell& at(std::uint64_t row, std::uint64_t col) const {
    return cells[row * side + col];
  }
};

// Requires side odd and >= 1 (throws std::invalid_argument otherwise).
// Primality comes from a sieve over 1..side^2; rows fill in parallel via
// the inverse spiral map.
SpiralRaster build_raster(std::uint64_t side);

// Binary PGM (P5), maxval 255, no comments, single LF separators in the
// header. Prime cells are 0 (dark), composite cells 255.
std::string pgm_document(const SpiralRaster& raster);

void emit_spiral_pgm(const SpiralRaster& raster,
                     const std::filesystem::path& path);

}  // namespace liss
