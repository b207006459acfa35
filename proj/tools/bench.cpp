// Compares the OpenMP kernels against their serial reference
// implementations: wall time, speedup, and whether the outputs match bit
// for bit (they must).
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstring>

#include "liss/curve.hpp"
#include "liss/geometry.hpp"
#include "liss/reference.hpp"
#include "liss/sampling.hpp"
#include "liss/ulam.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

bool same_bits(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

bool same_points(const liss::Polyline& a, const liss::Polyline& b) {
  if (a.size() != b.size() || a.closed != b.closed) return false;
  return std::memcmp(a.points.data(), b.points.data(),
                     a.size() * sizeof(liss::CurvePoint)) == 0;
}

bool same_cells(const liss::SpiralRaster& a, const liss::SpiralRaster& b) {
  if (a.side != b.side) return false;
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    const auto& ca = a.cells[i];
    const auto& cb = b.cells[i];
    if (ca.n != cb.n || ca.gx != cb.gx || ca.gy != cb.gy ||
        ca.prime != cb.prime) {
      return false;
    }
  }
  return true;
}

void report(const char* name, double serial_ms, double parallel_ms,
            bool match) {
  std::printf("%-24s %10.1f ms %10.1f ms %7.2fx   %s\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms,
              match ? "bitwise-equal" : "MISMATCH");
}

}  // namespace

int main() {
  constexpr double kTwoPi = 6.283185307179586;
  std::printf("%-24s %13s %13s %8s   %s\n", "kernel", "serial", "parallel",
              "speedup", "outputs");

  {
    const liss::Curve curve(liss::PrimeSumSpec{1000});
    auto t0 = Clock::now();
    const auto serial = liss::ref::sample_curve(curve, 0.0, kTwoPi, 65537);
    const double s_ms = ms_since(t0);
    t0 = Clock::now();
    const auto parallel = liss::sample_curve(curve, 0.0, kTwoPi, 65537);
    report("sample_curve n=1000", s_ms, ms_since(t0),
           same_points(serial, parallel));
  }

  {
    const liss::Curve curve(liss::PrimeSumSpec{100});
    auto t0 = Clock::now();
    const double serial = liss::ref::arc_length(curve, 0.0, kTwoPi);
    const double s_ms = ms_since(t0);
    t0 = Clock::now();
    const double parallel = liss::arc_length(curve, 0.0, kTwoPi);
    report("arc_length n=100", s_ms, ms_since(t0),
           same_bits(serial, parallel));
  }

  {
    const liss::Curve a(liss::PrimeSumSpec{3});
    const liss::Curve b(liss::PrimeSumSpec{10});
    const auto la = liss::sample_curve(a, 0.0, kTwoPi, 16385);
    const auto lb = liss::sample_curve(b, 0.0, kTwoPi, 16385);
    auto t0 = Clock::now();
    const double serial = liss::ref::trace_distance(la, lb);
    const double s_ms = ms_since(t0);
    t0 = Clock::now();
    const double parallel = liss::trace_distance(la, lb);
    report("trace_distance 16k pts", s_ms, ms_since(t0),
           same_bits(serial, parallel));
  }

  {
    auto t0 = Clock::now();
    const auto serial = liss::ref::build_raster(1001);
    const double s_ms = ms_since(t0);
    t0 = Clock::now();
    const auto parallel = liss::build_raster(1001);
    report("build_raster side=1001", s_ms, ms_since(t0),
           same_cells(serial, parallel));
  }

  return 0;
}
