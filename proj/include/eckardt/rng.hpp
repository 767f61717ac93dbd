#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace eckardt {

/// mt19937_64 with distribution code written out here, so draws are identical
/// across standard library implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi]; modulo bias is below 2^-50 for the ranges used here.
  long uniform_int(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  /// Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::complex<double> unit_complex() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform01()); }
  std::complex<double> complex_in_box() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace eckardt
