#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "wiltonlab/types.hpp"

namespace support {

using wiltonlab::Complex;

inline double relErr(Complex got, Complex want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

// Relative for |want| >= 1, absolute below.
inline double mixedErr(Complex got, Complex want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

// Fixed seed so property tests are reproducible.
inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed2024ULL);
  return engine;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

}  // namespace support
