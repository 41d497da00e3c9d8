#pragma once

#include <complex>
#include <cstdint>

namespace wiltonlab {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

inline bool isFinite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace wiltonlab
