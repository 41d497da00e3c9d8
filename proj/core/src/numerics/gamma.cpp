#include <cmath>

#include "wiltonlab/numerics.hpp"

namespace wiltonlab::numerics {
namespace {

constexpr double kLogSqrtTwoPi = 0.91893853320467274178032973640562;
constexpr double kLogPi = 1.14472988584940017414342735135305;
constexpr double kStirlingRadius = 15.0;
constexpr int kStirlingTerms = 10;  // B_2 .. B_20
constexpr double kPoleRadius = 1e-12;

bool nearNonPositiveInteger(Complex s) {
  if (s.real() > kPoleRadius) return false;
  const double nearest = std::round(s.real());
  return std::abs(s - Complex(nearest, 0.0)) < kPoleRadius;
}

// Stirling series; caller guarantees |w| >= kStirlingRadius and Re w > 0.
Complex stirling(Complex w) {
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex series = 0.0;
  Complex power = inv;
  for (int j = 1; j <= kStirlingTerms; ++j) {
    const int k = 2 * j;
    series += bernoulliDouble(k) / static_cast<double>(k * (k - 1)) * power;
    power *= inv2;
  }
  return (w - 0.5) * std::log(w) - w + kLogSqrtTwoPi + series;
}

}  // namespace

Complex logSinPi(Complex w) {
  // sin(pi w) is 2-periodic in Re w.
  const double shift = 2.0 * std::round(w.real() / 2.0);
  w -= shift;
  if (std::abs(w.imag()) < 5.0) return std::log(std::sin(kPi * w));
  if (w.imag() < 0.0) return std::conj(logSinPi(std::conj(w)));
  // sin(pi w) = (i/2) e^{-i pi w} (1 - e^{2 i pi w})
  const Complex i(0.0, 1.0);
  const Complex small = std::exp(2.0 * i * kPi * w);
  return -i * kPi * w + std::log(1.0 - small) + std::log(Complex(0.0, 0.5));
}

Complex logGamma(Complex s) {
  if (nearNonPositiveInteger(s)) throw PoleAt("Gamma pole", s);
  if (s.real() < 0.5) {
    return kLogPi - logSinPi(s) - logGamma(1.0 - s);
  }
  Complex w = s;
  Complex product = 1.0;
  while (std::abs(w) < kStirlingRadius) {
    product *= w;
    w += 1.0;
  }
  return stirling(w) - std::log(product);
}

Complex gammaFn(Complex s) {
  if (nearNonPositiveInteger(s)) throw PoleAt("Gamma pole", s);
  if (s.real() >= 0.5 || std::abs(s.imag()) > 20.0) return std::exp(logGamma(s));
  const double shift = 2.0 * std::round(s.real() / 2.0);
  const Complex sinPi = std::sin(kPi * (s - shift));
  return kPi / (sinPi * std::exp(logGamma(1.0 - s)));
}

Complex reciprocalGamma(Complex s) {
  if (nearNonPositiveInteger(s)) return 0.0;
  return std::exp(-logGamma(s));
}

}  // namespace wiltonlab::numerics
