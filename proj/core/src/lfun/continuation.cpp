#include <cmath>
#include <limits>

#include "wiltonlab/lfun.hpp"
#include "wiltonlab/numerics.hpp"

namespace wiltonlab::lfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Gamma(s, c) = e^{-c} c^s h, h the Legendre continued fraction (modified Lentz).
Complex continuedFraction(Complex s, double c) {
  constexpr double tiny = 1e-300;
  Complex b = c + 1.0 - s;
  Complex cc = 1.0 / tiny;
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 1; i < 20000; ++i) {
    const Complex an = -static_cast<double>(i) * (static_cast<double>(i) - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    cc = b + an / cc;
    if (std::abs(cc) < tiny) cc = tiny;
    d = 1.0 / d;
    const Complex delta = d * cc;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) return h;
  }
  throw ToleranceNotMet("upperGammaTail: continued fraction did not converge", std::exp(-c) * h, INFINITY);
}

// c^{-s} Gamma(s) - sum_j (-c)^j / (j! (s + j)); only used for c < 1.
Complex smallArgument(Complex s, double c) {
  Complex sum = 0.0;
  double term = 1.0;
  for (int j = 0; j < 60; ++j) {
    const Complex denom = s + static_cast<double>(j);
    if (std::abs(denom) < 1e-12) throw PoleAt("upperGammaTail: s at a non-positive integer", s);
    sum += term / denom;
    term *= -c / (j + 1.0);
    if (std::abs(term) < 1e-18) break;
  }
  return std::exp(numerics::logGamma(s) - s * std::log(c)) - sum;
}

Complex byQuadrature(Complex s, double c) {
  // Cut off where e^{-c y} y^{sigma - 1} has dropped by e^{-45} relative to y = 1.
  const double a = std::max(0.0, s.real() - 1.0);
  double hi = 2.0;
  while (c * (hi - 1.0) - a * std::log(hi) < 45.0) hi *= 1.5;
  const auto f = [&](double y) { return std::exp(-c * y + (s - 1.0) * std::log(y)); };
  const double scale = std::exp(-c) * std::pow(std::max(1.0, a / c), a);
  return numerics::adaptiveGaussKronrod(f, 1.0, hi, 1e-16 * scale).value;
}

// Upper bound on |upperGammaTail(s, c)| valid when c > max(0, sigma - 1).
double tailMagnitude(double sigma, double c) {
  const double a = std::max(0.0, sigma - 1.0);
  return std::exp(-c) / (c - a);
}

}  // namespace

Complex upperGammaTail(Complex s, double c) {
  if (!(c > 0.0)) throw DomainError("upperGammaTail: c must be positive");
  if (c < 1.0) return smallArgument(s, c);
  if (c > std::abs(s) + 2.0) return std::exp(-c) * continuedFraction(s, c);
  return byQuadrature(s, c);
}

LValue completedTransform(const ThetaPair& pair, Complex s) {
  const Complex dualS = pair.k - s;
  const double step = kTwoPi / pair.lambda;
  const double growth = std::max(pair.alpha.growthExponent(), pair.beta.growthExponent());
  const double constant = std::max(pair.alpha.growthConstant(), pair.beta.growthConstant()) *
                          std::max(1.0, std::abs(pair.gamma));
  const double shift = std::max({0.0, s.real() - 1.0, dualS.real() - 1.0});

  numerics::CompensatedSum sum;
  double absSum = 0.0;
  double tail = INFINITY;
  std::uint64_t n = 1;
  for (;; ++n) {
    const double c = step * static_cast<double>(n);
    const Complex a = pair.alpha.valueAt(n);
    const Complex b = pair.beta.valueAt(n);
    if (a != Complex(0.0)) {
      const Complex t = a * upperGammaTail(s, c);
      sum.add(t);
      absSum += std::abs(t);
    }
    if (b != Complex(0.0)) {
      const Complex t = pair.gamma * b * upperGammaTail(dualS, c);
      sum.add(t);
      absSum += std::abs(t);
    }
    // Geometric bound on everything beyond n.
    const double next = step * static_cast<double>(n + 1);
    if (next > shift + 1.0) {
      const double ratio = std::exp(-step) * std::pow(1.0 + 1.0 / static_cast<double>(n + 1), growth);
      if (ratio < 1.0) {
        tail = 2.0 * constant * std::pow(static_cast<double>(n + 1), growth) *
               tailMagnitude(shift + 1.0, next) / (1.0 - ratio);
        if (tail < 1e-17 * std::max(absSum, 1e-300) && n >= 4) break;
      }
    }
    if (n > 200000) throw ToleranceNotMet("completedTransform: theta tail did not decay", sum.value(), tail);
  }

  const Complex a0 = pair.alpha.alpha0();
  const Complex b0 = pair.beta.alpha0();
  if (a0 != Complex(0.0)) {
    if (std::abs(s) < 1e-12) throw PoleAt("completedTransform: pole at s = 0", 0.0);
    sum.add(-a0 / s);
    absSum += std::abs(a0 / s);
  }
  if (b0 != Complex(0.0)) {
    if (std::abs(dualS) < 1e-12) throw PoleAt("completedTransform: pole at s = k", pair.k);
    sum.add(-pair.gamma * b0 / dualS);
    absSum += std::abs(pair.gamma * b0 / dualS);
  }
  LValue out;
  out.value = sum.value();
  out.errorEstimate = tail + 64.0 * kEps * absSum;
  out.terms = n;
  out.method = "theta-continuation";
  return out;
}

LValue continuedSeries(const ThetaPair& pair, Complex s) {
  const LValue lambda = completedTransform(pair, s);
  const Complex factor = std::exp(s * std::log(kTwoPi / pair.lambda)) * numerics::reciprocalGamma(s);
  LValue out = lambda;
  out.value = factor * lambda.value;
  out.errorEstimate = std::abs(factor) * lambda.errorEstimate;
  return out;
}

}  // namespace wiltonlab::lfun
