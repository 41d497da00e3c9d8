#include <algorithm>
#include <cmath>
#include <limits>

#include "wiltonlab/numerics.hpp"

namespace wiltonlab::numerics {
namespace {

using Real = long double;

constexpr Real kPiL = 3.141592653589793238462643383279502884L;

bool isHalfOdd(double order) {
  const double twice = 2.0 * order;
  return twice == std::floor(twice) && std::fmod(std::fabs(twice), 2.0) == 1.0;
}

// Ascending power series, long double.
Real powerSeries(Real nu, Real z) {
  const Real half = z / 2;
  const Real q = half * half;
  Real term = std::exp(nu * std::log(half) - std::lgamma(nu + 1));
  Real sum = term;
  Real largest = std::fabs(term);
  for (int m = 1; m < 2000; ++m) {
    term *= -q / (static_cast<Real>(m) * (m + nu));
    sum += term;
    largest = std::max(largest, std::fabs(term));
    if (std::fabs(term) < 1e-22L * largest && m > half) break;
  }
  return sum;
}

// Hankel large-argument expansion for a low order mu.
Real hankelAsymptotic(Real mu, Real z) {
  const Real fourMu2 = 4 * mu * mu;
  Real p = 1, q = 0;
  Real term = 1;  // a_k / z^k
  Real previous = std::numeric_limits<Real>::infinity();
  for (int k = 1; k < 200; ++k) {
    const Real odd = 2 * k - 1;
    term *= (fourMu2 - odd * odd) / (static_cast<Real>(k) * 8 * z);
    const Real magnitude = std::fabs(term);
    if (magnitude > previous) break;  // asymptotic series starts diverging
    previous = magnitude;
    switch (k % 4) {
      case 0: p += term; break;
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
    }
    if (magnitude < 1e-22L) break;
  }
  const Real chi = z - (mu / 2 + 0.25L) * kPiL;
  return std::sqrt(2 / (kPiL * z)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

double besselSwitchPoint(double order) noexcept { return std::max(17.0, order); }

double besselJ(double order, double z) {
  if (!(order >= -0.5)) throw DomainError("besselJ: order must be >= -1/2");
  if (!(z >= 0.0)) throw DomainError("besselJ: argument must be >= 0");
  if (z == 0.0) {
    if (order == 0.0) return 1.0;
    if (order > 0.0) return 0.0;
    return std::numeric_limits<double>::infinity();
  }
  const Real x = z;
  if (order == -0.5) return static_cast<double>(std::sqrt(2 / (kPiL * x)) * std::cos(x));
  if (order == 0.5) return static_cast<double>(std::sqrt(2 / (kPiL * x)) * std::sin(x));

  if (z <= besselSwitchPoint(order)) return static_cast<double>(powerSeries(order, x));

  // Forward recurrence from a low-order pair; stable because order < z here.
  Real lower, upper, mu;
  if (isHalfOdd(order)) {
    mu = 0.5L;
    lower = std::sqrt(2 / (kPiL * x)) * std::cos(x);  // J_{-1/2}
    upper = std::sqrt(2 / (kPiL * x)) * std::sin(x);  // J_{1/2}
  } else {
    mu = order < 0 ? static_cast<Real>(order) : static_cast<Real>(order - std::floor(order));
    if (mu == static_cast<Real>(order)) return static_cast<double>(hankelAsymptotic(mu, x));
    lower = hankelAsymptotic(mu, x);
    upper = hankelAsymptotic(mu + 1, x);
    mu += 1;
  }
  // Invariant: upper = J_mu, lower = J_{mu-1}.
  while (mu < static_cast<Real>(order) - 1e-9L) {
    const Real next = 2 * mu / x * upper - lower;
    lower = upper;
    upper = next;
    mu += 1;
  }
  return static_cast<double>(upper);
}

}  // namespace wiltonlab::numerics
