#include <algorithm>
#include <cmath>

#include "wilton/detail.hpp"
#include "wiltonlab/wilton.hpp"

namespace wiltonlab::wilton {
namespace {

constexpr double kContourClearance = 1e-3;
constexpr std::size_t kMaxLegPanels = 20000;

struct Integrator {
  numerics::CompensatedSum sum;
  double error = 0.0;

  Complex add(const numerics::Integrand& f, double lo, double hi, double tol) {
    const auto r = numerics::adaptiveGaussKronrod(f, lo, hi, tol);
    sum.add(r.value);
    error += r.errorEstimate;
    return r.value;
  }
};

}  // namespace

double defaultAbscissa(const hecke::HeckeSignature& sig, Complex u) {
  const double lo = u.real() - sig.k;
  const double hi = u.real() - 0.5 * sig.k;
  const double negativeWidth = std::min(0.0, hi) - lo;
  const double positiveWidth = hi - std::max(0.0, lo);
  if (negativeWidth > 0.0 && (negativeWidth >= 0.1 || negativeWidth >= positiveWidth)) {
    return 0.5 * (lo + std::min(0.0, hi));
  }
  return 0.5 * (std::max(0.0, lo) + hi);
}

ContourResult mellinBarnesMoment(const hecke::HeckeSignature& sig, std::uint64_t n, Complex u, double x, double a) {
  const double k = sig.k;
  if (n == 0 || !(x > 0.0)) throw DomainError("mellinBarnesMoment: need n >= 1 and x > 0");
  if (!(a > u.real() - k && a < u.real() - 0.5 * k)) {
    throw DomainError("mellinBarnesMoment: abscissa outside (Re u - k, Re u - k/2)");
  }
  if (std::fabs(a) < kContourClearance) throw ContourTooClose("mellinBarnesMoment: contour through z = 0");
  // The rightmost gamma pole is u - k; the others lie further left.
  if (a - (u.real() - k) < kContourClearance) {
    throw ContourTooClose("mellinBarnesMoment: contour within 1e-3 of the pole at u - k");
  }

  const double logRho = std::log(sig.lambda * sig.lambda / (4.0 * kPi * kPi * static_cast<double>(n) * x));
  const double T = 2.0 * momentScale(sig, n) * std::sqrt(x) + 10.0 + std::fabs(u.imag());
  auto F = [&](Complex z) -> Complex {
    return std::exp(z * logRho + numerics::logGamma(k - u + z) - numerics::logGamma(u - z)) / z;
  };

  // Absolute panel tolerance from the size of the integrand at the real axis.
  const double tol = 1e-17 * std::max(std::abs(F(Complex(a, 0.0))), 1e-290);

  // i int_{-T}^{T} F(a + i t) dt
  Integrator vertical;
  const int panels = static_cast<int>(std::ceil(2.0 * T));
  const double width = 2.0 * T / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = -T + width * p;
    const double hi = (p + 1 == panels) ? T : -T + width * (p + 1);
    vertical.add([&](double t) { return Complex(0.0, 1.0) * F(Complex(a, t)); }, lo, hi, tol);
  }

  // int_{-inf}^{a} [F(t - iT) - F(t + iT)] dt, panel by panel leftwards.
  Integrator legs;
  auto leg = [&](double t) { return F(Complex(t, -T)) - F(Complex(t, T)); };
  double running = 0.0;
  int quiet = 0;
  std::size_t count = 0;
  for (double hi = a; quiet < 3; hi -= 1.0) {
    if (++count > kMaxLegPanels) throw TailBoundFailed("mellinBarnesMoment: horizontal legs did not decay");
    const double piece = std::abs(legs.add(leg, hi - 1.0, hi, tol));
    running += piece;
    quiet = (count > 3 && piece <= 1e-18 * running) ? quiet + 1 : 0;
  }

  const Complex total = vertical.sum.value() + legs.sum.value();
  ContourResult result;
  result.value = total / Complex(0.0, kTwoPi);
  result.errorEstimate = (vertical.error + legs.error) / kTwoPi;
  result.abscissa = a;
  result.height = T;
  result.includesOriginResidue = a > 0.0;
  return result;
}

Complex besselMomentMellinBarnes(const hecke::HeckeSignature& sig, std::uint64_t n, Complex u, double x) {
  const double k = sig.k;
  int m = 0;
  if (detail::nearMomentPole(k, u, m)) throw PoleProximity("moment pole at u = k + " + std::to_string(m), m);
  const auto r = mellinBarnesMoment(sig, n, u, x, defaultAbscissa(sig, u));
  Complex value = r.value;
  if (r.includesOriginResidue) {
    value -= std::exp(numerics::logGamma(k - u) - numerics::logGamma(u));
  }
  const Complex prefactor = std::exp((k + 1.0 - 2.0 * u) * std::log(momentScale(sig, n)));
  return -value / prefactor;
}

}  // namespace wiltonlab::wilton
