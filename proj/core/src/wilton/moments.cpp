#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <mpfr.h>

#include "wilton/detail.hpp"
#include "wiltonlab/wilton.hpp"

namespace wiltonlab::wilton {
namespace detail {

TailResult alternatingTail(const numerics::Integrand& f, const std::function<double(std::size_t)>& boundary,
                           double directEnd, int levels) {
  numerics::CompensatedSum head;
  double error = 0.0;
  std::size_t j = 0;
  // One unrefined rule on the first panel sets the absolute tolerance.
  const auto probe = numerics::adaptiveGaussKronrod(f, boundary(0), boundary(1), 1e300, 0);
  const double tol = 1e-17 * std::max(std::abs(probe.value), 1e-290);
  auto panel = [&](std::size_t i) {
    const auto r = numerics::adaptiveGaussKronrod(f, boundary(i), boundary(i + 1), tol);
    error += r.errorEstimate;
    return r.value;
  };
  while (boundary(j) < directEnd) {
    head.add(panel(j));
    ++j;
  }
  std::vector<Complex> partial(static_cast<std::size_t>(levels) + 1);
  Complex running = head.value();
  for (auto& s : partial) {
    running += panel(j++);
    s = running;
  }
  // Averaging over one level fewer gives the error estimate.
  auto average = [](std::vector<Complex> s, std::size_t count) {
    for (std::size_t level = 1; level < count; ++level) {
      for (std::size_t i = 0; i + level < count; ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
    }
    return s[0];
  };
  const Complex full = average(partial, partial.size());
  const Complex shorter = average(partial, partial.size() - 1);
  return {full, error + std::abs(full - shorter)};
}

bool nearMomentPole(double k, Complex u, int& m) {
  const double nearest = std::round(u.real() - k);
  if (nearest < 0.0) return false;
  if (std::abs(Complex(nearest + k, 0.0) - u) < kPoleGuard) {
    m = static_cast<int>(nearest);
    return true;
  }
  return false;
}

}  // namespace detail

namespace {

// J_nu(z) / (z/2)^nu, regular at z = 0.
double besselRatio(double nu, double z) {
  if (z < 1e-30) return std::exp(-std::lgamma(nu + 1.0));
  return numerics::besselJ(nu, z) / std::pow(0.5 * z, nu);
}

void checkPole(double k, Complex u) {
  int m = 0;
  if (detail::nearMomentPole(k, u, m)) {
    throw PoleProximity("moment pole at u = k + " + std::to_string(m), m);
  }
}

class Mp {
 public:
  explicit Mp(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  ~Mp() { mpfr_clear(v_); }
  Mp(const Mp&) = delete;
  Mp& operator=(const Mp&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

Complex seriesDouble(double k, Complex u, double X, double x) {
  numerics::CompensatedSum sum;
  const double logX = std::log(X);
  const double logx = std::log(x);
  double maxTerm = 0.0;
  for (int m = 0;; ++m) {
    const double md = m;
    const double logMag = (2 * md + k - 1) * logX + md * logx - std::lgamma(md + 1) - std::lgamma(md + k);
    const double c = ((m % 2) ? -1.0 : 1.0) * std::exp(logMag);
    const Complex term = c / (md + k - u);
    sum.add(term);
    const double mag = std::abs(term);
    maxTerm = std::max(maxTerm, mag);
    if (md > X * X * x && mag < 1e-18 * maxTerm) break;
    if (m > 100000) break;
  }
  return sum.value();
}

Complex seriesMpfr(double k, Complex u, double X, double x) {
  const double digits = std::ceil(2.0 * X / std::log(10.0)) + 20.0;
  const auto bits = static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623) + 8);
  Mp c(bits), step(bits), re(bits), im(bits), denom(bits), d2(bits), tmp(bits), ratio(bits);
  const double ui = u.imag();

  // c_0 = X^{k-1} / Gamma(k)
  mpfr_set_d(tmp.get(), X, MPFR_RNDN);
  mpfr_set_d(step.get(), k - 1.0, MPFR_RNDN);
  mpfr_pow(c.get(), tmp.get(), step.get(), MPFR_RNDN);
  mpfr_set_d(tmp.get(), k, MPFR_RNDN);
  mpfr_gamma(tmp.get(), tmp.get(), MPFR_RNDN);
  mpfr_div(c.get(), c.get(), tmp.get(), MPFR_RNDN);
  // step = X^2 x
  mpfr_set_d(step.get(), X, MPFR_RNDN);
  mpfr_sqr(step.get(), step.get(), MPFR_RNDN);
  mpfr_mul_d(step.get(), step.get(), x, MPFR_RNDN);

  mpfr_set_zero(re.get(), 1);
  mpfr_set_zero(im.get(), 1);
  double maxTerm = 0.0;
  for (long m = 0;; ++m) {
    // 1 / (m + k - u) = ((m + k - Re u) + i Im u) / D
    mpfr_set_d(denom.get(), k - u.real(), MPFR_RNDN);
    mpfr_add_si(denom.get(), denom.get(), m, MPFR_RNDN);
    mpfr_sqr(d2.get(), denom.get(), MPFR_RNDN);
    mpfr_set_d(tmp.get(), ui, MPFR_RNDN);
    mpfr_sqr(tmp.get(), tmp.get(), MPFR_RNDN);
    mpfr_add(d2.get(), d2.get(), tmp.get(), MPFR_RNDN);
    mpfr_div(ratio.get(), c.get(), d2.get(), MPFR_RNDN);

    mpfr_mul(tmp.get(), ratio.get(), denom.get(), MPFR_RNDN);
    mpfr_add(re.get(), re.get(), tmp.get(), MPFR_RNDN);
    mpfr_mul_d(tmp.get(), ratio.get(), ui, MPFR_RNDN);
    mpfr_add(im.get(), im.get(), tmp.get(), MPFR_RNDN);

    const double mag = std::fabs(mpfr_get_d(c.get(), MPFR_RNDN)) / std::sqrt(mpfr_get_d(d2.get(), MPFR_RNDN));
    maxTerm = std::max(maxTerm, mag);
    if (static_cast<double>(m) > X * X * x && mag < 1e-18 * maxTerm) break;

    mpfr_mul(c.get(), c.get(), step.get(), MPFR_RNDN);
    mpfr_neg(c.get(), c.get(), MPFR_RNDN);
    mpfr_div_si(c.get(), c.get(), m + 1, MPFR_RNDN);
    mpfr_set_d(tmp.get(), static_cast<double>(m) + k, MPFR_RNDN);
    mpfr_div(c.get(), c.get(), tmp.get(), MPFR_RNDN);
  }
  return {mpfr_get_d(re.get(), MPFR_RNDN), mpfr_get_d(im.get(), MPFR_RNDN)};
}

}  // namespace

const char* toString(MomentMode mode) noexcept {
  switch (mode) {
    case MomentMode::classical: return "classical";
    case MomentMode::regularized: return "regularized";
    case MomentMode::mellinBarnes: return "mellin-barnes";
  }
  return "?";
}

std::optional<MomentMode> momentModeFromString(const std::string& name) {
  if (name == "classical") return MomentMode::classical;
  if (name == "regularized") return MomentMode::regularized;
  if (name == "mellin-barnes" || name == "mellin_barnes" || name == "mellinBarnes" || name == "mb") {
    return MomentMode::mellinBarnes;
  }
  return std::nullopt;
}

double momentScale(const hecke::HeckeSignature& sig, std::uint64_t n) {
  return kTwoPi * std::sqrt(static_cast<double>(n)) / sig.lambda;
}

numerics::QuadratureResult besselMomentClassical(const hecke::HeckeSignature& sig, std::uint64_t n, Complex u,
                                                 double tol) {
  const double k = sig.k;
  if (n == 0) throw DomainError("besselMomentClassical: n must be positive");
  if (!(u.real() < k)) throw DomainError("besselMomentClassical: requires Re u < k");
  const double c = 2.0 * momentScale(sig, n);
  const double nu = k - 1.0;
  const Complex beta = 2.0 * k - 2.0 * u - 1.0;
  const double b = beta.real();
  const double bImag = beta.imag();
  const double s1 = std::min(1.0, kPi / c);

  // s = w^{1/(b+1)} turns s^b ds into dw / (b+1).
  const double scale = 2.0 * std::pow(0.5 * c, nu) / (b + 1.0);
  auto near = [&](double w) -> Complex {
    const double s = std::pow(w, 1.0 / (b + 1.0));
    const Complex phase = bImag == 0.0 ? Complex(1.0) : std::exp(Complex(0.0, bImag * std::log(s)));
    return scale * phase * besselRatio(nu, c * s);
  };
  auto first = numerics::adaptiveGaussKronrod(near, 0.0, std::pow(s1, b + 1.0), 0.5 * tol);
  if (first.errorEstimate > 0.5 * tol && first.errorEstimate > 1e-13 * std::abs(first.value)) {
    throw ToleranceNotMet("besselMomentClassical: endpoint piece", first.value, first.errorEstimate);
  }
  if (s1 >= 1.0) return first;

  const Complex power = k - 2.0 * u;
  auto far = [&](double s) -> Complex {
    return 2.0 * std::exp(power * std::log(s)) * numerics::besselJ(nu, c * s);
  };
  auto rest = numerics::oscQuadrature(far, s1, 1.0, kPi / c, 0.5 * tol * std::max(1.0, std::abs(first.value)));
  return {first.value + rest.value, first.errorEstimate + rest.errorEstimate,
          first.evaluations + rest.evaluations};
}

Complex regularizedSeries(double k, Complex u, double X, double x, Precision precision) {
  if (!(X > 0.0) || !(x > 0.0)) throw DomainError("regularizedSeries: X and x must be positive");
  checkPole(k, u);
  if (precision == Precision::automatic) {
    // Doubles already lose e^{2X} eps well before the mandatory threshold.
    precision = X > kEagerThreshold ? Precision::compensated : Precision::standard;
  }
  const Complex outside = std::exp((k - u) * std::log(x));
  if (precision == Precision::standard) {
    if (X > kCompensatedThreshold) throw PrecisionLimit("regularizedSeries: plain doubles are not allowed for X > 8");
    return outside * seriesDouble(k, u, X, x);
  }
  if (X > kPrecisionCeiling) {
    throw PrecisionLimit("regularizedSeries: X = " + std::to_string(X) + " exceeds the extended-precision ceiling");
  }
  return outside * seriesMpfr(k, u, X, x);
}

Complex besselMomentRegularized(const hecke::HeckeSignature& sig, std::uint64_t n, Complex u, Precision precision,
                                double x) {
  if (n == 0) throw DomainError("besselMomentRegularized: n must be positive");
  return regularizedSeries(sig.k, u, momentScale(sig, n), x, precision);
}

namespace {

// int_1^inf s^c e^{i sign Z s} ds without the phase e^{i sign Z}, expanded by
// repeated integration by parts: sum_j i sign (-i sign)^j (-c)_j Z^{-1-j}.
// Defines the analytic continuation in c when the integral diverges.
std::pair<Complex, double> oscillatoryTail(Complex c, double Z, double sign) {
  const Complex step(0.0, -sign);
  Complex unit(0.0, sign);
  Complex pochhammer = 1.0;
  double scale = 1.0 / Z;
  numerics::CompensatedSum sum;
  double previous = std::numeric_limits<double>::infinity();
  double last = 0.0;
  for (int j = 0; j < 500; ++j) {
    const Complex term = unit * pochhammer * scale;
    last = std::abs(term);
    if (last > previous) break;
    sum.add(term);
    previous = last;
    if (last <= 1e-20 * std::abs(sum.value())) break;
    pochhammer *= double(j) - c;
    scale /= Z;
    unit *= step;
  }
  return {sum.value(), last};
}

// 2 int_1^inf s^a J_nu(Z s) ds from Hankel's expansion of J_nu. Truncation
// errors below `floor` (absolute) are accepted even when the series stalls.
Complex besselTailAsymptotic(double nu, Complex a, double Z, double floor) {
  const double norm = std::sqrt(2.0 / kPi);
  const Complex i(0.0, 1.0);
  const double phase = Z - 0.5 * nu * kPi - 0.25 * kPi;
  const Complex plus = std::polar(1.0, phase);
  const Complex minus = std::conj(plus);
  const double mu = 4.0 * nu * nu;
  numerics::CompensatedSum total;
  double coefficient = 1.0;
  double previous = std::numeric_limits<double>::infinity();
  Complex im = 1.0;
  for (int m = 0; m < 200; ++m) {
    if (m > 0) {
      coefficient *= (mu - (2.0 * m - 1.0) * (2.0 * m - 1.0)) / (8.0 * m);
      im *= i;
    }
    if (coefficient == 0.0) break;  // half-integer order: the expansion terminates
    const Complex c = a - 0.5 - double(m);
    const auto [up, upLast] = oscillatoryTail(c, Z, 1.0);
    const auto [down, downLast] = oscillatoryTail(c, Z, -1.0);
    const double weight = coefficient * std::pow(Z, -0.5 - m);
    const Complex term = weight * (im * plus * up + std::conj(im) * minus * down);
    const double size = std::abs(term);
    const double inner = std::abs(weight) * (upLast + downLast);
    if (size > previous) {
      if (previous > 1e-15 * std::abs(total.value()) && norm * previous > floor) {
        throw TailBoundFailed("besselMomentLargeArgument: Hankel expansion stalls at Z = " + std::to_string(Z));
      }
      break;
    }
    if (inner > 1e-15 * std::abs(weight) * (std::abs(up) + std::abs(down)) + 1e-300 && norm * inner > floor) {
      throw TailBoundFailed("besselMomentLargeArgument: tail expansion stalls at Z = " + std::to_string(Z));
    }
    total.add(term);
    previous = size;
    if (size <= 1e-18 * std::abs(total.value())) break;
  }
  return norm * total.value();
}

}  // namespace

Complex besselMomentLargeArgument(const hecke::HeckeSignature& sig, std::uint64_t n, Complex u) {
  if (n == 0) throw DomainError("besselMomentLargeArgument: n must be positive");
  const double k = sig.k;
  checkPole(k, u);
  const double X = momentScale(sig, n);
  const Complex weber =
      std::exp((2.0 * u - k - 1.0) * std::log(X) + numerics::logGamma(k - u) - numerics::logGamma(u));
  // weber carries ~1e-15 relative rounding of its own
  return weber - besselTailAsymptotic(k - 1.0, k - 2.0 * u, 2.0 * X, 1e-15 * std::abs(weber));
}

Complex momentDerivativeClosedForm(const hecke::HeckeSignature& sig, std::uint64_t n, Complex u, double x) {
  if (!(x > 0.0)) throw DomainError("momentDerivativeClosedForm: x must be positive");
  const double y = 4.0 * kPi * kPi * static_cast<double>(n) * x / (sig.lambda * sig.lambda);
  const double j = numerics::besselJ(sig.k - 1.0, 4.0 * kPi * std::sqrt(static_cast<double>(n) * x) / sig.lambda);
  return -(1.0 / x) * std::exp(((sig.k + 1.0) / 2.0 - u) * std::log(y)) * j;
}

bool largeArgument(const hecke::HeckeSignature& sig, std::uint64_t n) {
  return momentScale(sig, n) > kPrecisionCeiling;
}

Complex besselMoment(const hecke::HeckeSignature& sig, std::uint64_t n, Complex u, MomentMode mode) {
  switch (mode) {
    case MomentMode::classical:
      if (!(u.real() < sig.k)) throw DomainError("besselMoment: classical mode requires Re u < k");
      if (largeArgument(sig, n)) return besselMomentLargeArgument(sig, n, u);
      return besselMomentClassical(sig, n, u).value;
    case MomentMode::regularized:
      if (largeArgument(sig, n)) return besselMomentLargeArgument(sig, n, u);
      return besselMomentRegularized(sig, n, u);
    case MomentMode::mellinBarnes:
      if (largeArgument(sig, n)) return besselMomentLargeArgument(sig, n, u);
      return besselMomentMellinBarnes(sig, n, u);
  }
  throw DomainError("besselMoment: unknown mode");
}

}  // namespace wiltonlab::wilton
