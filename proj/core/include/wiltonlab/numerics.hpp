#pragma once

// Scalar special functions, quadrature and deterministic summation.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "wiltonlab/errors.hpp"
#include "wiltonlab/types.hpp"

namespace wiltonlab::numerics {

// ---------------------------------------------------------------------------
// Gamma
// ---------------------------------------------------------------------------

/// Principal-ish log Gamma for complex arguments (imaginary part is correct
/// modulo 2*pi, which is all exp() needs). Throws PoleAt on non-positive integers.
Complex logGamma(Complex s);

/// Gamma(s), relative accuracy about 1e-13 for |s| <= 50.
Complex gammaFn(Complex s);

/// 1/Gamma(s); entire, returns 0 at the poles of Gamma.
Complex reciprocalGamma(Complex s);

/// log(sin(pi*w)) modulo 2*pi*i, stable for large |Im w|.
Complex logSinPi(Complex w);

// ---------------------------------------------------------------------------
// Bessel J
// ---------------------------------------------------------------------------

/// J_order(z) for order >= -1/2 and z >= 0.
double besselJ(double order, double z);

/// Argument above which besselJ leaves the power series for the
/// recurrence/asymptotic branch.
double besselSwitchPoint(double order) noexcept;

// ---------------------------------------------------------------------------
// Bernoulli numbers
// ---------------------------------------------------------------------------

/// Exact B_k for even k in [2, 60]. Throws OutOfRange otherwise.
mpq_class bernoulli(int k);

/// B_k as a double, read from the shared table that gamma and the zeta
/// engines use.
double bernoulliDouble(int k);

namespace testing {
/// Overwrites the cached double value of B_k. Fault injection for self-tests.
void corruptBernoulli(int k, double value);
void restoreBernoulli();
}  // namespace testing

// ---------------------------------------------------------------------------
// Summation
// ---------------------------------------------------------------------------

/// Compensated (Neumaier) accumulator. The result depends only on the order
/// in which terms are added.
class CompensatedSum {
 public:
  void add(Complex term) noexcept;
  void add(double term) noexcept { add(Complex(term, 0.0)); }
  Complex value() const noexcept;
  std::size_t count() const noexcept { return count_; }

 private:
  double reSum_ = 0.0, reComp_ = 0.0;
  double imSum_ = 0.0, imComp_ = 0.0;
  std::size_t count_ = 0;
};

Complex compensatedSum(std::span<const Complex> terms) noexcept;

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

struct QuadratureResult {
  Complex value;
  double errorEstimate = 0.0;
  std::size_t evaluations = 0;
};

using Integrand = std::function<Complex(double)>;

/// Adaptive nested Gauss(15)/Kronrod(31) quadrature on [lo, hi].
/// Returns the best result; `tol` is an absolute target.
QuadratureResult adaptiveGaussKronrod(const Integrand& f, double lo, double hi, double tol,
                                      int maxDepth = 48);

/// Oscillatory quadrature: [lo, hi] is cut into panels one oscillation
/// half-period long (at most 2^15 panels), each panel is integrated
/// adaptively and the panels are summed in order with compensation.
/// Throws ToleranceNotMet when the total error estimate exceeds `tol`
/// (beyond the floating-point floor of the result).
QuadratureResult oscQuadrature(const Integrand& f, double lo, double hi, double halfPeriodHint,
                               double tol);

inline constexpr std::size_t kMaxPanels = std::size_t{1} << 15;

}  // namespace wiltonlab::numerics
