#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "wiltonlab/numerics.hpp"
#include "wiltonlab/wilton.hpp"

namespace wiltonlab::wilton::detail {

struct TailResult {
  Complex value;
  double errorEstimate = 0.0;
};

inline constexpr int kAveragingLevels = 20;

/// Integral of f over [boundary(0), inf). Panels [boundary(j), boundary(j+1)]
/// are integrated to roundoff; those starting below `directEnd` are added
/// plainly, the rest (asymptotically alternating) through repeated averaging
/// of kAveragingLevels + 1 further partial sums.
TailResult alternatingTail(const numerics::Integrand& f, const std::function<double(std::size_t)>& boundary,
                           double directEnd, int levels = kAveragingLevels);

/// True when |m + k - u| < kPoleGuard for some m >= 0; sets m.
bool nearMomentPole(double k, Complex u, int& m);

/// Fills the series, residuals, diagnostics and verdict of `report` from the
/// per-index terms of both series (2N of each; the first N give the
/// reported values, all 2N the stability check). lhs and residuePart must
/// already be set.
void assemble(IdentityReport& report, std::span<const Complex> alpha, std::span<const Complex> beta, double tol);

}  // namespace wiltonlab::wilton::detail
