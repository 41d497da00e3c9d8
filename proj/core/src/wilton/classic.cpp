#include <cmath>
#include <vector>

#include "wilton/detail.hpp"
#include "wiltonlab/arithmetic.hpp"
#include "wiltonlab/lfun.hpp"
#include "wiltonlab/parallel.hpp"
#include "wiltonlab/wilton.hpp"

namespace wiltonlab::wilton {
namespace {

constexpr double kExclusionGuard = 1e-8;
constexpr double kAsymptoticStart = 40.0 * kPi;

void checkClassicDomain(Complex u, Complex v) {
  if (!(u.real() > -1.0) || !(v.real() > -1.0)) throw DomainError("wilton-classic: requires Re u, Re v > -1");
  if (!((u + v).real() > 0.0)) throw DomainError("wilton-classic: requires Re(u + v) > 0");
  if (std::abs(u - 1.0) < kExclusionGuard || std::abs(v - 1.0) < kExclusionGuard) {
    throw DomainError("wilton-classic: u, v must differ from 1");
  }
  if (std::abs(u + v - 2.0) < kExclusionGuard) throw DomainError("wilton-classic: u + v must differ from 2");
}

}  // namespace

Complex wiltonTailIntegral(Complex u, double A) {
  if (!(u.real() > -1.0)) throw DomainError("wiltonTailIntegral: requires Re u > -1");
  if (!(A > 0.0)) throw DomainError("wiltonTailIntegral: requires A > 0");
  const Complex power = -(u + 1.0);
  if (A >= kAsymptoticStart && std::fabs(std::remainder(A, kTwoPi)) < 1e-9 * A) {
    // sum over even j of (-1)^{j/2} (u+1)_j A^{-u-1-j}; the smallest term is about e^{-A}.
    const Complex s = u + 1.0;
    const double inverseSquare = 1.0 / (A * A);
    Complex term = std::exp(power * std::log(A));
    numerics::CompensatedSum sum;
    sum.add(term);
    for (int j = 0; j < 400; j += 2) {
      term *= -(s + double(j)) * (s + double(j + 1)) * inverseSquare;
      sum.add(term);
      if (std::abs(term) <= 1e-18 * std::abs(sum.value())) return sum.value();
    }
  }
  auto f = [&](double t) { return std::exp(power * std::log(t)) * std::sin(t); };
  auto boundary = [A](std::size_t j) { return A + kPi * static_cast<double>(j); };
  return detail::alternatingTail(f, boundary, std::max(A, 40.0 * kPi)).value;
}

IdentityReport evaluateWiltonClassic(Complex u, Complex v, std::uint64_t N, Strategy strategy, double tol) {
  checkClassicDomain(u, v);
  if (N < 16) throw DomainError("wilton-classic: N must be at least 16");

  IdentityReport report;
  report.instance = "wilton-classic";
  report.u = u;
  report.v = v;
  report.uTheorem = u;
  report.vTheorem = v;
  report.mode = MomentMode::classical;
  report.strategy = strategy;
  report.N = N;
  report.lhs = lfun::riemannZeta(u) * lfun::riemannZeta(v) -
               (1.0 / (u - 1.0) + 1.0 / (v - 1.0)) * lfun::riemannZeta(u + v - 1.0);
  report.residuePart = 0.0;

  // The u-series plays the role of the theorem's beta series.
  const std::size_t count = 2 * N;
  std::vector<Complex> alpha(count), beta(count);
  const Complex z = 1.0 - u - v;
  const Complex cu = 2.0 * std::exp((u - 1.0) * std::log(kTwoPi)) * u;
  const Complex cv = 2.0 * std::exp((v - 1.0) * std::log(kTwoPi)) * v;
  parallelFor(count, [&](std::size_t i) {
    const std::uint64_t n = i + 1;
    const double logn = std::log(static_cast<double>(n));
    const double A = kTwoPi * static_cast<double>(n);
    const Complex sigma = arithmetic::divisorSigma(z, n);
    beta[i] = cu * sigma * std::exp((u - 1.0) * logn) * wiltonTailIntegral(u, A);
    alpha[i] = cv * sigma * std::exp((v - 1.0) * logn) * wiltonTailIntegral(v, A);
  });
  detail::assemble(report, alpha, beta, tol);
  return report;
}

}  // namespace wiltonlab::wilton
