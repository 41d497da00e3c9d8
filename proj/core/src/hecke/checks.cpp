#include <cmath>

#include "wiltonlab/hecke.hpp"
#include "wiltonlab/numerics.hpp"

namespace wiltonlab::hecke {

namespace {

constexpr double kTailTarget = 1e-16;

struct QSeries {
  Complex value;
  double magnitude;  // sum of |terms|
};

// a_0 + sum_{n <= N} a_n e^{-2 pi n y / lambda}
QSeries qSeries(const arithmetic::CoefficientSeq& seq, double y, double lambda, std::uint64_t cutoff) {
  numerics::CompensatedSum sum;
  double magnitude = std::abs(seq.alpha0());
  sum.add(seq.alpha0());
  for (std::uint64_t n = 1; n <= cutoff; ++n) {
    const Complex a = seq.valueAt(n);
    if (a == Complex(0.0)) continue;
    const Complex t = a * std::exp(-kTwoPi * static_cast<double>(n) * y / lambda);
    sum.add(t);
    magnitude += std::abs(t);
  }
  return {sum.value(), magnitude};
}

// Bound on sum_{n > N} |a_n| e^{-c n} from the growth metadata.
double qTail(const arithmetic::CoefficientSeq& seq, double c, std::uint64_t cutoff) {
  const double g = seq.growthExponent();
  const double next = static_cast<double>(cutoff + 1);
  const double ratio = std::exp(-c) * std::pow(1.0 + 1.0 / next, g);
  if (ratio >= 1.0) return INFINITY;
  return seq.growthConstant() * std::pow(next, g) * std::exp(-c * next) / (1.0 - ratio);
}

// First nonzero term of the q-series, as the size reference for the tail.
double leadingSize(const arithmetic::CoefficientSeq& seq, double c) {
  if (seq.alpha0() != Complex(0.0)) return std::abs(seq.alpha0());
  for (std::uint64_t n = 1; n < 1000; ++n) {
    const Complex a = seq.valueAt(n);
    if (a != Complex(0.0)) return std::abs(a) * std::exp(-c * static_cast<double>(n));
  }
  return 1.0;
}

bool tailsOk(const HeckeSignature& sig, double y, std::uint64_t cutoff) {
  const double cA = kTwoPi * y / sig.lambda;
  const double cB = kTwoPi / (y * sig.lambda);
  return qTail(sig.alphaSeq, cA, cutoff) <= kTailTarget * leadingSize(sig.alphaSeq, cA) &&
         qTail(sig.betaSeq, cB, cutoff) <= kTailTarget * leadingSize(sig.betaSeq, cB);
}

}  // namespace

double functionalEquationResidual(const HeckeSignature& sig, Complex s) {
  const lfun::LValue phi = completedTransform(sig, Side::phi, s);
  const lfun::LValue psi = completedTransform(sig, Side::psi, sig.k - s);
  return std::abs(phi.value - sig.gamma * psi.value) / (1.0 + std::abs(phi.value));
}

std::uint64_t modularCutoff(const HeckeSignature& sig, double y) {
  if (!(y > 0.0)) throw DomainError("modularCutoff: y must be positive");
  std::uint64_t n = 8;
  while (!tailsOk(sig, y, n)) {
    if (n > 1000000) throw TailTooLarge("modularCutoff: q-expansion tail does not decay");
    n += n / 2;
  }
  // Tighten to the least passing cutoff.
  std::uint64_t lo = n * 2 / 3;
  while (lo + 1 < n) {
    const std::uint64_t mid = lo + (n - lo) / 2;
    if (tailsOk(sig, y, mid)) n = mid;
    else lo = mid;
  }
  return n;
}

double modularRelationResidual(const HeckeSignature& sig, double y, std::uint64_t cutoff) {
  if (!(y > 0.0)) throw DomainError("modularRelationResidual: y must be positive");
  if (!tailsOk(sig, y, cutoff)) {
    throw TailTooLarge("modularRelationResidual: cutoff " + std::to_string(cutoff) +
                       " leaves a q-expansion tail above 1e-16 of the leading term");
  }
  const QSeries lhs = qSeries(sig.alphaSeq, y, sig.lambda, cutoff);
  const QSeries dual = qSeries(sig.betaSeq, 1.0 / y, sig.lambda, cutoff);
  const Complex factor = sig.gamma * std::pow(y, -sig.k);
  const Complex rhs = factor * dual.value;
  // Relative to the larger side; when both sides cancel to nothing (E_6 at
  // y = 1) relative to the absolute term mass instead.
  const double mass = lhs.magnitude + std::abs(factor) * dual.magnitude;
  double scale = std::max(std::abs(lhs.value), std::abs(rhs));
  if (scale < 1e-8 * mass) scale = mass;
  return std::abs(lhs.value - rhs) / scale;
}

}  // namespace wiltonlab::hecke
