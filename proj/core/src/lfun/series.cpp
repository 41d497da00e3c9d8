#include <cmath>
#include <limits>

#include "wiltonlab/lfun.hpp"
#include "wiltonlab/numerics.hpp"

namespace wiltonlab::lfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Smallest N in [lo, cap] (up to a factor of two search) with bound(N) <= tol,
// or nullopt when even the cap fails.
template <class Bound>
std::optional<std::uint64_t> chooseCutoff(Bound bound, double tol, std::uint64_t lo, std::uint64_t cap) {
  std::uint64_t hi = lo;
  while (bound(static_cast<double>(hi)) > tol) {
    if (hi >= cap) return std::nullopt;
    hi = std::min(cap, hi * 2);
  }
  std::uint64_t a = hi / 2 < lo ? lo : hi / 2;
  if (bound(static_cast<double>(a)) <= tol) return a;
  while (hi - a > 1) {
    const std::uint64_t mid = a + (hi - a) / 2;
    if (bound(static_cast<double>(mid)) <= tol) hi = mid;
    else a = mid;
  }
  return hi;
}

}  // namespace

double divisorTailBound(double p, double cutoff) {
  if (!(p > 1.0)) return std::numeric_limits<double>::infinity();
  // sum_{n<=x} d(n) <= x (log x + 1), then partial summation.
  const double ln = std::log(cutoff);
  return p * std::pow(cutoff, 1.0 - p) * ((ln + 1.0) / (p - 1.0) + 1.0 / ((p - 1.0) * (p - 1.0)));
}

LValue dedekindZetaCoefficients(const arithmetic::ImagQuadField& field, Complex s, std::uint64_t cutoff) {
  if (cutoff == 0 || cutoff > 1000000) throw OutOfRange("dedekindZetaCoefficients: cutoff must be in [1, 10^6]");
  if (!(s.real() > 1.0)) throw DomainError("dedekindZetaCoefficients: needs Re s > 1");
  std::vector<std::int64_t> v(cutoff + 1, 0);
  for (std::uint64_t d = 1; d <= cutoff; ++d) {
    const int c = arithmetic::kronecker(field.discriminant, static_cast<std::int64_t>(d));
    if (c == 0) continue;
    for (std::uint64_t n = d; n <= cutoff; n += d) v[n] += c;
  }
  numerics::CompensatedSum sum;
  double absSum = 0.0;
  for (std::uint64_t n = 1; n <= cutoff; ++n) {
    if (v[n] == 0) continue;
    const Complex t = static_cast<double>(v[n]) * arithmetic::powInt(n, -s);
    sum.add(t);
    absSum += std::abs(t);
  }
  LValue out;
  out.value = sum.value();
  out.errorEstimate = divisorTailBound(s.real(), static_cast<double>(cutoff)) + 8.0 * kEps * absSum;
  out.terms = cutoff;
  out.method = "coefficient-sum";
  return out;
}

LValue epsteinZDirect(const arithmetic::QuadraticForm& q, Complex s, double tol) {
  const int m = q.dimension();
  const double sigma = s.real();
  if (!(sigma > m / 2.0 + 0.25)) throw DomainError("epsteinZ: direct sum needs Re s > m/2 + 1/4");
  // #{v : Q(v) <= x} <= omega_m D^{-1/2} (sqrt x + r0)^m.
  const double omega = std::pow(kPi, m / 2.0) / std::tgamma(m / 2.0 + 1.0);
  double absA = 0.0;
  for (std::int64_t g : q.doubledGram()) absA += std::abs(static_cast<double>(g)) / 2.0;
  const double r0 = 0.5 * std::sqrt(absA);
  const double scale = omega / std::sqrt(q.discriminantDouble());
  auto tail = [&](double n) {
    return sigma * scale * std::pow(1.0 + r0 / std::sqrt(n), m) * std::pow(n, m / 2.0 - sigma) /
           (sigma - m / 2.0);
  };
  const std::uint64_t cap = arithmetic::repCountBound(q);
  const auto chosen = chooseCutoff(tail, 0.5 * tol, 16, cap);
  const std::uint64_t cutoff = chosen.value_or(cap);

  const auto reps = arithmetic::repCountTable(q, static_cast<std::size_t>(cutoff + 1));
  numerics::CompensatedSum sum;
  double absSum = 0.0;
  for (std::uint64_t n = 1; n <= cutoff; ++n) {
    if (reps[n] == 0) continue;
    const Complex t = static_cast<double>(reps[n]) * arithmetic::powInt(n, -s);
    sum.add(t);
    absSum += std::abs(t);
  }
  const double err = tail(static_cast<double>(cutoff)) + 8.0 * kEps * absSum;
  if (!chosen || err > tol) {
    throw ToleranceNotMet("epsteinZ: lattice sum needs a cutoff beyond 10^6/m", sum.value(), err);
  }
  LValue out;
  out.value = sum.value();
  out.errorEstimate = err;
  out.terms = cutoff;
  out.method = "lattice-sum";
  return out;
}

LValue ramanujanL(Complex s, double tol) {
  const double p = s.real() - 5.5;
  if (!(s.real() >= 7.0)) throw DomainError("ramanujanL: needs Re s >= 7");
  // |tau(n)| <= d(n) n^{11/2}
  auto tail = [&](double n) { return divisorTailBound(p, n); };
  const std::uint64_t cap = arithmetic::kTauBound;
  const auto chosen = chooseCutoff(tail, 0.5 * tol, 16, cap);
  const std::uint64_t cutoff = chosen.value_or(cap);
  numerics::CompensatedSum sum;
  double absSum = 0.0;
  for (std::uint64_t n = 1; n <= cutoff; ++n) {
    const Complex t = static_cast<double>(arithmetic::ramanujanTau(n)) * arithmetic::powInt(n, -s);
    sum.add(t);
    absSum += std::abs(t);
  }
  const double err = tail(static_cast<double>(cutoff)) + 8.0 * kEps * absSum;
  if (!chosen || err > tol) throw ToleranceNotMet("ramanujanL: cutoff would exceed 10^5", sum.value(), err);
  LValue out;
  out.value = sum.value();
  out.errorEstimate = err;
  out.terms = cutoff;
  out.method = "coefficient-sum";
  return out;
}

LValue truncatedDirichlet(const arithmetic::CoefficientSeq& seq, Complex s, std::uint64_t cutoff) {
  if (cutoff == 0) throw OutOfRange("truncatedDirichlet: cutoff must be positive");
  numerics::CompensatedSum sum;
  double absSum = 0.0;
  for (std::uint64_t n = 1; n <= cutoff; ++n) {
    const Complex a = seq.valueAt(n);
    if (a == Complex(0.0)) continue;
    const Complex t = a * arithmetic::powInt(n, -s);
    sum.add(t);
    absSum += std::abs(t);
  }
  const double excess = s.real() - seq.growthExponent() - 1.0;
  const double tail = excess > 0.0
                          ? seq.growthConstant() * std::pow(static_cast<double>(cutoff), -excess) / excess
                          : std::numeric_limits<double>::infinity();
  LValue out;
  out.value = sum.value();
  out.errorEstimate = tail + 8.0 * kEps * absSum;
  out.terms = cutoff;
  out.method = "partial-sum";
  return out;
}

LValue epsteinZ(const arithmetic::QuadraticForm& q, Complex s, double tol) {
  try {
    return epsteinZDirect(q, s, tol);
  } catch (const ToleranceNotMet& direct) {
    if (!q.inverseIsIntegral()) throw;
    // Too slow to converge directly: use the theta transformation instead.
    const ThetaPair pair{2.0, q.dimension() / 2.0, 1.0 / std::sqrt(q.discriminantDouble()),
                         arithmetic::CoefficientSeq::repCount(q),
                         arithmetic::CoefficientSeq::repCount(q.inverse())};
    LValue out = continuedSeries(pair, s);
    if (out.errorEstimate > tol && out.errorEstimate > direct.estimate()) throw;
    return out;
  }
}

}  // namespace wiltonlab::lfun
