#include <cmath>
#include <limits>

#include "wiltonlab/lfun.hpp"
#include "wiltonlab/numerics.hpp"

namespace wiltonlab::lfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPoleGuard = 1e-10;

// Euler-Maclaurin for sum_{n>=0} (n+a)^{-s} without the pole term
// (N+a)^{1-s}/(s-1).
struct EmParts {
  Complex regular;
  Complex pole;       // (N+a)^{1-s}/(s-1), only meaningful away from s = 1
  double logX;        // log(N+a)
  double absSum;      // sum of magnitudes, for rounding estimates
  double truncation;  // size of the first omitted correction
};

EmParts eulerMaclaurin(Complex s, double a, int cutoff) {
  numerics::CompensatedSum sum;
  double absSum = 0.0;
  for (int n = 0; n < cutoff; ++n) {
    const Complex t = std::exp(-s * std::log(n + a));
    sum.add(t);
    absSum += std::abs(t);
  }
  const double x = cutoff + a;
  const double lx = std::log(x);
  const Complex xs = std::exp(-s * lx);  // x^{-s}
  sum.add(0.5 * xs);
  absSum += 0.5 * std::abs(xs);

  // T_j = B_{2j}/(2j)! (s)_{2j-1} x^{-s-2j+1}
  Complex rising = s;  // (s)_{2j-1}
  Complex power = xs / x;
  double factorial = 2.0;
  double next = 0.0;
  for (int j = 1; j <= kEulerMaclaurinOrder + 1; ++j) {
    const Complex t = numerics::bernoulliDouble(2 * j) / factorial * rising * power;
    if (j <= kEulerMaclaurinOrder) {
      sum.add(t);
      absSum += std::abs(t);
    } else {
      // Remainder is bounded by the first omitted term times |s+2p+1|/(sigma+2p+1).
      const double shifted = s.real() + 2 * kEulerMaclaurinOrder + 1;
      next = std::abs(t) * std::max(1.0, std::abs(s + 2.0 * kEulerMaclaurinOrder + 1.0) /
                                             std::max(1.0, std::abs(shifted)));
    }
    rising *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
    power /= x * x;
    factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
  }
  EmParts out;
  out.regular = sum.value();
  out.logX = lx;
  out.pole = std::abs(s - 1.0) < kPoleGuard ? Complex(0.0) : xs * x / (s - 1.0);
  out.absSum = absSum + std::abs(out.pole);
  out.truncation = next;
  return out;
}

// (e^z - 1)/z
Complex expm1c(Complex z) {
  if (std::abs(z) < 0.5) {
    Complex term = 1.0, sum = 1.0;
    for (int n = 2; n < 30; ++n) {
      term *= z / static_cast<double>(n);
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  return (std::exp(z) - 1.0) / z;
}

void checkPole(Complex s, const char* who) {
  if (std::abs(s - 1.0) < kPoleGuard) throw PoleAt(std::string(who) + ": pole at s = 1", 1.0);
}

}  // namespace

LValue hurwitzZetaEval(Complex s, double a, int cutoff) {
  checkPole(s, "hurwitzZeta");
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitzZeta: a must lie in (0, 1]");
  const EmParts p = eulerMaclaurin(s, a, cutoff);
  LValue out;
  out.value = p.regular + p.pole;
  out.errorEstimate = p.truncation + 8.0 * kEps * p.absSum;
  out.terms = static_cast<std::uint64_t>(cutoff);
  out.method = "euler-maclaurin";
  return out;
}

LValue riemannZetaEval(Complex s, int cutoff) {
  checkPole(s, "riemannZeta");
  if (s.real() >= 0.0) return hurwitzZetaEval(s, 1.0, cutoff);
  // Left half-plane: the partial sums grow like N^{1-sigma} and cancel, so
  // reflect: zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s) zeta(1 - s).
  const LValue mirror = hurwitzZetaEval(1.0 - s, 1.0, cutoff);
  const Complex factor = std::exp(s * std::log(2.0) + (s - 1.0) * std::log(kPi) + numerics::logSinPi(0.5 * s) +
                                  numerics::logGamma(1.0 - s));
  LValue out = mirror;
  out.value = factor * mirror.value;
  out.errorEstimate = std::abs(factor) * mirror.errorEstimate + 64.0 * kEps * std::abs(out.value);
  out.method = "euler-maclaurin-reflected";
  return out;
}

Complex hurwitzZeta(Complex s, double a) { return hurwitzZetaEval(s, a).value; }
Complex riemannZeta(Complex s) { return riemannZetaEval(s).value; }

namespace {

LValue dirichletDirect(const arithmetic::DirichletCharacter& chi, Complex s);

// L(s, chi) = eps pi^{s-1/2} q^{1/2-s} Gamma((1+a-s)/2) / Gamma((s+a)/2) L(1-s, conj chi),
// eps = tau(chi) / (i^a sqrt q), a = 0 for even and 1 for odd chi (primitive only).
LValue dirichletReflected(const arithmetic::DirichletCharacter& chi, Complex s) {
  const double q = chi.modulus();
  const double a = chi.parity() == arithmetic::Parity::odd ? 1.0 : 0.0;
  Complex eps = arithmetic::gaussSum(chi) / std::sqrt(q);
  if (a == 1.0) eps /= Complex(0.0, 1.0);
  const LValue mirror = dirichletDirect(chi.conjugate(), 1.0 - s);
  const Complex factor = eps * std::exp((s - 0.5) * std::log(kPi) + (0.5 - s) * std::log(q) +
                                        numerics::logGamma(0.5 * (1.0 + a - s))) *
                         numerics::reciprocalGamma(0.5 * (s + a));
  LValue out = mirror;
  out.value = factor * mirror.value;
  out.errorEstimate = std::abs(factor) * mirror.errorEstimate + 64.0 * kEps * std::abs(out.value);
  out.method = "hurwitz-decomposition-reflected";
  return out;
}

}  // namespace

LValue dirichletLEval(const arithmetic::DirichletCharacter& chi, Complex s) {
  if (chi.isPrincipal()) checkPole(s, "dirichletL");
  if (s.real() < 0.0 && chi.isPrimitive() && !chi.isPrincipal()) return dirichletReflected(chi, s);
  return dirichletDirect(chi, s);
}

namespace {

LValue dirichletDirect(const arithmetic::DirichletCharacter& chi, Complex s) {
  const int q = chi.modulus();
  numerics::CompensatedSum sum;
  double err = 0.0, absSum = 0.0;
  for (int a = 1; a <= q; ++a) {
    const Complex c = chi(a);
    if (c == Complex(0.0)) continue;
    const EmParts p = eulerMaclaurin(s, static_cast<double>(a) / q, kEulerMaclaurinCutoff);
    Complex term = p.regular;
    if (chi.isPrincipal()) {
      term += p.pole;
    } else {
      // sum chi(a) = 0 lets the 1/(s-1) parts cancel exactly; what is left is
      // ((N+a/q)^{1-s} - 1)/(s-1) = -log(N+a/q) expm1c((1-s) log(N+a/q)).
      term += -p.logX * expm1c((1.0 - s) * p.logX);
    }
    sum.add(c * term);
    err += p.truncation;
    absSum += p.absSum;
  }
  const Complex scale = std::exp(-s * std::log(static_cast<double>(q)));
  LValue out;
  out.value = scale * sum.value();
  out.errorEstimate = std::abs(scale) * (err + 8.0 * kEps * absSum);
  out.terms = kEulerMaclaurinCutoff;
  out.method = "hurwitz-decomposition";
  return out;
}

}  // namespace

Complex dirichletL(const arithmetic::DirichletCharacter& chi, Complex s) { return dirichletLEval(chi, s).value; }

LValue dedekindZetaEval(const arithmetic::ImagQuadField& field, Complex s) {
  checkPole(s, "dedekindZeta");
  const LValue z = riemannZetaEval(s);
  const LValue l = dirichletLEval(arithmetic::kroneckerCharacter(field.discriminant), s);
  LValue out;
  out.value = z.value * l.value;
  out.errorEstimate = std::abs(z.value) * l.errorEstimate + std::abs(l.value) * z.errorEstimate +
                      z.errorEstimate * l.errorEstimate;
  out.terms = z.terms;
  out.method = "zeta-times-L";
  return out;
}

LValue eisensteinL(int k, Complex s) {
  const double scale = mpq_class(mpq_class(-2 * k) / numerics::bernoulli(k)).get_d();
  const Complex shifted = s - static_cast<double>(k - 1);
  if (std::abs(s - 1.0) < kPoleGuard) throw PoleAt("eisensteinL: pole at s = 1", 1.0);
  if (std::abs(shifted - 1.0) < kPoleGuard) throw PoleAt("eisensteinL: pole at s = k", static_cast<double>(k));
  const LValue a = riemannZetaEval(s);
  const LValue b = riemannZetaEval(shifted);
  LValue out;
  out.value = scale * a.value * b.value;
  out.errorEstimate = std::abs(scale) * (std::abs(a.value) * b.errorEstimate + std::abs(b.value) * a.errorEstimate +
                                         a.errorEstimate * b.errorEstimate);
  out.terms = a.terms;
  out.method = "zeta-product";
  return out;
}

}  // namespace wiltonlab::lfun
