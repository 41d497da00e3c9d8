#include <cmath>
#include <cstring>
#include <vector>

#include "checks.hpp"
#include "doctest.h"
#include "oracle_values.hpp"
#include "support.hpp"
#include "wiltonlab/hecke.hpp"
#include "wiltonlab/numerics.hpp"
#include "wiltonlab/wilton.hpp"

using namespace wiltonlab;
using namespace wiltonlab::wilton;
using hecke::findInstance;
using support::relErr;
namespace ov = oracle_values;

namespace {

hecke::HeckeSignature withShape(double lambda, double k) {
  auto sig = findInstance("theta_riemann").signature;
  sig.lambda = lambda;
  sig.k = k;
  return sig;
}

double simpson(auto f, double lo, double hi, int panels) {
  const double h = (hi - lo) / panels;
  double sum = f(lo) + f(hi);
  for (int i = 1; i < panels; ++i) sum += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

bool sameBits(const IdentityReport& a, const IdentityReport& b) {
  auto eq = [](Complex x, Complex y) { return std::memcmp(&x, &y, sizeof x) == 0; };
  auto eqd = [](double x, double y) { return std::memcmp(&x, &y, sizeof x) == 0; };
  return eq(a.lhs, b.lhs) && eq(a.residuePart, b.residuePart) && eq(a.seriesAlpha, b.seriesAlpha) &&
         eq(a.seriesBeta, b.seriesBeta) && eq(a.rhs, b.rhs) && eqd(a.residual, b.residual) &&
         eqd(a.residualDoubled, b.residualDoubled) &&
         eqd(a.tailDiagnostics.partialSumOscillation, b.tailDiagnostics.partialSumOscillation) &&
         a.convergenceVerdict == b.convergenceVerdict && a.failures == b.failures;
}

const std::vector<std::string> kMomentInstances{"theta_riemann", "dirichlet_even_q5", "dirichlet_odd_q4",
                                                "delta_ramanujan", "eisenstein_4", "epstein_sum4", "dedekind_q3"};

}  // namespace

TEST_CASE("besselMomentClassical: examples") {
  const auto sig = withShape(4.0 * kPi, 2.0);
  const auto moment = besselMomentClassical(sig, 1, 0.0);
  CHECK(std::abs(moment.value - 2.0 * numerics::besselJ(2.0, 1.0)) < 1e-13);
  CHECK(moment.value == besselMomentClassical(withShape(8.0 * kPi, 2.0), 4, 0.0).value);

  const double reference =
      (2.0 / kPi) * simpson([](double w) { return 2.0 * std::cos(kTwoPi * w * w); }, 0.0, 1.0, 400000);
  CHECK(std::abs(besselMomentClassical(withShape(2.0, 0.5), 1, 0.25).value - reference) < 1e-10);

  CHECK_THROWS_AS(besselMomentClassical(withShape(2.0, 0.5), 1, 0.5), DomainError);
  CHECK_THROWS_AS(besselMomentClassical(withShape(2.0, 0.5), 1, 0.9), DomainError);
}

TEST_CASE("besselMomentClassical: oracle values") {
  CHECK(relErr(besselMomentClassical(withShape(2.0, 0.5), 3, 0.2).value, ov::kMomentTheta_n3_u0p2) < 1e-10);
  CHECK(relErr(besselMomentClassical(withShape(1.0, 12.0), 2, 11.5).value, ov::kMomentDelta_n2_u11p5) < 1e-10);
  CHECK(relErr(besselMomentClassical(withShape(8.0, 1.5), 5, 1.25).value, ov::kMomentOdd4_n5_u1p25) < 1e-10);
}

TEST_CASE("regularizedSeries: examples") {
  CHECK_THROWS_AS(regularizedSeries(2.0, 3.0, 0.7), PoleProximity);
  try {
    regularizedSeries(0.5, 1.5 + 1e-9, 0.7);
    FAIL("expected PoleProximity");
  } catch (const PoleProximity& e) {
    CHECK(e.index() == 1);
  }
  const double hand = 0.1 - 0.001 / 4.0 + 1e-5 / 36.0 - 1e-7 / 576.0;
  CHECK(std::abs(regularizedSeries(2.0, 1.0, 0.1).real() - hand) < 1e-12);
  const auto theta = findInstance("theta_riemann").signature;
  CHECK(std::abs(besselMomentRegularized(theta, 1, -0.25) - besselMomentClassical(theta, 1, -0.25).value) < 1e-9);
  CHECK_THROWS_AS(regularizedSeries(0.5, 0.3, 9.0, 1.0, Precision::standard), PrecisionLimit);
}

TEST_CASE("besselMomentRegularized: oracle values past the classical strip") {
  const auto theta = findInstance("theta_riemann").signature;
  CHECK(relErr(besselMomentRegularized(theta, 1, 0.75), ov::kMomentTheta_n1_u0p75) < 1e-12);
  CHECK(relErr(besselMomentRegularized(theta, 4, {0.8, 0.3}), ov::kMomentTheta_n4_u0p8_0p3i) < 1e-11);
  CHECK(relErr(besselMomentRegularized(findInstance("delta_ramanujan").signature, 1, 12.5),
               ov::kMomentDelta_n1_u12p5) < 1e-12);
}

TEST_CASE("large-argument moments") {
  const auto theta = findInstance("theta_riemann").signature;
  CHECK(largeArgument(theta, 200));
  CHECK_FALSE(largeArgument(theta, 100));
  for (const auto mode : {MomentMode::classical, MomentMode::regularized, MomentMode::mellinBarnes}) {
    CHECK(relErr(besselMoment(theta, 200, 0.3, mode), ov::kMomentTheta_n200_u0p3) < 1e-10);
  }
  CHECK(relErr(besselMoment(theta, 200, 0.75, MomentMode::regularized), ov::kMomentTheta_n200_u0p75) < 1e-10);
  const auto& delta = findInstance("delta_ramanujan").signature;
  CHECK(largeArgument(delta, 41));
  CHECK(relErr(besselMoment(delta, 41, 14.5, MomentMode::regularized), ov::kMomentDelta_n41_u14p5) < 1e-12);
  CHECK(relErr(besselMoment(delta, 160, 14.5, MomentMode::mellinBarnes), ov::kMomentDelta_n160_u14p5) < 1e-12);
  CHECK(relErr(besselMoment(delta, 160, 11.5, MomentMode::classical), ov::kMomentDelta_n160_u11p5) < 1e-12);
  // both sides of the switch: extended precision and the asymptotic route at the same n
  for (const std::uint64_t n : {150, 162}) {
    for (const Complex u : {Complex(0.3), Complex(0.75), Complex(1.2, 0.5)}) {
      CAPTURE(n);
      CAPTURE(u);
      CHECK(relErr(besselMomentLargeArgument(theta, n, u), besselMomentRegularized(theta, n, u)) < 1e-11);
    }
  }
}

TEST_CASE("mode agreement in the classical strip") {
  for (const auto& name : kMomentInstances) {
    const auto& sig = findInstance(name).signature;
    for (const std::uint64_t n : {1, 2, 5, 20}) {
      for (const double offset : {0.75, 0.25}) {
        const Complex u = sig.k - offset;
        const Complex classical = besselMoment(sig, n, u, MomentMode::classical);
        CAPTURE(name);
        CAPTURE(n);
        CAPTURE(u);
        CHECK(std::abs(classical - besselMoment(sig, n, u, MomentMode::regularized)) <=
              1e-9 * (1.0 + std::abs(classical)));
        CHECK(std::abs(classical - besselMoment(sig, n, u, MomentMode::mellinBarnes)) <=
              1e-8 * (1.0 + std::abs(classical)));
      }
    }
  }
}

TEST_CASE("Mellin-Barnes: contour invariance, symmetry and the Bessel relation") {
  const auto theta = findInstance("theta_riemann").signature;
  const Complex u = 1.25;
  // legal window: Re u - k < a < Re u - k/2
  const auto left = mellinBarnesMoment(theta, 1, u, 1.0, 0.85);
  const auto right = mellinBarnesMoment(theta, 1, u, 1.0, 0.95);
  CHECK(std::abs(left.value - right.value) < 1e-10);
  CHECK(left.includesOriginResidue);
  const double k = theta.k;
  const Complex scale = std::pow(kTwoPi / theta.lambda, k + 1.0 - 2.0 * u);
  const Complex relation = numerics::gammaFn(k - u) / numerics::gammaFn(u) - scale * besselMomentRegularized(theta, 1, u);
  CHECK(std::abs(left.value - relation) < 1e-8);
  const Complex w(1.1, 0.4);
  const auto up = mellinBarnesMoment(theta, 2, w, 1.0, defaultAbscissa(theta, w));
  const auto down = mellinBarnesMoment(theta, 2, std::conj(w), 1.0, defaultAbscissa(theta, std::conj(w)));
  CHECK(std::abs(up.value - std::conj(down.value)) < 1e-12);
  CHECK_THROWS_AS(mellinBarnesMoment(theta, 1, u, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(mellinBarnesMoment(theta, 1, u, 1.0, 0.5), DomainError);
  // u = 0.4: the window (-0.1, 0.15) contains the pole of 1/z
  CHECK_THROWS_AS(mellinBarnesMoment(theta, 1, 0.4, 1.0, 1e-12), ContourTooClose);
  CHECK_FALSE(mellinBarnesMoment(theta, 1, 0.4, 1.0, -0.05).includesOriginResidue);
  for (const auto& name : kMomentInstances) {
    const auto& sig = findInstance(name).signature;
    for (const double x : {0.5, 1.0}) {
      const Complex v = sig.k - 0.4;
      CAPTURE(name);
      CAPTURE(x);
      const Complex reg = besselMomentRegularized(sig, 3, v, Precision::automatic, x);
      CHECK(std::abs(besselMomentMellinBarnes(sig, 3, v, x) - reg) <= 1e-8 * (1.0 + std::abs(reg)));
    }
  }
}

TEST_CASE("moment derivative") {
  for (const char* name : {"theta_riemann", "delta_ramanujan", "dedekind_qi"}) {
    const auto& sig = findInstance(name).signature;
    const Complex u = sig.k + 0.5;
    const double h = 1e-4;
    const double a = defaultAbscissa(sig, u);
    const Complex fd =
        (mellinBarnesMoment(sig, 1, u, 1.0 + h, a).value - mellinBarnesMoment(sig, 1, u, 1.0 - h, a).value) /
        (2.0 * h);
    CAPTURE(name);
    CHECK(std::abs(fd - momentDerivativeClosedForm(sig, 1, u, 1.0)) < 1e-5);
  }
  // theta: J_{-1/2}(2 pi sqrt x) vanishes at 2 pi sqrt x = pi / 2
  const auto theta = findInstance("theta_riemann").signature;
  CHECK(std::abs(momentDerivativeClosedForm(theta, 1, 0.3, 1.0 / 16.0)) < 1e-14);
  const Complex before = momentDerivativeClosedForm(theta, 1, 0.3, 0.05);
  const Complex after = momentDerivativeClosedForm(theta, 1, 0.3, 0.08);
  CHECK(before.real() * after.real() < 0.0);
}

TEST_CASE("theoremTerm and printed corollary terms") {
  const auto& theta = findInstance("theta_riemann");
  const Complex u = 0.6, v = 0.6;
  for (const std::uint64_t n : {2, 3, 5, 8, 10})
    CHECK(theoremTerm(theta, SeriesSide::alphaSeries, n, u, v, MomentMode::regularized) == Complex(0.0));
  const Complex generic = theoremTerm(theta, SeriesSide::betaSeries, 9, u, v, MomentMode::regularized);
  const Complex printed = printedTerm(theta, SeriesSide::betaSeries, 3, u, v, MomentMode::regularized);
  CHECK(relErr(printed * printedScale(theta), generic) < 1e-13);
  // the printed Riemann term written out by hand
  const Complex hand = -kPi * arithmetic::divisorSigma(1.0 - u - v, 3) * std::sqrt(3.0) *
                       besselMoment(theta.signature, 9, u / 2.0, MomentMode::regularized);
  CHECK(relErr(printed, hand) < 1e-14);

  const auto& delta = findInstance("delta_ramanujan");
  // 14 = k + 2 is a moment pole; 14.5 is the nearest regular point
  CHECK_THROWS_AS(theoremTerm(delta, SeriesSide::alphaSeries, 2, 14.0, 14.0, MomentMode::regularized),
                  PoleProximity);
  const Complex d = theoremTerm(delta, SeriesSide::alphaSeries, 2, 14.5, 14.5, MomentMode::regularized);
  CHECK(isFinite(d));
  CHECK(relErr(printedTerm(delta, SeriesSide::alphaSeries, 2, 14.5, 14.5, MomentMode::regularized) *
                   printedScale(delta),
               d) < 1e-10);

  for (const auto& instance : hecke::registry()) {
    if (hasSuspectedMisprint(instance)) continue;
    const auto& sig = instance.signature;
    const Complex uu = sig.variableMap.toCorollary(sig.k - 0.3);
    const Complex vv = sig.variableMap.toCorollary(sig.k - 0.2);
    for (const std::uint64_t m : {1, 2, 3, 6}) {
      for (const auto side : {SeriesSide::alphaSeries, SeriesSide::betaSeries}) {
        const Complex t = theoremTerm(instance, side, theoremIndex(instance, m), uu, vv, MomentMode::classical);
        const Complex p = printedTerm(instance, side, m, uu, vv, MomentMode::classical) * printedScale(instance);
        CAPTURE(instance.name);
        CAPTURE(m);
        CHECK(std::abs(p - t) <= 1e-12 * (1.0 + std::abs(t)));
      }
    }
  }
}

TEST_CASE("seriesSum: examples") {
  const auto inverseSquares = seriesSum([](std::uint64_t n) { return Complex(1.0 / (double(n) * double(n))); },
                                        10000, Strategy::direct);
  // zeta(2) minus the midpoint tail 1 / (N + 1/2)
  CHECK(std::abs(inverseSquares.value - (kPi * kPi / 6.0 - 1.0 / 10000.5)) < 1e-12);
  CHECK(std::abs(inverseSquares.value.real() - 1.6448340718) < 1e-10);

  auto finite = [](std::uint64_t n) { return n <= 10 ? Complex(1.0 / double(n)) : Complex(0.0); };
  CHECK(seriesSum(finite, 400, Strategy::direct).value == seriesSum(finite, 400, Strategy::blockAveraged).value);

  auto alternating = [](std::uint64_t n) { return Complex((n % 2 ? -1.0 : 1.0) / double(n)); };
  const double target = -std::log(2.0);
  const auto direct = seriesSum(alternating, 1000, Strategy::direct);
  const auto averaged = seriesSum(alternating, 1000, Strategy::blockAveraged);
  CHECK(std::abs(averaged.value - target) < std::abs(direct.value - target));
  CHECK(averaged.window == 32);
  CHECK(direct.diagnostics.lastTermMagnitude == doctest::Approx(1e-3));
  CHECK_THROWS_AS(seriesSum(alternating, 15, Strategy::direct), DomainError);
}

TEST_CASE("Wilton tail integral") {
  CHECK(relErr(wiltonTailIntegral(2.0, kTwoPi), ov::kWiltonTail_u2_A2pi) < 1e-12);
  CHECK(relErr(wiltonTailIntegral(2.0, 60.0 * kPi), ov::kWiltonTail_u2_A60pi) < 1e-12);
  CHECK(relErr(wiltonTailIntegral({0.4, 1.0}, 60.0 * kPi), ov::kWiltonTail_u0p4_1i_A60pi) < 1e-12);
  CHECK(relErr(wiltonTailIntegral(-0.5, 4.0 * kPi), ov::kWiltonTail_um0p5_A4pi) < 1e-10);
  // the asymptotic series and the panel route agree across the switch
  CHECK(relErr(wiltonTailIntegral(1.5, 40.0 * kPi), wiltonTailIntegral(1.5, 40.0 * kPi + kPi)) > 0.0);
  for (const double u : {1.5, 2.0, 3.0}) {
    for (std::uint64_t n = 1; n <= 100; ++n) {
      const double A = kTwoPi * double(n);
      CAPTURE(u);
      CAPTURE(n);
      CHECK(std::abs(wiltonTailIntegral(u, A)) <= 2.0 * std::pow(A, -u - 1.0));
    }
  }
  CHECK_THROWS_AS(wiltonTailIntegral(-1.0, kTwoPi), DomainError);
}

TEST_CASE("classical Wilton formula") {
  const auto report = evaluateWiltonClassic(2.0, 3.0, 4000);
  CHECK(relErr(report.lhs, ov::kWiltonLhs_2_3) < 1e-13);
  CHECK(report.residual <= 1e-4);
  CHECK(report.residuePart == Complex(0.0));
  const auto swapped = evaluateWiltonClassic(3.0, 2.0, 4000);
  CHECK(swapped.rhs == report.rhs);
  CHECK(swapped.seriesAlpha == report.seriesBeta);
  CHECK(relErr(evaluateWiltonClassic({0.5, 1.0}, 1.7, 64).lhs, ov::kWiltonLhs_half_1i_1p7) < 1e-12);
  CHECK_THROWS_AS(evaluateWiltonClassic(0.7, 1.3, 100), DomainError);
  CHECK_THROWS_AS(evaluateWiltonClassic(1.0, 3.0, 100), DomainError);
  CHECK_THROWS_AS(evaluateWiltonClassic(-1.5, 3.0, 100), DomainError);
  CHECK_THROWS_AS(evaluateWiltonClassic(2.0, 3.0, 8), DomainError);
}

TEST_CASE("evaluateIdentity: report structure and residue consistency") {
  const auto& theta = findInstance("theta_riemann");
  const auto report = evaluateIdentity(theta, 0.8, 0.7, MomentMode::classical, 200, Strategy::blockAveraged);
  CHECK(report.failures.empty());
  CHECK(report.uTheorem == Complex(0.4));
  CHECK(report.vTheorem == Complex(0.35));
  CHECK(report.residual == std::abs(report.lhs - report.rhs) / (1.0 + std::abs(report.lhs)));
  CHECK(report.residuePart == residuePart(theta, report.uTheorem, report.vTheorem));
  const auto& sig = theta.signature;
  const Complex shifted = report.uTheorem + report.vTheorem - sig.k;
  const Complex byHand = hecke::residueAtK(sig, hecke::Side::phi) / (report.uTheorem - sig.k) *
                             lfun::continuedSeries(sig.thetaPair(hecke::Side::psi), shifted).value +
                         hecke::residueAtK(sig, hecke::Side::psi) / (report.vTheorem - sig.k) *
                             lfun::continuedSeries(sig.thetaPair(hecke::Side::phi), shifted).value;
  CHECK(relErr(report.residuePart, byHand) < 1e-10);

  // u = v on a self-dual instance with gamma = 1: the two series coincide
  const auto diagonal = evaluateIdentity(theta, 0.75, 0.75, MomentMode::regularized, 100, Strategy::direct);
  CHECK(diagonal.seriesAlpha == diagonal.seriesBeta);

  CHECK_THROWS_AS(evaluateIdentity(theta, 3.0, 0.7, MomentMode::regularized, 100, Strategy::direct), DomainError);
  CHECK_THROWS_AS(evaluateIdentity(theta, 1.2, 0.7, MomentMode::classical, 100, Strategy::direct), DomainError);
  CHECK(domainViolation(theta, 0.8, 0.7, MomentMode::classical) == std::nullopt);
}

TEST_CASE("evaluateIdentity: verdict follows the fixed rules") {
  const auto& odd = findInstance("dirichlet_odd_q4");
  for (const auto mode : {MomentMode::classical, MomentMode::regularized}) {
    const auto r = evaluateIdentity(odd, 1.4, 1.6, mode, 300, Strategy::blockAveraged);
    const bool stable = r.residualDoubled <= 2.0 * r.residual + 1e-14;
    if (r.tailDiagnostics.partialSumOscillation < 10.0 * kDefaultTolerance && stable) {
      CHECK((r.convergenceVerdict == Verdict::converged));
    } else {
      CHECK((r.convergenceVerdict != Verdict::converged));
    }
  }
  const auto delta = evaluateIdentity(findInstance("delta_ramanujan"), 14.5, 14.5, MomentMode::regularized, 400,
                                      Strategy::blockAveraged);
  CHECK(delta.failures.empty());
  CHECK((delta.convergenceVerdict != Verdict::converged));
}

TEST_CASE("evaluateIdentity: bit-identical across worker counts") {
  const auto& theta = findInstance("theta_riemann");
  IdentityReport one, four;
  {
    cli::ScopedThreads threads(1);
    one = evaluateIdentity(theta, 0.7, 0.9, MomentMode::regularized, 300, Strategy::blockAveraged);
  }
  {
    cli::ScopedThreads threads(4);
    four = evaluateIdentity(theta, 0.7, 0.9, MomentMode::regularized, 300, Strategy::blockAveraged);
  }
  CHECK(sameBits(one, four));
  IdentityReport w1, w4;
  {
    cli::ScopedThreads threads(1);
    w1 = evaluateWiltonClassic(2.5, 1.5, 500);
  }
  {
    cli::ScopedThreads threads(4);
    w4 = evaluateWiltonClassic(2.5, 1.5, 500);
  }
  CHECK(sameBits(w1, w4));
}

TEST_CASE("adjudicateInterpretations") {
  const auto& odd = findInstance("dirichlet_odd_q4");
  const std::vector<std::uint64_t> grid{1, 2, 3, 5};
  const auto table = adjudicateInterpretations(odd, grid, 1.4, 1.6);
  CHECK(table.momentsConsistent);
  REQUIRE(table.moments.size() == 4);
  for (const auto& row : table.moments) {
    CHECK(row.classical.has_value());
    CHECK(row.maxDisagreement <= 1e-9);
  }
  CHECK(table.matchingReading == "corrected");
  const auto eis = adjudicateInterpretations(findInstance("eisenstein_4"), grid, 3.7, 3.8);
  CHECK(eis.matchingReading == "corrected");
  CHECK_FALSE(eis.readings.empty());
  const auto plain = adjudicateInterpretations(findInstance("theta_riemann"), grid, 0.8, 0.7);
  CHECK(plain.readings.empty());
  CHECK(plain.matchingReading == "n/a");
}
