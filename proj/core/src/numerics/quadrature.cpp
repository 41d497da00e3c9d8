#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "wiltonlab/numerics.hpp"

namespace wiltonlab::numerics {
namespace {

// QUADPACK qk31 abscissae and weights (31-point Kronrod, embedded 15-point Gauss).
constexpr std::array<double, 16> kXgk = {
    0.998002298693397060285172840152271, 0.987992518020485428489565718586613,
    0.967739075679139134257347978784337, 0.937273392400705904307758947710209,
    0.897264532344081900882509656454496, 0.848206583410427216200648320774217,
    0.790418501442465932967649294817947, 0.724417731360170047416186054613938,
    0.650996741297416970533735895313275, 0.570972172608538847537226737253911,
    0.485081863640239680693655740232351, 0.394151347077563369897207370981045,
    0.299180007153168812166780024266389, 0.201194093997434522300628303394596,
    0.101142066918717499027074231447392, 0.0};
constexpr std::array<double, 16> kWgk = {
    0.005377479872923348987792051430128, 0.015007947329316122538374763075807,
    0.025460847326715320186874001019653, 0.035346360791375846222037948478360,
    0.044589751324764876608227299373280, 0.053481524690928087265343147239430,
    0.062009567800670640285139230960803, 0.069854121318728258709520077099147,
    0.076849680757720378894432777482659, 0.083080502823133021038289247286104,
    0.088564443056211770647275443693774, 0.093126598170825321225486872747346,
    0.096642726983623678505179907627589, 0.099173598721791959332393173484603,
    0.100769845523875595044946662617570, 0.101330007014791549017374792767493};
constexpr std::array<double, 8> kWg = {
    0.030753241996117268354628393577204, 0.070366047488108124709267416450667,
    0.107159220467171935011869546685869, 0.139570677926154314447804794511028,
    0.166269205816993933553200860481209, 0.186161000015562211026800561866423,
    0.198431485327111576456118326443839, 0.202578241925561272880620199967519};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct RuleResult {
  Complex kronrod;
  Complex gauss;
  double absIntegral;  // integral of |f|, for the roundoff floor
};

RuleResult applyRule(const Integrand& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const Complex fc = f(centre);
  Complex kronrod = kWgk[15] * fc;
  Complex gauss = kWg[7] * fc;
  double absSum = kWgk[15] * std::abs(fc);
  for (int j = 0; j < 15; ++j) {
    const double dx = half * kXgk[j];
    const Complex f1 = f(centre - dx);
    const Complex f2 = f(centre + dx);
    kronrod += kWgk[j] * (f1 + f2);
    absSum += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  return {kronrod * half, gauss * half, absSum * std::fabs(half)};
}

struct Accumulator {
  CompensatedSum value;
  double error = 0.0;
  double absIntegral = 0.0;
  std::size_t evaluations = 0;
};

void integrateRecursive(const Integrand& f, double a, double b, double tol, int depth,
                        Accumulator& acc) {
  const RuleResult r = applyRule(f, a, b);
  acc.evaluations += 31;
  const double diff = std::abs(r.kronrod - r.gauss);
  const double floor = 50.0 * kEps * r.absIntegral;
  if (diff <= std::max(tol, floor) || depth <= 0 || !(std::fabs(b - a) > 4 * kEps * std::fabs(a))) {
    acc.value.add(r.kronrod);
    acc.error += std::max(diff, floor);
    acc.absIntegral += r.absIntegral;
    return;
  }
  const double mid = 0.5 * (a + b);
  integrateRecursive(f, a, mid, 0.5 * tol, depth - 1, acc);
  integrateRecursive(f, mid, b, 0.5 * tol, depth - 1, acc);
}

}  // namespace

QuadratureResult adaptiveGaussKronrod(const Integrand& f, double lo, double hi, double tol,
                                      int maxDepth) {
  Accumulator acc;
  integrateRecursive(f, lo, hi, tol, maxDepth, acc);
  return {acc.value.value(), acc.error, acc.evaluations};
}

QuadratureResult oscQuadrature(const Integrand& f, double lo, double hi, double halfPeriodHint,
                               double tol) {
  if (!(lo < hi)) throw DomainError("oscQuadrature: need lo < hi");
  if (!(tol > 0.0)) throw DomainError("oscQuadrature: tol must be positive");
  const double length = hi - lo;
  std::size_t panels = 1;
  if (halfPeriodHint > 0.0 && std::isfinite(halfPeriodHint)) {
    const double wanted = std::ceil(length / halfPeriodHint);
    panels = static_cast<std::size_t>(std::clamp(wanted, 1.0, static_cast<double>(kMaxPanels)));
  }
  const double width = length / static_cast<double>(panels);
  const double panelTol = tol / static_cast<double>(panels);

  Accumulator acc;
  for (std::size_t p = 0; p < panels; ++p) {
    const double a = lo + width * static_cast<double>(p);
    const double b = (p + 1 == panels) ? hi : lo + width * static_cast<double>(p + 1);
    integrateRecursive(f, a, b, panelTol, 48, acc);
  }
  QuadratureResult result{acc.value.value(), acc.error, acc.evaluations};
  const double floor = 100.0 * kEps * acc.absIntegral;
  if (result.errorEstimate > tol + floor || !isFinite(result.value)) {
    throw ToleranceNotMet("oscQuadrature: tolerance not met", result.value, result.errorEstimate);
  }
  return result;
}

}  // namespace wiltonlab::numerics
