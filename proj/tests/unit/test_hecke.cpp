#include <cmath>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "wiltonlab/hecke.hpp"
#include "wiltonlab/wilton.hpp"

using namespace wiltonlab;
using namespace wiltonlab::hecke;
using support::relErr;

TEST_CASE("registry: names, signatures and invariants") {
  std::set<std::string> names;
  for (const auto& instance : registry()) {
    const auto& sig = instance.signature;
    CAPTURE(instance.name);
    CHECK(names.insert(instance.name).second);
    CHECK(sig.lambda > 0.0);
    CHECK(sig.gamma != Complex(0.0));
    CHECK(sig.variableMap.t1 != 0.0);
    const Complex u(0.37, -0.2);
    CHECK(std::abs(sig.variableMap.toCorollary(sig.variableMap.toTheorem(u)) - u) < 1e-15);
    if (sig.selfDual()) CHECK(std::abs(std::abs(sig.gamma.real()) - 1.0) == 0.0);
    CHECK(instance.feGrid.size() == 5);
  }
  CHECK(&findInstance("theta-riemann") == &findInstance("theta_riemann"));
  CHECK_THROWS_AS(findInstance("no_such_instance"), DomainError);

  const auto& theta = findInstance("theta_riemann").signature;
  CHECK(theta.lambda == 2.0);
  CHECK(theta.k == 0.5);
  CHECK(theta.gamma == Complex(1.0));
  CHECK(theta.alphaSeq.alpha0() == Complex(0.5));
  const auto& delta = findInstance("delta_ramanujan").signature;
  CHECK(delta.lambda == 1.0);
  CHECK(delta.k == 12.0);
  CHECK(findInstance("eisenstein_6").signature.gamma == Complex(-1.0));
  const auto& odd = findInstance("dirichlet_odd_q4").signature;
  CHECK(odd.variableMap.toTheorem(2.0) == Complex(1.5));
  CHECK(std::abs(findInstance("dedekind_q7").signature.lambda - std::sqrt(7.0)) < 1e-15);
}

TEST_CASE("completedTransform: examples") {
  const auto& theta = findInstance("theta_riemann").signature;
  CHECK(relErr(completedTransform(theta, Side::phi, 1.0).value, kPi / 6.0) < 1e-13);
  const auto& delta = findInstance("delta_ramanujan").signature;
  const Complex atSix = completedTransform(delta, Side::phi, 6.0).value;
  CHECK(isFinite(atSix));
  CHECK(atSix.imag() == 0.0);
  for (const double s : {0.2, 0.7, 1.3}) CHECK(completedTransform(theta, Side::phi, s).value.imag() == 0.0);
  // the two engines agree where both apply
  const Complex ref = completedTransform(theta, Side::phi, 1.3, Engine::reference).value;
  const Complex cont = completedTransform(theta, Side::phi, 1.3, Engine::continuation).value;
  CHECK(relErr(cont, ref) < 1e-11);
}

TEST_CASE("functionalEquationResidual: examples") {
  CHECK(functionalEquationResidual(findInstance("theta_riemann").signature, {0.3, 0.4}) <= 1e-8);
  CHECK(functionalEquationResidual(findInstance("dedekind_qi").signature, 0.4) <= 1e-8);
  for (const auto& instance : registry()) {
    const auto& sig = instance.signature;
    if (!sig.selfDual() || sig.gamma != Complex(1.0)) continue;
    CAPTURE(instance.name);
    CHECK(functionalEquationResidual(sig, sig.k / 2.0) <= 1e-14);
  }
}

TEST_CASE("functionalEquationResidual: every instance on its grid") {
  for (const auto& instance : registry()) {
    for (const Complex s : instance.feGrid) {
      CAPTURE(instance.name);
      CAPTURE(s);
      CHECK(functionalEquationResidual(instance.signature, s) <= 1e-7);
    }
  }
}

TEST_CASE("modularRelationResidual: examples") {
  CHECK(modularRelationResidual(findInstance("delta_ramanujan").signature, 2.0, 60) <= 1e-12);
  CHECK(modularRelationResidual(findInstance("theta_riemann").signature, 2.0, 40) <= 1e-12);
  for (const auto& instance : registry()) {
    const auto& sig = instance.signature;
    if (sig.gamma != Complex(1.0) || !sig.selfDual()) continue;
    CAPTURE(instance.name);
    CHECK(modularRelationResidual(sig, 1.0, modularCutoff(sig, 1.0)) == 0.0);
  }
  CHECK_THROWS_AS(modularRelationResidual(findInstance("delta_ramanujan").signature, 0.5, 3), TailTooLarge);
}

TEST_CASE("modularRelationResidual: every instance at y in {1/2, 1, 2}") {
  for (const auto& instance : registry()) {
    for (const double y : {0.5, 1.0, 2.0}) {
      CAPTURE(instance.name);
      CAPTURE(y);
      const auto cutoff = modularCutoff(instance.signature, y);
      CHECK(modularRelationResidual(instance.signature, y, cutoff) <= 1e-10);
    }
  }
}

TEST_CASE("residueAtK") {
  const auto& theta = findInstance("theta_riemann").signature;
  CHECK(relErr(residueAtK(theta, Side::phi), 0.5) < 1e-14);
  CHECK(residueAtK(findInstance("delta_ramanujan").signature, Side::phi) == Complex(0.0));
  CHECK(relErr(residueAtK(findInstance("dedekind_qi").signature, Side::phi), kPi / 4.0) < 1e-14);
  // symmetric extrapolation of (s - k) phi(s)
  const double h = 1e-3;
  const Complex above = h * theta.phiRef.evaluate(theta.k + h).value;
  const Complex below = -h * theta.phiRef.evaluate(theta.k - h).value;
  CHECK(std::abs(0.5 * (above + below) - residueAtK(theta, Side::phi)) < 1e-4);
}

TEST_CASE("registry: JSON round trip reproduces evaluations bit for bit") {
  for (const auto& instance : registry()) {
    const auto copy = fromJson(toJson(instance));
    CAPTURE(instance.name);
    CHECK(copy.name == instance.name);
    CHECK(copy.family == instance.family);
    CHECK(toJson(copy) == toJson(instance));
    const Complex s = instance.feGrid.front();
    CHECK(completedTransform(copy.signature, Side::phi, s).value ==
          completedTransform(instance.signature, Side::phi, s).value);
    CHECK(functionalEquationResidual(copy.signature, s) == functionalEquationResidual(instance.signature, s));
    const std::uint64_t n = wilton::theoremIndex(instance, 3);
    const Complex u = instance.signature.k - 0.3;
    CHECK(wilton::besselMoment(copy.signature, n, u, wilton::MomentMode::regularized) ==
          wilton::besselMoment(instance.signature, n, u, wilton::MomentMode::regularized));
  }
}
