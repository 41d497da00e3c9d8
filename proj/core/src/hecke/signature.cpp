#include <cmath>

#include "wiltonlab/hecke.hpp"
#include "wiltonlab/numerics.hpp"

namespace wiltonlab::hecke {

namespace {

bool sameSequence(const arithmetic::CoefficientSeq& a, const arithmetic::CoefficientSeq& b) {
  return a.kind() == b.kind() && a.label() == b.label() && a.character() == b.character() &&
         a.eisensteinWeight() == b.eisensteinWeight() && a.form() == b.form() &&
         a.alpha0() == b.alpha0() &&
         (a.field().has_value() == b.field().has_value()) &&
         (!a.field() || a.field()->discriminant == b.field()->discriminant);
}

}  // namespace

lfun::ThetaPair HeckeSignature::thetaPair(Side side) const {
  lfun::ThetaPair pair{lambda, k, gamma, alphaSeq, betaSeq};
  return side == Side::phi ? pair : pair.dual();
}

bool HeckeSignature::selfDual() const {
  const bool unitGamma = gamma.imag() == 0.0 && std::abs(gamma.real()) == 1.0;
  return unitGamma && sameSequence(alphaSeq, betaSeq);
}

lfun::LValue completedTransform(const HeckeSignature& sig, Side side, Complex s, Engine engine) {
  auto viaContinuation = [&] { return lfun::completedTransform(sig.thetaPair(side), s); };
  if (engine == Engine::continuation) return viaContinuation();

  const lfun::LSeriesRef& ref = side == Side::phi ? sig.phiRef : sig.psiRef;
  lfun::LValue value;
  try {
    value = ref.evaluate(s, 1e-10);
  } catch (const DomainError&) {
    if (engine == Engine::reference) throw;
    return viaContinuation();
  } catch (const ToleranceNotMet&) {
    if (engine == Engine::reference) throw;
    return viaContinuation();
  }
  const Complex factor = std::exp(-s * std::log(kTwoPi / sig.lambda)) * numerics::gammaFn(s);
  value.value *= factor;
  value.errorEstimate *= std::abs(factor);
  return value;
}

Complex residueAtK(const HeckeSignature& sig, Side side) {
  const double scale = std::pow(kTwoPi / sig.lambda, sig.k) / std::tgamma(sig.k);
  if (side == Side::phi) return scale * sig.gamma * sig.betaSeq.alpha0();
  return scale * sig.alphaSeq.alpha0() / sig.gamma;
}

}  // namespace wiltonlab::hecke
