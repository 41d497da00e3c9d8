#pragma once

// Hecke signatures, the instance registry, and the two equivalent forms of
// the correspondence (functional equation, modular relation) as checks.

#include <cstdint>
#include <string>
#include <vector>

#include "wiltonlab/arithmetic.hpp"
#include "wiltonlab/lfun.hpp"
#include "wiltonlab/types.hpp"

namespace wiltonlab::hecke {

enum class Side { phi, psi };

/// theorem variable = (corollary variable + t0) / t1
struct VariableMap {
  double t0 = 0.0;
  double t1 = 1.0;

  Complex toTheorem(Complex corollary) const { return (corollary + t0) / t1; }
  Complex toCorollary(Complex theorem) const { return theorem * t1 - t0; }
};

struct HeckeSignature {
  double lambda;
  double k;
  Complex gamma;
  arithmetic::CoefficientSeq alphaSeq;
  arithmetic::CoefficientSeq betaSeq;
  lfun::LSeriesRef phiRef;
  lfun::LSeriesRef psiRef;
  VariableMap variableMap;

  /// The theta pair seen from `side` (psi side swaps the sequences and
  /// inverts gamma).
  lfun::ThetaPair thetaPair(Side side = Side::phi) const;
  /// alpha = beta and gamma = +-1.
  bool selfDual() const;
};

struct RegistryInstance {
  std::string name;
  std::string family;
  std::string params;  // JSON object, family specific
  HeckeSignature signature;
  std::string notes;
  /// Series of the identity converge only through cancellation; block
  /// averaging is selected by default.
  bool conditionallyConvergent = false;
  /// Five points (in theorem variables) for the functional-equation check.
  std::vector<Complex> feGrid;
};

/// Build an instance from a family name and its JSON parameters.
RegistryInstance makeInstance(const std::string& name, const std::string& family, const std::string& params);

/// Every registered instance, in a fixed order. Built once.
const std::vector<RegistryInstance>& registry();

/// Lookup by name; '-' and '_' are interchangeable. Throws DomainError.
const RegistryInstance& findInstance(const std::string& name);

std::string toJson(const RegistryInstance& instance);
RegistryInstance fromJson(const std::string& json);

// ---------------------------------------------------------------------------

enum class Engine {
  reference,     // the Dirichlet-series engine for phi / psi
  continuation,  // the theta-function integral
  automatic,     // reference, falling back to continuation outside its domain
};

/// (2 pi / lambda)^{-s} Gamma(s) phi(s) (or psi).
lfun::LValue completedTransform(const HeckeSignature& sig, Side side, Complex s, Engine engine = Engine::automatic);

/// |Phi(s) - gamma Psi(k - s)| / (1 + |Phi(s)|).
double functionalEquationResidual(const HeckeSignature& sig, Complex s);

/// Smallest cutoff for which the truncated q-expansions at y and 1/y are
/// below 1e-16 relative to their leading size.
std::uint64_t modularCutoff(const HeckeSignature& sig, double y);

/// Relative difference of f_alpha(iy) and gamma y^{-k} f_beta(i/y), both
/// truncated at N. Throws TailTooLarge when N is too small.
double modularRelationResidual(const HeckeSignature& sig, double y, std::uint64_t cutoff);

/// res phi(k) = (2 pi / lambda)^k gamma beta_0 / Gamma(k),
/// res psi(k) = (2 pi / lambda)^k alpha_0 / (gamma Gamma(k)).
Complex residueAtK(const HeckeSignature& sig, Side side);

}  // namespace wiltonlab::hecke
