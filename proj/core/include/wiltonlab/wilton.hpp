#pragma once

// Bessel moments, the product-identity series and the classical Wilton
// formula.
//
// All moment functions work in theorem variables: the moment of index n at
// u is the integral of t^{(k-1)/2-u} J_{k-1}(4 pi sqrt(n t) / lambda) over
// [0, x] (x = 1 unless stated).

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wiltonlab/hecke.hpp"
#include "wiltonlab/numerics.hpp"
#include "wiltonlab/types.hpp"

namespace wiltonlab::wilton {

enum class MomentMode { classical, regularized, mellinBarnes };

const char* toString(MomentMode mode) noexcept;
std::optional<MomentMode> momentModeFromString(const std::string& name);

// ---------------------------------------------------------------------------
// Moments
// ---------------------------------------------------------------------------

/// 2 pi sqrt(n) / lambda, the size parameter of the Bessel series.
double momentScale(const hecke::HeckeSignature& sig, std::uint64_t n);

/// Literal integral, Re u < k. Integrated as 2 int_0^1 s^{k-2u} J_{k-1}(2 X s) ds
/// after t = s^2; the endpoint singularity is removed by a power substitution.
/// `tol` is absolute for results below 1 and relative above.
numerics::QuadratureResult besselMomentClassical(const hecke::HeckeSignature& sig, std::uint64_t n,
                                                 Complex u, double tol = 1e-13);

enum class Precision {
  automatic,    // extended precision when X > kEagerThreshold
  standard,     // plain doubles with compensated summation, X <= 8 only
  compensated,  // MPFR with ceil(2X / ln 10) + 20 digits
};

/// sum_m (-1)^m X^{2m+k-1} x^{m+k-u} / (m! Gamma(m+k) (m+k-u)).
/// Throws PoleProximity(m) when |m + k - u| < 1e-8 and PrecisionLimit when
/// X is beyond what the requested precision supports.
Complex regularizedSeries(double k, Complex u, double X, double x = 1.0,
                          Precision precision = Precision::automatic);

inline constexpr double kCompensatedThreshold = 8.0;
inline constexpr double kEagerThreshold = 1.0;
inline constexpr double kPrecisionCeiling = 40.0;
inline constexpr double kPoleGuard = 1e-8;

/// Term-wise continuation of the moment in u (equal to the classical
/// integral when Re u < k).
Complex besselMomentRegularized(const hecke::HeckeSignature& sig, std::uint64_t n, Complex u,
                                Precision precision = Precision::automatic, double x = 1.0);

/// The same analytic function for large X:
/// X^{2u-k-1} Gamma(k-u)/Gamma(u) - 2 int_1^inf s^{k-2u} J_{k-1}(2 X s) ds,
/// the tail taken from Hankel's expansion integrated term by term (its
/// continuation in u where the integral itself diverges). Throws
/// TailBoundFailed when X is too small for the expansion.
Complex besselMomentLargeArgument(const hecke::HeckeSignature& sig, std::uint64_t n, Complex u);

/// X > kPrecisionCeiling: every mode evaluates through besselMomentLargeArgument.
bool largeArgument(const hecke::HeckeSignature& sig, std::uint64_t n);

struct ContourResult {
  Complex value;
  double errorEstimate = 0.0;
  double abscissa = 0.0;
  double height = 0.0;  // |Im z| where the vertical segment turns into the horizontal legs
  bool includesOriginResidue = false;
};

/// (1 / 2 pi i) int_{(a)} (lambda^2 / (4 pi^2 n x))^z Gamma(k-u+z) / Gamma(u-z) dz / z.
/// Requires Re u - k < a < Re u - k/2. The contour is the segment
/// [a - iT, a + iT] closed by horizontal legs to -infinity, so the value
/// matches the vertical-line integral exactly.
ContourResult mellinBarnesMoment(const hecke::HeckeSignature& sig, std::uint64_t n, Complex u,
                                 double x, double a);

/// A legal abscissa: left of 0 whenever the window allows it.
double defaultAbscissa(const hecke::HeckeSignature& sig, Complex u);

/// Moment recovered from the contour integral:
/// I_n(x) = [a > 0] Gamma(k-u)/Gamma(u) - (2 pi / lambda)^{k+1-2u} n^{(k+1)/2-u} M.
Complex besselMomentMellinBarnes(const hecke::HeckeSignature& sig, std::uint64_t n, Complex u,
                                 double x = 1.0);

/// I_n'(x) = -(1/x) (4 pi^2 n x / lambda^2)^{(k+1)/2-u} J_{k-1}(4 pi sqrt(n x) / lambda).
Complex momentDerivativeClosedForm(const hecke::HeckeSignature& sig, std::uint64_t n, Complex u,
                                   double x);

/// Dispatch on the interpretation. All modes switch to
/// besselMomentLargeArgument when largeArgument(sig, n); the three readings
/// coincide there wherever the classical one is defined.
Complex besselMoment(const hecke::HeckeSignature& sig, std::uint64_t n, Complex u, MomentMode mode);

// ---------------------------------------------------------------------------
// Series
// ---------------------------------------------------------------------------

enum class Strategy { direct, blockAveraged };

const char* toString(Strategy strategy) noexcept;
std::optional<Strategy> strategyFromString(const std::string& name);

struct TailDiagnostics {
  double lastTermMagnitude = 0.0;
  double partialSumOscillation = 0.0;
  double averagedResidual = 0.0;  // filled in by the identity evaluators
};

struct SeriesResult {
  Complex value;    // per strategy
  Complex direct;   // plain compensated sum of all terms
  std::size_t window = 0;
  TailDiagnostics diagnostics;
};

/// Sums terms[0..N) (term n+1 at index n) in index order.
SeriesResult summarize(std::span<const Complex> terms, Strategy strategy);

/// Evaluates termGen(1..N) (concurrently) and summarizes. N >= 16.
SeriesResult seriesSum(const std::function<Complex(std::uint64_t)>& termGen, std::uint64_t N,
                       Strategy strategy);

// ---------------------------------------------------------------------------
// Identity evaluation
// ---------------------------------------------------------------------------

enum class Verdict { converged, conditional, divergentSuspected };
const char* toString(Verdict verdict) noexcept;

enum class SeriesSide { alphaSeries, betaSeries };

struct IdentityReport {
  std::string instance;
  Complex u, v;  // as given (corollary variables)
  Complex uTheorem, vTheorem;
  MomentMode mode = MomentMode::regularized;
  Strategy strategy = Strategy::direct;
  std::uint64_t N = 0;
  Complex lhs;
  Complex residuePart;
  Complex seriesAlpha;
  Complex seriesBeta;
  Complex rhs;  // residuePart plus both series, summed index by index
  double residual = 0.0;
  double residualDoubled = 0.0;  // the same with 2N terms
  TailDiagnostics tailDiagnostics;
  Verdict convergenceVerdict = Verdict::conditional;
  std::uint64_t largeArgumentTerms = 0;  // indices evaluated through besselMomentLargeArgument
  std::vector<std::string> failures;     // numeric failures, if any
};

inline constexpr std::uint64_t kDefaultClassicTerms = 4000;
inline constexpr std::uint64_t kDefaultCorollaryTerms = 2000;
inline constexpr double kDefaultTolerance = 1e-6;

/// Reason (u, v) is outside the instance domain for `mode`, if it is.
/// Corollary variables.
std::optional<std::string> domainViolation(const hecke::RegistryInstance& instance, Complex u, Complex v,
                                           MomentMode mode);

/// Full n-th term of one series of the main identity, theorem index n,
/// corollary variables (u, v).
Complex theoremTerm(const hecke::RegistryInstance& instance, SeriesSide side, std::uint64_t n, Complex u,
                    Complex v, MomentMode mode);

enum class Reading {
  asTypeset,  // the corollary exactly as printed
  corrected,  // with the suspected misprint repaired
};

/// The m-th term of the instance's corollary as printed, corollary index m
/// (theorem index m^2 for square-supported instances). Multiplied by
/// printedScale it should equal theoremTerm.
Complex printedTerm(const hecke::RegistryInstance& instance, SeriesSide side, std::uint64_t m, Complex u,
                    Complex v, MomentMode mode, Reading reading = Reading::asTypeset);
double printedScale(const hecke::RegistryInstance& instance);
bool hasSuspectedMisprint(const hecke::RegistryInstance& instance);

/// Theorem index of the corollary's m-th term.
std::uint64_t theoremIndex(const hecke::RegistryInstance& instance, std::uint64_t m);

/// res phi(k)/(U-k) psi(U+V-k) + res psi(k)/(V-k) phi(U+V-k), theorem variables.
Complex residuePart(const hecke::RegistryInstance& instance, Complex uTheorem, Complex vTheorem);

/// Runs the identity with N corollary-level terms (and 2N for the stability
/// check). Never throws for numeric failures; they are listed in the report.
IdentityReport evaluateIdentity(const hecke::RegistryInstance& instance, Complex u, Complex v, MomentMode mode,
                                std::uint64_t N, Strategy strategy, double tol = kDefaultTolerance);

// ---------------------------------------------------------------------------
// Classical Wilton formula
// ---------------------------------------------------------------------------

/// int_A^inf t^{-u-1} sin t dt for A a positive multiple of pi, Re u > -1.
Complex wiltonTailIntegral(Complex u, double A);

/// Throws DomainError outside Re u, Re v > -1, Re(u+v) > 0, u, v != 1, u+v != 2.
IdentityReport evaluateWiltonClassic(Complex u, Complex v, std::uint64_t N,
                                     Strategy strategy = Strategy::direct, double tol = kDefaultTolerance);

// ---------------------------------------------------------------------------
// Adjudication
// ---------------------------------------------------------------------------

struct MomentComparison {
  std::uint64_t n = 0;  // theorem index
  std::optional<Complex> classical;
  std::optional<Complex> regularized;
  std::optional<Complex> mellinBarnes;
  double maxDisagreement = 0.0;  // relative, over available pairs
  bool consistent = true;
};

struct ReadingComparison {
  std::uint64_t m = 0;  // corollary index
  Complex generic;      // theoremTerm / printedScale
  Complex asTypeset;
  Complex corrected;
  double typesetDeviation = 0.0;   // relative
  double correctedDeviation = 0.0; // relative
};

struct AdjudicationTable {
  std::string instance;
  Complex u, v;
  std::vector<MomentComparison> moments;
  std::vector<ReadingComparison> readings;  // empty unless a misprint is suspected
  std::string matchingReading;              // "as-typeset", "corrected", "neither" or "n/a"
  bool momentsConsistent = true;
};

inline constexpr double kAgreementTolerance = 1e-8;

AdjudicationTable adjudicateInterpretations(const hecke::RegistryInstance& instance,
                                            std::span<const std::uint64_t> nGrid, Complex u, Complex v);

}  // namespace wiltonlab::wilton
