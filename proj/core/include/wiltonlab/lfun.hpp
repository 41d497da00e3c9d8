#pragma once

// Reference evaluators for the Dirichlet series on the left of the identities.
// Nothing here depends on the moment machinery.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "wiltonlab/arithmetic.hpp"
#include "wiltonlab/types.hpp"

namespace wiltonlab::lfun {

struct LValue {
  Complex value;
  double errorEstimate = 0.0;
  std::uint64_t terms = 0;  // summation cutoff actually used
  std::string method;
};

inline constexpr int kEulerMaclaurinCutoff = 50;
inline constexpr int kEulerMaclaurinOrder = 15;  // corrections B_2 .. B_30

LValue hurwitzZetaEval(Complex s, double a, int cutoff = kEulerMaclaurinCutoff);
LValue riemannZetaEval(Complex s, int cutoff = kEulerMaclaurinCutoff);
Complex hurwitzZeta(Complex s, double a);
Complex riemannZeta(Complex s);

LValue dirichletLEval(const arithmetic::DirichletCharacter& chi, Complex s);
Complex dirichletL(const arithmetic::DirichletCharacter& chi, Complex s);

/// zeta(s) L(s, chi_{d_K}).
LValue dedekindZetaEval(const arithmetic::ImagQuadField& field, Complex s);
/// sum_{n <= N} v_K(n) n^{-s} with a rigorous tail bound (Re s > 1).
LValue dedekindZetaCoefficients(const arithmetic::ImagQuadField& field, Complex s, std::uint64_t cutoff);

/// Direct lattice sum; throws ToleranceNotMet when the cutoff needed for
/// `tol` exceeds repCountBound.
LValue epsteinZDirect(const arithmetic::QuadraticForm& q, Complex s, double tol);
/// Direct sum when affordable, otherwise the theta-function continuation
/// (requires an integral inverse form).
LValue epsteinZ(const arithmetic::QuadraticForm& q, Complex s, double tol);

/// sum tau(n) n^{-s}, Re s >= 7, cutoff <= 10^5.
LValue ramanujanL(Complex s, double tol);

/// -(2k / B_k) zeta(s) zeta(s - k + 1).
LValue eisensteinL(int k, Complex s);

/// sum_{n <= N} a_n n^{-s}; the error estimate is the growth-metadata tail
/// C sum_{n > N} n^{c - Re s} (infinite when Re s <= c + 1).
LValue truncatedDirichlet(const arithmetic::CoefficientSeq& seq, Complex s, std::uint64_t cutoff);

/// Rigorous bound for sum_{n > N} d(n) n^{-p}, p > 1.
double divisorTailBound(double p, double cutoff);

// ---------------------------------------------------------------------------
// Continuation through the modular relation
// ---------------------------------------------------------------------------

/// f(iy) = alpha_0 + sum alpha_n e^{-2 pi n y / lambda} with
/// f(i/y) = gamma y^k g(iy), g built from beta the same way.
struct ThetaPair {
  double lambda;
  double k;
  Complex gamma;
  arithmetic::CoefficientSeq alpha;
  arithmetic::CoefficientSeq beta;

  ThetaPair dual() const { return {lambda, k, 1.0 / gamma, beta, alpha}; }
};

/// int_1^inf e^{-c y} y^{s-1} dy for c > 0.
Complex upperGammaTail(Complex s, double c);

/// Lambda(s) = (2 pi / lambda)^{-s} Gamma(s) phi(s), entire apart from the
/// poles -alpha_0 / s and -gamma beta_0 / (k - s).
LValue completedTransform(const ThetaPair& pair, Complex s);

/// phi(s) recovered from Lambda(s).
LValue continuedSeries(const ThetaPair& pair, Complex s);

// ---------------------------------------------------------------------------
// LSeriesRef
// ---------------------------------------------------------------------------

enum class RefKind {
  riemannZeta,
  hurwitz,
  dirichletL,
  dedekind,
  epstein,
  ramanujanL,
  eisensteinL,
  truncatedDirichlet,
};

const char* toString(RefKind kind) noexcept;

class LSeriesRef {
 public:
  using Evaluator = std::function<LValue(Complex s, double tol)>;

  static LSeriesRef riemannZeta();
  static LSeriesRef hurwitz(double a);
  static LSeriesRef dirichletL(const arithmetic::DirichletCharacter& chi);
  static LSeriesRef dedekind(const arithmetic::ImagQuadField& field);
  static LSeriesRef epstein(const arithmetic::QuadraticForm& q);
  static LSeriesRef ramanujanL();
  static LSeriesRef eisensteinL(int k);
  static LSeriesRef truncatedDirichlet(const arithmetic::CoefficientSeq& seq, std::uint64_t cutoff);

  /// s -> F(scale * s + shift).
  LSeriesRef withArgument(double scale, double shift) const;

  RefKind kind() const noexcept { return kind_; }
  const std::string& domainNote() const noexcept { return domainNote_; }
  const std::string& label() const noexcept { return label_; }
  double argScale() const noexcept { return scale_; }
  double argShift() const noexcept { return shift_; }

  /// Throws ToleranceNotMet unless errorEstimate <= tol * max(1, |value|).
  LValue evaluate(Complex s, double tol = 1e-10) const;

 private:
  LSeriesRef(RefKind kind, std::string label, std::string domainNote, Evaluator fn)
      : kind_(kind), label_(std::move(label)), domainNote_(std::move(domainNote)), fn_(std::move(fn)) {}

  RefKind kind_;
  std::string label_;
  std::string domainNote_;
  Evaluator fn_;
  double scale_ = 1.0;
  double shift_ = 0.0;
};

}  // namespace wiltonlab::lfun
