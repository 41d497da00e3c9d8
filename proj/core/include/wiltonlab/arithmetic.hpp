#pragma once

// Exact multiplicative coefficient families and divisor convolutions.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "wiltonlab/errors.hpp"
#include "wiltonlab/types.hpp"

namespace wiltonlab::arithmetic {

__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

std::string toString(Int128 value);

// ---------------------------------------------------------------------------
// Divisors
// ---------------------------------------------------------------------------

using Factorization = std::vector<std::pair<std::uint64_t, int>>;

/// Trial-division factorization, primes in increasing order.
Factorization factorize(std::uint64_t n);

/// All divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// d^z for a positive integer d. Exact (up to rounding of the final value)
/// when z is a small integer.
Complex powInt(std::uint64_t d, Complex z);

/// sigma_z(n) = sum_{d | n} d^z via the multiplicative product formula.
Complex divisorSigma(Complex z, std::uint64_t n);

// ---------------------------------------------------------------------------
// Ramanujan tau
// ---------------------------------------------------------------------------

/// Largest index supported by ramanujanTau and qExpansionEta24.
inline constexpr std::uint64_t kTauBound = 100000;

/// First N coefficients of q * prod_{n>=1} (1 - q^n)^24, exact. Computed as
/// the eighth power of Jacobi's sparse expansion of prod (1 - q^n)^3.
std::vector<Int128> qExpansionEta24(std::size_t count);

/// tau(n), 1 <= n <= kTauBound, from a lazily grown shared table.
Int128 ramanujanTau(std::uint64_t n);

// ---------------------------------------------------------------------------
// Quadratic forms
// ---------------------------------------------------------------------------

/// Positive definite integral quadratic form Q(v) = v^T A v, stored through
/// its doubled matrix G = 2A (integer, even diagonal). The discriminant is
/// D = det(A).
class QuadraticForm {
 public:
  /// `doubledGram` is the row-major m x m matrix 2A.
  QuadraticForm(int dimension, std::vector<std::int64_t> doubledGram);

  static QuadraticForm sumOfSquares(int dimension);

  int dimension() const noexcept { return m_; }
  const std::vector<std::int64_t>& doubledGram() const noexcept { return gram_; }
  std::int64_t doubledEntry(int i, int j) const { return gram_[static_cast<std::size_t>(i * m_ + j)]; }

  /// det(A), exact.
  mpq_class discriminant() const;
  double discriminantDouble() const { return discriminant().get_d(); }

  /// The form v^T A^{-1} v. Throws DomainError when it is not integral.
  QuadraticForm inverse() const;
  bool inverseIsIntegral() const;

  bool isDiagonal() const noexcept;
  bool operator==(const QuadraticForm&) const = default;

  std::int64_t evaluate(const std::vector<std::int64_t>& v) const;

  /// Certified lower bound on the smallest eigenvalue of A
  /// (max of the Gershgorin bound and 1 / trace(A^{-1})).
  double eigenvalueLowerBound() const;

  std::string describe() const;

 private:
  int m_;
  std::vector<std::int64_t> gram_;
};

/// Upper limit on n for repCount: 10^6 / m.
std::uint64_t repCountBound(const QuadraticForm& q);

/// Number of integer vectors v with Q(v) = n, by box enumeration.
std::uint64_t repCount(const QuadraticForm& q, std::uint64_t n);

/// r_Q(0..count-1) in one pass (r_Q(0) = 1).
std::vector<std::uint64_t> repCountTable(const QuadraticForm& q, std::size_t count);

// ---------------------------------------------------------------------------
// Quadratic fields and characters
// ---------------------------------------------------------------------------

/// Kronecker symbol (d/n).
int kronecker(std::int64_t d, std::int64_t n);

struct ImagQuadField {
  std::int64_t discriminant;  // d_K < 0, fundamental
  int classNumber;            // h_K
  int unitCount;              // w_K
};

/// Field of fundamental discriminant d (|d| <= 200). Throws DomainError for
/// non-fundamental or unsupported discriminants.
ImagQuadField imagQuadField(std::int64_t discriminant);

bool isFundamentalDiscriminant(std::int64_t d);

/// v_K(n) = sum_{d | n} (d_K / d).
std::uint64_t idealCount(const ImagQuadField& field, std::uint64_t n);

enum class Parity { even, odd };

/// Character stored as exponents: chi(a) = exp(2 pi i e_a / order), or 0
/// when gcd(a, q) > 1 (exponent -1).
class DirichletCharacter {
 public:
  DirichletCharacter(int modulus, int order, std::vector<int> exponents);

  int modulus() const noexcept { return q_; }
  int order() const noexcept { return order_; }
  const std::vector<int>& exponents() const noexcept { return exponents_; }

  Complex operator()(std::int64_t n) const;
  int exponentAt(std::int64_t n) const;

  Parity parity() const noexcept { return parity_; }
  bool isPrincipal() const noexcept;
  bool isReal() const noexcept;
  bool isPrimitive() const noexcept { return conductor_ == q_; }
  int conductor() const noexcept { return conductor_; }

  DirichletCharacter conjugate() const;
  bool operator==(const DirichletCharacter& other) const;

 private:
  int q_;
  int order_;
  std::vector<int> exponents_;
  std::vector<Complex> values_;
  Parity parity_;
  int conductor_;
};

/// Every character mod q (q <= 10^4), principal first, in a fixed order.
std::vector<DirichletCharacter> characterGroup(int q);

/// The real character n -> (d / n) as a character mod |d|.
DirichletCharacter kroneckerCharacter(std::int64_t d);

/// tau(chi) = sum_{n=1}^{q} chi(n) e^{2 pi i n / q}.
Complex gaussSum(const DirichletCharacter& chi);

// ---------------------------------------------------------------------------
// Coefficient sequences
// ---------------------------------------------------------------------------

enum class SeqKind {
  ones,
  thetaSquares,
  characterSquares,
  characterSquaresWeighted,
  ramanujanTau,
  eisenstein,
  repCount,
  idealCount,
  custom,
};

const char* toString(SeqKind kind) noexcept;
std::optional<SeqKind> seqKindFromString(const std::string& name);

/// A coefficient sequence alpha_0, alpha_1, ... together with growth
/// metadata |alpha_n| <= C n^c used for tail estimates.
class CoefficientSeq {
 public:
  static CoefficientSeq ones();
  /// 1 on perfect squares, alpha_0 = 1/2.
  static CoefficientSeq thetaSquares();
  /// chi(m) at n = m^2.
  static CoefficientSeq characterSquares(const DirichletCharacter& chi);
  /// m chi(m) at n = m^2.
  static CoefficientSeq characterSquaresWeighted(const DirichletCharacter& chi);
  static CoefficientSeq ramanujanTau();
  /// -(2k / B_k) sigma_{k-1}(n), alpha_0 = 1.
  static CoefficientSeq eisenstein(int k);
  /// r_Q(n), alpha_0 = 1.
  static CoefficientSeq repCount(const QuadraticForm& q);
  /// v_K(n), alpha_0 = h_K / w_K.
  static CoefficientSeq idealCount(const ImagQuadField& field);
  static CoefficientSeq custom(std::string label, std::function<Complex(std::uint64_t)> fn,
                               Complex alpha0, double growthExponent, double growthConstant);

  SeqKind kind() const noexcept { return kind_; }
  Complex alpha0() const noexcept { return alpha0_; }
  double growthExponent() const noexcept { return growthExponent_; }
  double growthConstant() const noexcept { return growthConstant_; }
  /// True when the sequence vanishes off the perfect squares.
  bool squareSupported() const noexcept;

  Complex valueAt(std::uint64_t n) const;
  /// Exact value for the rational families; nullopt for characters/custom.
  std::optional<mpq_class> rationalAt(std::uint64_t n) const;

  int eisensteinWeight() const noexcept { return weight_; }
  const std::optional<DirichletCharacter>& character() const noexcept { return chi_; }
  const std::optional<QuadraticForm>& form() const noexcept { return form_; }
  const std::optional<ImagQuadField>& field() const noexcept { return field_; }
  const std::string& label() const noexcept { return label_; }

  /// Conjugate sequence (characters conjugated; real families unchanged).
  CoefficientSeq conjugate() const;

 private:
  struct Cache;
  CoefficientSeq(SeqKind kind, std::string label);

  SeqKind kind_;
  std::string label_;
  Complex alpha0_ = 0.0;
  double growthExponent_ = 0.0;
  double growthConstant_ = 1.0;
  int weight_ = 0;
  std::optional<DirichletCharacter> chi_;
  std::optional<QuadraticForm> form_;
  std::optional<ImagQuadField> field_;
  std::function<Complex(std::uint64_t)> custom_;
  std::shared_ptr<Cache> cache_;
  mpq_class eisensteinScale_;
};

/// sum_{d | n} a(d) b(n/d) d^z, divisors ascending, compensated.
Complex divisorConvolution(const CoefficientSeq& a, const CoefficientSeq& b, Complex z,
                           std::uint64_t n);

/// 64-bit FNV-1a over the 17-digit rendering of alpha_1..alpha_count.
std::uint64_t checksum(const CoefficientSeq& seq, std::uint64_t count);

}  // namespace wiltonlab::arithmetic
