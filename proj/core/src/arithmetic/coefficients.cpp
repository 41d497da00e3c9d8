#include <cmath>
#include <cstdio>
#include <mutex>

#include "wiltonlab/arithmetic.hpp"
#include "wiltonlab/numerics.hpp"

namespace wiltonlab::arithmetic {

namespace {

// |d(n)| <= 128 for n <= 10^5, which bounds tau / n^{11/2} and v_K(n).
constexpr double kDivisorCountBound = 128.0;

std::optional<std::uint64_t> exactSqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r == n) return r;
  return std::nullopt;
}

mpq_class int128ToMpq(Int128 v) { return mpq_class(mpz_class(toString(v))); }

}  // namespace

struct CoefficientSeq::Cache {
  std::mutex mutex;
  std::vector<std::uint64_t> reps;
};

const char* toString(SeqKind kind) noexcept {
  switch (kind) {
    case SeqKind::ones: return "ones";
    case SeqKind::thetaSquares: return "thetaSquares";
    case SeqKind::characterSquares: return "characterSquares";
    case SeqKind::characterSquaresWeighted: return "characterSquaresWeighted";
    case SeqKind::ramanujanTau: return "ramanujanTau";
    case SeqKind::eisenstein: return "eisenstein";
    case SeqKind::repCount: return "repCount";
    case SeqKind::idealCount: return "idealCount";
    case SeqKind::custom: return "custom";
  }
  return "custom";
}

std::optional<SeqKind> seqKindFromString(const std::string& name) {
  for (SeqKind k : {SeqKind::ones, SeqKind::thetaSquares, SeqKind::characterSquares,
                    SeqKind::characterSquaresWeighted, SeqKind::ramanujanTau, SeqKind::eisenstein,
                    SeqKind::repCount, SeqKind::idealCount, SeqKind::custom}) {
    if (name == toString(k)) return k;
  }
  return std::nullopt;
}

CoefficientSeq::CoefficientSeq(SeqKind kind, std::string label) : kind_(kind), label_(std::move(label)) {}

CoefficientSeq CoefficientSeq::ones() {
  CoefficientSeq s(SeqKind::ones, "ones");
  s.growthExponent_ = 0.01;
  return s;
}

CoefficientSeq CoefficientSeq::thetaSquares() {
  CoefficientSeq s(SeqKind::thetaSquares, "thetaSquares");
  s.alpha0_ = 0.5;
  s.growthExponent_ = 0.01;
  return s;
}

CoefficientSeq CoefficientSeq::characterSquares(const DirichletCharacter& chi) {
  CoefficientSeq s(SeqKind::characterSquares, "characterSquares");
  s.chi_ = chi;
  s.growthExponent_ = 0.01;
  return s;
}

CoefficientSeq CoefficientSeq::characterSquaresWeighted(const DirichletCharacter& chi) {
  CoefficientSeq s(SeqKind::characterSquaresWeighted, "characterSquaresWeighted");
  s.chi_ = chi;
  s.growthExponent_ = 0.51;
  return s;
}

CoefficientSeq CoefficientSeq::ramanujanTau() {
  CoefficientSeq s(SeqKind::ramanujanTau, "ramanujanTau");
  // Deligne: |tau(n)| <= d(n) n^{11/2}. The crude exponent would be c = k = 12.
  s.growthExponent_ = 5.51;
  s.growthConstant_ = kDivisorCountBound;
  return s;
}

CoefficientSeq CoefficientSeq::eisenstein(int k) {
  if (k < 4 || k % 2 != 0 || k > 60) throw DomainError("eisenstein: weight must be even, 4 <= k <= 60");
  CoefficientSeq s(SeqKind::eisenstein, "eisenstein(" + std::to_string(k) + ")");
  s.weight_ = k;
  s.alpha0_ = 1.0;
  s.eisensteinScale_ = mpq_class(-2 * k) / numerics::bernoulli(k);
  s.growthExponent_ = k - 1 + 0.01;
  // sigma_{k-1}(n) / n^{k-1} <= zeta(k-1) <= 1 + 1/(k-2).
  s.growthConstant_ = std::abs(s.eisensteinScale_.get_d()) * (1.0 + 1.0 / (k - 2));
  return s;
}

CoefficientSeq CoefficientSeq::repCount(const QuadraticForm& q) {
  CoefficientSeq s(SeqKind::repCount, "repCount(" + q.describe() + ")");
  s.form_ = q;
  s.alpha0_ = 1.0;
  s.growthExponent_ = q.dimension() / 2.0 - 1.0 + 0.01;
  s.growthConstant_ = std::ldexp(kDivisorCountBound, q.dimension());
  s.cache_ = std::make_shared<Cache>();
  return s;
}

CoefficientSeq CoefficientSeq::idealCount(const ImagQuadField& field) {
  CoefficientSeq s(SeqKind::idealCount, "idealCount(" + std::to_string(field.discriminant) + ")");
  s.field_ = field;
  s.alpha0_ = static_cast<double>(field.classNumber) / field.unitCount;
  s.growthExponent_ = 0.01;
  s.growthConstant_ = kDivisorCountBound;
  return s;
}

CoefficientSeq CoefficientSeq::custom(std::string label, std::function<Complex(std::uint64_t)> fn,
                                      Complex alpha0, double growthExponent, double growthConstant) {
  CoefficientSeq s(SeqKind::custom, std::move(label));
  s.custom_ = std::move(fn);
  s.alpha0_ = alpha0;
  s.growthExponent_ = growthExponent;
  s.growthConstant_ = growthConstant;
  return s;
}

bool CoefficientSeq::squareSupported() const noexcept {
  return kind_ == SeqKind::thetaSquares || kind_ == SeqKind::characterSquares ||
         kind_ == SeqKind::characterSquaresWeighted;
}

Complex CoefficientSeq::valueAt(std::uint64_t n) const {
  if (n == 0) return alpha0_;
  switch (kind_) {
    case SeqKind::ones:
      return 1.0;
    case SeqKind::thetaSquares:
      return exactSqrt(n) ? 1.0 : 0.0;
    case SeqKind::characterSquares: {
      const auto r = exactSqrt(n);
      return r ? (*chi_)(static_cast<std::int64_t>(*r)) : Complex(0.0);
    }
    case SeqKind::characterSquaresWeighted: {
      const auto r = exactSqrt(n);
      return r ? static_cast<double>(*r) * (*chi_)(static_cast<std::int64_t>(*r)) : Complex(0.0);
    }
    case SeqKind::ramanujanTau:
      return static_cast<double>(arithmetic::ramanujanTau(n));
    case SeqKind::eisenstein:
      return eisensteinScale_.get_d() * divisorSigma(weight_ - 1.0, n);
    case SeqKind::repCount: {
      std::lock_guard lock(cache_->mutex);
      if (cache_->reps.size() <= n) {
        const std::uint64_t cap = repCountBound(*form_) + 1;
        if (n >= cap) throw OutOfRange("repCount: n exceeds 10^6/m");
        std::uint64_t want = std::max<std::uint64_t>(1024, 2 * cache_->reps.size());
        while (want <= n) want *= 2;
        cache_->reps = repCountTable(*form_, static_cast<std::size_t>(std::min(want, cap)));
      }
      return static_cast<double>(cache_->reps[n]);
    }
    case SeqKind::idealCount:
      return static_cast<double>(arithmetic::idealCount(*field_, n));
    case SeqKind::custom:
      return custom_(n);
  }
  return 0.0;
}

std::optional<mpq_class> CoefficientSeq::rationalAt(std::uint64_t n) const {
  switch (kind_) {
    case SeqKind::custom:
      return std::nullopt;
    case SeqKind::characterSquares:
    case SeqKind::characterSquaresWeighted:
      if (!chi_->isReal()) return std::nullopt;
      break;
    default:
      break;
  }
  if (n == 0) {
    if (kind_ == SeqKind::thetaSquares) return mpq_class(1, 2);
    if (kind_ == SeqKind::idealCount) return mpq_class(field_->classNumber, field_->unitCount);
    if (kind_ == SeqKind::eisenstein || kind_ == SeqKind::repCount) return mpq_class(1);
    return mpq_class(0);
  }
  switch (kind_) {
    case SeqKind::ramanujanTau:
      return int128ToMpq(arithmetic::ramanujanTau(n));
    case SeqKind::eisenstein: {
      mpz_class sigma = 0;
      for (std::uint64_t d : divisors(n)) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(weight_ - 1));
        sigma += p;
      }
      return eisensteinScale_ * mpq_class(sigma);
    }
    case SeqKind::characterSquares:
    case SeqKind::characterSquaresWeighted: {
      const auto r = exactSqrt(n);
      if (!r) return mpq_class(0);
      const int e = chi_->exponentAt(static_cast<std::int64_t>(*r));
      const long sign = e < 0 ? 0 : (e == 0 ? 1 : -1);
      const long weight = kind_ == SeqKind::characterSquares ? 1 : static_cast<long>(*r);
      return mpq_class(sign * weight);
    }
    default:
      return mpq_class(static_cast<long>(std::llround(valueAt(n).real())));
  }
}

CoefficientSeq CoefficientSeq::conjugate() const {
  CoefficientSeq s = *this;
  if (chi_) s.chi_ = chi_->conjugate();
  if (kind_ == SeqKind::custom) {
    auto fn = custom_;
    s.custom_ = [fn](std::uint64_t n) { return std::conj(fn(n)); };
    s.alpha0_ = std::conj(alpha0_);
  }
  return s;
}

Complex divisorConvolution(const CoefficientSeq& a, const CoefficientSeq& b, Complex z, std::uint64_t n) {
  if (n == 0) throw DomainError("divisorConvolution: n must be positive");
  numerics::CompensatedSum sum;
  for (std::uint64_t d : divisors(n)) {
    const Complex ad = a.valueAt(d);
    if (ad == Complex(0.0)) continue;
    const Complex bd = b.valueAt(n / d);
    if (bd == Complex(0.0)) continue;
    sum.add(ad * bd * powInt(d, z));
  }
  return sum.value();
}

std::uint64_t checksum(const CoefficientSeq& seq, std::uint64_t count) {
  std::uint64_t h = 1469598103934665603ull;
  char buf[96];
  for (std::uint64_t n = 1; n <= count; ++n) {
    const Complex v = seq.valueAt(n);
    const int len = std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", v.real(), v.imag());
    for (int i = 0; i < len; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace wiltonlab::arithmetic
