#include <cmath>
#include <functional>
#include <sstream>

#include "wiltonlab/arithmetic.hpp"

namespace wiltonlab::arithmetic {

namespace {

using RatMatrix = std::vector<std::vector<mpq_class>>;

RatMatrix halfGram(int m, const std::vector<std::int64_t>& g) {
  RatMatrix a(static_cast<std::size_t>(m), std::vector<mpq_class>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      a[i][j] = mpq_class(static_cast<long>(g[static_cast<std::size_t>(i * m + j)]), 2);
  return a;
}

// Determinant and (optionally) inverse by Gauss-Jordan over Q. Positive
// definite input never needs pivoting, but the code does not rely on it.
mpq_class determinant(RatMatrix a, RatMatrix* inverse) {
  const std::size_t m = a.size();
  RatMatrix inv(m, std::vector<mpq_class>(m));
  for (std::size_t i = 0; i < m; ++i) inv[i][i] = 1;
  mpq_class det = 1;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t p = c;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      std::swap(inv[p], inv[c]);
      det = -det;
    }
    const mpq_class pivot = a[c][c];
    det *= pivot;
    for (std::size_t j = 0; j < m; ++j) {
      a[c][j] /= pivot;
      inv[c][j] /= pivot;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const mpq_class f = a[r][c];
      for (std::size_t j = 0; j < m; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  if (inverse) *inverse = std::move(inv);
  return det;
}

}  // namespace

QuadraticForm::QuadraticForm(int dimension, std::vector<std::int64_t> doubledGram)
    : m_(dimension), gram_(std::move(doubledGram)) {
  if (m_ < 1 || gram_.size() != static_cast<std::size_t>(m_ * m_)) {
    throw DomainError("QuadraticForm: matrix size does not match dimension");
  }
  for (int i = 0; i < m_; ++i) {
    if (doubledEntry(i, i) % 2 != 0) throw DomainError("QuadraticForm: doubled diagonal must be even");
    for (int j = 0; j < i; ++j)
      if (doubledEntry(i, j) != doubledEntry(j, i)) throw DomainError("QuadraticForm: matrix not symmetric");
  }
  // Leading principal minors.
  const RatMatrix a = halfGram(m_, gram_);
  for (int k = 1; k <= m_; ++k) {
    RatMatrix minor(static_cast<std::size_t>(k), std::vector<mpq_class>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor[i][j] = a[i][j];
    if (determinant(minor, nullptr) <= 0) throw DomainError("QuadraticForm: not positive definite");
  }
}

QuadraticForm QuadraticForm::sumOfSquares(int dimension) {
  std::vector<std::int64_t> g(static_cast<std::size_t>(dimension * dimension), 0);
  for (int i = 0; i < dimension; ++i) g[static_cast<std::size_t>(i * dimension + i)] = 2;
  return QuadraticForm(dimension, std::move(g));
}

mpq_class QuadraticForm::discriminant() const { return determinant(halfGram(m_, gram_), nullptr); }

bool QuadraticForm::inverseIsIntegral() const {
  RatMatrix inv;
  determinant(halfGram(m_, gram_), &inv);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) {
      const mpq_class twice = 2 * inv[i][j];
      if (twice.get_den() != 1) return false;
      if (i == j && twice.get_num() % 2 != 0) return false;
    }
  return true;
}

QuadraticForm QuadraticForm::inverse() const {
  if (!inverseIsIntegral()) throw DomainError("QuadraticForm: inverse form is not integral");
  RatMatrix inv;
  determinant(halfGram(m_, gram_), &inv);
  std::vector<std::int64_t> g(static_cast<std::size_t>(m_ * m_));
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) {
      const mpq_class twice = 2 * inv[i][j];
      g[static_cast<std::size_t>(i * m_ + j)] = twice.get_num().get_si();
    }
  return QuadraticForm(m_, std::move(g));
}

bool QuadraticForm::isDiagonal() const noexcept {
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      if (i != j && doubledEntry(i, j) != 0) return false;
  return true;
}

std::int64_t QuadraticForm::evaluate(const std::vector<std::int64_t>& v) const {
  std::int64_t twice = 0;
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) twice += v[i] * doubledEntry(i, j) * v[j];
  return twice / 2;
}

double QuadraticForm::eigenvalueLowerBound() const {
  double gersh = INFINITY;
  for (int i = 0; i < m_; ++i) {
    double off = 0.0;
    for (int j = 0; j < m_; ++j)
      if (j != i) off += std::abs(static_cast<double>(doubledEntry(i, j)));
    gersh = std::min(gersh, (static_cast<double>(doubledEntry(i, i)) - off) / 2.0);
  }
  RatMatrix inv;
  determinant(halfGram(m_, gram_), &inv);
  mpq_class trace = 0;
  for (int i = 0; i < m_; ++i) trace += inv[i][i];
  const double viaTrace = 1.0 / trace.get_d();
  // Round down slightly so the bound stays a bound after conversion.
  return std::max(gersh, viaTrace * (1.0 - 1e-12));
}

std::string QuadraticForm::describe() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < m_; ++i) {
    out << (i ? ",[" : "[");
    for (int j = 0; j < m_; ++j) out << (j ? "," : "") << doubledEntry(i, j);
    out << "]";
  }
  out << "]/2";
  return out.str();
}

namespace {

// Fincke-Pohst style enumeration of every v with Q(v) <= bound, clipped to
// the eigenvalue box. Calls leaf(v) with v[0] free: the caller decides the
// last coordinate exactly.
class Enumerator {
 public:
  Enumerator(const QuadraticForm& q, double bound) : q_(q), m_(q.dimension()) {
    chol_.assign(static_cast<std::size_t>(m_), std::vector<double>(static_cast<std::size_t>(m_)));
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) chol_[i][j] = static_cast<double>(q.doubledEntry(i, j)) / 2.0;
    for (int i = 0; i < m_; ++i) {
      for (int j = i + 1; j < m_; ++j) {
        chol_[j][i] = chol_[i][j];
        chol_[i][j] /= chol_[i][i];
      }
      for (int k = i + 1; k < m_; ++k)
        for (int l = k; l < m_; ++l) chol_[k][l] -= chol_[k][i] * chol_[i][l];
    }
    bound_ = bound + 1e-7 * (bound + 1.0);
    box_ = static_cast<std::int64_t>(std::floor(std::sqrt(bound / q.eigenvalueLowerBound()))) + 1;
  }

  void run(const std::function<void(std::vector<std::int64_t>&, std::int64_t lo, std::int64_t hi)>& leaf) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(m_), 0);
    descend(m_ - 1, bound_, v, leaf);
  }

 private:
  template <class Leaf>
  void descend(int i, double remaining, std::vector<std::int64_t>& v, const Leaf& leaf) {
    double center = 0.0;
    for (int j = i + 1; j < m_; ++j) center -= chol_[i][j] * static_cast<double>(v[j]);
    const double radius = std::sqrt(std::max(0.0, remaining) / chol_[i][i]) + 1e-9;
    const std::int64_t lo = std::max<std::int64_t>(-box_, static_cast<std::int64_t>(std::ceil(center - radius)));
    const std::int64_t hi = std::min<std::int64_t>(box_, static_cast<std::int64_t>(std::floor(center + radius)));
    if (i == 0) {
      if (lo <= hi) leaf(v, lo, hi);
      return;
    }
    for (std::int64_t x = lo; x <= hi; ++x) {
      v[i] = x;
      const double d = static_cast<double>(x) - center;
      descend(i - 1, remaining - chol_[i][i] * d * d, v, leaf);
    }
    v[i] = 0;
  }

  const QuadraticForm& q_;
  int m_;
  std::vector<std::vector<double>> chol_;
  double bound_;
  std::int64_t box_;
};

// Q(v) with v[0] = x, as a x^2 + b x + c (all doubled to stay integral).
struct LeafPoly {
  std::int64_t a2, b2, c2;  // 2a, 2b, 2c
};

LeafPoly leafPoly(const QuadraticForm& q, const std::vector<std::int64_t>& v) {
  const int m = q.dimension();
  LeafPoly p{q.doubledEntry(0, 0), 0, 0};
  for (int j = 1; j < m; ++j) p.b2 += 2 * q.doubledEntry(0, j) * v[j];
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < m; ++j) p.c2 += v[i] * q.doubledEntry(i, j) * v[j];
  return p;
}

std::int64_t isqrtExact(std::int64_t x) {
  if (x < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r * r == x ? r : -1;
}

}  // namespace

std::uint64_t repCountBound(const QuadraticForm& q) {
  return 1000000u / static_cast<std::uint64_t>(q.dimension());
}

std::uint64_t repCount(const QuadraticForm& q, std::uint64_t n) {
  if (n > repCountBound(q)) throw OutOfRange("repCount: n exceeds 10^6/m");
  if (n == 0) return 1;
  std::uint64_t count = 0;
  Enumerator e(q, static_cast<double>(n));
  const auto target2 = 2 * static_cast<std::int64_t>(n);
  e.run([&](std::vector<std::int64_t>& v, std::int64_t lo, std::int64_t hi) {
    // a2 x^2 + b2 x + (c2 - 2n) = 0 (everything doubled).
    const LeafPoly p = leafPoly(q, v);
    const std::int64_t c = p.c2 - target2;
    const std::int64_t disc = p.b2 * p.b2 - 4 * p.a2 * c;
    const std::int64_t r = isqrtExact(disc);
    if (r < 0) return;
    const int roots = r == 0 ? 1 : 2;
    for (int k = 0; k < roots; ++k) {
      const std::int64_t num = k == 0 ? -p.b2 - r : -p.b2 + r;
      if (num % (2 * p.a2) != 0) continue;
      const std::int64_t x = num / (2 * p.a2);
      if (x >= lo && x <= hi) ++count;
    }
  });
  return count;
}

std::vector<std::uint64_t> repCountTable(const QuadraticForm& q, std::size_t count) {
  std::vector<std::uint64_t> table(count, 0);
  if (count == 0) return table;
  const int m = q.dimension();
  if (q.isDiagonal()) {
    // Product of one-dimensional theta series sum_x q^{a x^2}.
    table[0] = 1;
    std::vector<std::uint64_t> next(count);
    for (int i = 0; i < m; ++i) {
      const auto a = static_cast<std::size_t>(q.doubledEntry(i, i) / 2);
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t x = 0; a * x * x < count; ++x) {
        const std::size_t shift = a * x * x;
        const std::uint64_t mult = x == 0 ? 1 : 2;
        for (std::size_t j = 0; j + shift < count; ++j) next[j + shift] += mult * table[j];
      }
      table.swap(next);
    }
    return table;
  }
  Enumerator e(q, static_cast<double>(count - 1));
  e.run([&](std::vector<std::int64_t>& v, std::int64_t lo, std::int64_t hi) {
    const LeafPoly p = leafPoly(q, v);
    for (std::int64_t x = lo; x <= hi; ++x) {
      const std::int64_t twice = p.a2 * x * x + p.b2 * x + p.c2;
      const std::int64_t value = twice / 2;
      if (value >= 0 && static_cast<std::size_t>(value) < count) ++table[static_cast<std::size_t>(value)];
    }
  });
  return table;
}

}  // namespace wiltonlab::arithmetic
