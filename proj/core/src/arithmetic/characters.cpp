#include <array>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "wiltonlab/arithmetic.hpp"
#include "wiltonlab/numerics.hpp"

namespace wiltonlab::arithmetic {

int kronecker(std::int64_t a, std::int64_t b) {
  static constexpr std::array<int, 8> tab2{0, 1, 0, -1, 0, -1, 0, 1};
  if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && b % 2 == 0) return 0;
  int v = 0;
  while (b % 2 == 0) {
    ++v;
    b /= 2;
  }
  int k = (v % 2 == 0) ? 1 : tab2[static_cast<std::size_t>(a & 7)];
  if (b < 0) {
    b = -b;
    if (a < 0) k = -k;
  }
  while (true) {
    if (a == 0) return b == 1 ? k : 0;
    v = 0;
    while (a % 2 == 0) {
      ++v;
      a /= 2;
    }
    if (v % 2 == 1) k *= tab2[static_cast<std::size_t>(b & 7)];
    if (a & b & 2) k = -k;
    const std::int64_t r = a < 0 ? -a : a;
    a = b % r;
    b = r;
  }
}

namespace {

struct FieldEntry {
  int d, h, w;
};

// Fundamental discriminants -200 <= d < 0 with class numbers and unit counts.
constexpr FieldEntry kFields[] = {
    {-3, 1, 6},    {-4, 1, 4},    {-7, 1, 2},    {-8, 1, 2},    {-11, 1, 2},   {-15, 2, 2},
    {-19, 1, 2},   {-20, 2, 2},   {-23, 3, 2},   {-24, 2, 2},   {-31, 3, 2},   {-35, 2, 2},
    {-39, 4, 2},   {-40, 2, 2},   {-43, 1, 2},   {-47, 5, 2},   {-51, 2, 2},   {-52, 2, 2},
    {-55, 4, 2},   {-56, 4, 2},   {-59, 3, 2},   {-67, 1, 2},   {-68, 4, 2},   {-71, 7, 2},
    {-79, 5, 2},   {-83, 3, 2},   {-84, 4, 2},   {-87, 6, 2},   {-88, 2, 2},   {-91, 2, 2},
    {-95, 8, 2},   {-103, 5, 2},  {-104, 6, 2},  {-107, 3, 2},  {-111, 8, 2},  {-115, 2, 2},
    {-116, 6, 2},  {-119, 10, 2}, {-120, 4, 2},  {-123, 2, 2},  {-127, 5, 2},  {-131, 5, 2},
    {-132, 4, 2},  {-136, 4, 2},  {-139, 3, 2},  {-143, 10, 2}, {-148, 2, 2},  {-151, 7, 2},
    {-152, 6, 2},  {-155, 4, 2},  {-159, 10, 2}, {-163, 1, 2},  {-164, 8, 2},  {-167, 11, 2},
    {-168, 4, 2},  {-179, 5, 2},  {-183, 8, 2},  {-184, 4, 2},  {-187, 2, 2},  {-191, 13, 2},
    {-195, 4, 2},  {-199, 9, 2},
};

bool squarefree(std::int64_t n) {
  n = std::llabs(n);
  for (auto [p, e] : factorize(static_cast<std::uint64_t>(n)))
    if (e > 1) return false;
  return true;
}

std::int64_t mod(std::int64_t a, std::int64_t q) {
  const std::int64_t r = a % q;
  return r < 0 ? r + q : r;
}

std::int64_t powMod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b = mod(b, m);
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// One cyclic factor of (Z/qZ)^*: residue modulo `modulus` -> discrete log.
struct CyclicFactor {
  std::int64_t modulus;
  int order;
  std::vector<int> log;  // -1 where not in the group
};

// Cyclic decomposition of (Z/p^e Z)^*.
std::vector<CyclicFactor> primePowerFactors(std::int64_t p, int e) {
  std::int64_t pe = 1;
  for (int i = 0; i < e; ++i) pe *= p;
  std::vector<CyclicFactor> out;
  if (p == 2) {
    if (e == 1) return out;
    // -1 generates the sign part.
    CyclicFactor sign{pe, 2, std::vector<int>(static_cast<std::size_t>(pe), -1)};
    if (e == 2) {
      sign.log[1] = 0;
      sign.log[3] = 1;
      out.push_back(std::move(sign));
      return out;
    }
    // a = (+-1) 5^k mod 2^e.
    const int ord5 = static_cast<int>(pe / 4);
    CyclicFactor five{pe, ord5, std::vector<int>(static_cast<std::size_t>(pe), -1)};
    std::int64_t x = 1;
    for (int k = 0; k < ord5; ++k) {
      sign.log[static_cast<std::size_t>(x)] = 0;
      sign.log[static_cast<std::size_t>(pe - x)] = 1;
      five.log[static_cast<std::size_t>(x)] = k;
      five.log[static_cast<std::size_t>(pe - x)] = k;
      x = x * 5 % pe;
    }
    out.push_back(std::move(sign));
    out.push_back(std::move(five));
    return out;
  }
  const std::int64_t phi = pe / p * (p - 1);
  const auto phiFactors = factorize(static_cast<std::uint64_t>(phi));
  std::int64_t g = 2;
  for (;; ++g) {
    if (g % p == 0) continue;
    bool primitive = true;
    for (auto [r, k] : phiFactors)
      if (powMod(g, phi / static_cast<std::int64_t>(r), pe) == 1) primitive = false;
    if (primitive) break;
  }
  CyclicFactor f{pe, static_cast<int>(phi), std::vector<int>(static_cast<std::size_t>(pe), -1)};
  std::int64_t x = 1;
  for (int k = 0; k < phi; ++k) {
    f.log[static_cast<std::size_t>(x)] = k;
    x = x * g % pe;
  }
  out.push_back(std::move(f));
  return out;
}

}  // namespace

bool isFundamentalDiscriminant(std::int64_t d) {
  if (d == 0 || d == 1) return false;
  const std::int64_t r = mod(d, 4);
  if (r == 1) return squarefree(d);
  if (r != 0) return false;
  const std::int64_t m = d / 4;
  const std::int64_t rm = mod(m, 4);
  return (rm == 2 || rm == 3) && squarefree(m);
}

ImagQuadField imagQuadField(std::int64_t discriminant) {
  if (discriminant >= 0 || !isFundamentalDiscriminant(discriminant)) {
    throw DomainError("imagQuadField: " + std::to_string(discriminant) +
                      " is not a negative fundamental discriminant");
  }
  for (const auto& f : kFields)
    if (f.d == discriminant) return {f.d, f.h, f.w};
  throw DomainError("imagQuadField: |d_K| > 200 is outside the built-in table");
}

std::uint64_t idealCount(const ImagQuadField& field, std::uint64_t n) {
  if (n == 0) throw DomainError("idealCount: n must be positive");
  std::int64_t total = 0;
  for (std::uint64_t d : divisors(n)) total += kronecker(field.discriminant, static_cast<std::int64_t>(d));
  return static_cast<std::uint64_t>(total);
}

// ---------------------------------------------------------------------------

DirichletCharacter::DirichletCharacter(int modulus, int order, std::vector<int> exponents)
    : q_(modulus), order_(order), exponents_(std::move(exponents)) {
  if (q_ < 2 || order_ < 1 || exponents_.size() != static_cast<std::size_t>(q_)) {
    throw DomainError("DirichletCharacter: malformed value table");
  }
  int g = order_;
  for (int a = 0; a < q_; ++a) {
    const int e = exponents_[static_cast<std::size_t>(a)];
    const bool unit = std::gcd(a, q_) == 1;
    if (unit != (e >= 0) || e >= order_) throw DomainError("DirichletCharacter: malformed value table");
    if (e > 0) g = std::gcd(g, e);
  }
  order_ /= g;
  for (int& e : exponents_)
    if (e > 0) e /= g;

  values_.resize(static_cast<std::size_t>(q_));
  for (int a = 0; a < q_; ++a) {
    const int e = exponents_[static_cast<std::size_t>(a)];
    if (e < 0) {
      values_[static_cast<std::size_t>(a)] = 0.0;
    } else if (e == 0) {
      values_[static_cast<std::size_t>(a)] = 1.0;
    } else if (2 * e == order_) {
      values_[static_cast<std::size_t>(a)] = -1.0;
    } else if (4 * e == order_) {
      values_[static_cast<std::size_t>(a)] = Complex(0.0, 1.0);
    } else if (4 * e == 3 * order_) {
      values_[static_cast<std::size_t>(a)] = Complex(0.0, -1.0);
    } else {
      const double angle = kTwoPi * e / order_;
      values_[static_cast<std::size_t>(a)] = Complex(std::cos(angle), std::sin(angle));
    }
  }
  parity_ = exponents_[static_cast<std::size_t>(q_ - 1)] == 0 ? Parity::even : Parity::odd;

  // Conductor: the least divisor d of q such that chi is trivial on units
  // congruent to 1 mod d.
  conductor_ = q_;
  for (std::uint64_t d : divisors(static_cast<std::uint64_t>(q_))) {
    bool trivial = true;
    for (int a = 1; a < q_ && trivial; a += static_cast<int>(d))
      if (exponents_[static_cast<std::size_t>(a)] > 0) trivial = false;
    if (trivial) {
      conductor_ = static_cast<int>(d);
      break;
    }
  }
}

int DirichletCharacter::exponentAt(std::int64_t n) const {
  return exponents_[static_cast<std::size_t>(mod(n, q_))];
}

Complex DirichletCharacter::operator()(std::int64_t n) const {
  return values_[static_cast<std::size_t>(mod(n, q_))];
}

bool DirichletCharacter::isPrincipal() const noexcept { return order_ == 1; }
bool DirichletCharacter::isReal() const noexcept { return order_ <= 2; }

DirichletCharacter DirichletCharacter::conjugate() const {
  std::vector<int> e = exponents_;
  for (int& x : e)
    if (x > 0) x = order_ - x;
  return DirichletCharacter(q_, order_, std::move(e));
}

bool DirichletCharacter::operator==(const DirichletCharacter& other) const {
  return q_ == other.q_ && order_ == other.order_ && exponents_ == other.exponents_;
}

std::vector<DirichletCharacter> characterGroup(int q) {
  if (q < 2 || q > 10000) throw DomainError("characterGroup: q must be in [2, 10000]");
  std::vector<CyclicFactor> factors;
  for (auto [p, e] : factorize(static_cast<std::uint64_t>(q))) {
    auto part = primePowerFactors(static_cast<std::int64_t>(p), e);
    for (auto& f : part) factors.push_back(std::move(f));
  }
  int exponent = 1;
  for (const auto& f : factors) exponent = std::lcm(exponent, f.order);

  // Per-residue discrete-log vectors.
  std::vector<std::vector<int>> logs(static_cast<std::size_t>(q));
  for (int a = 0; a < q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    for (const auto& f : factors) logs[a].push_back(f.log[static_cast<std::size_t>(mod(a, f.modulus))]);
  }

  std::vector<DirichletCharacter> out;
  std::vector<int> choice(factors.size(), 0);
  while (true) {
    std::vector<int> exps(static_cast<std::size_t>(q), -1);
    for (int a = 0; a < q; ++a) {
      if (logs[a].empty() && std::gcd(a, q) != 1) continue;
      long long e = 0;
      for (std::size_t i = 0; i < factors.size(); ++i)
        e += static_cast<long long>(choice[i]) * logs[a][i] * (exponent / factors[i].order);
      exps[static_cast<std::size_t>(a)] = static_cast<int>(e % exponent);
    }
    out.emplace_back(q, exponent, std::move(exps));
    std::size_t i = 0;
    for (; i < factors.size(); ++i) {
      if (++choice[i] < factors[i].order) break;
      choice[i] = 0;
    }
    if (i == factors.size()) break;
  }
  return out;
}

DirichletCharacter kroneckerCharacter(std::int64_t d) {
  if (!isFundamentalDiscriminant(d)) throw DomainError("kroneckerCharacter: d must be a fundamental discriminant");
  const int q = static_cast<int>(std::llabs(d));
  std::vector<int> exps(static_cast<std::size_t>(q));
  for (int n = 0; n < q; ++n) {
    const int k = kronecker(d, n);
    exps[static_cast<std::size_t>(n)] = k == 0 ? -1 : (k == 1 ? 0 : 1);
  }
  return DirichletCharacter(q, 2, std::move(exps));
}

Complex gaussSum(const DirichletCharacter& chi) {
  const long long q = chi.modulus(), r = chi.order();
  const long long period = q * r;
  numerics::CompensatedSum sum;
  for (long long n = 1; n <= q; ++n) {
    const int e = chi.exponentAt(n);
    if (e < 0) continue;
    // chi(n) e(n/q) = e((e q + n r) / (q r)), reduced exactly.
    const long long num = (e * q + n * r) % period;
    const double angle = kTwoPi * static_cast<double>(num) / static_cast<double>(period);
    sum.add(Complex(std::cos(angle), std::sin(angle)));
  }
  return sum.value();
}

}  // namespace wiltonlab::arithmetic
