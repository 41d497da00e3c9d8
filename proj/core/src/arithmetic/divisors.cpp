#include <algorithm>
#include <cmath>

#include "wiltonlab/arithmetic.hpp"
#include "wiltonlab/numerics.hpp"

namespace wiltonlab::arithmetic {

std::string toString(Int128 value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work with the unsigned magnitude so INT128_MIN is handled.
  UInt128 mag = negative ? static_cast<UInt128>(-(value + 1)) + 1
                                   : static_cast<UInt128>(value);
  std::string out;
  while (mag > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Factorization factorize(std::uint64_t n) {
  Factorization out;
  if (n <= 1) return out;
  auto take = [&](std::uint64_t p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  take(2);
  take(3);
  for (std::uint64_t p = 5; p * p <= n; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Complex powInt(std::uint64_t d, Complex z) {
  if (d == 1 || z == Complex{0.0, 0.0}) return 1.0;
  if (z.imag() == 0.0 && z.real() == std::nearbyint(z.real()) && std::abs(z.real()) <= 64) {
    // Integer exponent: repeated squaring in long double keeps ~1 ulp.
    long long e = static_cast<long long>(z.real());
    const bool invert = e < 0;
    if (invert) e = -e;
    long double base = static_cast<long double>(d), acc = 1.0L;
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return static_cast<double>(invert ? 1.0L / acc : acc);
  }
  return std::exp(z * std::log(static_cast<double>(d)));
}

Complex divisorSigma(Complex z, std::uint64_t n) {
  if (n == 0) throw DomainError("divisorSigma: n must be positive");
  Complex result = 1.0;
  for (auto [p, e] : factorize(n)) {
    // 1 + p^z + ... + p^{ez}, summed directly (no geometric-series division,
    // which loses accuracy when p^z is close to 1).
    numerics::CompensatedSum local;
    std::uint64_t pk = 1;
    for (int i = 0; i <= e; ++i) {
      local.add(powInt(pk, z));
      pk *= p;
    }
    result *= local.value();
  }
  return result;
}

}  // namespace wiltonlab::arithmetic
