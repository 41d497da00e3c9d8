#include <algorithm>
#include <mutex>
#include <string>

#include "wiltonlab/arithmetic.hpp"

namespace wiltonlab::arithmetic {

namespace {

// prod (1 - q^n)^3 = sum_{j>=0} (-1)^j (2j+1) q^{j(j+1)/2}
std::vector<std::pair<std::size_t, int>> jacobiCube(std::size_t count) {
  std::vector<std::pair<std::size_t, int>> terms;
  for (std::size_t j = 0;; ++j) {
    const std::size_t e = j * (j + 1) / 2;
    if (e >= count) break;
    const int c = static_cast<int>(2 * j + 1);
    terms.emplace_back(e, (j % 2 == 0) ? c : -c);
  }
  return terms;
}

struct TauTable {
  std::mutex mutex;
  std::vector<Int128> coeffs;  // coeffs[n - 1] = tau(n)
};

TauTable& tauTable() {
  static TauTable table;
  return table;
}

}  // namespace

std::vector<Int128> qExpansionEta24(std::size_t count) {
  if (count == 0 || count > kTauBound) {
    throw OutOfRange("qExpansionEta24: N must be in [1, " + std::to_string(kTauBound) + "]");
  }
  const auto sparse = jacobiCube(count);
  // Multiply by the sparse cube eight times: (eta^3)^8 = eta^24 (without q).
  std::vector<Int128> acc(count, 0), next(count);
  acc[0] = 1;
  for (int power = 0; power < 8; ++power) {
    std::fill(next.begin(), next.end(), Int128{0});
    for (const auto& [e, c] : sparse) {
      for (std::size_t i = 0; i + e < count; ++i) {
        next[i + e] += acc[i] * c;
      }
    }
    acc.swap(next);
  }
  return acc;
}

Int128 ramanujanTau(std::uint64_t n) {
  if (n == 0 || n > kTauBound) {
    throw OutOfRange("ramanujanTau: n must be in [1, " + std::to_string(kTauBound) + "]");
  }
  auto& table = tauTable();
  std::lock_guard lock(table.mutex);
  if (table.coeffs.size() < n) {
    std::size_t want = std::max<std::size_t>(1024, table.coeffs.size() * 2);
    while (want < n) want *= 2;
    table.coeffs = qExpansionEta24(std::min<std::size_t>(want, kTauBound));
  }
  return table.coeffs[n - 1];
}

}  // namespace wiltonlab::arithmetic
