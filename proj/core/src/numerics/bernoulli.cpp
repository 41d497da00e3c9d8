#include <array>
#include <mutex>
#include <string>
#include <vector>

#include "wiltonlab/numerics.hpp"

namespace wiltonlab::numerics {
namespace {

constexpr int kMaxIndex = 60;

// B_0..B_60 by the recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0.
std::vector<mpq_class> buildExactTable() {
  std::vector<mpq_class> b(kMaxIndex + 1);
  b[0] = 1;
  for (int m = 1; m <= kMaxIndex; ++m) {
    mpq_class acc = 0;
    mpz_class binom = 1;  // C(m+1, 0)
    for (int j = 0; j < m; ++j) {
      acc += mpq_class(binom) * b[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[m] = -acc / (m + 1);
    b[m].canonicalize();
  }
  return b;
}

const std::vector<mpq_class>& exactTable() {
  static const std::vector<mpq_class> table = buildExactTable();
  return table;
}

struct DoubleTable {
  std::array<double, kMaxIndex + 1> values{};
  DoubleTable() { restore(); }
  void restore() {
    const auto& exact = exactTable();
    for (int k = 0; k <= kMaxIndex; ++k) values[k] = exact[k].get_d();
  }
};

DoubleTable& doubleTable() {
  static DoubleTable table;
  return table;
}

void checkIndex(int k) {
  if (k < 2 || k > kMaxIndex || k % 2 != 0) {
    throw OutOfRange("bernoulli: index must be even in [2, 60], got " + std::to_string(k));
  }
}

}  // namespace

mpq_class bernoulli(int k) {
  checkIndex(k);
  return exactTable()[k];
}

double bernoulliDouble(int k) {
  checkIndex(k);
  return doubleTable().values[k];
}

namespace testing {
void corruptBernoulli(int k, double value) {
  checkIndex(k);
  doubleTable().values[k] = value;
}
void restoreBernoulli() { doubleTable().restore(); }
}  // namespace testing

}  // namespace wiltonlab::numerics
