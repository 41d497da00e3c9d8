#pragma once

// The acceptance suite behind `selftest` and the acceptance test binary.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "commands.hpp"
#include "format.hpp"

namespace wiltonlab::cli {

struct CheckResult {
  std::string name;
  int criterion = 0;        // 0: supporting check outside the numbered criteria
  bool asserted = true;     // false: reported only, never fails the suite
  bool passed = false;
  double value = 0.0;
  double threshold = 0.0;
  std::string detail;
};

Json checkJson(const CheckResult& result);

struct SuiteOptions {
  std::optional<std::string> instance;  // restricts the suite to criteria 3 and 4 for this instance
  std::vector<int> criteria;            // empty: all
};

std::vector<CheckResult> runSuite(const SuiteOptions& options);

/// Sweep behind the adjudication maps: theta_riemann, all three modes, a
/// 5 x 5 grid inside the classical strip.
SweepConfig adjudicationSweep();

/// Sets WILTONLAB_THREADS for its lifetime.
class ScopedThreads {
 public:
  explicit ScopedThreads(unsigned count);
  ~ScopedThreads();
  ScopedThreads(const ScopedThreads&) = delete;
  ScopedThreads& operator=(const ScopedThreads&) = delete;

 private:
  std::optional<std::string> previous_;
};

// Independent oracles, exposed for the unit tests.
namespace oracle {
/// Coefficients of q prod (1 - q^n)^24 up to q^count, one factor at a time.
std::vector<arithmetic::Int128> etaProductNaive(std::size_t count);
/// B_n by the Akiyama-Tanigawa algorithm.
mpq_class bernoulliAkiyamaTanigawa(int n);
inline constexpr double kCatalan = 0.91596559417721901505460351493238411077414937428167;
}  // namespace oracle

}  // namespace wiltonlab::cli
