#include <algorithm>
#include <cmath>
#include <vector>

#include "wilton/detail.hpp"
#include "wiltonlab/parallel.hpp"
#include "wiltonlab/wilton.hpp"

namespace wiltonlab::wilton {

const char* toString(Strategy strategy) noexcept {
  return strategy == Strategy::direct ? "direct" : "block-averaged";
}

std::optional<Strategy> strategyFromString(const std::string& name) {
  if (name == "direct") return Strategy::direct;
  if (name == "block-averaged" || name == "blockAveraged" || name == "block_averaged") {
    return Strategy::blockAveraged;
  }
  return std::nullopt;
}

SeriesResult summarize(std::span<const Complex> terms, Strategy strategy) {
  if (terms.empty()) throw DomainError("summarize: no terms");
  const std::size_t N = terms.size();
  const std::size_t window = std::min<std::size_t>(N, static_cast<std::size_t>(std::ceil(std::sqrt(double(N)))));

  numerics::CompensatedSum running;
  std::vector<Complex> tail;
  tail.reserve(window);
  for (std::size_t i = 0; i < N; ++i) {
    running.add(terms[i]);
    if (i + window >= N) tail.push_back(running.value());
  }

  SeriesResult result;
  result.direct = running.value();
  result.window = window;
  result.diagnostics.lastTermMagnitude = std::abs(terms[N - 1]);

  const auto [reLo, reHi] = std::minmax_element(tail.begin(), tail.end(),
                                                [](Complex a, Complex b) { return a.real() < b.real(); });
  const auto [imLo, imHi] = std::minmax_element(tail.begin(), tail.end(),
                                                [](Complex a, Complex b) { return a.imag() < b.imag(); });
  result.diagnostics.partialSumOscillation = std::hypot(reHi->real() - reLo->real(), imHi->imag() - imLo->imag());

  if (strategy == Strategy::direct || result.diagnostics.partialSumOscillation == 0.0) {
    result.value = result.direct;
  } else {
    result.value = numerics::compensatedSum(tail) / static_cast<double>(tail.size());
  }
  return result;
}

SeriesResult seriesSum(const std::function<Complex(std::uint64_t)>& termGen, std::uint64_t N, Strategy strategy) {
  if (N < 16) throw DomainError("seriesSum: N must be at least 16");
  std::vector<Complex> terms(N);
  parallelFor(N, [&](std::size_t i) { terms[i] = termGen(i + 1); });
  return summarize(terms, strategy);
}

const char* toString(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::converged: return "converged";
    case Verdict::conditional: return "conditional";
    case Verdict::divergentSuspected: return "divergent-suspected";
  }
  return "?";
}

namespace detail {
namespace {

double maxMagnitude(std::span<const Complex> terms, std::size_t from, std::size_t to) {
  double best = 0.0;
  for (std::size_t i = from; i < to && i < terms.size(); ++i) best = std::max(best, std::abs(terms[i]));
  return best;
}

}  // namespace

void assemble(IdentityReport& report, std::span<const Complex> alpha, std::span<const Complex> beta, double tol) {
  const std::size_t N = report.N;
  const auto relative = [&](Complex series) {
    return std::abs(report.lhs - (report.residuePart + series)) / (1.0 + std::abs(report.lhs));
  };

  // The total is summed from per-index sums so that swapping the two series
  // leaves it bit-identical.
  std::vector<Complex> total(alpha.size());
  for (std::size_t i = 0; i < total.size(); ++i) total[i] = alpha[i] + beta[i];
  const std::span<const Complex> head(total.data(), N);

  report.seriesAlpha = summarize(alpha.first(N), report.strategy).value;
  report.seriesBeta = summarize(beta.first(N), report.strategy).value;
  const SeriesResult t = summarize(head, report.strategy);
  report.rhs = report.residuePart + t.value;
  report.residual = relative(t.value);
  report.residualDoubled = relative(summarize(total, report.strategy).value);

  const SeriesResult averaged = summarize(head, Strategy::blockAveraged);
  report.tailDiagnostics.lastTermMagnitude = averaged.diagnostics.lastTermMagnitude;
  report.tailDiagnostics.partialSumOscillation = averaged.diagnostics.partialSumOscillation;
  report.tailDiagnostics.averagedResidual = relative(averaged.value);

  // Growth of the term envelope across the final decade of n.
  const double early = maxMagnitude(head, N / 10, N / 5);
  const double late = maxMagnitude(head, N / 2, N);
  const bool stable = report.residualDoubled <= 2.0 * report.residual + 1e-14;
  if (averaged.diagnostics.partialSumOscillation < 10.0 * tol && stable) {
    report.convergenceVerdict = Verdict::converged;
  } else if (late > early || !std::isfinite(late)) {
    report.convergenceVerdict = Verdict::divergentSuspected;
  } else {
    report.convergenceVerdict = Verdict::conditional;
  }
}

}  // namespace detail
}  // namespace wiltonlab::wilton
