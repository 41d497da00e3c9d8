#include <algorithm>
#include <cmath>

#include "wiltonlab/wilton.hpp"

namespace wiltonlab::wilton {
namespace {

double relativeGap(Complex a, Complex b) { return std::abs(a - b) / (1.0 + std::abs(a)); }

double deviation(Complex value, Complex reference) {
  const double scale = std::abs(reference);
  return scale > 0.0 ? std::abs(value - reference) / scale : std::abs(value);
}

template <class F>
std::optional<Complex> attempt(F&& f) {
  try {
    return f();
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

AdjudicationTable adjudicateInterpretations(const hecke::RegistryInstance& instance,
                                            std::span<const std::uint64_t> nGrid, Complex u, Complex v) {
  if (nGrid.empty()) throw DomainError("adjudicateInterpretations: empty grid");
  const auto& sig = instance.signature;
  const Complex U = sig.variableMap.toTheorem(u);

  AdjudicationTable table;
  table.instance = instance.name;
  table.u = u;
  table.v = v;

  for (const auto n : nGrid) {
    MomentComparison row;
    row.n = n;
    if (U.real() < sig.k) row.classical = attempt([&] { return besselMomentClassical(sig, n, U).value; });
    row.regularized = attempt([&] { return besselMomentRegularized(sig, n, U); });
    row.mellinBarnes = attempt([&] { return besselMomentMellinBarnes(sig, n, U); });
    const std::optional<Complex> values[] = {row.classical, row.regularized, row.mellinBarnes};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (values[i] && values[j]) row.maxDisagreement = std::max(row.maxDisagreement, relativeGap(*values[i], *values[j]));
      }
    }
    row.consistent = row.maxDisagreement <= kAgreementTolerance;
    table.momentsConsistent = table.momentsConsistent && row.consistent;
    table.moments.push_back(row);
  }

  if (!hasSuspectedMisprint(instance)) {
    table.matchingReading = "n/a";
    return table;
  }
  const double scale = printedScale(instance);
  bool typesetMatches = true;
  bool correctedMatches = true;
  for (const auto m : nGrid) {
    ReadingComparison row;
    row.m = m;
    const std::uint64_t n = theoremIndex(instance, m);
    const auto mode = MomentMode::regularized;
    row.generic = (theoremTerm(instance, SeriesSide::betaSeries, n, u, v, mode) +
                   theoremTerm(instance, SeriesSide::alphaSeries, n, u, v, mode)) /
                  scale;
    for (const auto reading : {Reading::asTypeset, Reading::corrected}) {
      const Complex printed = printedTerm(instance, SeriesSide::betaSeries, m, u, v, mode, reading) +
                              printedTerm(instance, SeriesSide::alphaSeries, m, u, v, mode, reading);
      (reading == Reading::asTypeset ? row.asTypeset : row.corrected) = printed;
    }
    row.typesetDeviation = deviation(row.asTypeset, row.generic);
    row.correctedDeviation = deviation(row.corrected, row.generic);
    typesetMatches = typesetMatches && row.typesetDeviation <= kAgreementTolerance;
    correctedMatches = correctedMatches && row.correctedDeviation <= kAgreementTolerance;
    table.readings.push_back(row);
  }
  table.matchingReading = typesetMatches ? "as-typeset" : correctedMatches ? "corrected" : "neither";
  return table;
}

}  // namespace wiltonlab::wilton
