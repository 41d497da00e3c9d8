#pragma once

// Run configuration, report envelopes and their JSON / CSV forms.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "format.hpp"
#include "wiltonlab/hecke.hpp"
#include "wiltonlab/wilton.hpp"

namespace wiltonlab::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "wiltonlab.report/1";
inline constexpr const char* kAdjudicationSchema = "wiltonlab.adjudication/1";
inline constexpr const char* kLValueSchema = "wiltonlab.lvalue/1";
inline constexpr const char* kSelftestSchema = "wiltonlab.selftest/1";
inline constexpr const char* kClassicInstance = "wilton-classic";

/// Coefficient checksums cover at most this many leading coefficients.
inline constexpr std::uint64_t kChecksumSpan = 10000;

enum class Format { json, csv };

struct RunConfig {
  std::string instance;
  Complex u{2.0, 0.0};
  Complex v{3.0, 0.0};
  wilton::MomentMode mode = wilton::MomentMode::regularized;
  std::optional<std::uint64_t> terms;            // instance default when unset
  std::optional<wilton::Strategy> strategy;      // instance default when unset
  double tol = wilton::kDefaultTolerance;
  std::string output;                            // empty: stdout
  Format format = Format::json;
};

bool isClassic(const std::string& instance);

/// Terms and strategy with the instance defaults filled in.
std::uint64_t effectiveTerms(const RunConfig& config);
wilton::Strategy effectiveStrategy(const RunConfig& config);

Json configJson(const RunConfig& config);

Json reportJson(const wilton::IdentityReport& report);
wilton::IdentityReport reportFromJson(const Json& j);

struct Checksum {
  std::string name;
  std::string sequence;
  std::uint64_t count = 0;
  std::string fnv1a64;
};

/// Fingerprints of the coefficient tables behind a run, and of the
/// Bernoulli table that feeds the gamma and zeta engines.
std::vector<Checksum> checksumsFor(const RunConfig& config);
Checksum bernoulliChecksum();
Json checksumsJson(const std::vector<Checksum>& sums);

/// SOURCE_DATE_EPOCH when set, otherwise the current time; ISO 8601 UTC.
std::string timestamp();

/// The full verify envelope.
Json verifyEnvelope(const RunConfig& config, const wilton::IdentityReport& report, const std::string& stamp);

/// Sweep / verify CSV.
std::string identityCsvHeader();
std::string identityCsvRow(const wilton::IdentityReport& report, const std::string& note = "");

Json adjudicationJson(const wilton::AdjudicationTable& table);
/// Moment rows then reading rows, one CSV table with a `table` column.
std::string adjudicationCsv(const wilton::AdjudicationTable& table);
std::string adjudicationCsvHeader();

}  // namespace wiltonlab::cli
