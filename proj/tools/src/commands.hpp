#pragma once

// The subcommands, independent of argument parsing. Each writes its primary
// output to `out` and returns a process exit code.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "report.hpp"

namespace wiltonlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSelftestFailed = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitUsage = 64;

/// Malformed arguments (exit 64).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Comma-separated complex literals, or "start:stop:count" (inclusive,
/// real). The empty string is the empty grid.
std::vector<Complex> parseGrid(const std::string& text);

/// A point inside the instance's classical strip: theorem variables
/// (k - 0.3, k - 0.2); (2, 3) for the classical Wilton formula.
std::pair<Complex, Complex> samplePoint(const std::string& instance);

/// Throws UsageError for unknown names; DomainError for points outside the
/// instance domain.
wilton::IdentityReport runIdentity(const RunConfig& config);

int cmdVerify(const RunConfig& config, std::ostream& out);

struct SweepConfig {
  std::string instance;
  std::vector<Complex> uGrid;
  std::vector<Complex> vGrid;
  std::vector<wilton::MomentMode> modes;
  std::optional<std::uint64_t> terms;
  std::optional<wilton::Strategy> strategy;
  double tol = wilton::kDefaultTolerance;
};

inline constexpr std::size_t kMaxSweepPoints = 400;

/// Rows ordered by mode, then u, then v. Points outside the domain of a mode
/// get verdict "excluded" and the reason in the note column.
std::string sweepCsv(const SweepConfig& config);
int cmdSweep(const SweepConfig& config, std::ostream& out);

struct SelftestOptions {
  std::optional<std::string> instance;  // FE and modular checks for one instance only
  std::optional<std::string> fault;     // "bernoulli"
};
int cmdSelftest(const SelftestOptions& options, std::ostream& out);

struct CoeffsOptions {
  std::string kind;
  std::uint64_t upto = 20;
  std::optional<std::string> instance;
  std::string side = "alpha";
  int weight = 4;                // eisenstein
  int modulus = 4;               // characters
  int index = -1;                // position in characterGroup; -1: first primitive
  int dimension = 2;             // rep-count, sum of squares
  std::vector<std::int64_t> gram;  // rep-count, doubled Gram matrix
  std::int64_t discriminant = -4;  // ideal-count
};
std::string coeffsCsv(const CoeffsOptions& options);
int cmdCoeffs(const CoeffsOptions& options, std::ostream& out);

struct LValueOptions {
  std::string series;
  std::optional<std::string> instance;
  std::string side = "phi";
  Complex s{2.0, 0.0};
  double tol = 1e-10;
  double a = 1.0;                // hurwitz
  int weight = 4;                // eisenstein-l
  int modulus = 4;
  int index = -1;
  std::int64_t kroneckerD = 0;   // dirichlet-l through a Kronecker symbol
  int dimension = 2;
  std::vector<std::int64_t> gram;
  std::int64_t discriminant = -4;
};
Json lvalueJson(const LValueOptions& options);
int cmdLvalue(const LValueOptions& options, std::ostream& out);

struct AdjudicateOptions {
  std::string instance;
  std::optional<Complex> u;
  std::optional<Complex> v;
  std::vector<std::uint64_t> nGrid{1, 2, 3, 4, 5, 6, 12};
  Format format = Format::json;
};
std::string adjudicationText(const AdjudicateOptions& options);
int cmdAdjudicate(const AdjudicateOptions& options, std::ostream& out);

}  // namespace wiltonlab::cli
