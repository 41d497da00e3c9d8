#include <cmath>
#include <limits>
#include <sstream>

#include "checks.hpp"
#include "commands.hpp"
#include "doctest.h"
#include "format.hpp"
#include "report.hpp"
#include "wiltonlab/parallel.hpp"

using namespace wiltonlab;
using namespace wiltonlab::cli;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::size_t columns(const std::string& line) { return static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1; }

}  // namespace

TEST_CASE("parseComplex") {
  CHECK(parseComplex("2") == Complex(2.0, 0.0));
  CHECK(parseComplex("3i") == Complex(0.0, 3.0));
  CHECK(parseComplex("-i") == Complex(0.0, -1.0));
  CHECK(parseComplex("2-3.5i") == Complex(2.0, -3.5));
  CHECK(parseComplex("1e-3+2E2i") == Complex(1e-3, 200.0));
  CHECK(parseComplex(" 0.5 ") == Complex(0.5, 0.0));
  CHECK_FALSE(parseComplex("").has_value());
  CHECK_FALSE(parseComplex("abc").has_value());
  CHECK_FALSE(parseComplex("2+").has_value());
  CHECK(parseComplex("1+2j") == Complex(1.0, 2.0));
  CHECK_FALSE(parseComplex("1+2k").has_value());
  CHECK_FALSE(parseComplex("nan").has_value());
}

TEST_CASE("formatDouble and formatComplex round trip") {
  for (const double x : {0.1, -1.0 / 3.0, 1e-300, 6.02214076e23, 0.0}) CHECK(std::stod(formatDouble(x)) == x);
  CHECK(formatDouble(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(formatDouble(-std::numeric_limits<double>::infinity()) == "-inf");
  const Complex z(0.1, -2.0 / 7.0);
  CHECK(parseComplex(formatComplex(z)) == z);
}

TEST_CASE("JSON helpers") {
  CHECK(complexFromJson(complexJson({1.5, -0.25})) == Complex(1.5, -0.25));
  CHECK(numberJson(std::numeric_limits<double>::infinity()).is_null());
  CHECK(std::isnan(numberFromJson(Json())));
  CHECK(std::isnan(complexFromJson(complexJson({std::nan(""), 1.0})).real()));
  CHECK(dumpJson(Json{{"b", 1}, {"a", 0.1}}) == R"({"b":1,"a":0.10000000000000001})");
  CHECK(csvField("plain") == "plain");
  CHECK(csvField("a,b") == "\"a,b\"");
  CHECK(csvField("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(hex64(fnv1a("")) == "cbf29ce484222325");
  CHECK(hex64(fnv1a("a")) == "af63dc4c8601ec8c");
}

TEST_CASE("parseGrid") {
  CHECK(parseGrid("").empty());
  CHECK(parseGrid("0.5") == std::vector<Complex>{0.5});
  CHECK(parseGrid("1,2+i") == std::vector<Complex>{1.0, Complex(2.0, 1.0)});
  const auto range = parseGrid("0.55:0.95:5");
  REQUIRE(range.size() == 5);
  CHECK(range.front() == Complex(0.55));
  CHECK(range.back() == Complex(0.95));
  CHECK(std::abs(range[2] - 0.75) < 1e-15);
  CHECK(parseGrid("2:3:1") == std::vector<Complex>{2.0});
  CHECK_THROWS_AS(parseGrid("1:2"), UsageError);
  CHECK_THROWS_AS(parseGrid("1:2:0"), UsageError);
  CHECK_THROWS_AS(parseGrid("1,,2"), UsageError);
  CHECK_THROWS_AS(parseGrid("x"), UsageError);
}

TEST_CASE("report JSON round trip is lossless") {
  RunConfig config;
  config.instance = "theta_riemann";
  config.u = 0.8;
  config.v = 0.7;
  config.mode = wilton::MomentMode::classical;
  config.terms = 100;
  const auto report = runIdentity(config);
  const Json j = reportJson(report);
  const auto back = reportFromJson(j);
  CHECK(dumpJson(reportJson(back)) == dumpJson(j));
  CHECK(back.lhs == report.lhs);
  CHECK(back.rhs == report.rhs);
  CHECK(back.residual == report.residual);
  CHECK((back.convergenceVerdict == report.convergenceVerdict));
  CHECK(back.largeArgumentTerms == report.largeArgumentTerms);
  const auto reparsed = reportFromJson(Json::parse(dumpJson(j)));
  CHECK(reparsed.seriesAlpha == report.seriesAlpha);
  CHECK(reparsed.tailDiagnostics.averagedResidual == report.tailDiagnostics.averagedResidual);
}

TEST_CASE("verify envelope and checksums") {
  RunConfig config;
  config.instance = "delta_ramanujan";
  config.u = 11.7;
  config.v = 11.8;
  config.terms = 64;
  const auto report = runIdentity(config);
  const Json env = verifyEnvelope(config, report, "2026-01-01T00:00:00Z");
  CHECK(env["schema"].get<std::string>() == kReportSchema);
  CHECK(env["toolVersion"].get<std::string>() == kToolVersion);
  CHECK(env["command"].get<std::string>() == "verify");
  CHECK(env["config"]["terms"].get<int>() == 64);
  CHECK(env["config"]["strategy"].get<std::string>() == "direct");
  const auto sums = checksumsFor(config);
  REQUIRE(sums.size() >= 2);
  CHECK(sums[0].count == 128);
  CHECK(sums[0].fnv1a64.size() == 16);
  CHECK(env["checksums"].size() == sums.size());
  CHECK(sums.back().name == "bernoulli");
  CHECK(bernoulliChecksum().count == 30);
  CHECK(effectiveTerms(RunConfig{.instance = kClassicInstance}) == wilton::kDefaultClassicTerms);
  CHECK((effectiveStrategy(RunConfig{.instance = "theta_riemann"}) == wilton::Strategy::blockAveraged));
}

TEST_CASE("CSV rows match the header") {
  const auto header = identityCsvHeader();
  CHECK(columns(header) == 27);
  RunConfig config;
  config.instance = kClassicInstance;
  config.mode = wilton::MomentMode::classical;
  config.terms = 64;
  const auto row = identityCsvRow(runIdentity(config), "a, note");
  CHECK(columns(row) == 28);  // the quoted note contains one comma
  CHECK(row.rfind("wilton-classic,classical,direct,64,", 0) == 0);
  CHECK(columns(adjudicationCsvHeader()) == 19);
}

TEST_CASE("runIdentity: usage and domain errors") {
  RunConfig config;
  config.instance = "nonexistent";
  CHECK_THROWS_AS(runIdentity(config), UsageError);
  config.instance = "theta_riemann";
  config.u = 3.0;
  config.v = 0.7;
  CHECK_THROWS_AS(runIdentity(config), DomainError);
  config.u = 0.8;
  config.terms = 8;
  CHECK_THROWS_AS(runIdentity(config), UsageError);
  CHECK(samplePoint("theta_riemann") == std::pair{Complex(0.4), Complex(0.6)});
  CHECK(samplePoint(kClassicInstance) == std::pair{Complex(2.0), Complex(3.0)});
}

TEST_CASE("sweepCsv: ordering, exclusions and the empty grid") {
  SweepConfig config;
  config.instance = "theta_riemann";
  config.uGrid = {0.6, 1.2};
  config.vGrid = {0.7};
  config.modes = {wilton::MomentMode::classical, wilton::MomentMode::regularized};
  config.terms = 64;
  const auto rows = lines(sweepCsv(config));
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] + "\n" == identityCsvHeader());
  CHECK(rows[1].rfind("theta_riemann,classical,block-averaged,64,0.59999999999999998,", 0) == 0);
  CHECK(rows[2].find(",excluded,") != std::string::npos);
  CHECK(rows[3].rfind("theta_riemann,regularized,", 0) == 0);
  CHECK(rows[4].find(",excluded,") == std::string::npos);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(columns(rows[i]) >= 27);

  config.uGrid.clear();
  CHECK(sweepCsv(config) == identityCsvHeader());
  config.uGrid = parseGrid("0.1:0.9:21");
  config.vGrid = parseGrid("0.1:0.9:21");
  CHECK_THROWS_AS(sweepCsv(config), UsageError);
  config.instance = "nope";
  config.uGrid = {0.6};
  CHECK_THROWS_AS(sweepCsv(config), UsageError);
}

TEST_CASE("coeffsCsv") {
  CoeffsOptions tau;
  tau.kind = "ramanujan-tau";
  tau.upto = 6;
  CHECK(coeffsCsv(tau) == "n,value\n1,1\n2,-24\n3,252\n4,-1472\n5,4830\n6,-6048\n");
  CoeffsOptions theta;
  theta.instance = "theta_riemann";
  theta.upto = 4;
  CHECK(coeffsCsv(theta) == "n,value\n1,1\n2,0\n3,0\n4,1\n");
  CoeffsOptions eis;
  eis.kind = "eisenstein";
  eis.weight = 4;
  eis.upto = 2;
  CHECK(coeffsCsv(eis) == "n,value\n1,240\n2,2160\n");
  CoeffsOptions bad;
  bad.kind = "mystery";
  CHECK_THROWS_AS(coeffsCsv(bad), UsageError);
}

TEST_CASE("lvalueJson") {
  LValueOptions zeta;
  zeta.series = "riemann-zeta";
  zeta.s = 2.0;
  const Json j = lvalueJson(zeta);
  CHECK(j["schema"].get<std::string>() == kLValueSchema);
  CHECK(std::abs(complexFromJson(j["value"]) - kPi * kPi / 6.0) < 1e-14);
  CHECK(j["converged"].get<bool>());
  LValueOptions catalan;
  catalan.series = "dirichlet-l";
  catalan.kroneckerD = -4;
  catalan.s = 2.0;
  CHECK(std::abs(complexFromJson(lvalueJson(catalan)["value"]) - oracle::kCatalan) < 1e-14);
  LValueOptions pole = zeta;
  pole.s = 1.0;
  CHECK_THROWS_AS(lvalueJson(pole), PoleAt);
  LValueOptions unknown;
  unknown.series = "mystery";
  CHECK_THROWS_AS(lvalueJson(unknown), UsageError);
}

TEST_CASE("selftest suite restricted to one instance") {
  SuiteOptions options;
  options.instance = "dedekind_qi";
  const auto results = runSuite(options);
  REQUIRE_FALSE(results.empty());
  for (const auto& r : results) {
    CAPTURE(r.name);
    CHECK((r.criterion == 3 || r.criterion == 4));
    CHECK(r.passed);
  }
  const Json line = checkJson(results.front());
  CHECK(line["schema"].get<std::string>() == kSelftestSchema);
}

TEST_CASE("ScopedThreads restores the environment") {
  const char* before = std::getenv("WILTONLAB_THREADS");
  const std::string saved = before ? before : "";
  {
    ScopedThreads threads(3);
    CHECK(std::string(std::getenv("WILTONLAB_THREADS")) == "3");
    CHECK(workerCount() == 3);
  }
  const char* after = std::getenv("WILTONLAB_THREADS");
  CHECK(std::string(after ? after : "") == saved);
}
