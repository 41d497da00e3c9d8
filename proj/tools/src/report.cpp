#include "report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <sstream>

#include "wiltonlab/numerics.hpp"

namespace wiltonlab::cli {
namespace {

using wilton::IdentityReport;

std::string lower(std::string s) {
  std::replace(s.begin(), s.end(), '_', '-');
  return s;
}

Json optionalComplex(const std::optional<Complex>& z) { return z ? complexJson(*z) : Json(nullptr); }

std::string csvComplex(const std::optional<Complex>& z) {
  if (!z) return ",";
  return formatDouble(z->real()) + "," + formatDouble(z->imag());
}

std::string csvComplex(Complex z) { return csvComplex(std::optional<Complex>(z)); }

}  // namespace

bool isClassic(const std::string& instance) { return lower(instance) == kClassicInstance; }

std::uint64_t effectiveTerms(const RunConfig& config) {
  if (config.terms) return *config.terms;
  return isClassic(config.instance) ? wilton::kDefaultClassicTerms : wilton::kDefaultCorollaryTerms;
}

wilton::Strategy effectiveStrategy(const RunConfig& config) {
  if (config.strategy) return *config.strategy;
  if (isClassic(config.instance)) return wilton::Strategy::direct;
  return hecke::findInstance(config.instance).conditionallyConvergent ? wilton::Strategy::blockAveraged
                                                                      : wilton::Strategy::direct;
}

Json configJson(const RunConfig& config) {
  Json j = Json::object();
  j["instance"] = config.instance;
  j["u"] = complexJson(config.u);
  j["v"] = complexJson(config.v);
  j["mode"] = wilton::toString(config.mode);
  j["terms"] = effectiveTerms(config);
  j["strategy"] = wilton::toString(effectiveStrategy(config));
  j["tol"] = numberJson(config.tol);
  j["format"] = config.format == Format::json ? "json" : "csv";
  return j;
}

Json reportJson(const IdentityReport& r) {
  Json j = Json::object();
  j["instance"] = r.instance;
  j["u"] = complexJson(r.u);
  j["v"] = complexJson(r.v);
  j["uTheorem"] = complexJson(r.uTheorem);
  j["vTheorem"] = complexJson(r.vTheorem);
  j["mode"] = wilton::toString(r.mode);
  j["strategy"] = wilton::toString(r.strategy);
  j["N"] = r.N;
  j["lhs"] = complexJson(r.lhs);
  j["residuePart"] = complexJson(r.residuePart);
  j["seriesAlpha"] = complexJson(r.seriesAlpha);
  j["seriesBeta"] = complexJson(r.seriesBeta);
  j["rhs"] = complexJson(r.rhs);
  j["residual"] = numberJson(r.residual);
  j["residualDoubled"] = numberJson(r.residualDoubled);
  Json tail = Json::object();
  tail["lastTermMagnitude"] = numberJson(r.tailDiagnostics.lastTermMagnitude);
  tail["partialSumOscillation"] = numberJson(r.tailDiagnostics.partialSumOscillation);
  tail["averagedResidual"] = numberJson(r.tailDiagnostics.averagedResidual);
  j["tailDiagnostics"] = tail;
  j["convergenceVerdict"] = wilton::toString(r.convergenceVerdict);
  j["largeArgumentTerms"] = r.largeArgumentTerms;
  j["failures"] = r.failures;
  return j;
}

IdentityReport reportFromJson(const Json& j) {
  IdentityReport r;
  r.instance = j.at("instance").get<std::string>();
  r.u = complexFromJson(j.at("u"));
  r.v = complexFromJson(j.at("v"));
  r.uTheorem = complexFromJson(j.at("uTheorem"));
  r.vTheorem = complexFromJson(j.at("vTheorem"));
  const auto mode = wilton::momentModeFromString(j.at("mode").get<std::string>());
  const auto strategy = wilton::strategyFromString(j.at("strategy").get<std::string>());
  if (!mode || !strategy) throw DomainError("report: unknown mode or strategy");
  r.mode = *mode;
  r.strategy = *strategy;
  r.N = j.at("N").get<std::uint64_t>();
  r.lhs = complexFromJson(j.at("lhs"));
  r.residuePart = complexFromJson(j.at("residuePart"));
  r.seriesAlpha = complexFromJson(j.at("seriesAlpha"));
  r.seriesBeta = complexFromJson(j.at("seriesBeta"));
  r.rhs = complexFromJson(j.at("rhs"));
  r.residual = numberFromJson(j.at("residual"));
  r.residualDoubled = numberFromJson(j.at("residualDoubled"));
  const auto& tail = j.at("tailDiagnostics");
  r.tailDiagnostics.lastTermMagnitude = numberFromJson(tail.at("lastTermMagnitude"));
  r.tailDiagnostics.partialSumOscillation = numberFromJson(tail.at("partialSumOscillation"));
  r.tailDiagnostics.averagedResidual = numberFromJson(tail.at("averagedResidual"));
  const std::string verdict = j.at("convergenceVerdict").get<std::string>();
  if (verdict == "converged") {
    r.convergenceVerdict = wilton::Verdict::converged;
  } else if (verdict == "conditional") {
    r.convergenceVerdict = wilton::Verdict::conditional;
  } else if (verdict == "divergent-suspected") {
    r.convergenceVerdict = wilton::Verdict::divergentSuspected;
  } else {
    throw DomainError("report: unknown verdict '" + verdict + "'");
  }
  r.largeArgumentTerms = j.at("largeArgumentTerms").get<std::uint64_t>();
  r.failures = j.at("failures").get<std::vector<std::string>>();
  return r;
}

Checksum bernoulliChecksum() {
  std::string text;
  for (int k = 2; k <= 60; k += 2) text += formatDouble(numerics::bernoulliDouble(k)) + "\n";
  return {"bernoulli", "B_2..B_60", 30, hex64(fnv1a(text))};
}

std::vector<Checksum> checksumsFor(const RunConfig& config) {
  std::vector<Checksum> out;
  const std::uint64_t terms = effectiveTerms(config);
  if (isClassic(config.instance)) {
    const auto ones = arithmetic::CoefficientSeq::ones();
    const std::uint64_t count = std::min(2 * terms, kChecksumSpan);
    out.push_back({"alpha", ones.label(), count, hex64(arithmetic::checksum(ones, count))});
  } else {
    const auto& instance = hecke::findInstance(config.instance);
    const std::uint64_t count = std::min(wilton::theoremIndex(instance, 2 * terms), kChecksumSpan);
    const auto& sig = instance.signature;
    out.push_back({"alpha", sig.alphaSeq.label(), count, hex64(arithmetic::checksum(sig.alphaSeq, count))});
    out.push_back({"beta", sig.betaSeq.label(), count, hex64(arithmetic::checksum(sig.betaSeq, count))});
  }
  out.push_back(bernoulliChecksum());
  return out;
}

Json checksumsJson(const std::vector<Checksum>& sums) {
  Json j = Json::array();
  for (const auto& c : sums) {
    Json entry = Json::object();
    entry["name"] = c.name;
    entry["sequence"] = c.sequence;
    entry["count"] = c.count;
    entry["fnv1a64"] = c.fnv1a64;
    j.push_back(entry);
  }
  return j;
}

std::string timestamp() {
  std::time_t seconds = 0;
  const char* epoch = std::getenv("SOURCE_DATE_EPOCH");
  if (epoch && *epoch) {
    seconds = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  } else {
    seconds = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  }
  std::tm utc{};
  gmtime_r(&seconds, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

Json verifyEnvelope(const RunConfig& config, const IdentityReport& report, const std::string& stamp) {
  Json j = Json::object();
  j["schema"] = kReportSchema;
  j["toolVersion"] = kToolVersion;
  j["timestamp"] = stamp;
  j["command"] = "verify";
  j["config"] = configJson(config);
  j["results"] = reportJson(report);
  j["checksums"] = checksumsJson(checksumsFor(config));
  return j;
}

std::string identityCsvHeader() {
  return "instance,mode,strategy,terms,u_re,u_im,v_re,v_im,lhs_re,lhs_im,residue_re,residue_im,"
         "alpha_re,alpha_im,beta_re,beta_im,rhs_re,rhs_im,residual,residual_doubled,averaged_residual,"
         "last_term,oscillation,verdict,large_argument_terms,failures,note\n";
}

std::string identityCsvRow(const IdentityReport& r, const std::string& note) {
  std::ostringstream out;
  out << csvField(r.instance) << ',' << wilton::toString(r.mode) << ',' << wilton::toString(r.strategy) << ','
      << r.N << ',' << csvComplex(r.u) << ',' << csvComplex(r.v) << ',' << csvComplex(r.lhs) << ','
      << csvComplex(r.residuePart) << ',' << csvComplex(r.seriesAlpha) << ',' << csvComplex(r.seriesBeta) << ','
      << csvComplex(r.rhs) << ',' << formatDouble(r.residual) << ',' << formatDouble(r.residualDoubled) << ','
      << formatDouble(r.tailDiagnostics.averagedResidual) << ','
      << formatDouble(r.tailDiagnostics.lastTermMagnitude) << ','
      << formatDouble(r.tailDiagnostics.partialSumOscillation) << ',' << wilton::toString(r.convergenceVerdict)
      << ',' << r.largeArgumentTerms << ',' << r.failures.size() << ',' << csvField(note) << '\n';
  return out.str();
}

Json adjudicationJson(const wilton::AdjudicationTable& table) {
  Json j = Json::object();
  j["schema"] = kAdjudicationSchema;
  j["toolVersion"] = kToolVersion;
  j["instance"] = table.instance;
  j["u"] = complexJson(table.u);
  j["v"] = complexJson(table.v);
  Json moments = Json::array();
  for (const auto& row : table.moments) {
    Json m = Json::object();
    m["n"] = row.n;
    m["classical"] = optionalComplex(row.classical);
    m["regularized"] = optionalComplex(row.regularized);
    m["mellinBarnes"] = optionalComplex(row.mellinBarnes);
    m["maxDisagreement"] = numberJson(row.maxDisagreement);
    m["consistent"] = row.consistent;
    moments.push_back(m);
  }
  j["moments"] = moments;
  Json readings = Json::array();
  for (const auto& row : table.readings) {
    Json r = Json::object();
    r["m"] = row.m;
    r["generic"] = complexJson(row.generic);
    r["asTypeset"] = complexJson(row.asTypeset);
    r["corrected"] = complexJson(row.corrected);
    r["typesetDeviation"] = numberJson(row.typesetDeviation);
    r["correctedDeviation"] = numberJson(row.correctedDeviation);
    readings.push_back(r);
  }
  j["readings"] = readings;
  j["matchingReading"] = table.matchingReading;
  j["momentsConsistent"] = table.momentsConsistent;
  return j;
}

std::string adjudicationCsvHeader() {
  return "instance,table,index,classical_re,classical_im,regularized_re,regularized_im,mellin_barnes_re,"
         "mellin_barnes_im,max_disagreement,consistent,generic_re,generic_im,typeset_re,typeset_im,corrected_re,"
         "corrected_im,typeset_deviation,corrected_deviation\n";
}

std::string adjudicationCsv(const wilton::AdjudicationTable& table) {
  std::ostringstream out;
  const std::string name = csvField(table.instance);
  for (const auto& row : table.moments) {
    out << name << ",moments," << row.n << ',' << csvComplex(row.classical) << ',' << csvComplex(row.regularized)
        << ',' << csvComplex(row.mellinBarnes) << ',' << formatDouble(row.maxDisagreement) << ','
        << (row.consistent ? "true" : "false") << ",,,,,,,,\n";
  }
  for (const auto& row : table.readings) {
    out << name << ",readings," << row.m << ",,,,,,,,," << csvComplex(row.generic) << ','
        << csvComplex(row.asTypeset) << ',' << csvComplex(row.corrected) << ','
        << formatDouble(row.typesetDeviation) << ',' << formatDouble(row.correctedDeviation) << '\n';
  }
  return out.str();
}

}  // namespace wiltonlab::cli
