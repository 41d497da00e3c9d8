#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "checks.hpp"
#include "wiltonlab/arithmetic.hpp"
#include "wiltonlab/lfun.hpp"
#include "wiltonlab/numerics.hpp"

namespace wiltonlab::cli {
namespace {

using arithmetic::CoefficientSeq;

std::string normalized(std::string s) {
  std::string out;
  for (const char c : s) {
    if (c != '-' && c != '_') out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

const hecke::RegistryInstance& lookup(const std::string& name) {
  try {
    return hecke::findInstance(name);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

arithmetic::DirichletCharacter pickCharacter(int modulus, int index) {
  const auto group = arithmetic::characterGroup(modulus);
  if (index >= 0) {
    if (static_cast<std::size_t>(index) >= group.size()) {
      throw UsageError("character index " + std::to_string(index) + " out of range (" +
                       std::to_string(group.size()) + " characters mod " + std::to_string(modulus) + ")");
    }
    return group[static_cast<std::size_t>(index)];
  }
  for (const auto& chi : group) {
    if (chi.isPrimitive() && !chi.isPrincipal()) return chi;
  }
  throw DomainError("no primitive character mod " + std::to_string(modulus));
}

arithmetic::QuadraticForm pickForm(int dimension, const std::vector<std::int64_t>& gram) {
  if (gram.empty()) return arithmetic::QuadraticForm::sumOfSquares(dimension);
  int m = 1;
  while (static_cast<std::size_t>(m * m) < gram.size()) ++m;
  if (static_cast<std::size_t>(m * m) != gram.size()) throw UsageError("--gram needs m*m entries");
  return arithmetic::QuadraticForm(m, gram);
}

std::string excludedRow(const std::string& instance, wilton::MomentMode mode, wilton::Strategy strategy,
                        std::uint64_t terms, Complex u, Complex v, const std::string& note) {
  std::ostringstream out;
  out << csvField(instance) << ',' << wilton::toString(mode) << ',' << wilton::toString(strategy) << ',' << terms
      << ',' << formatDouble(u.real()) << ',' << formatDouble(u.imag()) << ',' << formatDouble(v.real()) << ','
      << formatDouble(v.imag()) << std::string(15, ',') << ",excluded,,," << csvField(note) << '\n';
  return out.str();
}

std::string coefficientText(const CoefficientSeq& seq, std::uint64_t n) {
  if (const auto exact = seq.rationalAt(n)) return exact->get_str();
  return formatComplex(seq.valueAt(n));
}

}  // namespace

std::vector<Complex> parseGrid(const std::string& text) {
  std::vector<Complex> grid;
  if (text.find_first_not_of(" \t") == std::string::npos) return grid;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    for (std::string part; std::getline(in, part, ':');) parts.push_back(part);
    if (parts.size() != 3) throw UsageError("range grid must be start:stop:count");
    const auto lo = parseComplex(parts[0]);
    const auto hi = parseComplex(parts[1]);
    long count = 0;
    try {
      count = std::stol(parts[2]);
    } catch (const std::exception&) {
      throw UsageError("bad grid count '" + parts[2] + "'");
    }
    if (!lo || !hi || count < 1) throw UsageError("bad range grid '" + text + "'");
    for (long i = 0; i < count; ++i) {
      const double t = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
      grid.push_back(*lo + t * (*hi - *lo));
    }
    return grid;
  }
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    const auto z = parseComplex(item);
    if (!z) throw UsageError("bad grid value '" + item + "'");
    grid.push_back(*z);
  }
  return grid;
}

std::pair<Complex, Complex> samplePoint(const std::string& instance) {
  if (isClassic(instance)) return {2.0, 3.0};
  const auto& sig = lookup(instance).signature;
  return {sig.variableMap.toCorollary(sig.k - 0.3), sig.variableMap.toCorollary(sig.k - 0.2)};
}

wilton::IdentityReport runIdentity(const RunConfig& config) {
  if (config.instance.empty()) throw UsageError("--instance is required");
  const std::uint64_t terms = effectiveTerms(config);
  if (terms < 16) throw UsageError("--terms must be at least 16");
  if (!(config.tol > 0.0)) throw UsageError("--tol must be positive");
  if (isClassic(config.instance)) {
    return wilton::evaluateWiltonClassic(config.u, config.v, terms, effectiveStrategy(config), config.tol);
  }
  const auto& instance = lookup(config.instance);
  if (auto violation = wilton::domainViolation(instance, config.u, config.v, config.mode)) {
    throw DomainError(instance.name + ": " + *violation);
  }
  return wilton::evaluateIdentity(instance, config.u, config.v, config.mode, terms, effectiveStrategy(config),
                                  config.tol);
}

int cmdVerify(const RunConfig& config, std::ostream& out) {
  const auto report = runIdentity(config);
  if (config.format == Format::json) {
    out << dumpJson(verifyEnvelope(config, report, timestamp())) << '\n';
  } else {
    out << identityCsvHeader() << identityCsvRow(report);
  }
  return kExitOk;
}

std::string sweepCsv(const SweepConfig& config) {
  if (config.instance.empty()) throw UsageError("--instance is required");
  if (config.uGrid.size() * config.vGrid.size() > kMaxSweepPoints) {
    throw UsageError("sweep grids are limited to " + std::to_string(kMaxSweepPoints) + " (u, v) points");
  }
  if (!isClassic(config.instance)) lookup(config.instance);
  std::string csv = identityCsvHeader();
  for (const auto mode : config.modes) {
    for (const auto u : config.uGrid) {
      for (const auto v : config.vGrid) {
        RunConfig run;
        run.instance = config.instance;
        run.u = u;
        run.v = v;
        run.mode = isClassic(config.instance) ? wilton::MomentMode::classical : mode;
        run.terms = config.terms;
        run.strategy = config.strategy;
        run.tol = config.tol;
        try {
          csv += identityCsvRow(runIdentity(run));
        } catch (const DomainError& e) {
          csv += excludedRow(config.instance, run.mode, effectiveStrategy(run), effectiveTerms(run), u, v, e.what());
        }
      }
    }
  }
  return csv;
}

int cmdSweep(const SweepConfig& config, std::ostream& out) {
  out << sweepCsv(config);
  return kExitOk;
}

int cmdSelftest(const SelftestOptions& options, std::ostream& out) {
  SuiteOptions suite;
  suite.instance = options.instance;
  if (options.instance) lookup(*options.instance);
  if (options.fault) {
    if (*options.fault != "bernoulli") throw UsageError("unknown fault '" + *options.fault + "'");
    numerics::testing::corruptBernoulli(4, -1.0 / 29.0);
  }
  const auto results = runSuite(suite);
  if (options.fault) numerics::testing::restoreBernoulli();
  bool ok = true;
  for (const auto& r : results) {
    out << dumpJson(checkJson(r)) << '\n';
    ok = ok && (!r.asserted || r.passed);
  }
  return ok ? kExitOk : kExitSelftestFailed;
}

std::string coeffsCsv(const CoeffsOptions& o) {
  if (o.upto < 1 || o.upto > 1000000) throw UsageError("--upto must be in [1, 1000000]");
  std::optional<CoefficientSeq> seq;
  if (o.instance) {
    const auto& sig = lookup(*o.instance).signature;
    if (o.side != "alpha" && o.side != "beta") throw UsageError("--side must be alpha or beta");
    seq = o.side == "alpha" ? sig.alphaSeq : sig.betaSeq;
  } else {
    const std::string kind = normalized(o.kind);
    if (kind == "ones") {
      seq = CoefficientSeq::ones();
    } else if (kind == "thetasquares") {
      seq = CoefficientSeq::thetaSquares();
    } else if (kind == "charactersquares") {
      seq = CoefficientSeq::characterSquares(pickCharacter(o.modulus, o.index));
    } else if (kind == "charactersquaresweighted") {
      seq = CoefficientSeq::characterSquaresWeighted(pickCharacter(o.modulus, o.index));
    } else if (kind == "ramanujantau") {
      seq = CoefficientSeq::ramanujanTau();
    } else if (kind == "eisenstein") {
      seq = CoefficientSeq::eisenstein(o.weight);
    } else if (kind == "repcount") {
      seq = CoefficientSeq::repCount(pickForm(o.dimension, o.gram));
    } else if (kind == "idealcount") {
      seq = CoefficientSeq::idealCount(arithmetic::imagQuadField(o.discriminant));
    } else {
      throw UsageError("unknown --kind '" + o.kind + "'");
    }
  }
  std::string csv = "n,value\n";
  for (std::uint64_t n = 1; n <= o.upto; ++n) csv += std::to_string(n) + "," + csvField(coefficientText(*seq, n)) + "\n";
  return csv;
}

int cmdCoeffs(const CoeffsOptions& options, std::ostream& out) {
  out << coeffsCsv(options);
  return kExitOk;
}

Json lvalueJson(const LValueOptions& o) {
  if (!(o.tol > 0.0)) throw UsageError("--tol must be positive");
  std::optional<lfun::LSeriesRef> ref;
  Json params = Json::object();
  if (o.instance) {
    const auto& instance = lookup(*o.instance);
    if (o.side != "phi" && o.side != "psi") throw UsageError("--side must be phi or psi");
    ref = o.side == "phi" ? instance.signature.phiRef : instance.signature.psiRef;
    params["instance"] = instance.name;
    params["side"] = o.side;
  } else {
    const std::string kind = normalized(o.series);
    if (kind == "riemannzeta" || kind == "zeta") {
      ref = lfun::LSeriesRef::riemannZeta();
    } else if (kind == "hurwitz") {
      if (!(o.a > 0.0 && o.a <= 1.0)) throw DomainError("hurwitz: a must lie in (0, 1]");
      ref = lfun::LSeriesRef::hurwitz(o.a);
      params["a"] = o.a;
    } else if (kind == "dirichletl") {
      const auto chi = o.kroneckerD != 0 ? arithmetic::kroneckerCharacter(o.kroneckerD)
                                         : pickCharacter(o.modulus, o.index);
      ref = lfun::LSeriesRef::dirichletL(chi);
      params["modulus"] = chi.modulus();
      params["exponents"] = chi.exponents();
    } else if (kind == "dedekind") {
      ref = lfun::LSeriesRef::dedekind(arithmetic::imagQuadField(o.discriminant));
      params["discriminant"] = o.discriminant;
    } else if (kind == "epstein") {
      const auto form = pickForm(o.dimension, o.gram);
      ref = lfun::LSeriesRef::epstein(form);
      params["doubledGram"] = form.doubledGram();
    } else if (kind == "ramanujanl") {
      ref = lfun::LSeriesRef::ramanujanL();
    } else if (kind == "eisensteinl") {
      ref = lfun::LSeriesRef::eisensteinL(o.weight);
      params["k"] = o.weight;
    } else {
      throw UsageError("unknown --series '" + o.series + "'");
    }
  }
  Json j = Json::object();
  j["schema"] = kLValueSchema;
  j["toolVersion"] = kToolVersion;
  j["series"] = ref->label();
  j["domain"] = ref->domainNote();
  j["parameters"] = params;
  j["s"] = complexJson(o.s);
  j["tol"] = numberJson(o.tol);
  try {
    const auto value = ref->evaluate(o.s, o.tol);
    j["value"] = complexJson(value.value);
    j["errorEstimate"] = numberJson(value.errorEstimate);
    j["terms"] = value.terms;
    j["method"] = value.method;
    j["converged"] = true;
  } catch (const ToleranceNotMet& e) {
    j["value"] = complexJson(e.best());
    j["errorEstimate"] = numberJson(e.estimate());
    j["terms"] = 0;
    j["method"] = std::string("incomplete: ") + e.what();
    j["converged"] = false;
  }
  return j;
}

int cmdLvalue(const LValueOptions& options, std::ostream& out) {
  out << dumpJson(lvalueJson(options)) << '\n';
  return kExitOk;
}

std::string adjudicationText(const AdjudicateOptions& o) {
  if (o.instance.empty()) throw UsageError("--instance is required");
  if (o.nGrid.empty()) throw UsageError("--n-grid must not be empty");
  const auto& instance = lookup(o.instance);
  const auto [u0, v0] = samplePoint(instance.name);
  const Complex u = o.u.value_or(u0);
  const Complex v = o.v.value_or(v0);
  if (auto violation = wilton::domainViolation(instance, u, v, wilton::MomentMode::regularized)) {
    throw DomainError(instance.name + ": " + *violation);
  }
  const auto table = wilton::adjudicateInterpretations(instance, o.nGrid, u, v);
  if (o.format == Format::json) return dumpJson(adjudicationJson(table)) + "\n";
  return adjudicationCsvHeader() + adjudicationCsv(table);
}

int cmdAdjudicate(const AdjudicateOptions& options, std::ostream& out) {
  out << adjudicationText(options);
  return kExitOk;
}

}  // namespace wiltonlab::cli
