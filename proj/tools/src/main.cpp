#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "wiltonlab/errors.hpp"

namespace {

using namespace wiltonlab;
using namespace wiltonlab::cli;

// Every option is collected as text so a JSON config file can fill the gaps
// left by the command line before anything is converted.
class Options {
 public:
  explicit Options(CLI::App* app) : app_(app) {
    app_->add_option("--config", configPath_, "JSON file with the same field names as the flags; flags win");
  }

  void add(const std::string& name, const std::string& help, const std::string& group = "Options") {
    app_->add_option("--" + name, raw_[name], help)->group(group);
  }

  CLI::App* app() const { return app_; }

  void resolve() {
    for (const auto& [name, value] : raw_) {
      if (app_->get_option("--" + name)->count() > 0) values_[name] = value;
    }
    if (configPath_.empty()) return;
    std::ifstream in(configPath_);
    if (!in) throw UsageError("cannot read config file '" + configPath_ + "'");
    Json config;
    try {
      config = Json::parse(in);
    } catch (const std::exception& e) {
      throw UsageError("config file: " + std::string(e.what()));
    }
    if (!config.is_object()) throw UsageError("config file must hold a JSON object");
    for (const auto& [key, value] : config.items()) {
      if (!raw_.count(key)) throw UsageError("config file: unknown field '" + key + "'");
      if (!values_.count(key)) values_[key] = text(value);
    }
  }

  std::optional<std::string> get(const std::string& name) const {
    const auto it = values_.find(name);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  std::string get(const std::string& name, const std::string& fallback) const { return get(name).value_or(fallback); }

 private:
  static std::string text(const Json& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_object() && value.contains("re")) return formatComplex(complexFromJson(value));
    if (value.is_array()) {
      std::string out;
      for (const auto& item : value) out += (out.empty() ? "" : ",") + text(item);
      return out;
    }
    if (value.is_number_float()) return formatDouble(value.get<double>());
    return value.dump();
  }

  CLI::App* app_;
  std::string configPath_;
  std::map<std::string, std::string> raw_;
  std::map<std::string, std::string> values_;
};

Complex complexArg(const Options& o, const std::string& name, Complex fallback) {
  const auto text = o.get(name);
  if (!text) return fallback;
  const auto z = parseComplex(*text);
  if (!z) throw UsageError("--" + name + ": cannot read '" + *text + "' as a complex number");
  return *z;
}

double realArg(const Options& o, const std::string& name, double fallback) {
  const auto text = o.get(name);
  if (!text) return fallback;
  const auto z = parseComplex(*text);
  if (!z || z->imag() != 0.0) throw UsageError("--" + name + ": cannot read '" + *text + "' as a real number");
  return z->real();
}

template <class Int>
Int intArg(const Options& o, const std::string& name, Int fallback) {
  const auto text = o.get(name);
  if (!text) return fallback;
  try {
    std::size_t used = 0;
    const long long value = std::stoll(*text, &used);
    if (used != text->size()) throw std::invalid_argument(*text);
    if (std::is_unsigned_v<Int> && value < 0) throw std::invalid_argument(*text);
    return static_cast<Int>(value);
  } catch (const std::exception&) {
    throw UsageError("--" + name + ": cannot read '" + *text + "' as an integer");
  }
}

std::vector<std::int64_t> intList(const Options& o, const std::string& name) {
  std::vector<std::int64_t> out;
  const auto text = o.get(name);
  if (!text) return out;
  std::stringstream in(*text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw UsageError("--" + name + ": bad entry '" + item + "'");
    }
  }
  return out;
}

wilton::MomentMode modeArg(const std::string& text) {
  const auto mode = wilton::momentModeFromString(text);
  if (!mode) throw UsageError("unknown mode '" + text + "' (classical, regularized, mellin-barnes)");
  return *mode;
}

std::optional<wilton::Strategy> strategyArg(const Options& o) {
  const auto text = o.get("strategy");
  if (!text) return std::nullopt;
  const auto strategy = wilton::strategyFromString(*text);
  if (!strategy) throw UsageError("unknown strategy '" + *text + "' (direct, block-averaged)");
  return strategy;
}

Format formatArg(const Options& o, Format fallback) {
  const auto text = o.get("format");
  if (!text) return fallback;
  if (*text == "json") return Format::json;
  if (*text == "csv") return Format::csv;
  throw UsageError("--format must be json or csv");
}

std::optional<std::uint64_t> termsArg(const Options& o) {
  if (!o.get("terms")) return std::nullopt;
  return intArg<std::uint64_t>(o, "terms", 0);
}

// Runs `command` with stdout or the --output file as its stream.
int withOutput(const Options& o, const std::function<int(std::ostream&)>& command) {
  const auto path = o.get("output");
  if (!path || path->empty() || *path == "-") return command(std::cout);
  std::ostringstream buffer;
  const int code = command(buffer);
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + *path + "'");
  file << buffer.str();
  return code;
}

RunConfig runConfig(const Options& o) {
  RunConfig config;
  config.instance = o.get("instance", "");
  if (config.instance.empty()) throw UsageError("--instance is required");
  const auto [u0, v0] = samplePoint(config.instance);
  config.u = complexArg(o, "u", u0);
  config.v = complexArg(o, "v", v0);
  config.mode = modeArg(o.get("mode", isClassic(config.instance) ? "classical" : "regularized"));
  if (isClassic(config.instance) && config.mode != wilton::MomentMode::classical) {
    throw UsageError("wilton-classic only has the classical mode");
  }
  config.terms = termsArg(o);
  config.strategy = strategyArg(o);
  config.tol = realArg(o, "tol", wilton::kDefaultTolerance);
  config.format = formatArg(o, Format::json);
  return config;
}

int run(int argc, char** argv) {
  CLI::App app("Numerical verification of Wilton-type product formulas for Hecke Dirichlet series", "wiltonlab");
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  Options verify(app.add_subcommand("verify", "Evaluate one identity and write a report"));
  verify.add("instance", "registered instance, or wilton-classic");
  verify.add("u", "first variable, a+bi (default: an instance sample point)");
  verify.add("v", "second variable, a+bi");
  verify.add("mode", "classical | regularized | mellin-barnes (default regularized)");
  verify.add("terms", "series terms N (default 4000 for wilton-classic, 2000 otherwise)");
  verify.add("strategy", "direct | block-averaged (default per instance)");
  verify.add("tol", "target tolerance for the convergence verdict (default 1e-6)");
  verify.add("format", "json | csv (default json)");
  verify.add("output", "output file (default stdout)");

  Options sweep(app.add_subcommand("sweep", "Residual and verdict matrix over a (u, v) grid"));
  sweep.add("instance", "registered instance, or wilton-classic");
  sweep.add("u-grid", "comma list of a+bi values, or start:stop:count");
  sweep.add("v-grid", "comma list of a+bi values, or start:stop:count");
  sweep.add("modes", "comma list of modes (default regularized)");
  sweep.add("terms", "series terms N");
  sweep.add("strategy", "direct | block-averaged");
  sweep.add("tol", "target tolerance");
  sweep.add("output", "output file (default stdout)");

  Options selftest(app.add_subcommand("selftest", "Run the acceptance suite, one JSON line per check"));
  selftest.add("instance", "only the functional-equation and modular-relation checks for this instance");
  selftest.add("output", "output file (default stdout)");
  selftest.add("inject-fault", "corrupt a table before the run (bernoulli)", "");

  Options coeffs(app.add_subcommand("coeffs", "Coefficient table as CSV n,value"));
  coeffs.add("kind", "ones | theta-squares | character-squares | character-squares-weighted | ramanujan-tau | "
                     "eisenstein | rep-count | ideal-count");
  coeffs.add("upto", "last index (default 20)");
  coeffs.add("instance", "take the sequence from a registered instance instead");
  coeffs.add("side", "alpha | beta, with --instance");
  coeffs.add("k", "Eisenstein weight (default 4)");
  coeffs.add("modulus", "character modulus (default 4)");
  coeffs.add("index", "position in the character group (default: first primitive character)");
  coeffs.add("dimension", "sum-of-squares dimension for rep-count (default 2)");
  coeffs.add("gram", "doubled Gram matrix, row major, comma separated");
  coeffs.add("discriminant", "fundamental discriminant for ideal-count (default -4)");
  coeffs.add("output", "output file (default stdout)");

  Options lvalue(app.add_subcommand("lvalue", "Reference value of an L-function as JSON"));
  lvalue.add("series", "riemann-zeta | hurwitz | dirichlet-l | dedekind | epstein | ramanujan-l | eisenstein-l");
  lvalue.add("s", "argument, a+bi (default 2)");
  lvalue.add("tol", "requested tolerance (default 1e-10)");
  lvalue.add("instance", "take phi or psi from a registered instance instead");
  lvalue.add("side", "phi | psi, with --instance");
  lvalue.add("a", "Hurwitz shift in (0, 1]");
  lvalue.add("k", "Eisenstein weight");
  lvalue.add("modulus", "character modulus");
  lvalue.add("index", "position in the character group");
  lvalue.add("kronecker", "use the character (d / .) instead");
  lvalue.add("dimension", "sum-of-squares dimension for epstein");
  lvalue.add("gram", "doubled Gram matrix for epstein");
  lvalue.add("discriminant", "fundamental discriminant for dedekind");
  lvalue.add("output", "output file (default stdout)");

  Options adjudicate(app.add_subcommand("adjudicate", "Moment interpretations and printed readings side by side"));
  adjudicate.add("instance", "registered instance");
  adjudicate.add("u", "first variable (default: an instance sample point)");
  adjudicate.add("v", "second variable");
  adjudicate.add("n-grid", "indices, comma separated (default 1,2,3,4,5,6,12)");
  adjudicate.add("format", "json | csv (default json)");
  adjudicate.add("output", "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify.app()->parsed()) {
      verify.resolve();
      const RunConfig config = runConfig(verify);
      return withOutput(verify, [&](std::ostream& out) { return cmdVerify(config, out); });
    }
    if (sweep.app()->parsed()) {
      sweep.resolve();
      SweepConfig config;
      config.instance = sweep.get("instance", "");
      if (config.instance.empty()) throw UsageError("--instance is required");
      config.uGrid = parseGrid(sweep.get("u-grid", ""));
      config.vGrid = parseGrid(sweep.get("v-grid", ""));
      std::stringstream modes(sweep.get("modes", "regularized"));
      for (std::string item; std::getline(modes, item, ',');) config.modes.push_back(modeArg(item));
      config.terms = termsArg(sweep);
      config.strategy = strategyArg(sweep);
      config.tol = realArg(sweep, "tol", wilton::kDefaultTolerance);
      return withOutput(sweep, [&](std::ostream& out) { return cmdSweep(config, out); });
    }
    if (selftest.app()->parsed()) {
      selftest.resolve();
      SelftestOptions options;
      options.instance = selftest.get("instance");
      options.fault = selftest.get("inject-fault");
      return withOutput(selftest, [&](std::ostream& out) { return cmdSelftest(options, out); });
    }
    if (coeffs.app()->parsed()) {
      coeffs.resolve();
      CoeffsOptions options;
      options.instance = coeffs.get("instance");
      options.kind = coeffs.get("kind", "");
      if (options.kind.empty() && !options.instance) throw UsageError("--kind or --instance is required");
      options.upto = intArg<std::uint64_t>(coeffs, "upto", options.upto);
      options.side = coeffs.get("side", options.side);
      options.weight = intArg<int>(coeffs, "k", options.weight);
      options.modulus = intArg<int>(coeffs, "modulus", options.modulus);
      options.index = intArg<int>(coeffs, "index", options.index);
      options.dimension = intArg<int>(coeffs, "dimension", options.dimension);
      options.gram = intList(coeffs, "gram");
      options.discriminant = intArg<std::int64_t>(coeffs, "discriminant", options.discriminant);
      return withOutput(coeffs, [&](std::ostream& out) { return cmdCoeffs(options, out); });
    }
    if (lvalue.app()->parsed()) {
      lvalue.resolve();
      LValueOptions options;
      options.instance = lvalue.get("instance");
      options.series = lvalue.get("series", "");
      if (options.series.empty() && !options.instance) throw UsageError("--series or --instance is required");
      options.side = lvalue.get("side", options.side);
      options.s = complexArg(lvalue, "s", options.s);
      options.tol = realArg(lvalue, "tol", options.tol);
      options.a = realArg(lvalue, "a", options.a);
      options.weight = intArg<int>(lvalue, "k", options.weight);
      options.modulus = intArg<int>(lvalue, "modulus", options.modulus);
      options.index = intArg<int>(lvalue, "index", options.index);
      options.kroneckerD = intArg<std::int64_t>(lvalue, "kronecker", options.kroneckerD);
      options.dimension = intArg<int>(lvalue, "dimension", options.dimension);
      options.gram = intList(lvalue, "gram");
      options.discriminant = intArg<std::int64_t>(lvalue, "discriminant", options.discriminant);
      return withOutput(lvalue, [&](std::ostream& out) { return cmdLvalue(options, out); });
    }
    if (adjudicate.app()->parsed()) {
      adjudicate.resolve();
      AdjudicateOptions options;
      options.instance = adjudicate.get("instance", "");
      if (options.instance.empty()) throw UsageError("--instance is required");
      if (adjudicate.get("u")) options.u = complexArg(adjudicate, "u", 0.0);
      if (adjudicate.get("v")) options.v = complexArg(adjudicate, "v", 0.0);
      if (adjudicate.get("n-grid")) {
        options.nGrid.clear();
        for (const auto n : intList(adjudicate, "n-grid")) {
          if (n < 1) throw UsageError("--n-grid entries must be positive");
          options.nGrid.push_back(static_cast<std::uint64_t>(n));
        }
      }
      options.format = formatArg(adjudicate, Format::json);
      return withOutput(adjudicate, [&](std::ostream& out) { return cmdAdjudicate(options, out); });
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.kind() << ": " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
