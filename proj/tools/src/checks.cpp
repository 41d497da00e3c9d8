#include "checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>

#include "wiltonlab/arithmetic.hpp"
#include "wiltonlab/hecke.hpp"
#include "wiltonlab/lfun.hpp"
#include "wiltonlab/numerics.hpp"
#include "wiltonlab/wilton.hpp"

namespace wiltonlab::cli {
namespace {

using hecke::findInstance;

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

CheckResult bounded(std::string name, int criterion, double value, double threshold, std::string detail = {}) {
  return {std::move(name), criterion, true, value <= threshold, value, threshold, std::move(detail)};
}

class Suite {
 public:
  explicit Suite(const SuiteOptions& options) : options_(options) {}

  bool wants(int criterion) const {
    if (options_.instance) return criterion == 3 || criterion == 4;
    return options_.criteria.empty() ||
           std::find(options_.criteria.begin(), options_.criteria.end(), criterion) != options_.criteria.end();
  }

  bool wantsInstance(const std::string& name) const { return !options_.instance || findInstance(*options_.instance).name == name; }

  // Runs `body`; an exception becomes a failed check carrying its message.
  void run(const std::string& name, int criterion, const std::function<CheckResult()>& body) {
    try {
      results_.push_back(body());
    } catch (const Error& e) {
      results_.push_back({name, criterion, true, false, std::nan(""), 0.0, std::string(e.kind()) + ": " + e.what()});
    } catch (const std::exception& e) {
      results_.push_back({name, criterion, true, false, std::nan(""), 0.0, e.what()});
    }
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  SuiteOptions options_;
  std::vector<CheckResult> results_;
};

void supporting(Suite& suite) {
  suite.run("numerics.bernoulli_table", 0, [] {
    double worst = 0.0;
    int bad = 0;
    for (int k = 2; k <= 60; k += 2) {
      const mpq_class exact = numerics::bernoulli(k);
      if (exact != oracle::bernoulliAkiyamaTanigawa(k)) ++bad;
      const double d = exact.get_d();
      worst = std::max(worst, std::abs(numerics::bernoulliDouble(k) - d) / std::abs(d));
    }
    auto r = bounded("numerics.bernoulli_table", 0, worst, 1e-15,
                     "double table vs exact; exact vs Akiyama-Tanigawa: " + std::to_string(bad) + " mismatches");
    r.passed = r.passed && bad == 0;
    return r;
  });
}

void criterion1(Suite& suite) {
  const auto report = std::make_shared<wilton::IdentityReport>();
  suite.run("c1.wilton_classic.residual", 1, [&] {
    *report = wilton::evaluateWiltonClassic(2.0, 3.0, 4000);
    return bounded("c1.wilton_classic.residual", 1, report->residual, 1e-4,
                   "lhs " + formatComplex(report->lhs) + ", verdict " + wilton::toString(report->convergenceVerdict));
  });
  suite.run("c1.wilton_classic.tail_law", 1, [&] {
    if (report->N == 0) throw DomainError("residual run failed");
    const double ratio = report->residualDoubled / report->residual;
    CheckResult r{"c1.wilton_classic.tail_law", 1, true, ratio >= 0.3 && ratio <= 0.7, ratio, 0.7,
                  "residual(8000) / residual(4000), required in [0.3, 0.7]"};
    return r;
  });
}

void criterion2(Suite& suite) {
  for (const char* name : {"theta_riemann", "delta_ramanujan", "dirichlet_odd_q4"}) {
    const auto& sig = findInstance(name).signature;
    double regWorst = 0.0;
    double mbWorst = 0.0;
    const std::string base = std::string("c2.moments.") + name;
    suite.run(base + ".regularized", 2, [&] {
      for (const std::uint64_t n : {1, 5, 20}) {
        for (const double shift : {0.75, 0.25}) {
          const Complex u = sig.k - shift;
          const Complex classical = wilton::besselMomentClassical(sig, n, u).value;
          regWorst = std::max(regWorst, rel(wilton::besselMomentRegularized(sig, n, u), classical));
          mbWorst = std::max(mbWorst, rel(wilton::besselMomentMellinBarnes(sig, n, u), classical));
        }
      }
      return bounded(base + ".regularized", 2, regWorst, 1e-9, "max relative gap to classical");
    });
    suite.run(base + ".mellin_barnes", 2, [&] {
      return bounded(base + ".mellin_barnes", 2, mbWorst, 1e-8, "max relative gap to classical");
    });
  }
}

void criterion3(Suite& suite) {
  for (const auto& instance : hecke::registry()) {
    if (!suite.wantsInstance(instance.name)) continue;
    const std::string name = "c3.functional_equation." + instance.name;
    suite.run(name, 3, [&] {
      double worst = 0.0;
      for (const auto s : instance.feGrid) worst = std::max(worst, hecke::functionalEquationResidual(instance.signature, s));
      return bounded(name, 3, worst, 1e-7, std::to_string(instance.feGrid.size()) + " points");
    });
  }
}

void criterion4(Suite& suite) {
  for (const char* id : {"theta_riemann", "delta_ramanujan", "eisenstein_4", "epstein_selfdual"}) {
    if (!suite.wantsInstance(id)) continue;
    const auto& sig = findInstance(id).signature;
    for (const double y : {0.5, 1.0, 2.0}) {
      const std::string name = std::string("c4.modular_relation.") + id + ".y" + formatDouble(y);
      suite.run(name, 4, [&] {
        const std::uint64_t cutoff = hecke::modularCutoff(sig, y);
        return bounded(name, 4, hecke::modularRelationResidual(sig, y, cutoff), 1e-10,
                       "cutoff " + std::to_string(cutoff));
      });
    }
  }
}

void criterion5(Suite& suite) {
  suite.run("c5.tau_oracle", 5, [] {
    const auto naive = oracle::etaProductNaive(100);
    int bad = 0;
    for (std::uint64_t n = 1; n <= 100; ++n) bad += arithmetic::ramanujanTau(n) != naive[n - 1];
    return bounded("c5.tau_oracle", 5, bad, 0.0, "n <= 100, mismatches against the factor-by-factor product");
  });
  suite.run("c5.ideal_count_qi", 5, [] {
    const auto field = arithmetic::imagQuadField(-4);
    const auto q = arithmetic::QuadraticForm::sumOfSquares(2);
    int bad = 0;
    for (std::uint64_t n = 1; n <= 500; ++n) bad += 4 * arithmetic::idealCount(field, n) != arithmetic::repCount(q, n);
    return bounded("c5.ideal_count_qi", 5, bad, 0.0, "n <= 500, mismatches of v(n) against r(n)/4");
  });
  suite.run("c5.gauss_sum_modulus", 5, [] {
    double worst = 0.0;
    int count = 0;
    for (int q = 2; q <= 20; ++q) {
      for (const auto& chi : arithmetic::characterGroup(q)) {
        if (!chi.isPrimitive()) continue;
        ++count;
        worst = std::max(worst, std::abs(std::norm(arithmetic::gaussSum(chi)) - q));
      }
    }
    return bounded("c5.gauss_sum_modulus", 5, worst, 1e-12, std::to_string(count) + " primitive characters");
  });
}

void criterion6(Suite& suite) {
  suite.run("c6.zeta2", 6, [] {
    return bounded("c6.zeta2", 6, rel(lfun::riemannZeta(2.0), kPi * kPi / 6.0), 1e-12, "against pi^2/6");
  });
  suite.run("c6.zeta4", 6, [] {
    return bounded("c6.zeta4", 6, rel(lfun::riemannZeta(4.0), std::pow(kPi, 4) / 90.0), 1e-12, "against pi^4/90");
  });
  suite.run("c6.catalan", 6, [] {
    const auto chi = arithmetic::kroneckerCharacter(-4);
    return bounded("c6.catalan", 6, std::abs(lfun::dirichletL(chi, 2.0) - oracle::kCatalan), 1e-10,
                   "L(2, chi_-4) against Catalan's constant");
  });
  suite.run("c6.dedekind_qi_routes", 6, [] {
    const auto field = arithmetic::imagQuadField(-4);
    const auto factored = lfun::dedekindZetaEval(field, 2.0);
    const auto summed = lfun::dedekindZetaCoefficients(field, 2.0, 10000);
    const double bound = factored.errorEstimate + summed.errorEstimate;
    const double gap = std::abs(factored.value - summed.value);
    return CheckResult{"c6.dedekind_qi_routes", 6, true, gap <= bound, gap, bound,
                       "factorization vs coefficient sum to 10^4 plus tail bound"};
  });
  const auto q = arithmetic::QuadraticForm::sumOfSquares(2);
  const auto chi = arithmetic::kroneckerCharacter(-4);
  for (const double s : {2.0, 3.0, 4.0}) {
    const std::string name = "c6.epstein_two_squares.s" + formatDouble(s);
    suite.run(name, 6, [&] {
      const Complex oracle = 4.0 * lfun::riemannZeta(s) * lfun::dirichletL(chi, s);
      return bounded(name, 6, std::abs(lfun::epsteinZ(q, s, 1e-10).value - oracle), 1e-8, "against 4 zeta(s) beta(s)");
    });
  }
}

void criterion7(Suite& suite) {
  const auto& sig = findInstance("dedekind_qi").signature;
  suite.run("c7.residue_formula", 7, [&] {
    return bounded("c7.residue_formula", 7, std::abs(hecke::residueAtK(sig, hecke::Side::phi) - kPi / 4.0), 1e-15,
                   "res zeta_Q(i)(1) against pi/4");
  });
  suite.run("c7.residue_extrapolation", 7, [&] {
    const auto field = arithmetic::imagQuadField(-4);
    const double h = 1e-3;
    // The symmetric mean of (s-1) zeta_K(s) at 1 +- h cancels the linear term.
    const Complex up = h * lfun::dedekindZetaEval(field, 1.0 + h).value;
    const Complex down = -h * lfun::dedekindZetaEval(field, 1.0 - h).value;
    const Complex limit = 0.5 * (up + down);
    return bounded("c7.residue_extrapolation", 7, std::abs(limit - hecke::residueAtK(sig, hecke::Side::phi)), 1e-4,
                   "limit estimate " + formatComplex(limit));
  });
}

void criterion8(Suite& suite) {
  for (const char* id : {"theta_riemann", "delta_ramanujan", "dedekind_qi"}) {
    const std::string name = std::string("c8.derivative.") + id;
    suite.run(name, 8, [&] {
      const auto& sig = findInstance(id).signature;
      const Complex u = sig.k + 0.5;
      const double a = wilton::defaultAbscissa(sig, u);
      const double h = 1e-4;
      const Complex fd = (wilton::mellinBarnesMoment(sig, 1, u, 1.0 + h, a).value -
                          wilton::mellinBarnesMoment(sig, 1, u, 1.0 - h, a).value) /
                         (2.0 * h);
      const Complex exact = wilton::momentDerivativeClosedForm(sig, 1, u, 1.0);
      return bounded(name, 8, std::abs(fd - exact) / (1.0 + std::abs(exact)), 1e-5,
                     "n = 1, u = k + 1/2, central difference h = 1e-4");
    });
  }
}

void criterion9(Suite& suite) {
  const std::pair<const char*, std::pair<double, double>> points[] = {
      {"eisenstein_4", {3.7, 3.8}}, {"dirichlet_odd_q4", {1.4, 1.6}}, {"dirichlet_odd_q5", {1.4, 1.6}}};
  for (const auto& [id, uv] : points) {
    const std::string name = std::string("c9.misprint.") + id;
    suite.run(name, 9, [&] {
      const std::uint64_t grid[] = {1, 2, 3, 4, 5, 6, 12};
      const auto table = wilton::adjudicateInterpretations(findInstance(id), grid, uv.first, uv.second);
      double corrected = 0.0;
      double typeset = 0.0;
      for (const auto& row : table.readings) {
        corrected = std::max(corrected, row.correctedDeviation);
        typeset = std::max(typeset, row.typesetDeviation);
      }
      return CheckResult{name, 9, false, table.matchingReading == "corrected", corrected, wilton::kAgreementTolerance,
                         "matching reading: " + table.matchingReading + "; max typeset deviation " +
                             formatDouble(typeset)};
    });
  }
  suite.run("c9.theta_sweep", 9, [] {
    const std::string csv = sweepCsv(adjudicationSweep());
    std::map<std::string, int> verdicts;
    std::size_t rows = 0;
    std::size_t start = csv.find('\n') + 1;
    while (start < csv.size()) {
      const std::size_t end = csv.find('\n', start);
      const std::string line = csv.substr(start, end - start);
      // verdict is the 24th column
      std::size_t pos = 0;
      for (int c = 0; c < 23; ++c) pos = line.find(',', pos) + 1;
      ++verdicts[line.substr(pos, line.find(',', pos) - pos)];
      ++rows;
      start = end + 1;
    }
    std::string detail = "fnv1a64 " + hex64(fnv1a(csv));
    for (const auto& [verdict, count] : verdicts) detail += "; " + verdict + " " + std::to_string(count);
    return CheckResult{"c9.theta_sweep", 9, false, rows == 75, static_cast<double>(rows), 75.0, detail};
  });
}

void criterion10(Suite& suite) {
  suite.run("c10.identity_threads", 10, [] {
    const auto& theta = findInstance("theta_riemann");
    std::string dumps[2];
    for (int i = 0; i < 2; ++i) {
      ScopedThreads threads(i == 0 ? 1 : 4);
      dumps[i] = dumpJson(reportJson(wilton::evaluateIdentity(theta, 0.75, 0.65, wilton::MomentMode::regularized,
                                                              400, wilton::Strategy::blockAveraged)));
    }
    return CheckResult{"c10.identity_threads", 10, true, dumps[0] == dumps[1], dumps[0] == dumps[1] ? 0.0 : 1.0, 0.0,
                       "theta_riemann report bytes, 1 vs 4 workers"};
  });
  suite.run("c10.sweep_threads", 10, [] {
    SweepConfig config;
    config.instance = "theta_riemann";
    config.uGrid = parseGrid("0.6:0.9:3");
    config.vGrid = parseGrid("0.6:0.9:3");
    config.modes = {wilton::MomentMode::classical};
    config.terms = 400;
    std::string csv[2];
    for (int i = 0; i < 2; ++i) {
      ScopedThreads threads(i == 0 ? 1 : 4);
      csv[i] = sweepCsv(config);
    }
    return CheckResult{"c10.sweep_threads", 10, true, csv[0] == csv[1], csv[0] == csv[1] ? 0.0 : 1.0, 0.0,
                       "3 x 3 sweep bytes, 1 vs 4 workers"};
  });
}

}  // namespace

Json checkJson(const CheckResult& r) {
  Json j = Json::object();
  j["schema"] = kSelftestSchema;
  j["check"] = r.name;
  j["criterion"] = r.criterion > 0 ? Json(r.criterion) : Json(nullptr);
  j["asserted"] = r.asserted;
  j["passed"] = r.passed;
  j["value"] = numberJson(r.value);
  j["threshold"] = numberJson(r.threshold);
  j["detail"] = r.detail;
  return j;
}

std::vector<CheckResult> runSuite(const SuiteOptions& options) {
  Suite suite(options);
  if (!options.instance && options.criteria.empty()) supporting(suite);
  const std::pair<int, void (*)(Suite&)> groups[] = {{1, criterion1}, {2, criterion2}, {3, criterion3},
                                                      {4, criterion4}, {5, criterion5}, {6, criterion6},
                                                      {7, criterion7}, {8, criterion8}, {9, criterion9},
                                                      {10, criterion10}};
  for (const auto& [criterion, body] : groups) {
    if (suite.wants(criterion)) body(suite);
  }
  return suite.take();
}

SweepConfig adjudicationSweep() {
  SweepConfig config;
  config.instance = "theta_riemann";
  config.uGrid = parseGrid("0.55:0.95:5");
  config.vGrid = parseGrid("0.55:0.95:5");
  config.modes = {wilton::MomentMode::classical, wilton::MomentMode::regularized, wilton::MomentMode::mellinBarnes};
  return config;
}

ScopedThreads::ScopedThreads(unsigned count) {
  if (const char* old = std::getenv("WILTONLAB_THREADS")) previous_ = old;
  setenv("WILTONLAB_THREADS", std::to_string(count).c_str(), 1);
}

ScopedThreads::~ScopedThreads() {
  if (previous_) {
    setenv("WILTONLAB_THREADS", previous_->c_str(), 1);
  } else {
    unsetenv("WILTONLAB_THREADS");
  }
}

namespace oracle {

std::vector<arithmetic::Int128> etaProductNaive(std::size_t count) {
  // c holds prod (1 - q^n)^24 up to q^(count - 1); the leading q shifts it.
  std::vector<arithmetic::Int128> c(count, 0);
  if (count == 0) return c;
  c[0] = 1;
  for (std::size_t n = 1; n < count; ++n) {
    for (int power = 0; power < 24; ++power) {
      for (std::size_t i = count; i-- > n;) c[i] -= c[i - n];
    }
  }
  return c;
}

mpq_class bernoulliAkiyamaTanigawa(int n) {
  std::vector<mpq_class> a(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    a[static_cast<std::size_t>(m)] = mpq_class(1, m + 1);
    for (int j = m; j >= 1; --j) {
      a[static_cast<std::size_t>(j - 1)] = j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
    }
  }
  return a[0];
}

}  // namespace oracle
}  // namespace wiltonlab::cli
