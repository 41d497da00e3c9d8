#include <cmath>
#include <sstream>
#include <vector>

#include "wilton/detail.hpp"
#include "wiltonlab/arithmetic.hpp"
#include "wiltonlab/lfun.hpp"
#include "wiltonlab/parallel.hpp"
#include "wiltonlab/wilton.hpp"

namespace wiltonlab::wilton {
namespace {

using hecke::RegistryInstance;
using hecke::Side;

constexpr std::size_t kMaxReportedFailures = 8;

std::string describe(Complex z) {
  std::ostringstream out;
  out.precision(10);
  out << z.real();
  if (z.imag() != 0.0) out << (z.imag() < 0 ? "-" : "+") << std::fabs(z.imag()) << "i";
  return out.str();
}

// phi(s) or psi(s): the reference engine, or the theta continuation outside its domain.
Complex seriesValue(const hecke::HeckeSignature& sig, Side side, Complex s) {
  const auto& ref = side == Side::phi ? sig.phiRef : sig.psiRef;
  try {
    return ref.evaluate(s, 1e-12).value;
  } catch (const DomainError&) {
  } catch (const ToleranceNotMet&) {
  }
  return lfun::continuedSeries(sig.thetaPair(side), s).value;
}

const std::string& family(const RegistryInstance& instance) { return instance.family; }

Complex sigmaOf(const std::function<double(std::uint64_t)>& a, const std::function<double(std::uint64_t)>& b,
                Complex z, std::uint64_t n) {
  numerics::CompensatedSum sum;
  for (const auto d : arithmetic::divisors(n)) sum.add(a(d) * b(n / d) * arithmetic::powInt(d, z));
  return sum.value();
}

}  // namespace

std::uint64_t theoremIndex(const RegistryInstance& instance, std::uint64_t m) {
  return instance.signature.alphaSeq.squareSupported() ? m * m : m;
}

std::optional<std::string> domainViolation(const RegistryInstance& instance, Complex u, Complex v, MomentMode mode) {
  const auto& sig = instance.signature;
  const Complex U = sig.variableMap.toTheorem(u);
  const Complex V = sig.variableMap.toTheorem(v);
  for (const auto& [name, corollary, theorem] : {std::tuple{"u", u, U}, std::tuple{"v", v, V}}) {
    if (!isFinite(corollary)) return std::string(name) + " is not finite";
    int m = 0;
    if (detail::nearMomentPole(sig.k, theorem, m)) {
      return std::string(name) + " = " + describe(corollary) + " is excluded (theorem variable k + " +
             std::to_string(m) + ")";
    }
    if (mode == MomentMode::classical && !(theorem.real() < sig.k)) {
      return std::string("classical mode needs Re ") + name + " < " +
             describe(sig.variableMap.toCorollary(sig.k)) + " (theorem variable below k)";
    }
  }
  const bool residues = hecke::residueAtK(sig, Side::phi) != 0.0 || hecke::residueAtK(sig, Side::psi) != 0.0;
  if (residues && std::abs(U + V - 2.0 * sig.k) < kPoleGuard) {
    return "u + v hits the pole of the residue terms";
  }
  return std::nullopt;
}

Complex theoremTerm(const RegistryInstance& instance, SeriesSide side, std::uint64_t n, Complex u, Complex v,
                    MomentMode mode) {
  if (n == 0) throw DomainError("theoremTerm: n must be positive");
  const auto& sig = instance.signature;
  const Complex U = sig.variableMap.toTheorem(u);
  const Complex V = sig.variableMap.toTheorem(v);
  const Complex z = sig.k - U - V;
  const bool beta = side == SeriesSide::betaSeries;
  const auto& seq = beta ? sig.betaSeq : sig.alphaSeq;
  const Complex coefficient = arithmetic::divisorConvolution(seq, seq, z, n);
  if (coefficient == 0.0) return 0.0;
  const Complex prefactor = beta ? -kTwoPi * sig.gamma / sig.lambda : -kTwoPi / (sig.lambda * sig.gamma);
  const double weight = std::pow(static_cast<double>(n), (1.0 - sig.k) / 2.0);
  return prefactor * coefficient * weight * besselMoment(sig, n, beta ? U : V, mode);
}

double printedScale(const RegistryInstance& instance) {
  if (family(instance) != "eisenstein") return 1.0;
  const int k = instance.signature.alphaSeq.eisensteinWeight();
  const double ratio = mpq_class(mpq_class(2 * k) / numerics::bernoulli(k)).get_d();
  return ratio * ratio;
}

bool hasSuspectedMisprint(const RegistryInstance& instance) {
  return family(instance) == "eisenstein" || family(instance) == "dirichlet_odd";
}

Complex printedTerm(const RegistryInstance& instance, SeriesSide side, std::uint64_t m, Complex u, Complex v,
                    MomentMode mode, Reading reading) {
  if (m == 0) throw DomainError("printedTerm: m must be positive");
  const auto& sig = instance.signature;
  const bool beta = side == SeriesSide::betaSeries;
  const Complex w = beta ? u : v;  // the variable inside the moment
  const Complex moment = besselMoment(sig, theoremIndex(instance, m), sig.variableMap.toTheorem(w), mode);
  const double md = static_cast<double>(m);
  const std::string& fam = family(instance);

  if (fam == "theta_riemann") {
    return -kPi * arithmetic::divisorSigma(1.0 - u - v, m) * std::sqrt(md) * moment;
  }
  if (fam == "dirichlet_even" || fam == "dirichlet_odd") {
    const auto& chi = *sig.alphaSeq.character();
    const double q = chi.modulus();
    const bool odd = fam == "dirichlet_odd";
    const Complex i(0.0, 1.0);
    const Complex gauss = odd ? sig.gamma * i * std::sqrt(q) : sig.gamma * std::sqrt(q);
    const Complex sigma = arithmetic::divisorSigma(1.0 - u - v, m);
    const double weight = (odd && reading == Reading::asTypeset) ? std::pow(md, -1.5) : std::sqrt(md);
    if (!odd) {
      if (beta) return -(kPi * gauss / std::pow(q, 1.5)) * std::conj(chi(m)) * sigma * weight * moment;
      return -(kPi / (std::sqrt(q) * gauss)) * chi(m) * sigma * weight * moment;
    }
    if (beta) return (i * kPi * gauss / std::pow(q, 1.5)) * std::conj(chi(m)) * sigma * weight * moment;
    return -(i * kPi / (std::sqrt(q) * gauss)) * chi(m) * sigma * weight * moment;
  }
  if (fam == "delta_ramanujan") {
    auto tau = [](std::uint64_t d) { return static_cast<double>(arithmetic::ramanujanTau(d)); };
    return -kTwoPi * sigmaOf(tau, tau, 12.0 - u - v, m) * std::pow(md, -5.5) * moment;
  }
  if (fam == "eisenstein") {
    const int k = sig.alphaSeq.eisensteinWeight();
    auto sigmaK = [k](std::uint64_t d) { return arithmetic::divisorSigma(k - 1.0, d).real(); };
    const Complex z = static_cast<double>(k) - u - v;
    Complex star;
    if (reading == Reading::asTypeset) {
      const double whole = sigmaK(m);
      star = sigmaOf([whole](std::uint64_t) { return whole; }, sigmaK, z, m);
    } else {
      star = sigmaOf(sigmaK, sigmaK, z, m);
    }
    const double sign = ((k / 2) % 2 == 0) ? -1.0 : 1.0;  // (-1)^{1+k/2}
    return sign * kTwoPi * star * std::pow(md, (1.0 - k) / 2.0) * moment;
  }
  if (fam == "epstein") {
    const auto& q = *sig.alphaSeq.form();
    const auto& qInv = *sig.betaSeq.form();
    const double dim = q.dimension();
    const double rootD = std::sqrt(q.discriminantDouble());
    const Complex z = dim / 2.0 - u - v;
    const double weight = std::pow(md, (2.0 - dim) / 4.0);
    const auto& form = beta ? qInv : q;
    auto r = [&form](std::uint64_t d) { return static_cast<double>(arithmetic::repCount(form, d)); };
    const double prefactor = beta ? -kPi / rootD : -kPi * rootD;
    return prefactor * sigmaOf(r, r, z, m) * weight * moment;
  }
  if (fam == "dedekind") {
    const auto& field = *sig.alphaSeq.field();
    auto vk = [&field](std::uint64_t d) { return static_cast<double>(arithmetic::idealCount(field, d)); };
    const double rootD = std::sqrt(static_cast<double>(-field.discriminant));
    return -(kTwoPi / rootD) * sigmaOf(vk, vk, 1.0 - u - v, m) * moment;
  }
  // Families without a printed corollary: the generic term.
  return theoremTerm(instance, side, theoremIndex(instance, m), u, v, mode);
}

Complex residuePart(const RegistryInstance& instance, Complex uTheorem, Complex vTheorem) {
  const auto& sig = instance.signature;
  const Complex resPhi = hecke::residueAtK(sig, Side::phi);
  const Complex resPsi = hecke::residueAtK(sig, Side::psi);
  const Complex shifted = uTheorem + vTheorem - sig.k;
  Complex part = 0.0;
  if (resPhi != 0.0) part += resPhi / (uTheorem - sig.k) * seriesValue(sig, Side::psi, shifted);
  if (resPsi != 0.0) part += resPsi / (vTheorem - sig.k) * seriesValue(sig, Side::phi, shifted);
  return part;
}

IdentityReport evaluateIdentity(const RegistryInstance& instance, Complex u, Complex v, MomentMode mode,
                                std::uint64_t N, Strategy strategy, double tol) {
  if (N < 16) throw DomainError("evaluateIdentity: N must be at least 16");
  if (auto violation = domainViolation(instance, u, v, mode)) throw DomainError(*violation);
  const auto& sig = instance.signature;

  IdentityReport report;
  report.instance = instance.name;
  report.u = u;
  report.v = v;
  report.uTheorem = sig.variableMap.toTheorem(u);
  report.vTheorem = sig.variableMap.toTheorem(v);
  report.mode = mode;
  report.strategy = strategy;
  report.N = N;

  try {
    report.lhs = seriesValue(sig, Side::phi, report.uTheorem) * seriesValue(sig, Side::psi, report.vTheorem);
    report.residuePart = residuePart(instance, report.uTheorem, report.vTheorem);
  } catch (const Error& e) {
    report.failures.push_back(std::string("reference: ") + e.what());
  }

  const std::size_t count = 2 * N;
  std::vector<Complex> alpha(count), beta(count);
  std::vector<std::string> errors(count);
  parallelFor(count, [&](std::size_t i) {
    const std::uint64_t n = theoremIndex(instance, i + 1);
    try {
      beta[i] = theoremTerm(instance, SeriesSide::betaSeries, n, u, v, mode);
      alpha[i] = theoremTerm(instance, SeriesSide::alphaSeries, n, u, v, mode);
    } catch (const Error& e) {
      beta[i] = alpha[i] = 0.0;
      errors[i] = "n = " + std::to_string(n) + ": " + e.kind() + ": " + e.what();
    }
  });
  for (std::size_t i = 0; i < count; ++i) {
    if (largeArgument(sig, theoremIndex(instance, i + 1))) ++report.largeArgumentTerms;
    if (!errors[i].empty() && report.failures.size() < kMaxReportedFailures) report.failures.push_back(errors[i]);
  }
  detail::assemble(report, alpha, beta, tol);
  return report;
}

}  // namespace wiltonlab::wilton
