#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "wiltonlab/hecke.hpp"
#include "wiltonlab/numerics.hpp"

namespace wiltonlab::hecke {

namespace {

using nlohmann::json;
using arithmetic::CoefficientSeq;
using lfun::LSeriesRef;

std::vector<Complex> analyticGrid(double k) {
  return {{k / 2, 0.9}, {k / 2 - 0.35, 2.1}, {k / 2 + 0.35, -1.7}, {k + 0.6, 0.5}, {-0.4, 0.8}};
}

arithmetic::DirichletCharacter characterFromParams(const json& p) {
  return arithmetic::DirichletCharacter(p.at("modulus").get<int>(), p.at("order").get<int>(),
                                        p.at("exponents").get<std::vector<int>>());
}

json characterParams(const arithmetic::DirichletCharacter& chi) {
  return {{"modulus", chi.modulus()}, {"order", chi.order()}, {"exponents", chi.exponents()}};
}

RegistryInstance dirichletInstance(const std::string& name, const std::string& family, const json& p) {
  const auto chi = characterFromParams(p);
  const bool odd = family == "dirichlet_odd";
  if (!chi.isPrimitive() || chi.isPrincipal()) throw DomainError(name + ": character must be primitive");
  if ((chi.parity() == arithmetic::Parity::odd) != odd) throw DomainError(name + ": character parity does not match family");
  const auto bar = chi.conjugate();
  const double q = chi.modulus();
  Complex gauss = arithmetic::gaussSum(chi);
  if (chi.isReal()) {
    // Real primitive characters have tau = sqrt(q) or i sqrt(q) exactly.
    gauss = odd ? Complex(0.0, std::sqrt(q)) : Complex(std::sqrt(q), 0.0);
  }
  if (odd) {
    HeckeSignature sig{2.0 * q, 1.5, gauss / (Complex(0.0, 1.0) * std::sqrt(q)),
                       CoefficientSeq::characterSquaresWeighted(chi), CoefficientSeq::characterSquaresWeighted(bar),
                       LSeriesRef::dirichletL(chi).withArgument(2.0, -1.0),
                       LSeriesRef::dirichletL(bar).withArgument(2.0, -1.0), VariableMap{1.0, 2.0}};
    return {name, family, p.dump(), std::move(sig),
            "phi(s) = L(2s - 1, chi), psi(s) = L(2s - 1, conj chi); alpha at m^2 is m chi(m)", true,
            analyticGrid(1.5)};
  }
  HeckeSignature sig{2.0 * q, 0.5, gauss / std::sqrt(q), CoefficientSeq::characterSquares(chi),
                     CoefficientSeq::characterSquares(bar), LSeriesRef::dirichletL(chi).withArgument(2.0, 0.0),
                     LSeriesRef::dirichletL(bar).withArgument(2.0, 0.0), VariableMap{0.0, 2.0}};
  return {name, family, p.dump(), std::move(sig),
          "phi(s) = L(2s, chi), psi(s) = L(2s, conj chi); alpha at m^2 is chi(m)", true, analyticGrid(0.5)};
}

arithmetic::DirichletCharacter pickCharacter(int q, arithmetic::Parity parity, int order) {
  for (const auto& chi : arithmetic::characterGroup(q)) {
    if (chi.parity() == parity && chi.order() == order && chi.isPrimitive()) return chi;
  }
  throw DomainError("no character with the requested parity and order");
}

std::string canonical(std::string name) {
  std::replace(name.begin(), name.end(), '-', '_');
  return name;
}

}  // namespace

RegistryInstance makeInstance(const std::string& name, const std::string& family, const std::string& params) {
  json p = params.empty() ? json::object() : json::parse(params);
  if (family == "theta_riemann") {
    HeckeSignature sig{2.0, 0.5, 1.0, CoefficientSeq::thetaSquares(), CoefficientSeq::thetaSquares(),
                       LSeriesRef::riemannZeta().withArgument(2.0, 0.0),
                       LSeriesRef::riemannZeta().withArgument(2.0, 0.0), VariableMap{0.0, 2.0}};
    return {name, family, p.dump(), std::move(sig),
            "phi(s) = zeta(2s) over the squares; alpha_0 = 1/2 is fixed by the residue 1/2 of zeta(2s) at s = 1/2",
            true, analyticGrid(0.5)};
  }
  if (family == "dirichlet_even" || family == "dirichlet_odd") return dirichletInstance(name, family, p);
  if (family == "delta_ramanujan") {
    HeckeSignature sig{1.0, 12.0, 1.0, CoefficientSeq::ramanujanTau(), CoefficientSeq::ramanujanTau(),
                       LSeriesRef::ramanujanL(), LSeriesRef::ramanujanL(), VariableMap{}};
    return {name, family, p.dump(), std::move(sig), "cusp form Delta of weight 12; phi = psi = L_tau", false,
            {{10.0, 0.0}, {10.5, 1.0}, {11.0, 2.0}, {12.0, -1.0}, {13.0, 0.5}}};
  }
  if (family == "eisenstein") {
    const int k = p.at("k").get<int>();
    HeckeSignature sig{1.0, static_cast<double>(k), (k / 2) % 2 == 0 ? 1.0 : -1.0, CoefficientSeq::eisenstein(k),
                       CoefficientSeq::eisenstein(k), LSeriesRef::eisensteinL(k), LSeriesRef::eisensteinL(k),
                       VariableMap{}};
    return {name, family, p.dump(), std::move(sig),
            "normalized Eisenstein series E_" + std::to_string(k) + ", alpha_0 = 1", false, analyticGrid(k)};
  }
  if (family == "epstein") {
    const int m = p.at("dimension").get<int>();
    const arithmetic::QuadraticForm q(m, p.at("doubledGram").get<std::vector<std::int64_t>>());
    const arithmetic::QuadraticForm inv = q.inverse();
    const double d = q.discriminantDouble();
    HeckeSignature sig{2.0, m / 2.0, 1.0 / std::sqrt(d), CoefficientSeq::repCount(q), CoefficientSeq::repCount(inv),
                       LSeriesRef::epstein(q), LSeriesRef::epstein(inv), VariableMap{}};
    const double k = m / 2.0;
    std::vector<Complex> grid{{k + 2.0, 0.0}, {k + 2.5, 1.0}, {k + 3.0, -0.7}, {k + 3.5, 2.0}, {k + 4.0, 0.3}};
    if (m >= 4) grid = {{k + 3.0, 0.0}, {k + 3.5, 1.0}, {k + 4.0, -0.5}, {k + 4.5, 1.5}, {k + 5.0, 0.2}};
    return {name, family, p.dump(), std::move(sig),
            "Z(s; Q) paired with Z(s; Q^-1); Q = " + q.describe(), true, std::move(grid)};
  }
  if (family == "dedekind") {
    const auto field = arithmetic::imagQuadField(p.at("discriminant").get<std::int64_t>());
    HeckeSignature sig{std::sqrt(static_cast<double>(-field.discriminant)), 1.0, 1.0,
                       CoefficientSeq::idealCount(field), CoefficientSeq::idealCount(field),
                       LSeriesRef::dedekind(field), LSeriesRef::dedekind(field), VariableMap{}};
    return {name, family, p.dump(), std::move(sig),
            "zeta_K for d_K = " + std::to_string(field.discriminant) + "; alpha_0 = h_K / w_K", true,
            analyticGrid(1.0)};
  }
  throw DomainError("unknown instance family '" + family + "'");
}

const std::vector<RegistryInstance>& registry() {
  static const std::vector<RegistryInstance> instances = [] {
    using arithmetic::Parity;
    std::vector<RegistryInstance> out;
    out.push_back(makeInstance("theta_riemann", "theta_riemann", "{}"));
    out.push_back(makeInstance("dirichlet_even_q5", "dirichlet_even",
                               characterParams(arithmetic::kroneckerCharacter(5)).dump()));
    out.push_back(makeInstance("dirichlet_even_q7", "dirichlet_even",
                               characterParams(pickCharacter(7, Parity::even, 3)).dump()));
    out.push_back(makeInstance("dirichlet_odd_q4", "dirichlet_odd",
                               characterParams(arithmetic::kroneckerCharacter(-4)).dump()));
    out.push_back(makeInstance("dirichlet_odd_q5", "dirichlet_odd",
                               characterParams(pickCharacter(5, Parity::odd, 4)).dump()));
    out.push_back(makeInstance("delta_ramanujan", "delta_ramanujan", "{}"));
    out.push_back(makeInstance("eisenstein_4", "eisenstein", R"({"k":4})"));
    out.push_back(makeInstance("eisenstein_6", "eisenstein", R"({"k":6})"));
    out.push_back(makeInstance("epstein_selfdual", "epstein", R"({"dimension":2,"doubledGram":[2,0,0,2]})"));
    out.push_back(makeInstance("epstein_sum4", "epstein",
                               R"({"dimension":4,"doubledGram":[2,0,0,0,0,2,0,0,0,0,2,0,0,0,0,2]})"));
    out.push_back(makeInstance("dedekind_qi", "dedekind", R"({"discriminant":-4})"));
    out.push_back(makeInstance("dedekind_q3", "dedekind", R"({"discriminant":-3})"));
    out.push_back(makeInstance("dedekind_q7", "dedekind", R"({"discriminant":-7})"));
    return out;
  }();
  return instances;
}

const RegistryInstance& findInstance(const std::string& name) {
  const std::string key = canonical(name);
  for (const auto& inst : registry())
    if (inst.name == key) return inst;
  throw DomainError("unknown instance '" + name + "'");
}

std::string toJson(const RegistryInstance& instance) {
  json j;
  j["name"] = instance.name;
  j["family"] = instance.family;
  j["params"] = json::parse(instance.params);
  j["notes"] = instance.notes;
  return j.dump();
}

RegistryInstance fromJson(const std::string& text) {
  const json j = json::parse(text);
  RegistryInstance inst =
      makeInstance(j.at("name").get<std::string>(), j.at("family").get<std::string>(), j.at("params").dump());
  if (j.contains("notes")) inst.notes = j.at("notes").get<std::string>();
  return inst;
}

}  // namespace wiltonlab::hecke
