#include <algorithm>
#include <cstdio>

#include "wiltonlab/lfun.hpp"

namespace wiltonlab::lfun {

const char* toString(RefKind kind) noexcept {
  switch (kind) {
    case RefKind::riemannZeta: return "riemannZeta";
    case RefKind::hurwitz: return "hurwitz";
    case RefKind::dirichletL: return "dirichletL";
    case RefKind::dedekind: return "dedekind";
    case RefKind::epstein: return "epstein";
    case RefKind::ramanujanL: return "ramanujanL";
    case RefKind::eisensteinL: return "eisensteinL";
    case RefKind::truncatedDirichlet: return "truncatedDirichlet";
  }
  return "unknown";
}

LSeriesRef LSeriesRef::riemannZeta() {
  return LSeriesRef(RefKind::riemannZeta, "zeta(s)", "s != 1; accurate for |Im s| <= 100, Re s >= -2",
                    [](Complex s, double) { return riemannZetaEval(s); });
}

LSeriesRef LSeriesRef::hurwitz(double a) {
  char label[64];
  std::snprintf(label, sizeof label, "zeta(s, %.17g)", a);
  return LSeriesRef(RefKind::hurwitz, label, "s != 1, 0 < a <= 1",
                    [a](Complex s, double) { return hurwitzZetaEval(s, a); });
}

LSeriesRef LSeriesRef::dirichletL(const arithmetic::DirichletCharacter& chi) {
  return LSeriesRef(RefKind::dirichletL, "L(s, chi mod " + std::to_string(chi.modulus()) + ")",
                    chi.isPrincipal() ? "s != 1" : "entire",
                    [chi](Complex s, double) { return dirichletLEval(chi, s); });
}

LSeriesRef LSeriesRef::dedekind(const arithmetic::ImagQuadField& field) {
  return LSeriesRef(RefKind::dedekind, "zeta_K(s), d_K = " + std::to_string(field.discriminant), "s != 1",
                    [field](Complex s, double) { return dedekindZetaEval(field, s); });
}

LSeriesRef LSeriesRef::epstein(const arithmetic::QuadraticForm& q) {
  return LSeriesRef(RefKind::epstein, "Z(s; " + q.describe() + ")", "Re s > m/2 + 1/4",
                    [q](Complex s, double tol) { return epsteinZ(q, s, tol); });
}

LSeriesRef LSeriesRef::ramanujanL() {
  return LSeriesRef(RefKind::ramanujanL, "L_tau(s)", "Re s >= 7",
                    [](Complex s, double tol) { return lfun::ramanujanL(s, tol); });
}

LSeriesRef LSeriesRef::eisensteinL(int k) {
  return LSeriesRef(RefKind::eisensteinL, "L_" + std::to_string(k) + "(s)", "s != 1, s != k",
                    [k](Complex s, double) { return lfun::eisensteinL(k, s); });
}

LSeriesRef LSeriesRef::truncatedDirichlet(const arithmetic::CoefficientSeq& seq, std::uint64_t cutoff) {
  return LSeriesRef(RefKind::truncatedDirichlet,
                    "sum_{n<=" + std::to_string(cutoff) + "} " + seq.label() + " n^-s",
                    "Re s > c + 1 for a finite tail estimate",
                    [seq, cutoff](Complex s, double) { return lfun::truncatedDirichlet(seq, s, cutoff); });
}

LSeriesRef LSeriesRef::withArgument(double scale, double shift) const {
  LSeriesRef out = *this;
  // Compose with the existing affine map.
  out.scale_ = scale * scale_;
  out.shift_ = scale_ * shift + shift_;
  char buf[96];
  std::snprintf(buf, sizeof buf, " at %.17g s + %.17g", out.scale_, out.shift_);
  out.label_ = label_ + buf;
  return out;
}

LValue LSeriesRef::evaluate(Complex s, double tol) const {
  LValue out = fn_(scale_ * s + shift_, tol);
  if (!(out.errorEstimate <= tol * std::max(1.0, std::abs(out.value)))) {
    throw ToleranceNotMet(label_ + ": error estimate above tolerance", out.value, out.errorEstimate);
  }
  return out;
}

}  // namespace wiltonlab::lfun
