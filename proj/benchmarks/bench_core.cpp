#include <benchmark/benchmark.h>

#include "wiltonlab/arithmetic.hpp"
#include "wiltonlab/hecke.hpp"
#include "wiltonlab/lfun.hpp"
#include "wiltonlab/numerics.hpp"
#include "wiltonlab/parallel.hpp"
#include "wiltonlab/wilton.hpp"

using namespace wiltonlab;

namespace {

void BM_LogGamma(benchmark::State& state) {
  Complex s(0.3, 7.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(numerics::logGamma(s));
    s += Complex(1e-9, 0.0);
  }
}
BENCHMARK(BM_LogGamma);

void BM_BesselJ(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(numerics::besselJ(11.0, z));
}
BENCHMARK(BM_BesselJ)->Arg(1)->Arg(15)->Arg(200);

void BM_RamanujanTau(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(arithmetic::ramanujanTau(n));
}
BENCHMARK(BM_RamanujanTau)->Arg(97)->Arg(9973);

void BM_RiemannZeta(benchmark::State& state) {
  const Complex s(0.5, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lfun::riemannZeta(s));
}
BENCHMARK(BM_RiemannZeta)->Arg(0)->Arg(50);

void BM_MomentRegularized(benchmark::State& state) {
  const auto& sig = hecke::findInstance("delta_ramanujan").signature;
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wilton::besselMomentRegularized(sig, n, Complex(11.25, 0.0)));
}
BENCHMARK(BM_MomentRegularized)->Arg(1)->Arg(20)->Arg(40);

void BM_MomentClassical(benchmark::State& state) {
  const auto& sig = hecke::findInstance("theta_riemann").signature;
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wilton::besselMomentClassical(sig, n, Complex(0.25, 0.0)));
}
BENCHMARK(BM_MomentClassical)->Arg(1)->Arg(20);

void BM_MomentMellinBarnes(benchmark::State& state) {
  const auto& sig = hecke::findInstance("dirichlet_odd_q4").signature;
  for (auto _ : state) benchmark::DoNotOptimize(wilton::besselMomentMellinBarnes(sig, 5, Complex(1.25, 0.0)));
}
BENCHMARK(BM_MomentMellinBarnes);

void BM_MomentLargeArgument(benchmark::State& state) {
  const auto& sig = hecke::findInstance("theta_riemann").signature;
  for (auto _ : state) benchmark::DoNotOptimize(wilton::besselMomentLargeArgument(sig, 1000, Complex(0.35, 0.0)));
}
BENCHMARK(BM_MomentLargeArgument);

void BM_WiltonClassic(benchmark::State& state) {
  const auto N = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wilton::evaluateWiltonClassic(2.0, 3.0, N).residual);
}
BENCHMARK(BM_WiltonClassic)->Arg(500)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_IdentityTheta(benchmark::State& state) {
  const auto& theta = hecke::findInstance("theta_riemann");
  for (auto _ : state) {
    benchmark::DoNotOptimize(wilton::evaluateIdentity(theta, 0.75, 0.65, wilton::MomentMode::regularized, 200,
                                                      wilton::Strategy::blockAveraged)
                                 .residual);
  }
}
BENCHMARK(BM_IdentityTheta)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
