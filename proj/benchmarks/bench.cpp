#include <benchmark/benchmark.h>

#include "monarch/boolean_fn.hpp"
#include "monarch/csp.hpp"
#include "monarch/monarchy.hpp"
#include "monarch/prng.hpp"
#include "monarch/sketch.hpp"

using namespace monarch;

namespace {

void BM_FourierSpectrum(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const BooleanFunction f = ltf_to_function(mon(k));
  for (auto _ : state) benchmark::DoNotOptimize(fourier_spectrum(f));
  state.SetComplexityN(int64_t{1} << k);
}
BENCHMARK(BM_FourierSpectrum)->Arg(8)->Arg(12)->Arg(16)->Complexity();

void BM_ChowParameters(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const BooleanFunction f = ltf_to_function(mon(k));
  for (auto _ : state) benchmark::DoNotOptimize(chow_parameters(f));
}
BENCHMARK(BM_ChowParameters)->Arg(12)->Arg(16)->Arg(20);

void BM_LtfToFunction(benchmark::State& state) {
  const LtfSpec spec = mon(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ltf_to_function(spec));
}
BENCHMARK(BM_LtfToFunction)->Arg(12)->Arg(16)->Arg(20);

void BM_HPolynomial(benchmark::State& state) {
  const ReducedDistribution d =
      ReducedDistribution::uniform(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(h_polynomial(d));
}
BENCHMARK(BM_HPolynomial)->Arg(5)->Arg(10)->Arg(20);

void BM_DecideMonarchy(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(decide_monarchy(k));
}
BENCHMARK(BM_DecideMonarchy)->Arg(4)->Arg(8)->Arg(12);

void BM_BruteForce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CspInstance psi =
      random_instance(ltf_to_function(maj(3)), n, 200, 42);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_value(psi));
}
BENCHMARK(BM_BruteForce)->Arg(12)->Arg(14)->Arg(16);

void BM_SketchUpdate(benchmark::State& state) {
  const CspInstance psi =
      random_instance(ltf_to_function(maj(3)), 1000, 100, 7);
  const std::vector<double> lambda{0.25, 0.25, 0.25};
  const int c = static_cast<int>(state.range(0));
  for (auto _ : state) {
    L1Sketch sk(3, 0.1, c);
    for (const auto& con : psi.constraints) sk.add_constraint(con, lambda);
    benchmark::DoNotOptimize(sk.estimate());
  }
  state.SetItemsProcessed(state.iterations() * psi.constraints.size());
}
BENCHMARK(BM_SketchUpdate)->Arg(8)->Arg(64);

void BM_TanpiKernel(benchmark::State& state) {
  std::vector<double> a(4096), out(4096);
  SplitMix64 rng(1);
  for (auto& x : a) x = rng.next_unit() - 0.5;
  for (auto _ : state) {
    tanpi_batch(a.data(), out.data(), a.size());
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * a.size());
}
BENCHMARK(BM_TanpiKernel);

}  // namespace

BENCHMARK_MAIN();
