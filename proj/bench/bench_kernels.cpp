// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include <random>

#include "jetsym/checks.hpp"
#include "jetsym/detsolve.hpp"
#include "jetsym/family.hpp"
#include "jetsym/operator.hpp"

namespace {

using namespace jetsym;

Ansatz ansatz(int n) { return Ansatz::with_default_bounds(EvolutionEquation::burgers(), n); }

void BM_BuildSystem(benchmark::State& state) {
  const Ansatz a = ansatz(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_system(a));
}

void BM_BuildSystemSerial(benchmark::State& state) {
  const Ansatz a = ansatz(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_system_serial(a));
}

void BM_Nullspace(benchmark::State& state) {
  const LinearSystem s = build_system(ansatz(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(s.matrix));
}

void BM_NullspaceSerial(benchmark::State& state) {
  const LinearSystem s = build_system(ansatz(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(nullspace_serial(s.matrix));
}

void BM_StructureSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(structure_sweep(Family::HeatQ, static_cast<int>(state.range(0))));
}

void BM_StructureSweepSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(structure_sweep_serial(Family::HeatQ, static_cast<int>(state.range(0))));
}

std::vector<DiffPoly> heat_probes() {
  std::mt19937_64 rng(1);
  std::vector<DiffPoly> probes;
  for (int i = 0; i < 64; ++i) probes.push_back(random_jet_poly(rng, 4, 6));
  return probes;
}

void BM_Probe(benchmark::State& state) {
  const auto probes = heat_probes();
  const auto lhs = ops::power(ops::heat_g(), 3) * ops::heat_p();
  for (auto _ : state)
    benchmark::DoNotOptimize(operator_identity_probe(lhs, ops::identity(), EvolutionEquation::heat(), probes));
}

void BM_ProbeSerial(benchmark::State& state) {
  const auto probes = heat_probes();
  const auto lhs = ops::power(ops::heat_g(), 3) * ops::heat_p();
  for (auto _ : state)
    benchmark::DoNotOptimize(operator_identity_probe_serial(lhs, ops::identity(), EvolutionEquation::heat(), probes));
}

}  // namespace

BENCHMARK(BM_BuildSystem)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildSystemSerial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Nullspace)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NullspaceSerial)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StructureSweep)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StructureSweepSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Probe)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProbeSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
