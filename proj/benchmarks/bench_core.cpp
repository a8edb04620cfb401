#include <random>

#include <benchmark/benchmark.h>

#include "stellar/stellar.hpp"

namespace {

stellar::DickeVector random_state(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<stellar::Complex> c(static_cast<std::size_t>(n) + 1);
  for (auto& x : c) x = {g(rng), g(rng)};
  return stellar::DickeVector(std::move(c));
}

void BM_CoherentOverlap(benchmark::State& state) {
  const auto d = random_state(static_cast<int>(state.range(0)), 1);
  const stellar::BlochPoint p(1.1, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(stellar::coherent_overlap(d, p));
}
BENCHMARK(BM_CoherentOverlap)->Arg(4)->Arg(20)->Arg(100);

void BM_GeometricEntanglement(benchmark::State& state) {
  const auto d = random_state(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(stellar::geometric_entanglement(d).e_g);
}
BENCHMARK(BM_GeometricEntanglement)->Arg(4)->Arg(12)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_MajoranaRoundTrip(benchmark::State& state) {
  const auto d = random_state(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(stellar::dicke_from_majorana(stellar::majorana_from_dicke(d)));
}
BENCHMARK(BM_MajoranaRoundTrip)->Arg(6)->Arg(30);

void BM_CoulombOptimize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stellar::optimize_arrangement(n, stellar::ArrangementKind::coulomb, 1, 7));
}
BENCHMARK(BM_CoulombOptimize)->Arg(12)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
