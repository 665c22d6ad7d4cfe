// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "bca/algebra.hpp"
#include "bca/fixtures.hpp"
#include "bca/rad3.hpp"

namespace {

const bca::Algebra& example(int which) {
  static const bca::Algebra a = bca::build_algebra(bca::load_fixture_configuration("example1"));
  static const bca::Algebra b = bca::build_algebra(bca::load_fixture_configuration("example2"));
  return which == 1 ? a : b;
}

std::vector<std::array<std::size_t, 3>> sample(std::size_t dim, std::size_t n) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
  std::vector<std::array<std::size_t, 3>> t(n);
  for (auto& x : t) x = {pick(rng), pick(rng), pick(rng)};
  return t;
}

void BM_Tabulate(benchmark::State& state) {
  const auto& alg = example(static_cast<int>(state.range(0)));
  const auto product = alg.basis_product();
  for (auto _ : state) benchmark::DoNotOptimize(bca::kernels::tabulate(alg.dim(), product));
}
void BM_TabulateSerial(benchmark::State& state) {
  const auto& alg = example(static_cast<int>(state.range(0)));
  const auto product = alg.basis_product();
  for (auto _ : state) benchmark::DoNotOptimize(bca::kernels::tabulate_serial(alg.dim(), product));
}

void BM_Gram(benchmark::State& state) {
  const auto& t = example(static_cast<int>(state.range(0))).structure_table();
  for (auto _ : state) benchmark::DoNotOptimize(bca::kernels::gram(t));
}
void BM_GramSerial(benchmark::State& state) {
  const auto& t = example(static_cast<int>(state.range(0))).structure_table();
  for (auto _ : state) benchmark::DoNotOptimize(bca::kernels::gram_serial(t));
}

void BM_Associativity(benchmark::State& state) {
  const auto& t = example(1).structure_table();
  const auto triples = sample(t.dim, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bca::kernels::associativity_failures(t, triples));
}
void BM_AssociativitySerial(benchmark::State& state) {
  const auto& t = example(1).structure_table();
  const auto triples = sample(t.dim, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bca::kernels::associativity_failures_serial(t, triples));
}

void BM_Rad3Sweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bca::verify_rad3_exhaustive(static_cast<std::size_t>(state.range(0)), 4));
}
void BM_Rad3SweepSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(bca::verify_rad3_exhaustive_serial(static_cast<std::size_t>(state.range(0)), 4));
}

}  // namespace

BENCHMARK(BM_Tabulate)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TabulateSerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Gram)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GramSerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Associativity)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AssociativitySerial)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Rad3Sweep)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Rad3SweepSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
