#include <benchmark/benchmark.h>

#include "strongmult/counting.hpp"
#include "strongmult/density.hpp"
#include "strongmult/generators.hpp"
#include "strongmult/majorants.hpp"
#include "strongmult/primes.hpp"

using namespace strongmult;

namespace {

void BM_sieve(benchmark::State& state) {
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sieve_primes(bound));
}
BENCHMARK(BM_sieve)->Arg(100000)->Arg(1000000);

void BM_tau(benchmark::State& state) {
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tau_coefficients(bound));
}
BENCHMARK(BM_tau)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_e11(benchmark::State& state) {
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(e11_sequence(bound));
}
BENCHMARK(BM_e11)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_cm32(benchmark::State& state) {
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cm32_sequence(bound));
}
BENCHMARK(BM_cm32)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_selberg_fourier(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(selberg_fourier(default_delta(M), M));
}
BENCHMARK(BM_selberg_fourier)->Arg(5)->Arg(10)->Arg(24);

void BM_count_report(benchmark::State& state) {
  const auto s1 = tau_sequence(10000);
  const auto s2 = e11_sequence(10000);
  CountParams params;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        build_count_report(s1, s2, {1000, 10000}, params));
}
BENCHMARK(BM_count_report)->Unit(benchmark::kMillisecond);

void BM_classify(benchmark::State& state) {
  const auto s1 = tau_sequence(10000);
  const auto s2 = e11_sequence(10000);
  const auto sel = make_selector(SetKind::abs);
  for (auto _ : state)
    benchmark::DoNotOptimize(classify(s1, s2, sel, 10000));
}
BENCHMARK(BM_classify)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
