// rref with the OpenMP row update against the serial reference.

#include <random>

#include <benchmark/benchmark.h>

#include "artin/linalg.hpp"

namespace {

artin::FpMatrix random_matrix(std::size_t n) {
    artin::FpMatrix m(n, n, artin::PrimeField(101));
    std::mt19937_64 rng(n);
    for (auto& v : m.data()) v = static_cast<artin::fp_t>(rng() % 101);
    return m;
}

void BM_rref(benchmark::State& state) {
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
    artin::set_parallel_threshold(0);
    for (auto _ : state) benchmark::DoNotOptimize(artin::rref(m).rank());
    state.SetComplexityN(state.range(0));
}

void BM_rref_reference(benchmark::State& state) {
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(artin::rref_reference(m).rank());
    state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_rref)->RangeMultiplier(2)->Range(32, 512)->Complexity();
BENCHMARK(BM_rref_reference)->RangeMultiplier(2)->Range(32, 512)->Complexity();

BENCHMARK_MAIN();
