#include <benchmark/benchmark.h>

#include <random>

#include "mstd/census.hpp"
#include "mstd/constructions.hpp"
#include "mstd/intset.hpp"
#include "mstd/structure.hpp"

namespace {

mstd::IntSet random_dense_set(std::uint64_t seed, int k, std::int64_t hi) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(0, hi);
    std::vector<std::int64_t> values;
    while (int(values.size()) < k) values.push_back(dist(rng));
    return mstd::IntSet(std::move(values));
}

void BM_Sumset(benchmark::State& state) {
    const auto a = random_dense_set(1, int(state.range(0)), state.range(0) * 4);
    for (auto _ : state) benchmark::DoNotOptimize(mstd::sumset(a, a));
}
BENCHMARK(BM_Sumset)->Arg(16)->Arg(256)->Arg(4096);

void BM_DeltaReport(benchmark::State& state) {
    const auto a = random_dense_set(2, int(state.range(0)), state.range(0) * 4);
    for (auto _ : state) benchmark::DoNotOptimize(mstd::delta_report(a));
}
BENCHMARK(BM_DeltaReport)->Arg(16)->Arg(256)->Arg(4096);

void BM_HFoldSum(benchmark::State& state) {
    const auto a = random_dense_set(3, 8, 30);
    for (auto _ : state)
        benchmark::DoNotOptimize(mstd::h_fold_sum(a, int(state.range(0))));
}
BENCHMARK(BM_HFoldSum)->Arg(4)->Arg(16)->Arg(64);

void BM_Census(benchmark::State& state) {
    mstd::CensusOptions opts;
    opts.workers = unsigned(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            mstd::census(8, state.range(0), opts).count);
}
BENCHMARK(BM_Census)->Args({14, 1})->Args({18, 1})->Args({18, 4});

void BM_DigitLift(benchmark::State& state) {
    const mstd::IntSet a({0, 2, 3, 4, 7, 11, 12, 14});
    const mstd::LiftParams p{29, int(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(mstd::digit_lift(a, p));
}
BENCHMARK(BM_DigitLift)->Arg(2)->Arg(3)->Arg(4);

void BM_Decompose(benchmark::State& state) {
    const mstd::IntSet a({0, 2, 3, 4, 7, 11, 12, 14});
    for (auto _ : state)
        benchmark::DoNotOptimize(mstd::decompose(a, int(state.range(0))));
}
BENCHMARK(BM_Decompose)->Arg(10)->Arg(28)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
