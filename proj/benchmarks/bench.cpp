#include <benchmark/benchmark.h>

#include "mckay/abacus.hpp"
#include "mckay/bijection.hpp"
#include "mckay/lr.hpp"
#include "mckay/partition.hpp"
#include "mckay/sym_char.hpp"

namespace {

using namespace mckay;

void BM_Degree(benchmark::State& state) {
    const Partition lambda({9, 7, 5, 4, 3, 3, 2, 1, 1});
    for (auto _ : state) benchmark::DoNotOptimize(degree(lambda));
}
BENCHMARK(BM_Degree);

void BM_CoreQuotientRoundtrip(benchmark::State& state) {
    const Partition lambda({12, 9, 7, 5, 4, 3, 3, 2, 1});
    const int r = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto cq = coreQuotient(lambda, r);
        benchmark::DoNotOptimize(fromCoreQuotient(cq.core, cq.quotient, r));
    }
}
BENCHMARK(BM_CoreQuotientRoundtrip)->Arg(2)->Arg(5)->Arg(7);

void BM_EnumeratePPrime(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumeratePPrime(n, 5));
}
BENCHMARK(BM_EnumeratePPrime)->Arg(25)->Arg(30)->Arg(40);

void BM_MnValue(benchmark::State& state) {
    const Partition lambda({6, 4, 3, 2});
    const Partition type({5, 5, 3, 1, 1});
    for (auto _ : state) {
        MnCache cache;  // cold cache each iteration
        benchmark::DoNotOptimize(cache.value(lambda, type));
    }
}
BENCHMARK(BM_MnValue);

void BM_LrCoeff(benchmark::State& state) {
    const Partition outer({6, 5, 4, 2, 1});
    const Partition mu({5, 3, 2});
    const Partition gamma({4, 2, 1, 1});
    for (auto _ : state) benchmark::DoNotOptimize(lrCoeff(outer, mu, gamma));
}
BENCHMARK(BM_LrCoeff);

void BM_BuildBijection(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(buildBijection(n, 5, Strategy::recursive));
}
BENCHMARK(BM_BuildBijection)->Arg(25)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
