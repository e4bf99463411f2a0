#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "quotlab/arith.hpp"
#include "quotlab/proofsim.hpp"
#include "quotlab/setops.hpp"

using namespace quotlab;

namespace {

IntegerSet random_set(std::uint64_t max_value, std::size_t target,
                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> v;
    while (v.size() < target) v.push_back(rng() % max_value + 1);
    return IntegerSet(std::move(v), max_value);
}

std::uint64_t naive_energy(const IntegerSet& a, const IntegerSet& b) {
    std::uint64_t e = 0;
    for (const auto a1 : a)
        for (const auto b1 : b)
            for (const auto a2 : a)
                for (const auto b2 : b)
                    if (a1 * b1 == a2 * b2) ++e;
    return e;
}

void BM_SieveBuild(benchmark::State& state) {
    const auto limit = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        FactorSieve sieve(limit);
        benchmark::DoNotOptimize(sieve.limit());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(limit));
}
BENCHMARK(BM_SieveBuild)->Arg(100'000)->Arg(1'000'000)->Arg(10'000'000);

void BM_PsiExact(benchmark::State& state) {
    const auto y = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(psi_exact(1'000'000, y));
}
BENCHMARK(BM_PsiExact)->Arg(10)->Arg(100)->Arg(1'000);

void BM_EnergySorted(benchmark::State& state) {
    const auto set =
        random_set(100'000, static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(energy(set, set).energy);
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(set.size() * set.size()));
}
BENCHMARK(BM_EnergySorted)->Arg(100)->Arg(400)->Arg(1'600);

void BM_EnergyNaive(benchmark::State& state) {
    const auto set =
        random_set(100'000, static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(naive_energy(set, set));
}
BENCHMARK(BM_EnergyNaive)->Arg(20)->Arg(40);

void BM_ProductSet(benchmark::State& state) {
    const auto set =
        random_set(100'000, static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(product_set(set, set).size());
}
BENCHMARK(BM_ProductSet)->Arg(200)->Arg(800);

void BM_Audit(benchmark::State& state) {
    const auto q = static_cast<std::uint64_t>(state.range(0));
    const FactorSieve sieve(q);
    const auto set = random_set(q, q / 3, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(audit(set, set, sieve).all_pass());
}
BENCHMARK(BM_Audit)->Arg(300)->Arg(1'000);

} // namespace

BENCHMARK_MAIN();
