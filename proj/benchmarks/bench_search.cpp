#include <benchmark/benchmark.h>

#include <orbichern/census.hpp>
#include <orbichern/hom_search.hpp>

using namespace orbichern;

namespace {

void BM_HomSearchZ2IntoSn(benchmark::State &state)
{
    const FiniteGroup g = symmetric_group(static_cast<std::size_t>(state.range(0)));
    const Presentation p = to_presentation(GroupSpec::free_abelian(2));
    SearchOptions opts;
    opts.threads = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(count_homs(p, g, opts));
}
BENCHMARK(BM_HomSearchZ2IntoSn)->DenseRange(3, 5);

void BM_HomSearchNoPrune(benchmark::State &state)
{
    const FiniteGroup g = symmetric_group(4);
    const Presentation p = to_presentation(GroupSpec::free_abelian(2));
    SearchOptions opts;
    opts.prune = false;
    for (auto _ : state)
        benchmark::DoNotOptimize(count_homs(p, g, opts));
}
BENCHMARK(BM_HomSearchNoPrune);

void BM_CentralizerRecursion(benchmark::State &state)
{
    const FiniteGroup g = symmetric_group(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_free_abelian_homs(3, g));
}
BENCHMARK(BM_CentralizerRecursion)->DenseRange(3, 5);

void BM_CensusSym(benchmark::State &state)
{
    const GroupSpec a = GroupSpec::free_abelian(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(census_sym(a, static_cast<std::size_t>(state.range(0))).total);
}
BENCHMARK(BM_CensusSym)->DenseRange(3, 5);

void BM_CensusWreath(benchmark::State &state)
{
    const GroupSpec a = GroupSpec::free_abelian(2);
    const FiniteGroup g = cyclic_group(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(census_wreath(a, g, static_cast<std::size_t>(state.range(0))).total);
}
BENCHMARK(BM_CensusWreath)->DenseRange(2, 3);

} // namespace
