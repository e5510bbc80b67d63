#include <benchmark/benchmark.h>

#include <orbichern/diag.hpp>
#include <orbichern/generating.hpp>
#include <orbichern/series.hpp>

using namespace orbichern;

namespace {

Series test_series(std::size_t n)
{
    std::vector<Rat> c(n + 1);
    for (std::size_t k = 1; k <= n; ++k)
        c[k] = Rat(static_cast<long>(k % 5) - 2, static_cast<unsigned long>(k));
    return Series(n, std::move(c));
}

void BM_SeriesExp(benchmark::State &state)
{
    const Series s = test_series(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(series_exp(s));
}
BENCHMARK(BM_SeriesExp)->RangeMultiplier(2)->Range(8, 64);

void BM_SeriesLog(benchmark::State &state)
{
    const Series s = series_exp(test_series(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(series_log(s));
}
BENCHMARK(BM_SeriesLog)->RangeMultiplier(2)->Range(8, 64);

void BM_Odot(benchmark::State &state)
{
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const DiagElement a = power_notation({{1, Rat(-1)}}, -BaseElement::symbol("c"), n);
    const DiagElement b = power_notation({{1, Rat(1)}, {2, Rat(1, 2)}}, BaseElement::symbol("e"), n);
    for (auto _ : state)
        benchmark::DoNotOptimize(odot(a, b));
}
BENCHMARK(BM_Odot)->DenseRange(4, 8, 2);

void BM_DiagExp(benchmark::State &state)
{
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    DiagElement t(n);
    for (unsigned k = 1; k <= n; ++k)
        t += DiagElement::generator(n, k, "c", Rat(1, k));
    for (auto _ : state)
        benchmark::DoNotOptimize(diag_exp(t));
}
BENCHMARK(BM_DiagExp)->DenseRange(4, 10, 2);

void BM_DwRhsZ3(benchmark::State &state)
{
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const JSequence j = j_sequence(GroupSpec::free_abelian(3), n);
    for (auto _ : state)
        benchmark::DoNotOptimize(dw_rhs(j, BaseElement::symbol("c"), n));
}
BENCHMARK(BM_DwRhsZ3)->DenseRange(4, 8, 2);

} // namespace
