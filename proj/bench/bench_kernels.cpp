// Serial reference vs OpenMP kernels on the largest published pair.

#include "hdepth/couples.hpp"
#include "hdepth/kernels.hpp"
#include "hdepth/series.hpp"

#include <benchmark/benchmark.h>

#include <map>

namespace {

using namespace hdepth;

const kernels::GapPoset& poset_for(std::int64_t a, std::int64_t b)
{
    static std::map<std::pair<std::int64_t, std::int64_t>, kernels::GapPoset> cache;
    auto [it, fresh] = cache.try_emplace({a, b});
    if (fresh)
        it->second = kernels::build_gap_poset(SemigroupPair::from_weights(a, b));
    return it->second;
}

void BM_EnumerateSerial(benchmark::State& state)
{
    const auto& poset = poset_for(state.range(0), state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::serial::enumerate(poset).size());
}

void BM_EnumerateParallel(benchmark::State& state)
{
    const auto& poset = poset_for(state.range(0), state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::parallel::enumerate(poset).size());
    state.counters["threads"] = kernels::thread_count();
}

/// A free series passes every inequality, so the scan visits all couples.
kernels::CoefficientWindow<std::int64_t> free_window(const SemigroupPair& s, kernels::ShiftRange shifts)
{
    const RationalSeries h(s, LaurentPoly::monomial(0), true, true);
    kernels::CoefficientWindow<std::int64_t> w{shifts.lo, {}};
    for (const auto& c : coeffs(h, shifts.lo, shifts.hi + s.product()))
        w.values.push_back(static_cast<std::int64_t>(c));
    return w;
}

template <bool Parallel>
void BM_StarScan(benchmark::State& state)
{
    const auto s = SemigroupPair::from_weights(state.range(0), state.range(1));
    const auto table = couple_table(s);
    const kernels::ShiftRange shifts{-s.product(), 2 * s.product()};
    const auto w = free_window(s, shifts);
    for (auto _ : state) {
        auto hit = Parallel ? kernels::parallel::star_scan(*table, w, shifts)
                            : kernels::serial::star_scan(*table, w, shifts);
        benchmark::DoNotOptimize(hit);
    }
    state.counters["couples"] = static_cast<double>(table->size());
}

} // namespace

BENCHMARK(BM_EnumerateSerial)->Args({6, 11})->Args({11, 13})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Args({6, 11})->Args({11, 13})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StarScan<false>)->Args({6, 11})->Args({11, 13})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StarScan<true>)->Args({6, 11})->Args({11, 13})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
