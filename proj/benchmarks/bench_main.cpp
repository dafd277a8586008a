#include "dimsub/catalog.hpp"
#include "dimsub/dimquot.hpp"
#include "dimsub/freelie.hpp"
#include "dimsub/intlat.hpp"
#include "dimsub/nilquot.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace dimsub;

namespace {

void BM_Hnf(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> d(-50, 50);
    std::vector<std::vector<Int>> rows(n + n / 2, std::vector<Int>(n));
    for (auto& r : rows)
        for (auto& x : r) x = d(rng);
    const auto m = intlat::IntMatrix::from_dense(rows, n);
    for (auto _ : state) benchmark::DoNotOptimize(intlat::hnf(m));
}
BENCHMARK(BM_Hnf)->Arg(10)->Arg(20)->Arg(40);

void BM_NilpotentQuotient(benchmark::State& state, const char* file, int c)
{
    const auto pres = dimquot::corpus_presentation(file);
    for (auto _ : state) benchmark::DoNotOptimize(nilquot::nilpotent_quotient(pres, c).size());
}
BENCHMARK_CAPTURE(BM_NilpotentQuotient, rips, "rips.lie", 3);
BENCHMARK_CAPTURE(BM_NilpotentQuotient, p2_delta8, "p2_delta8.lie", 7);
BENCHMARK_CAPTURE(BM_NilpotentQuotient, p2_delta9, "p2_delta9.lie", 8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_NilpotentQuotient, p3_delta7, "p3_delta7.lie", 6)->Unit(benchmark::kMillisecond);

void BM_DeltaCertificate(benchmark::State& state, const char* name)
{
    const auto& rec = dimquot::find_example(name);
    const auto pres = dimquot::corpus_presentation(rec.file);
    dimquot::SearchOptions o;
    o.extra_degree = rec.extra_degree;
    for (auto _ : state)
        benchmark::DoNotOptimize(dimquot::delta_certificate_search(pres.lie_element(rec.element), pres, rec.n, o));
}
BENCHMARK_CAPTURE(BM_DeltaCertificate, rips, "rips")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_DeltaCertificate, p2_delta8, "p2_delta8")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_DeltaCertificate, p3_delta7, "p3_delta7")->Unit(benchmark::kMillisecond);

void BM_HomotopyQuotient(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(freelie::homotopy_quotient(3, 4));
}
BENCHMARK(BM_HomotopyQuotient)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
