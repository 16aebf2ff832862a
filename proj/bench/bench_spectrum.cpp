#include <benchmark/benchmark.h>

#include <omp.h>

#include "orlov/extension_closure.hpp"

using namespace orlov;

namespace {

Algebra lin(int n) { return Algebra::build({Shape::Linear, n, std::nullopt}); }

void BM_SpectrumSerial(benchmark::State& st) {
    const Algebra A = lin(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(orlov_spectrum_serial(A).strong);
}

void BM_SpectrumParallel(benchmark::State& st) {
    const Algebra A = lin(static_cast<int>(st.range(0)));
    const int jobs = static_cast<int>(st.range(1));
    for (auto _ : st) benchmark::DoNotOptimize(orlov_spectrum(A, {.jobs = jobs}).strong);
}

void BM_Star64(benchmark::State& st) {
    const ExtensionTable tab(lin(static_cast<int>(st.range(0))));
    const std::uint64_t N = std::uint64_t{1} << tab.size();
    std::uint64_t a = 1;
    for (auto _ : st) {
        a = (a * 6364136223846793005ULL + 1442695040888963407ULL) % N;
        benchmark::DoNotOptimize(tab.star64(a, a ^ (a >> 3)));
    }
}

void thread_args(benchmark::internal::Benchmark* b) {
    const int hw = omp_get_max_threads();
    for (int n : {4, 5})
        for (int j = 1; j <= hw; j *= 2) b->Args({n, j});
}

}  // namespace

BENCHMARK(BM_SpectrumSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectrumParallel)->Apply(thread_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Star64)->Arg(4)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
