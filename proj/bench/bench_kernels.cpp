// Serial vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "qseries/kernels.hpp"
#include "qseries/qproducts.hpp"
#include "qseries/rr.hpp"

using namespace qseries;

namespace {

std::vector<mpz_class> eta_coeffs(Exponent n)
{
    const Series s = pow(eta_like(1, n), 4);
    return {s.coeffs().begin(), s.coeffs().end()};
}

template <auto Kernel>
void bm_convolve(benchmark::State& state)
{
    const auto n = static_cast<Exponent>(state.range(0));
    const auto a = eta_coeffs(n);
    const auto b = eta_coeffs(n);
    std::vector<mpz_class> out(static_cast<std::size_t>(n));
    for (auto _ : state) {
        Kernel(a, b, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetComplexityN(n);
}

template <auto Kernel>
void bm_quad_form(benchmark::State& state)
{
    const kernels::QuadForm f{-1, 1, 1, 2, 1, 0};
    const auto hi = static_cast<std::int64_t>(state.range(0));
    for (auto _ : state) {
        auto counts = Kernel(f, 0, hi);
        benchmark::DoNotOptimize(counts.data());
    }
}

void bm_expand_a_series(benchmark::State& state)
{
    const auto n = static_cast<Exponent>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(expand(rr::a_series(), n));
    }
}

} // namespace

BENCHMARK(bm_convolve<kernels::convolve_serial>)->Name("convolve/serial")->RangeMultiplier(2)->Range(256, 4096);
BENCHMARK(bm_convolve<kernels::convolve_parallel>)->Name("convolve/parallel")->RangeMultiplier(2)->Range(256, 4096);
BENCHMARK(bm_quad_form<kernels::quad_form_counts_serial>)->Name("quad_form/serial")->Range(1 << 10, 1 << 16);
BENCHMARK(bm_quad_form<kernels::quad_form_counts_parallel>)->Name("quad_form/parallel")->Range(1 << 10, 1 << 16);
BENCHMARK(bm_expand_a_series)->Name("expand/a-series")->Range(500, 4000);

BENCHMARK_MAIN();
