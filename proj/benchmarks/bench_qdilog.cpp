#include <benchmark/benchmark.h>

#include "qwhit/quantum_dilog.hpp"

using namespace qwhit;

static void BM_phi_fast(benchmark::State& state)
{
    ModularParameter P(1.0);
    phi(Cplx(0.3, 0.1), P); // warm the panel cache
    double x = 0.0;
    for (auto _ : state) {
        x += 1e-4;
        benchmark::DoNotOptimize(phi(Cplx(0.3 + x, 0.1), P));
    }
}
BENCHMARK(BM_phi_fast);

static void BM_phi_integral(benchmark::State& state)
{
    ModularParameter P(1.0);
    double x = 0.0;
    for (auto _ : state) {
        x += 1e-4;
        benchmark::DoNotOptimize(log_phi_integral(Cplx(0.3 + x, 0.1), P));
    }
}
BENCHMARK(BM_phi_integral);

static void BM_phi_ladder_far(benchmark::State& state)
{
    ModularParameter P(1.0);
    phi(Cplx(0.3, 4.2), P);
    double x = 0.0;
    for (auto _ : state) {
        x += 1e-4;
        benchmark::DoNotOptimize(phi(Cplx(0.3 + x, 4.2), P));
    }
}
BENCHMARK(BM_phi_ladder_far);

static void BM_c_function(benchmark::State& state)
{
    ModularParameter P(1.0);
    c_function(Cplx(0.2, 0.5), P);
    double x = 0.0;
    for (auto _ : state) {
        x += 1e-4;
        benchmark::DoNotOptimize(c_function(Cplx(0.2 + x, 0.5), P));
    }
}
BENCHMARK(BM_c_function);
