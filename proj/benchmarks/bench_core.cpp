#include <benchmark/benchmark.h>

#include <random>

#include "morava/grlie.hpp"
#include "morava/homalg.hpp"
#include "morava/k1.hpp"
#include "morava/random.hpp"
#include "morava/stabilizer.hpp"

using namespace morava;

static void BM_OrderMul(benchmark::State& state)
{
    auto r = make_ring(3, static_cast<unsigned>(state.range(0)), 16);
    std::mt19937_64 rng(1);
    const OrderElem a = random_order(r, rng), b = random_order(r, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_OrderMul)->Arg(2)->Arg(3)->Arg(4);

static void BM_UnitInverse(benchmark::State& state)
{
    auto r = make_ring(5, 2, 16);
    std::mt19937_64 rng(2);
    const OrderElem a = random_order(r, rng) * OrderElem::uniformizer(r) + OrderElem::one(r);
    for (auto _ : state)
        benchmark::DoNotOptimize(unit_inverse_order(a));
}
BENCHMARK(BM_UnitInverse);

static void BM_ElementOrder(benchmark::State& state)
{
    auto r = make_ring(3, 2, 16);
    const StabElem a = order3_element(r);
    for (auto _ : state)
        benchmark::DoNotOptimize(element_order(a, default_order_bound(r)));
}
BENCHMARK(BM_ElementOrder);

static void BM_ReducedNorm(benchmark::State& state)
{
    auto r = make_ring(3, static_cast<unsigned>(state.range(0)), 16);
    std::mt19937_64 rng(3);
    const OrderElem a = random_order(r, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(reduced_norm_value(a));
}
BENCHMARK(BM_ReducedNorm)->Arg(2)->Arg(3);

static void BM_CommutatorSpan(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(commutator_span(2, static_cast<unsigned>(state.range(0)), 1, 1));
}
BENCHMARK(BM_CommutatorSpan)->Arg(2)->Arg(3)->Arg(4);

static void BM_Abelianization(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(abelianization_report(3, 2, 8));
}
BENCHMARK(BM_Abelianization);

static void BM_G1Cohomology(benchmark::State& state)
{
    for (auto _ : state)
        for (long t = -40; t <= 40; ++t)
            benchmark::DoNotOptimize(g1_cohomology_E1(2, 1, t));
}
BENCHMARK(BM_G1Cohomology);

static void BM_HomotopyTable(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(homotopy_table(static_cast<unsigned long>(state.range(0)), -64, 64));
}
BENCHMARK(BM_HomotopyTable)->Arg(2)->Arg(3);
BENCHMARK_MAIN();
