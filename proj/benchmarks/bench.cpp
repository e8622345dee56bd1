#include "primegraph/catalog.hpp"
#include "primegraph/data.hpp"
#include "primegraph/graph.hpp"
#include "primegraph/odpipeline.hpp"
#include "primegraph/spectra.hpp"
#include <benchmark/benchmark.h>

#include "primegraph/arith.hpp"

using namespace primegraph;

static void BM_FactorL4Order(benchmark::State& state) {
    Nat n = Factorization::parse("2^7*3^7*5^2*19^6*127*181").value();
    for (auto _ : state) {
        auto f = arith::factor(n);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_FactorL4Order);

static void BM_PrimitivePrimeDivisors(benchmark::State& state) {
    for (auto _ : state) {
        auto r = arith::primitive_prime_divisors(Nat(61), 6);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_PrimitivePrimeDivisors);

static void BM_IsPrime64(benchmark::State& state) {
    Nat p("18446744073709551557");
    for (auto _ : state) benchmark::DoNotOptimize(arith::is_prime(p));
}
BENCHMARK(BM_IsPrime64);

static void BM_ExceptionalOrder(benchmark::State& state) {
    catalog::GroupId e8{catalog::Exceptional{catalog::ExceptionalFamily::E8, Nat(2)}};
    for (auto _ : state) {
        auto f = catalog::order(e8);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_ExceptionalOrder);

static void BM_Independence(benchmark::State& state) {
    graph::PrimeGraph g = spectra::gk_alternating(50);  // 15 vertices, exact search
    for (auto _ : state) {
        auto r = graph::independence_number(g);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Independence);

static void BM_VerifyCase(benchmark::State& state) {
    const auto d = data::DataContext::load(PRIMEGRAPH_BENCH_DATA_DIR);
    for (auto _ : state) {
        auto rep = odpipeline::verify_characterization_case(29, d);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_VerifyCase);

BENCHMARK_MAIN();
