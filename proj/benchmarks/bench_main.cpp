#include <benchmark/benchmark.h>

#include "qfrob/re_algebra.hpp"
#include "qfrob/verify.hpp"

using namespace qfrob;

namespace {

const HeckeSymmetry& r2() {
    static HeckeSymmetry s = builtin("r2");
    return s;
}

void BM_ratfunc_arithmetic(benchmark::State& state) {
    RatFunc a = parse_scalar("(q^3-2*q+1)/(q^2-1)");
    RatFunc b = parse_scalar("(q^2+q^-2)/(q-q^-1)");
    for (auto _ : state) {
        RatFunc c = a * b + a - b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_ratfunc_arithmetic);

void BM_hecke_multiply(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    HeckeElement a = antisymmetrizer(n);
    HeckeElement b = symmetrizer(n);
    for (auto _ : state) {
        HeckeElement c = multiply(a, b);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_hecke_multiply)->Arg(3)->Arg(4);

void BM_primitive_idempotent(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Partition lam = (n == 4) ? Partition{2, 2} : Partition{3, 2};
    for (auto _ : state) {
        auto e = primitive_idempotent(StdTableau::row_reading(lam));
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_primitive_idempotent)->Arg(4)->Arg(5);

void BM_rho(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    HeckeElement a = antisymmetrizer(n);
    for (auto _ : state) {
        ScalarMatrix m = rho(r2(), a, n);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_rho)->Arg(3)->Arg(4);

void BM_ideal_component(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        ReAlgebra alg(r2());  // fresh instance: the component cache starts cold
        benchmark::DoNotOptimize(alg.ideal_component(degree).rank());
    }
}
BENCHMARK(BM_ideal_component)->Arg(2)->Arg(3)->Arg(4);

void BM_frobenius_algebra_n3(benchmark::State& state) {
    ReAlgebra alg(r2());
    alg.ideal_component(3);  // warm the cache; measure the identity checks
    for (auto _ : state) {
        auto rep = frobenius_algebra(alg, 3);
        benchmark::DoNotOptimize(rep.all_passed());
    }
}
BENCHMARK(BM_frobenius_algebra_n3);

void BM_character_table(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        ScalarMatrix t = character_table(n);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_character_table)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
