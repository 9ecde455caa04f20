#include <benchmark/benchmark.h>

#include <random>

#include "enumseq/asympk.hpp"
#include "enumseq/congruence.hpp"
#include "enumseq/curves.hpp"
#include "enumseq/decimal.hpp"
#include "enumseq/lines.hpp"
#include "enumseq/poly.hpp"

namespace {

void BM_v_defn(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumseq::v_defn(n));
    }
}
BENCHMARK(BM_v_defn)->Arg(50)->Arg(100)->Arg(150);

void BM_v_residue(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumseq::v_residue(n));
    }
}
BENCHMARK(BM_v_residue)->Arg(50)->Arg(100);

void BM_v_mod(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumseq::v_mod(n, 32));
    }
}
BENCHMARK(BM_v_mod)->Arg(64)->Arg(320);

void BM_poly_mul(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> coeff(-1000, 1000);
    std::vector<enumseq::Integer> ca, cb;
    for (int i = 0; i <= degree; ++i) {
        ca.emplace_back(coeff(rng));
        cb.emplace_back(coeff(rng));
    }
    enumseq::IntPoly a = enumseq::IntPoly::from_coefficients(std::move(ca));
    enumseq::IntPoly b = enumseq::IntPoly::from_coefficients(std::move(cb));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumseq::poly_mul(a, b));
    }
}
BENCHMARK(BM_poly_mul)->Arg(64)->Arg(256);

void BM_kontsevich(benchmark::State& state) {
    const long d = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumseq::kontsevich(d));
    }
}
BENCHMARK(BM_kontsevich)->Arg(60)->Arg(120);

void BM_asympk_apply(benchmark::State& state) {
    const int precision = 60;
    enumseq::DecimalSequence s;
    s.start = 1;
    for (long n = 1; n <= 120; ++n) {
        enumseq::Rational v = enumseq::rat(7) + enumseq::rat(3, n) +
                              enumseq::rat(enumseq::Integer(1), enumseq::Integer(n) * n);
        s.values.push_back(enumseq::BigDecimal::from_rational(v, precision));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumseq::asympk_apply(s, 8));
    }
}
BENCHMARK(BM_asympk_apply);

void BM_yukawa(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumseq::yukawa_series(order));
    }
}
BENCHMARK(BM_yukawa)->Arg(12)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
