#include <benchmark/benchmark.h>

#include <random>

#include "semialg/poly.hpp"

using namespace semialg;

namespace {

Poly random_poly(std::mt19937_64& rng, int terms, int max_deg, int vars) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<std::uint32_t> var(1, vars);
    std::uniform_int_distribution<long long> coeff(-9, 9);
    std::vector<Poly::Term> out;
    for (int t = 0; t < terms; ++t) {
        std::vector<Mono::Factor> factors;
        const int d = deg(rng);
        for (int j = 0; j < d; ++j) factors.emplace_back(VarId::plain(var(rng)), 1);
        out.push_back({MonoPool::instance().intern(std::move(factors)), Rational(coeff(rng), 2)});
    }
    return Poly::from_terms(std::move(out));
}

}  // namespace

static void BM_RationalArith(benchmark::State& state) {
    const Rational a(7, 12), b(-5, 9);
    Rational acc(0);
    for (auto _ : state) {
        acc = acc + a * b - a / Rational(3);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_RationalArith);

static void BM_PolyAdd(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const Poly p = random_poly(rng, static_cast<int>(state.range(0)), 6, 12);
    const Poly q = random_poly(rng, static_cast<int>(state.range(0)), 6, 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(p + q);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PolyAdd)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void BM_PolyMul(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const Poly p = random_poly(rng, static_cast<int>(state.range(0)), 3, 12);
    const Poly q = random_poly(rng, static_cast<int>(state.range(0)), 3, 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(p * q);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PolyMul)->RangeMultiplier(4)->Range(8, 512)->Complexity();

static void BM_PolyLift(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const Poly p = random_poly(rng, 256, 6, 12);
    const VarId v = VarId::plain(13);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul_var(p, v, true));
    }
}
BENCHMARK(BM_PolyLift);

static void BM_PolyTextRoundTrip(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const Poly p = random_poly(rng, 128, 5, 9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(Poly::parse(p.to_string()));
    }
}
BENCHMARK(BM_PolyTextRoundTrip);
