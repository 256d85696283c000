#include <benchmark/benchmark.h>

#include "semialg/derivations.hpp"
#include "semialg/generators.hpp"

using namespace semialg;

static void BM_SolveCycle(benchmark::State& state) {
    const LinSystemFp sys = tseitin_cycle(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(sys));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveCycle)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_GapProver(benchmark::State& state) {
    std::vector<Poly::Term> terms;
    for (std::uint32_t i = 1; i <= static_cast<std::uint32_t>(state.range(0)); ++i) {
        terms.push_back({MonoPool::instance().var(VarId::plain(i)), Rational(1 + i % 3)});
    }
    const Poly form = Poly::from_terms(std::move(terms));
    for (auto _ : state) {
        ProofBuilder b(VarMode::Plain, 2, {}, VarId::plain(1));
        benchmark::DoNotOptimize(prove_gap(b, form, 2));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GapProver)->RangeMultiplier(2)->Range(4, 32)->Complexity();

static void BM_RefuteCycle(benchmark::State& state) {
    const LinSystemFp sys = tseitin_cycle(static_cast<std::uint32_t>(state.range(0)));
    const Certificate cert = std::get<Certificate>(solve(sys));
    for (auto _ : state) {
        benchmark::DoNotOptimize(refute_f2(sys, cert));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RefuteCycle)->Arg(4)->Arg(8)->Arg(16)->Complexity()->Unit(benchmark::kMillisecond);

static void BM_CheckCycleProof(benchmark::State& state) {
    const LinSystemFp sys = tseitin_cycle(static_cast<std::uint32_t>(state.range(0)));
    const Certificate cert = std::get<Certificate>(solve(sys));
    const RefutationReport report = refute_f2(sys, cert);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check(report.proof));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CheckCycleProof)->Arg(4)->Arg(8)->Arg(16)->Complexity()->Unit(benchmark::kMillisecond);
