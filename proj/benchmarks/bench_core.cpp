#include <benchmark/benchmark.h>

#include <random>

#include "cwcell/classify.hpp"
#include "cwcell/conjugacy.hpp"
#include "cwcell/families.hpp"
#include "cwcell/fusion.hpp"
#include "cwcell/local.hpp"
#include "cwcell/perm_group.hpp"
#include "cwcell/unitary.hpp"
#include "cwcell/witness.hpp"

using namespace cwcell;

static void BM_BsgsBuildSymmetric(benchmark::State& state) {
    auto n = static_cast<std::uint64_t>(state.range(0));
    auto gens = symmetric_group(n).generators();
    for (auto _ : state) {
        PermGroup g(static_cast<Point>(n), gens);
        benchmark::DoNotOptimize(g.order());
    }
}
BENCHMARK(BM_BsgsBuildSymmetric)->Arg(8)->Arg(12)->Arg(16);

static void BM_BsgsBuildSuzuki8(benchmark::State& state) {
    auto gens = suzuki_group(8).generators();
    for (auto _ : state) {
        PermGroup g(65, gens);
        benchmark::DoNotOptimize(g.order());
    }
}
BENCHMARK(BM_BsgsBuildSuzuki8);

static void BM_SiftSuzuki8(benchmark::State& state) {
    PermGroup g = suzuki_group(8);
    std::mt19937_64 rng(1);
    Perm x = g.random_element(rng);
    for (auto _ : state) benchmark::DoNotOptimize(g.contains(x));
}
BENCHMARK(BM_SiftSuzuki8);

static void BM_ConjugacyClassesSz8(benchmark::State& state) {
    PermGroup g = suzuki_group(8);
    for (auto _ : state) {
        auto cc = ConjugacyClasses::exact(g);
        benchmark::DoNotOptimize(cc.count());
    }
}
BENCHMARK(BM_ConjugacyClassesSz8);

static void BM_SylowThevenaz(benchmark::State& state) {
    PermGroup g = thevenaz_group();
    for (auto _ : state) {
        auto s = sylow_subgroup(g, 2);
        benchmark::DoNotOptimize(s.group.order());
    }
}
BENCHMARK(BM_SylowThevenaz);

static void BM_FusionClosureThevenaz(benchmark::State& state) {
    PermGroup g = thevenaz_group();
    auto s = sylow_subgroup(g, 2);
    for (auto _ : state) {
        auto fr = fusion_closure(g, s, 2);
        benchmark::DoNotOptimize(fr.closure_generates);
    }
}
BENCHMARK(BM_FusionClosureThevenaz);

static void BM_SigmaEvaluate(benchmark::State& state) {
    UnitaryRep sigma = suzuki_sigma(static_cast<std::uint32_t>(state.range(0)));
    std::mt19937_64 rng(2);
    Perm x = sigma.source().random_element(rng);
    for (auto _ : state) benchmark::DoNotOptimize(sigma.image(x).trace());
}
BENCHMARK(BM_SigmaEvaluate)->Arg(3)->Arg(7);

static void BM_SuzukiWitness8(benchmark::State& state) {
    for (auto _ : state) {
        auto cert = suzuki_witness(8);
        benchmark::DoNotOptimize(cert.checks.all());
    }
}
BENCHMARK(BM_SuzukiWitness8);

static void BM_ClassifyThevenaz(benchmark::State& state) {
    PermGroup g = thevenaz_group();
    for (auto _ : state) {
        auto v = classify(g, 2);
        benchmark::DoNotOptimize(v.branch);
    }
}
BENCHMARK(BM_ClassifyThevenaz);

static void BM_ClassifySuzuki8(benchmark::State& state) {
    PermGroup g = suzuki_group(8);
    for (auto _ : state) {
        auto v = classify(g, 2);
        benchmark::DoNotOptimize(v.branch);
    }
}
BENCHMARK(BM_ClassifySuzuki8);

BENCHMARK_MAIN();
