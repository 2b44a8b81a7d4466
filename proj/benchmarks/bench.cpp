#include <benchmark/benchmark.h>

#include "vexil/brill_noether.hpp"
#include "vexil/schubert.hpp"
#include "vexil/schur_ring.hpp"
#include "vexil/shapes.hpp"

using namespace vexil;

static void BM_SchubertCsm(benchmark::State& state) {
    for (auto _ : state) {
        GradedClass c = schubert_csm_class({2, 1}, 2, 5);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_SchubertCsm);

static void BM_SchubertTySolve(benchmark::State& state) {
    for (auto _ : state) {
        GradedClass c = schubert_ty_class({2, 2}, 2, 6);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_SchubertTySolve);

static void BM_BrillNoetherSurface(benchmark::State& state) {
    BNProblem prob = bn_problem(11, 10, {0, 1, 2});
    for (auto _ : state) {
        GradedClass c = ty_class_W(prob);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_BrillNoetherSurface);

static void BM_LrProduct(benchmark::State& state) {
    RingPtr ring = schur_ring(3, 7);
    GradedClass a = sigma(ring, {3, 2, 1});
    GradedClass b = sigma(ring, {2, 2, 1});
    for (auto _ : state) {
        GradedClass c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_LrProduct);

static void BM_DKappa(benchmark::State& state) {
    std::vector<int> lambda{6, 6, 3, 3};
    Shape kappa{2, 2, 4, 4};
    for (auto _ : state) {
        YPolynomial d = d_kappa(lambda, kappa);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_DKappa);

static void BM_QySeries(benchmark::State& state) {
    for (auto _ : state) {
        UniSeries q = qy_series(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_QySeries)->Arg(4)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
