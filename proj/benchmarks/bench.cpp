#include <benchmark/benchmark.h>

#include "tfbs/dqm.hpp"
#include "tfbs/l1.hpp"
#include "tfbs/problem.hpp"
#include "tfbs/solver.hpp"

namespace {

void BM_WeightAssembly(benchmark::State& state) {
    const int M = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto w = tfbs::make_weight_matrices(M);
        benchmark::DoNotOptimize(w.Y(1, 1));
    }
}
BENCHMARK(BM_WeightAssembly)->Arg(20)->Arg(40)->Arg(80);

void BM_OperatorFactorization(benchmark::State& state) {
    const int M = static_cast<int>(state.range(0));
    const auto p = tfbs::example1(0.5);
    const auto mesh = tfbs::Mesh::make(p, M, 100);
    const auto w = tfbs::make_weight_matrices(M);
    const auto l1 = tfbs::l1_weights(0.5, 100, mesh.dt);
    for (auto _ : state) {
        auto op = tfbs::assemble_operator(p, mesh, w, l1.d);
        benchmark::DoNotOptimize(op.factorization.get());
    }
}
BENCHMARK(BM_OperatorFactorization)->Arg(20)->Arg(40)->Arg(80);

void BM_March(benchmark::State& state) {
    const int M = static_cast<int>(state.range(0));
    const int N = static_cast<int>(state.range(1));
    const auto p = tfbs::example1(0.5);
    const auto mesh = tfbs::Mesh::make(p, M, N);
    const auto w = tfbs::make_weight_matrices(M);
    const auto l1 = tfbs::l1_weights(0.5, N, mesh.dt);
    const auto op = tfbs::assemble_operator(p, mesh, w, l1.d);
    for (auto _ : state) {
        auto hist = tfbs::march(p, mesh, op, l1);
        benchmark::DoNotOptimize(hist.u.back()[0]);
    }
}
BENCHMARK(BM_March)->Args({20, 100})->Args({40, 1000});

}  // namespace

BENCHMARK_MAIN();
