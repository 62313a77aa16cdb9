#include "sphorb/parab.hpp"
#include "sphorb/realization.hpp"
#include "sphorb/stab.hpp"

#include <benchmark/benchmark.h>

using namespace sphorb;

namespace {

void centralizer_of_representative(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    LieElement x = representative_X(OrbitDescriptor::make(n, 2));
    for (auto _ : state) benchmark::DoNotOptimize(centralizer(x).dim());
}
BENCHMARK(centralizer_of_representative)->DenseRange(4, 12, 2)->Unit(benchmark::kMillisecond);

void rational_nullspace(benchmark::State& state) {
    // ad(X) on gl_n, the matrix every centralizer computation reduces
    const int n = static_cast<int>(state.range(0));
    LieElement x = representative_X(OrbitDescriptor::make(n, n / 2));
    const std::size_t d = static_cast<std::size_t>(n * n);
    RationalMatrix ad(d, d);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            RationalVector v = bracket(x, i == j ? LieElement(n) : LieElement::elementary(n, i, j)).coords();
            for (std::size_t r = 0; r < d; ++r) ad(r, static_cast<std::size_t>((i - 1) * n + j - 1)) = v[r];
        }
    for (auto _ : state) benchmark::DoNotOptimize(nullspace(ad).size());
}
BENCHMARK(rational_nullspace)->DenseRange(4, 12, 2)->Unit(benchmark::kMillisecond);

void weyl_multiply(benchmark::State& state) {
    // products of the printed operators, the inner loop of the bracket checks
    const int n = static_cast<int>(state.range(0));
    RealizationSpec s = realization_spec(OrbitDescriptor::make(n, 2));
    WeylOp h = phi_generator(Generator::coroot(3), s);
    WeylOp low = phi_generator(Generator::root_vector(simple_root(n - 2).negative()), s);
    for (auto _ : state) benchmark::DoNotOptimize(weyl_commutator(h, low * low).terms().size());
}
BENCHMARK(weyl_multiply)->DenseRange(6, 12, 2)->Unit(benchmark::kMicrosecond);

void parabolic_sweep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    OrbitDescriptor d = OrbitDescriptor::make(n, 2);
    for (auto _ : state)
        for (int i = 1; i < n; ++i) benchmark::DoNotOptimize(verify_witness(d, i).ok());
}
BENCHMARK(parabolic_sweep)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
