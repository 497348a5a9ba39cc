#include <benchmark/benchmark.h>

#include "repstrata/bundle.hpp"

using namespace repstrata;

namespace {

Matrix random_square(int size, std::uint64_t seed) {
    Rng rng(seed);
    return random_matrix(FieldSpec::prime(32003), size, size, rng);
}

void BM_RankFp(benchmark::State& state) {
    Matrix m = random_square(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankFp)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

void BM_KernelFp(benchmark::State& state) {
    Rng rng(11);
    int size = static_cast<int>(state.range(0));
    Matrix m = random_matrix(FieldSpec::prime(32003), size / 2, size, rng);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_KernelFp)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

void BM_MulFp(benchmark::State& state) {
    int size = static_cast<int>(state.range(0));
    Matrix a = random_square(size, 3), b = random_square(size, 4);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MulFp)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

void BM_RankRational(benchmark::State& state) {
    Rng rng(5);
    int size = static_cast<int>(state.range(0));
    Matrix m = random_matrix(FieldSpec::rationals(), size, size, rng);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankRational)->Arg(8)->Arg(16)->Arg(32);

void BM_SampleStratum(benchmark::State& state) {
    FieldSpec f = FieldSpec::prime(32003);
    PresentationPtr pres = canonical_local(2, f);
    Rng rng(17);
    Layering lay = Layering::single({2, 3, 2});
    for (auto _ : state) benchmark::DoNotOptimize(sample_layered(pres, lay, rng));
}
BENCHMARK(BM_SampleStratum);

void BM_Socdim(benchmark::State& state) {
    Representation rep = sample_with_radlayering(3, DimVec3{2, 4, 3}, FieldSpec::prime(32003), 23);
    for (auto _ : state) benchmark::DoNotOptimize(socdim(rep));
}
BENCHMARK(BM_Socdim);

void BM_WitnessAny(benchmark::State& state) {
    FieldSpec f = FieldSpec::prime(32003);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(witness_any(2, DimVec3{2, 4, 3}, f, seed++));
    }
}
BENCHMARK(BM_WitnessAny);

void BM_FiberDim(benchmark::State& state) {
    FieldSpec f = FieldSpec::prime(32003);
    PresentationPtr pres = canonical_local(3, f);
    Rng rng(29);
    Representation mp = sample_layered(pres, Layering::single({3, 2}), rng);
    for (auto _ : state) benchmark::DoNotOptimize(fiber_dim(mp, {2}));
}
BENCHMARK(BM_FiberDim);

} // namespace

BENCHMARK_MAIN();
