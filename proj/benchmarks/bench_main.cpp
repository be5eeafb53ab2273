#include <benchmark/benchmark.h>

#include "superroot/characters.hpp"
#include "superroot/levi.hpp"
#include "superroot/parabolic.hpp"

using namespace superroot;

namespace {

void BM_RootWindow(benchmark::State& state) {
    const auto aff = affinize(build_finite(TypeTag::F4()));
    for (auto _ : state) benchmark::DoNotOptimize(roots_up_to_depth(aff, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RootWindow)->Arg(2)->Arg(6)->Arg(12);

void BM_IsBase(benchmark::State& state) {
    const auto aff = affinize(build_finite(TypeTag::C(static_cast<int>(state.range(0)))));
    const auto& base = aff.distinguished_base();
    for (auto _ : state) benchmark::DoNotOptimize(is_base(aff, base, 6));
}
BENCHMARK(BM_IsBase)->DenseRange(3, 5);

void BM_CensusB0n(benchmark::State& state) {
    const auto aff = affinize(build_finite(TypeTag::B(0, static_cast<int>(state.range(0)))));
    CensusOptions opts;
    opts.depth = 6;
    for (auto _ : state) benchmark::DoNotOptimize(census(aff, opts));
}
BENCHMARK(BM_CensusB0n)->DenseRange(1, 5)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_DeltaString(benchmark::State& state) {
    const auto aff = affinize(build_finite(TypeTag::B(0, 2)));
    for (auto _ : state)
        benchmark::DoNotOptimize(delta_string(aff, aff.distinguished_base(), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DeltaString)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Heisenberg(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(heisenberg_verma(4, Rational(1), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Heisenberg)->Arg(20)->Arg(50)->Arg(100);

} // namespace
BENCHMARK_MAIN();
