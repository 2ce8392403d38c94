#include <benchmark/benchmark.h>

#include "fpsp/reference.hpp"
#include "fpsp/rng.hpp"

using namespace fpsp;

namespace {

std::vector<Elem> draw(std::size_t n, std::uint64_t p, std::uint64_t stream) {
    CounterRng rng(7, stream);
    std::vector<Elem> v(n);
    for (auto& x : v) x = 1 + rng.uniform(p - 1);
    return v;
}

std::vector<std::uint64_t> draw_counts(std::size_t n, std::uint64_t stream) {
    CounterRng rng(9, stream);
    std::vector<std::uint64_t> v(n);
    for (auto& x : v) x = rng.uniform(64);
    return v;
}

constexpr std::uint64_t kP = 100003;

void BM_pair_histogram_serial(benchmark::State& state) {
    const PrimeField F = make_field(kP);
    const auto xs = draw(state.range(0), kP, 0), ys = draw(state.range(0), kP, 1);
    for (auto _ : state) benchmark::DoNotOptimize(ref::pair_histogram(F, xs, ys, kernels::PairOp::Ratio));
}

void BM_pair_histogram_omp(benchmark::State& state) {
    const PrimeField F = make_field(kP);
    const auto xs = draw(state.range(0), kP, 0), ys = draw(state.range(0), kP, 1);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::pair_histogram(F, xs, ys, kernels::PairOp::Ratio));
}

void BM_convolve_serial(benchmark::State& state) {
    const auto a = draw_counts(state.range(0), 0), b = draw_counts(state.range(0), 1);
    for (auto _ : state) benchmark::DoNotOptimize(ref::cyclic_convolve(a, b));
}

void BM_convolve_ntt(benchmark::State& state) {
    const auto a = draw_counts(state.range(0), 0), b = draw_counts(state.range(0), 1);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::cyclic_convolve(a, b));
}

}  // namespace

BENCHMARK(BM_pair_histogram_serial)->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK(BM_pair_histogram_omp)->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK(BM_convolve_serial)->Arg(1009)->Arg(10007);
BENCHMARK(BM_convolve_ntt)->Arg(1009)->Arg(10007)->Arg(100003);

BENCHMARK_MAIN();
