#include <doctest.h>

#include <omp.h>

#include "fpsp/reference.hpp"
#include "fpsp/rng.hpp"

using namespace fpsp;

namespace {

std::vector<std::uint64_t> random_counts(CounterRng& rng, std::size_t n, std::uint64_t bound) {
    std::vector<std::uint64_t> v(n);
    for (auto& x : v) x = rng.uniform(bound);
    return v;
}

std::vector<Elem> random_elems(CounterRng& rng, std::size_t n, std::uint64_t p, bool nonzero) {
    std::vector<Elem> v(n);
    for (auto& x : v) x = nonzero ? 1 + rng.uniform(p - 1) : rng.uniform(p);
    return v;
}

}  // namespace

TEST_CASE("ntt round trip and small convolution") {
    std::vector<std::uint64_t> a = {1, 2, 3, 4, 0, 0, 0, 0};
    auto b = a;
    kernels::ntt(b, false);
    kernels::ntt(b, true);
    CHECK(a == b);

    const std::vector<std::uint64_t> x = {1, 2, 3}, y = {4, 5, 6};
    // (1 + 2t + 3t^2)(4 + 5t + 6t^2) folded mod t^3 - 1
    CHECK(kernels::cyclic_convolve(x, y) == std::vector<std::uint64_t>{31, 31, 28});
    CHECK(ref::cyclic_convolve(x, y) == std::vector<std::uint64_t>{31, 31, 28});
    CHECK(kernels::mod_pow(3, kernels::kNttModulus - 1) == 1);
}

TEST_CASE("convolution rejects inputs that could overflow") {
    const std::vector<std::uint64_t> big = {1ull << 40, 1ull << 40};
    CHECK_THROWS_AS(kernels::cyclic_convolve(big, big), Error);
}

TEST_CASE("kernels agree with the serial reference") {
    CounterRng rng(11, 0);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng.uniform(300);
        const auto a = random_counts(rng, n, 1000);
        const auto b = random_counts(rng, n, 1000);
        CHECK(kernels::cyclic_convolve(a, b) == ref::cyclic_convolve(a, b));
    }
    for (std::uint64_t p : {3ull, 5ull, 101ull, 1009ull}) {
        const PrimeField F = make_field(p);
        for (auto op : {kernels::PairOp::Sum, kernels::PairOp::Diff, kernels::PairOp::Prod, kernels::PairOp::Ratio}) {
            const auto xs = random_elems(rng, 1 + rng.uniform(60), p, false);
            const auto ys = random_elems(rng, 1 + rng.uniform(60), p, op == kernels::PairOp::Ratio);
            CHECK(kernels::pair_histogram(F, xs, ys, op) == ref::pair_histogram(F, xs, ys, op));
        }
    }
}

TEST_CASE("kernel results do not depend on the thread count") {
    CounterRng rng(12, 0);
    const PrimeField F = make_field(10007);
    const auto xs = random_elems(rng, 3000, 10007, false);
    const auto ys = random_elems(rng, 3000, 10007, true);
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const auto one = kernels::pair_histogram(F, xs, ys, kernels::PairOp::Ratio);
    omp_set_num_threads(4);
    const auto four = kernels::pair_histogram(F, xs, ys, kernels::PairOp::Ratio);
    omp_set_num_threads(saved);
    CHECK(one == four);
    std::vector<Elem> values;
    for (std::size_t i = 0; i < 40; ++i)
        for (std::size_t j = 0; j < 40; ++j) values.push_back(F.div(xs[i], ys[j]));
    const auto small = kernels::pair_histogram(F, std::span(xs).first(40), std::span(ys).first(40),
                                               kernels::PairOp::Ratio);
    CHECK(kernels::sum_of_squares(small) == ref::pair_collisions(values));
}
