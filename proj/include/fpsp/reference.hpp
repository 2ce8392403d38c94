#pragma once

// Serial reference implementations. Slow and obvious on purpose: the test
// suites compare the OpenMP kernels and transform paths against these.

#include <cstdint>
#include <span>
#include <vector>

#include "fpsp/bigint.hpp"
#include "fpsp/incidence.hpp"
#include "fpsp/kernels.hpp"

namespace fpsp::ref {

std::vector<std::uint64_t> cyclic_convolve(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

std::vector<std::uint64_t> pair_histogram(const PrimeField& field, std::span<const Elem> xs,
                                          std::span<const Elem> ys, kernels::PairOp op);

/// O(|R| |S|) direct test of every pair.
std::uint64_t incidences(const IncidenceConfig& cfg);

/// O(|R|^3): for every pair, count the points on the line through it.
std::uint64_t max_collinear(const PrimeField& F, std::span<const Point3> R);

/// #{(i, j) : values[i] == values[j]} by comparing all pairs.
BigInt pair_collisions(std::span<const Elem> values);

}  // namespace fpsp::ref
