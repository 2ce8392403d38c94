#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fpsp/bigint.hpp"
#include "fpsp/field.hpp"

// Data-parallel kernels (OpenMP). Every kernel here has a serial
// counterpart in reference.hpp that the tests compare against.

namespace fpsp::kernels {

/// NTT-friendly prime 2^64 - 2^32 + 1.
inline constexpr std::uint64_t kNttModulus = 0xFFFFFFFF00000001ull;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e);

/// In-place power-of-two NTT over kNttModulus. inverse=true includes the 1/n scaling.
void ntt(std::vector<std::uint64_t>& a, bool inverse);

/// Exact cyclic convolution of length n = a.size() = b.size():
/// out[k] = sum_{i+j = k mod n} a[i] b[j].
/// Zero-pads to a power of two >= 2n-1 and folds, so any n works.
/// Throws SizeCap unless sum(a) * max(b) < kNttModulus, which bounds every
/// output coefficient and makes the modular result the true integer.
std::vector<std::uint64_t> cyclic_convolve(std::span<const std::uint64_t> a,
                                           std::span<const std::uint64_t> b);

enum class PairOp { Sum, Diff, Prod, Ratio };

/// counts[v] = #{(x, y) : x op y = v}, length p. Ratio requires 0 not in ys.
std::vector<std::uint64_t> pair_histogram(const PrimeField& field, std::span<const Elem> xs,
                                          std::span<const Elem> ys, PairOp op);

/// Sum of squared counts, exact.
BigInt sum_of_squares(std::span<const std::uint64_t> counts);

/// Number of OpenMP threads a parallel region would use.
int max_threads();

}  // namespace fpsp::kernels
