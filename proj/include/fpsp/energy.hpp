#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fpsp/bigint.hpp"
#include "fpsp/fset.hpp"

namespace fpsp {

enum class RepKind { Difference, Ratio, Sum };

/// Histogram of x = b - c (or b / c, b + c) over B x C, indexed by value.
struct RepFn {
    RepKind kind = RepKind::Difference;
    PrimeField field;
    std::vector<std::uint64_t> counts;  // length p
    std::uint64_t mass = 0;

    std::uint64_t operator()(Elem x) const { return counts[x]; }
    std::uint64_t max_count() const;
    FSet support() const;
};

RepFn rep_fn(const FSet& B, const FSet& C, RepKind kind, Method method = Method::Auto);

/// Positive rational exponent num/den.
struct Exponent {
    std::uint32_t num = 1;
    std::uint32_t den = 1;

    bool integral() const { return num % den == 0; }
    long double value() const { return static_cast<long double>(num) / den; }
};

struct Moment {
    std::optional<BigInt> exact;  // set for integral exponents
    long double value = 0;        // always set
};

/// sum_x r(x)^n. Fractional exponents are summed in ascending value order.
Moment moment(const RepFn& r, Exponent n);
BigInt moment_exact(const RepFn& r, std::uint32_t n);

struct LevelSet {
    std::uint64_t k = 0;
    FSet X;
    std::size_t n_k = 0;
};

LevelSet level_set(const RepFn& r, std::uint64_t k);

/// Smallest power of two k maximizing k^4 * n_k (k = 1 for an empty histogram).
std::uint64_t best_dyadic_level(const RepFn& r);

/// {x : r_{B-C}(x) >= |B||C| / (2|B-C|)}.
FSet popular_diff(const FSet& B, const FSet& C);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    long double value() const { return static_cast<long double>(num) / den; }
};

/// 1/log2|C|, exact when |C| is a power of two, otherwise rounded to a 2^-40 grid.
Rational default_epsilon(std::size_t size);

struct PopularSums {
    FSet P;
    FSet C_prime;
    std::uint64_t popular_pairs = 0;  // #{(c, c') : c + c' in P}
};

PopularSums popular_sum_core(const FSet& C, Rational epsilon);

struct DyadicBucket {
    std::uint64_t delta = 0;  // power of two; members have delta <= r(x) < 2 delta
    FSet T;
    std::uint64_t size_times_delta() const { return T.size() * delta; }
    std::uint64_t size_times_delta_sq() const { return T.size() * delta * delta; }
};

std::vector<DyadicBucket> dyadic_buckets(const RepFn& r);

/// Bucket maximizing |P'| * delta^n; ties go to the smaller delta.
DyadicBucket energy_popular(const RepFn& r, Exponent n);

}  // namespace fpsp
