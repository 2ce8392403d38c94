#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fpsp/error.hpp"

namespace fpsp {

using Elem = std::uint32_t;

/// Hard upper bound on the modulus; FPSP_MAX_P in the environment may lower it.
inline constexpr std::uint32_t kMaxPrime = 1u << 20;

/// Effective cap: min(kMaxPrime, FPSP_MAX_P) when the variable parses as a positive integer.
std::uint32_t effective_max_p();

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

namespace detail {
struct FieldData;
}

/// The prime field F_p. A cheap shared handle; the multiplicative tables
/// (discrete log, powers of the root, inverses) are built once on first use.
class PrimeField {
public:
    std::uint32_t p() const;
    Elem root() const;

    Elem add(Elem x, Elem y) const {
        const std::uint32_t s = x + y;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem x, Elem y) const { return x >= y ? x - y : x + p_ - y; }
    Elem neg(Elem x) const { return x == 0 ? 0 : p_ - x; }
    Elem mul(Elem x, Elem y) const {
        return static_cast<Elem>(static_cast<std::uint64_t>(x) * y % p_);
    }
    Elem reduce(std::int64_t v) const {
        const std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<Elem>(r < 0 ? r + p_ : r);
    }

    Elem inverse(Elem x) const;
    Elem pow(Elem x, std::int64_t e) const;
    Elem div(Elem x, Elem y) const { return mul(x, inverse(y)); }

    /// Exponent i in [0, p-1) with root^i = x.
    std::uint32_t dlog(Elem x) const;
    /// root^i for i in [0, p-1).
    Elem exp(std::uint32_t i) const;

    /// Multiplicative order of x != 0.
    std::uint32_t order(Elem x) const;

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    friend PrimeField make_field(std::uint64_t p);
    explicit PrimeField(std::shared_ptr<detail::FieldData> data);

    const detail::FieldData& tables() const;

    std::shared_ptr<detail::FieldData> data_;
    std::uint32_t p_ = 0;
};

PrimeField make_field(std::uint64_t p);

/// Distinct prime factors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace fpsp
