#pragma once

#include <cstdint>

namespace fpsp {

/// Counter-based generator: the i-th output is a pure function of
/// (seed, stream, i), so draws are reproducible bit-for-bit on any platform
/// and independent of how work is scheduled.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next();
    /// Uniform integer in [0, bound), bound > 0. Rejection sampling, no modulo bias.
    std::uint64_t uniform(std::uint64_t bound);

    /// Child generator for a sub-stream; does not advance this one.
    CounterRng split(std::uint64_t id) const;

    std::uint64_t key() const { return key_; }
    std::uint64_t counter() const { return counter_; }

private:
    struct FromKey {};
    CounterRng(FromKey, std::uint64_t key) : key_(key) {}

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t z);

}  // namespace fpsp
