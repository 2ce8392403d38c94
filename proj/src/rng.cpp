#include "fpsp/rng.hpp"

namespace fpsp {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
}

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(mix64(seed + kGolden) ^ mix64(stream * 0xD1B54A32D192ED03ull + 0x632BE59BD9B4E019ull))) {}

std::uint64_t CounterRng::next() {
    ++counter_;
    return mix64(key_ + counter_ * kGolden);
}

std::uint64_t CounterRng::uniform(std::uint64_t bound) {
    // Accept draws below the largest multiple of bound.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
    for (;;) {
        const std::uint64_t x = next();
        if (x <= limit) return x % bound;
    }
}

CounterRng CounterRng::split(std::uint64_t id) const {
    return CounterRng(FromKey{}, mix64(key_ ^ mix64(id + 0xA0761D6478BD642Full)));
}

}  // namespace fpsp
