#include "fpsp/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <string>

namespace fpsp::kernels {

namespace {

constexpr std::uint64_t kP = kNttModulus;
constexpr std::uint64_t kEpsilon = 0xFFFFFFFFull;  // 2^64 mod kP
constexpr std::uint64_t kGenerator = 7;
constexpr std::size_t kParallelLength = 1u << 14;

std::uint64_t reduce128(unsigned __int128 x) {
    const auto lo = static_cast<std::uint64_t>(x);
    const auto hi = static_cast<std::uint64_t>(x >> 64);
    const std::uint64_t hi_hi = hi >> 32;
    const std::uint64_t hi_lo = hi & kEpsilon;
    // x = lo + hi_lo * 2^64 + hi_hi * 2^96, with 2^64 = 2^32 - 1 and 2^96 = -1.
    std::uint64_t t0;
    if (__builtin_sub_overflow(lo, hi_hi, &t0)) t0 -= kEpsilon;
    const std::uint64_t t1 = hi_lo * kEpsilon;
    std::uint64_t r;
    if (__builtin_add_overflow(t0, t1, &r)) r += kEpsilon;
    if (r >= kP) r -= kP;
    return r;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r) || r >= kP) r -= kP;
    return r;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + (kP - b); }

}  // namespace

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
    return reduce128(static_cast<unsigned __int128>(a) * b);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e != 0) {
        if (e & 1) r = mod_mul(r, a);
        a = mod_mul(a, a);
        e >>= 1;
    }
    return r;
}

void ntt(std::vector<std::uint64_t>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n <= 1) return;
    if (!std::has_single_bit(n)) throw Error(ErrorCode::BadParams, "ntt length must be a power of two");
    const int logn = std::countr_zero(n);

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    std::vector<std::uint64_t> twiddle(n / 2);
    for (int s = 1; s <= logn; ++s) {
        const std::size_t len = std::size_t{1} << s;
        const std::size_t half = len >> 1;
        std::uint64_t w = mod_pow(kGenerator, (kP - 1) >> s);
        if (inverse) w = mod_pow(w, kP - 2);
        twiddle[0] = 1;
        for (std::size_t k = 1; k < half; ++k) twiddle[k] = mod_mul(twiddle[k - 1], w);

        const auto blocks = static_cast<std::int64_t>(n / len);
        const std::uint64_t* tw = twiddle.data();
        std::uint64_t* data = a.data();
#pragma omp parallel for schedule(static) if (n >= kParallelLength)
        for (std::int64_t blk = 0; blk < blocks; ++blk) {
            std::uint64_t* base = data + static_cast<std::size_t>(blk) * len;
            for (std::size_t k = 0; k < half; ++k) {
                const std::uint64_t u = base[k];
                const std::uint64_t v = mod_mul(base[k + half], tw[k]);
                base[k] = add_mod(u, v);
                base[k + half] = sub_mod(u, v);
            }
        }
    }

    if (inverse) {
        const std::uint64_t inv_n = mod_pow(n % kP, kP - 2);
        for (auto& x : a) x = mod_mul(x, inv_n);
    }
}

std::vector<std::uint64_t> cyclic_convolve(std::span<const std::uint64_t> a,
                                           std::span<const std::uint64_t> b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw Error(ErrorCode::BadParams, "convolution operands differ in length");
    if (n == 0) return {};

    unsigned __int128 mass = 0;
    for (auto v : a) mass += v;
    const std::uint64_t peak = *std::max_element(b.begin(), b.end());
    if (mass * peak >= kP) {
        throw Error(ErrorCode::SizeCap, "convolution coefficients could reach the working modulus");
    }

    const std::size_t len = std::bit_ceil(2 * n - 1);
    std::vector<std::uint64_t> fa(len, 0), fb(len, 0);
    std::copy(a.begin(), a.end(), fa.begin());
    std::copy(b.begin(), b.end(), fb.begin());
    ntt(fa, false);
    ntt(fb, false);
    for (std::size_t i = 0; i < len; ++i) fa[i] = mod_mul(fa[i], fb[i]);
    ntt(fa, true);

    // Linear coefficients are true integers; the fold adds at most two of them,
    // still bounded by mass * peak.
    std::vector<std::uint64_t> out(fa.begin(), fa.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t i = n; i < 2 * n - 1; ++i) out[i - n] += fa[i];
    return out;
}

std::vector<std::uint64_t> pair_histogram(const PrimeField& field, std::span<const Elem> xs,
                                          std::span<const Elem> ys, PairOp op) {
    const std::uint32_t p = field.p();
    std::vector<Elem> rhs(ys.begin(), ys.end());
    if (op == PairOp::Ratio) {
        for (auto& y : rhs) y = field.inverse(y);  // throws on 0
    }
    std::vector<std::uint64_t> counts(p, 0);
    const auto nx = static_cast<std::int64_t>(xs.size());

#pragma omp parallel if (xs.size() * rhs.size() >= (1u << 16))
    {
        std::vector<std::uint64_t> local(p, 0);
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < nx; ++i) {
            const Elem x = xs[static_cast<std::size_t>(i)];
            switch (op) {
                case PairOp::Sum:
                    for (Elem y : rhs) ++local[field.add(x, y)];
                    break;
                case PairOp::Diff:
                    for (Elem y : rhs) ++local[field.sub(x, y)];
                    break;
                case PairOp::Prod:
                case PairOp::Ratio:
                    for (Elem y : rhs) ++local[field.mul(x, y)];
                    break;
            }
        }
#pragma omp critical
        for (std::uint32_t v = 0; v < p; ++v) counts[v] += local[v];
    }
    return counts;
}

BigInt sum_of_squares(std::span<const std::uint64_t> counts) {
    using u128 = unsigned __int128;
    u128 total = 0;
    const auto n = static_cast<std::int64_t>(counts.size());
#pragma omp parallel if (counts.size() >= kParallelLength)
    {
        u128 local = 0;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < n; ++i) {
            const u128 c = counts[static_cast<std::size_t>(i)];
            local += c * c;
        }
#pragma omp critical
        total += local;
    }
    return to_big(total);
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace fpsp::kernels
