#include "fpsp/field.hpp"

#include <cstdlib>
#include <mutex>
#include <string>
#include <vector>

namespace fpsp {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::TooSmall: return "TooSmall";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::ZeroInverse: return "ZeroInverse";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::ZeroDivisor: return "ZeroDivisor";
        case ErrorCode::ZeroDilation: return "ZeroDilation";
        case ErrorCode::ZeroInCodomain: return "ZeroInCodomain";
        case ErrorCode::ZeroInA: return "ZeroInA";
        case ErrorCode::BadExponent: return "BadExponent";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::BadEpsilon: return "BadEpsilon";
        case ErrorCode::SizeCap: return "SizeCap";
        case ErrorCode::BadP: return "BadP";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace detail {

struct FieldData {
    std::uint32_t p = 0;
    Elem root = 0;
    std::once_flag once;
    std::vector<std::uint32_t> dlog;  // index x in [0,p); dlog[0] unused
    std::vector<Elem> exp;            // length p-1
    std::vector<Elem> inv;            // index x in [0,p); inv[0] unused
};

}  // namespace detail

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e != 0) {
        if (e & 1) r = mulmod64(r, b, m);
        b = mulmod64(b, b, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are sufficient below 3.3e24.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint32_t effective_max_p() {
    const char* env = std::getenv("FPSP_MAX_P");
    if (env == nullptr || *env == '\0') return kMaxPrime;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) return kMaxPrime;
    return v < kMaxPrime ? static_cast<std::uint32_t>(v) : kMaxPrime;
}

PrimeField make_field(std::uint64_t p) {
    if (p < 3) throw Error(ErrorCode::TooSmall, "modulus " + std::to_string(p) + " < 3");
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is composite");
    if (p > effective_max_p()) {
        throw Error(ErrorCode::TooLarge,
                    "modulus " + std::to_string(p) + " exceeds cap " + std::to_string(effective_max_p()));
    }
    auto data = std::make_shared<detail::FieldData>();
    data->p = static_cast<std::uint32_t>(p);
    const auto factors = prime_factors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool generator = true;
        for (std::uint64_t q : factors) {
            if (powmod64(g, (p - 1) / q, p) == 1) {
                generator = false;
                break;
            }
        }
        if (generator) {
            data->root = static_cast<Elem>(g);
            break;
        }
    }
    return PrimeField(std::move(data));
}

PrimeField::PrimeField(std::shared_ptr<detail::FieldData> data) : data_(std::move(data)), p_(data_->p) {}

std::uint32_t PrimeField::p() const { return p_; }
Elem PrimeField::root() const { return data_->root; }

const detail::FieldData& PrimeField::tables() const {
    detail::FieldData& d = *data_;
    std::call_once(d.once, [&d] {
        const std::uint32_t p = d.p;
        d.dlog.assign(p, 0);
        d.exp.assign(p - 1, 0);
        d.inv.assign(p, 0);
        std::uint64_t x = 1;
        for (std::uint32_t i = 0; i + 1 < p; ++i) {
            d.exp[i] = static_cast<Elem>(x);
            d.dlog[x] = i;
            x = x * d.root % p;
        }
        // inv(root^i) = root^(p-1-i)
        for (std::uint32_t i = 0; i + 1 < p; ++i) {
            d.inv[d.exp[i]] = d.exp[(p - 1 - i) % (p - 1)];
        }
    });
    return d;
}

Elem PrimeField::inverse(Elem x) const {
    if (x % p_ == 0) throw Error(ErrorCode::ZeroInverse, "0 has no inverse");
    return tables().inv[x % p_];
}

Elem PrimeField::pow(Elem x, std::int64_t e) const {
    x %= p_;
    if (e < 0) {
        if (x == 0) throw Error(ErrorCode::ZeroInverse, "negative power of 0");
        x = inverse(x);
        e = -e;
    }
    return static_cast<Elem>(powmod64(x, static_cast<std::uint64_t>(e), p_));
}

std::uint32_t PrimeField::dlog(Elem x) const {
    if (x % p_ == 0) throw Error(ErrorCode::ZeroInverse, "dlog of 0");
    return tables().dlog[x % p_];
}

Elem PrimeField::exp(std::uint32_t i) const { return tables().exp[i % (p_ - 1)]; }

std::uint32_t PrimeField::order(Elem x) const {
    const std::uint32_t n = p_ - 1;
    const std::uint32_t l = dlog(x);
    std::uint32_t a = l, b = n;
    while (b != 0) {
        const std::uint32_t t = a % b;
        a = b;
        b = t;
    }
    return n / a;  // gcd(0, n) = n gives order 1
}

}  // namespace fpsp
