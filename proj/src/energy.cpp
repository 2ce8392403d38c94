#include "fpsp/energy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "fpsp/kernels.hpp"

namespace fpsp {

std::uint64_t RepFn::max_count() const {
    return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

FSet RepFn::support() const { return FSet::support(field, counts); }

namespace {

std::vector<std::uint64_t> log_indicator(const FSet& s, bool negate) {
    const PrimeField& F = s.field();
    const std::uint32_t n = F.p() - 1;
    std::vector<std::uint64_t> v(n, 0);
    for (Elem x : s.elements()) {
        const std::uint32_t l = F.dlog(x);
        v[negate ? (n - l) % n : l] = 1;
    }
    return v;
}

std::vector<std::uint64_t> transform_counts(const FSet& B, const FSet& C, RepKind kind) {
    const PrimeField& F = B.field();
    const std::uint32_t p = F.p();
    if (kind == RepKind::Ratio) {
        const auto conv = kernels::cyclic_convolve(log_indicator(B, false), log_indicator(C, true));
        std::vector<std::uint64_t> counts(p, 0);
        for (std::uint32_t i = 0; i + 1 < p; ++i) counts[F.exp(i)] = conv[i];
        return counts;
    }
    std::vector<std::uint64_t> ic(p, 0);
    for (Elem c : C.elements()) ic[kind == RepKind::Difference ? F.neg(c) : c] = 1;
    return kernels::cyclic_convolve(B.indicator(), ic);
}

}  // namespace

RepFn rep_fn(const FSet& B, const FSet& C, RepKind kind, Method method) {
    require_same_field(B, C);
    if (kind == RepKind::Ratio && (B.contains(0) || C.contains(0))) {
        throw Error(ErrorCode::ZeroDivisor, "ratio representation needs 0 outside B and C");
    }
    const PrimeField& F = B.field();
    bool transform = method == Method::Transform;
    if (method == Method::Auto) {
        const double pairs = static_cast<double>(B.size()) * static_cast<double>(C.size());
        transform = pairs > 8.0 * F.p() * std::log2(static_cast<double>(F.p()));
    }
    RepFn r{kind, F, {}, static_cast<std::uint64_t>(B.size()) * C.size()};
    if (transform) {
        r.counts = transform_counts(B, C, kind);
    } else {
        const auto op = kind == RepKind::Difference ? kernels::PairOp::Diff
                        : kind == RepKind::Sum      ? kernels::PairOp::Sum
                                                    : kernels::PairOp::Ratio;
        r.counts = kernels::pair_histogram(F, B.elements(), C.elements(), op);
    }
    return r;
}

BigInt moment_exact(const RepFn& r, std::uint32_t n) {
    if (n < 1) throw Error(ErrorCode::BadExponent, "moment exponent must be >= 1");
    BigInt total = 0;
    for (std::uint64_t c : r.counts) {
        if (c == 0) continue;
        total += boost::multiprecision::pow(BigInt(c), n);
    }
    return total;
}

Moment moment(const RepFn& r, Exponent n) {
    if (n.den == 0 || n.num < n.den) throw Error(ErrorCode::BadExponent, "moment exponent must be >= 1");
    Moment m;
    if (n.integral()) {
        m.exact = moment_exact(r, n.num / n.den);
        m.value = m.exact->convert_to<long double>();
        return m;
    }
    const long double e = n.value();
    long double total = 0;
    for (std::uint64_t c : r.counts) {
        if (c != 0) total += std::pow(static_cast<long double>(c), e);
    }
    m.value = total;
    return m;
}

LevelSet level_set(const RepFn& r, std::uint64_t k) {
    if (k < 1) throw Error(ErrorCode::BadParams, "level threshold must be >= 1");
    FSet X(r.field);
    for (std::size_t v = 0; v < r.counts.size(); ++v) {
        if (r.counts[v] >= k) X.insert(static_cast<Elem>(v));
    }
    const std::size_t n = X.size();
    return LevelSet{k, std::move(X), n};
}

std::uint64_t best_dyadic_level(const RepFn& r) {
    using u128 = unsigned __int128;
    const std::uint64_t top = r.max_count();
    std::uint64_t best_k = 1;
    u128 best = 0;
    for (std::uint64_t k = 1; k <= top; k <<= 1) {
        std::uint64_t n_k = 0;
        for (std::uint64_t c : r.counts) n_k += c >= k ? 1 : 0;
        const u128 k2 = static_cast<u128>(k) * k;
        const u128 score = k2 * k2 * n_k;
        if (score > best) {
            best = score;
            best_k = k;
        }
    }
    return best_k;
}

FSet popular_diff(const FSet& B, const FSet& C) {
    if (B.empty() || C.empty()) throw Error(ErrorCode::EmptySet, "popular differences of an empty set");
    const RepFn r = rep_fn(B, C, RepKind::Difference);
    const std::uint64_t diff_size = r.support().size();
    const std::uint64_t pairs = r.mass;
    FSet P(B.field());
    for (std::size_t x = 0; x < r.counts.size(); ++x) {
        const std::uint64_t c = r.counts[x];
        if (c != 0 && 2 * c * diff_size >= pairs) P.insert(static_cast<Elem>(x));
    }
    return P;
}

Rational default_epsilon(std::size_t size) {
    if (size < 2) return {1, 1};
    if (std::has_single_bit(size)) return {1, std::countr_zero(size)};
    constexpr std::int64_t kDen = std::int64_t{1} << 40;
    const long double e = 1.0L / std::log2(static_cast<long double>(size));
    return {std::llround(e * kDen), kDen};
}

PopularSums popular_sum_core(const FSet& C, Rational epsilon) {
    if (epsilon.den <= 0 || epsilon.num <= 0 || epsilon.num >= epsilon.den) {
        throw Error(ErrorCode::BadEpsilon, "epsilon must lie strictly between 0 and 1");
    }
    if (C.empty()) throw Error(ErrorCode::EmptySet, "popular sums of an empty set");
    using u128 = unsigned __int128;
    const RepFn r = rep_fn(C, C, RepKind::Sum);
    const u128 sum_size = r.support().size();
    const u128 sq = static_cast<u128>(C.size()) * C.size();
    const auto num = static_cast<u128>(epsilon.num);
    const auto den = static_cast<u128>(epsilon.den);

    PopularSums out{FSet(C.field()), FSet(C.field()), 0};
    for (std::size_t x = 0; x < r.counts.size(); ++x) {
        const std::uint64_t c = r.counts[x];
        if (c != 0 && static_cast<u128>(c) * den * sum_size >= num * sq) {
            out.P.insert(static_cast<Elem>(x));
            out.popular_pairs += c;
        }
    }
    const PrimeField& F = C.field();
    const auto elems = C.elements();
    for (Elem c1 : elems) {
        std::uint64_t row = 0;
        for (Elem c2 : elems) row += out.P.contains(F.add(c1, c2)) ? 1 : 0;
        if (static_cast<u128>(row) * den >= (den - num) * C.size()) out.C_prime.insert(c1);
    }
    return out;
}

std::vector<DyadicBucket> dyadic_buckets(const RepFn& r) {
    std::vector<DyadicBucket> out;
    const std::uint64_t top = r.max_count();
    if (top == 0) return out;
    const int levels = std::bit_width(top);
    std::vector<FSet> members(static_cast<std::size_t>(levels), FSet(r.field));
    for (std::size_t x = 0; x < r.counts.size(); ++x) {
        const std::uint64_t c = r.counts[x];
        if (c != 0) members[static_cast<std::size_t>(std::bit_width(c) - 1)].insert(static_cast<Elem>(x));
    }
    for (int j = 0; j < levels; ++j) {
        if (!members[static_cast<std::size_t>(j)].empty()) {
            out.push_back(DyadicBucket{std::uint64_t{1} << j, std::move(members[static_cast<std::size_t>(j)])});
        }
    }
    return out;
}

DyadicBucket energy_popular(const RepFn& r, Exponent n) {
    auto buckets = dyadic_buckets(r);
    if (buckets.empty()) throw Error(ErrorCode::EmptySet, "energy-popular bucket of an empty histogram");
    // Compare |T| * delta^(num/den) through |T|^den * delta^num.
    std::size_t best = 0;
    BigInt best_score = -1;
    for (std::size_t i = 0; i < buckets.size(); ++i) {
        const BigInt score = boost::multiprecision::pow(BigInt(buckets[i].T.size()), n.den) *
                             boost::multiprecision::pow(BigInt(buckets[i].delta), n.num);
        if (score > best_score) {
            best_score = score;
            best = i;
        }
    }
    return std::move(buckets[best]);
}

}  // namespace fpsp
