#include "fpsp/fset.hpp"

#include <bit>
#include <cmath>

#include "fpsp/kernels.hpp"
#include "fpsp/rng.hpp"

namespace fpsp {

FSet::FSet(PrimeField field) : field_(std::move(field)), mask_((field_.p() + 63) / 64, 0) {}

void FSet::insert(Elem x) {
    if (x >= field_.p()) {
        throw Error(ErrorCode::BadParams,
                    "element " + std::to_string(x) + " is not a residue mod " + std::to_string(field_.p()));
    }
    std::uint64_t& w = mask_[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if ((w & bit) == 0) {
        w |= bit;
        ++size_;
    }
}

FSet FSet::from_elements(PrimeField field, std::span<const Elem> elems) {
    FSet s(std::move(field));
    for (Elem x : elems) {
        if (s.contains(x)) throw Error(ErrorCode::BadParams, "duplicate element " + std::to_string(x));
        s.insert(x);
    }
    return s;
}

FSet FSet::support(PrimeField field, std::span<const std::uint64_t> counts) {
    FSet s(std::move(field));
    const std::size_t n = std::min<std::size_t>(counts.size(), s.p());
    for (std::size_t v = 0; v < n; ++v) {
        if (counts[v] != 0) s.insert(static_cast<Elem>(v));
    }
    return s;
}

FSet FSet::full(PrimeField field) {
    FSet s(std::move(field));
    for (Elem x = 0; x < s.p(); ++x) s.insert(x);
    return s;
}

FSet FSet::nonzero(PrimeField field) {
    FSet s(std::move(field));
    for (Elem x = 1; x < s.p(); ++x) s.insert(x);
    return s;
}

std::vector<Elem> FSet::elements() const {
    std::vector<Elem> out;
    out.reserve(size_);
    for (std::size_t w = 0; w < mask_.size(); ++w) {
        std::uint64_t bits = mask_[w];
        while (bits != 0) {
            out.push_back(static_cast<Elem>(w * 64 + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<std::uint64_t> FSet::indicator() const {
    std::vector<std::uint64_t> v(p(), 0);
    for (Elem x : elements()) v[x] = 1;
    return v;
}

bool FSet::is_subset_of(const FSet& other) const {
    require_same_field(*this, other);
    for (std::size_t w = 0; w < mask_.size(); ++w) {
        if ((mask_[w] & ~other.mask_[w]) != 0) return false;
    }
    return true;
}

void require_same_field(const FSet& a, const FSet& b) {
    if (!(a.field() == b.field())) {
        throw Error(ErrorCode::FieldMismatch,
                    "p=" + std::to_string(a.p()) + " vs p=" + std::to_string(b.p()));
    }
}

std::optional<Family> parse_family(const std::string& name) {
    if (name == "interval") return Family::Interval;
    if (name == "ap") return Family::ArithmeticProgression;
    if (name == "gp") return Family::GeometricProgression;
    if (name == "mul_subgroup" || name == "subgroup") return Family::MulSubgroup;
    if (name == "random") return Family::Random;
    if (name == "explicit") return Family::Explicit;
    return std::nullopt;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Interval: return "interval";
        case Family::ArithmeticProgression: return "ap";
        case Family::GeometricProgression: return "gp";
        case Family::MulSubgroup: return "subgroup";
        case Family::Random: return "random";
        case Family::Explicit: return "explicit";
    }
    return "unknown";
}

namespace {

void check_length(const PrimeField& field, std::size_t n) {
    if (n > field.p()) {
        throw Error(ErrorCode::BadParams,
                    "requested size " + std::to_string(n) + " exceeds p=" + std::to_string(field.p()));
    }
}

FSet progression(const PrimeField& field, Elem start, std::size_t n, auto next) {
    FSet s(field);
    Elem x = start % field.p();
    for (std::size_t i = 0; i < n; ++i) {
        if (s.contains(x)) throw Error(ErrorCode::BadParams, "progression repeats before reaching its length");
        s.insert(x);
        x = next(x);
    }
    return s;
}

}  // namespace

FSet generate(const PrimeField& field, const FamilyParams& params, std::uint64_t seed) {
    const std::uint32_t p = field.p();
    FSet out(field);
    switch (params.family) {
        case Family::Interval:
            check_length(field, params.length);
            out = progression(field, params.start, params.length, [&](Elem x) { return field.add(x, 1); });
            break;
        case Family::ArithmeticProgression:
            check_length(field, params.length);
            if (params.step % p == 0 && params.length > 1) throw Error(ErrorCode::BadParams, "ap step is 0 mod p");
            out = progression(field, params.start, params.length,
                              [&](Elem x) { return field.add(x, params.step % p); });
            break;
        case Family::GeometricProgression:
            check_length(field, params.length);
            if (params.start % p == 0 || params.ratio % p == 0) {
                throw Error(ErrorCode::BadParams, "gp start and ratio must be nonzero");
            }
            out = progression(field, params.start, params.length,
                              [&](Elem x) { return field.mul(x, params.ratio % p); });
            break;
        case Family::MulSubgroup: {
            const std::uint32_t order = params.order;
            if (order == 0 || (p - 1) % order != 0) {
                throw Error(ErrorCode::BadParams,
                            "subgroup order " + std::to_string(order) + " does not divide p-1=" + std::to_string(p - 1));
            }
            const Elem gen = field.exp((p - 1) / order);
            out = progression(field, 1, order, [&](Elem x) { return field.mul(x, gen); });
            break;
        }
        case Family::Random: {
            const std::uint64_t domain = params.zero_free ? p - 1 : p;
            if (params.length > domain) {
                throw Error(ErrorCode::BadParams,
                            "requested size " + std::to_string(params.length) + " exceeds domain " + std::to_string(domain));
            }
            // Floyd's sampling: exactly `length` draws.
            CounterRng rng(seed, params.instance_id);
            const Elem offset = params.zero_free ? 1 : 0;
            for (std::uint64_t j = domain - params.length; j < domain; ++j) {
                const auto t = static_cast<Elem>(rng.uniform(j + 1)) + offset;
                if (out.contains(t)) {
                    out.insert(static_cast<Elem>(j) + offset);
                } else {
                    out.insert(t);
                }
            }
            break;
        }
        case Family::Explicit:
            out = FSet::from_elements(field, params.elements);
            break;
    }
    if (params.zero_free && out.contains(0)) throw Error(ErrorCode::BadParams, "family contains 0 but zero_free was requested");
    return out;
}

namespace {

bool prefer_transform(const FSet& a, const FSet& b) {
    const double pairs = static_cast<double>(a.size()) * static_cast<double>(b.size());
    const double p = a.p();
    return pairs > 8.0 * p * std::log2(p);
}

FSet combine_naive(const FSet& a, const FSet& b, SetOp op) {
    const PrimeField& F = a.field();
    FSet out(F);
    const auto ea = a.elements();
    auto eb = b.elements();
    if (op == SetOp::Ratio) {
        for (auto& y : eb) y = F.inverse(y);
    }
    for (Elem x : ea) {
        for (Elem y : eb) {
            switch (op) {
                case SetOp::Sum: out.insert(F.add(x, y)); break;
                case SetOp::Diff: out.insert(F.sub(x, y)); break;
                case SetOp::Prod:
                case SetOp::Ratio: out.insert(F.mul(x, y)); break;
            }
        }
    }
    return out;
}

std::vector<std::uint64_t> log_indicator(const FSet& s, bool negate) {
    const PrimeField& F = s.field();
    std::vector<std::uint64_t> v(F.p() - 1, 0);
    for (Elem x : s.elements()) {
        if (x == 0) continue;
        const std::uint32_t l = F.dlog(x);
        v[negate ? (F.p() - 1 - l) % (F.p() - 1) : l] = 1;
    }
    return v;
}

FSet combine_transform(const FSet& a, const FSet& b, SetOp op) {
    const PrimeField& F = a.field();
    const std::uint32_t p = F.p();
    FSet out(F);
    if (op == SetOp::Sum || op == SetOp::Diff) {
        auto ib = b.indicator();
        if (op == SetOp::Diff) {
            std::vector<std::uint64_t> neg(p, 0);
            for (Elem y = 0; y < p; ++y) neg[F.neg(y)] = ib[y];
            ib.swap(neg);
        }
        const auto conv = kernels::cyclic_convolve(a.indicator(), ib);
        return FSet::support(F, conv);
    }
    if (a.empty() || b.empty()) return out;
    if (a.contains(0) || (op == SetOp::Prod && b.contains(0))) out.insert(0);
    const auto conv = kernels::cyclic_convolve(log_indicator(a, false), log_indicator(b, op == SetOp::Ratio));
    for (std::uint32_t i = 0; i + 1 < p; ++i) {
        if (conv[i] != 0) out.insert(F.exp(i));
    }
    return out;
}

}  // namespace

FSet combine(const FSet& a, const FSet& b, SetOp op, Method method) {
    require_same_field(a, b);
    if (op == SetOp::Ratio && b.contains(0)) throw Error(ErrorCode::ZeroDivisor, "ratio set with 0 in the divisor set");
    const bool transform = method == Method::Transform || (method == Method::Auto && prefer_transform(a, b));
    return transform ? combine_transform(a, b, op) : combine_naive(a, b, op);
}

FSet affine(const FSet& a, Elem lambda, Elem shift) {
    const PrimeField& F = a.field();
    if (lambda % F.p() == 0) throw Error(ErrorCode::ZeroDilation, "dilation by 0");
    FSet out(F);
    for (Elem x : a.elements()) out.insert(F.add(F.mul(lambda % F.p(), x), shift % F.p()));
    return out;
}

}  // namespace fpsp
