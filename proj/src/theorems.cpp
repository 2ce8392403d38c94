#include "fpsp/theorems.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "fpsp/bigint.hpp"
#include "fpsp/error.hpp"

namespace fpsp {

namespace {

constexpr std::array<std::pair<TheoremId, const char*>, 15> kNames{{
    {TheoremId::HIS_1_1, "HIS_1_1"},
    {TheoremId::Vinh_1_2, "Vinh_1_2"},
    {TheoremId::HH_1_1, "HH_1_1"},
    {TheoremId::HH_1_2, "HH_1_2"},
    {TheoremId::PM_1_3, "PM_1_3"},
    {TheoremId::PM_1_4, "PM_1_4"},
    {TheoremId::T_1_5, "T_1_5"},
    {TheoremId::T_1_6, "T_1_6"},
    {TheoremId::Cor_1_7, "Cor_1_7"},
    {TheoremId::Cor_1_8, "Cor_1_8"},
    {TheoremId::T_1_9, "T_1_9"},
    {TheoremId::Cor_1_10, "Cor_1_10"},
    {TheoremId::Cor_1_11_Warren, "Cor_1_11_Warren"},
    {TheoremId::Cor_mult, "Cor_mult"},
    {TheoremId::T_1_12_threshold, "T_1_12_threshold"},
}};

double pw(std::size_t base, double e) { return std::pow(static_cast<double>(base), e); }

// |S|^den <= p^num, i.e. |S| <= p^(num/den).
bool size_le_power(std::size_t s, std::uint64_t p, unsigned num, unsigned den) {
    return boost::multiprecision::pow(BigInt(s), den) <= boost::multiprecision::pow(BigInt(p), num);
}

RatioRow base_row(std::string name, const Instance& in, std::uint32_t m) {
    RatioRow r;
    r.theorem = std::move(name);
    r.p = in.p();
    r.family = in.family;
    r.seed = in.seed;
    r.a = in.A.size();
    r.b = in.B.size();
    r.c = in.C.size();
    r.d = in.D.size();
    r.m = m;
    return r;
}

RatioRow finish(RatioRow r, double lhs, double rhs) {
    r.lhs = lhs;
    r.rhs = rhs;
    r.ratio = rhs > 0 ? lhs / rhs : std::nan("");
    return r;
}

double sz(const FSet& s) { return static_cast<double>(s.size()); }

// |A| <= |B| <= p^(3/5) and |D| <= |C| <= p^(3/5)
bool four_set_hyp(const Instance& in) {
    const std::uint64_t p = in.p();
    return in.A.size() <= in.B.size() && size_le_power(in.B.size(), p, 3, 5) && in.D.size() <= in.C.size() &&
           size_le_power(in.C.size(), p, 3, 5);
}

// |A| <= |B|, |C| <= p^(3/5)
bool three_set_hyp(const Instance& in) {
    const std::uint64_t p = in.p();
    return in.A.size() <= in.B.size() && in.A.size() <= in.C.size() && size_le_power(in.B.size(), p, 3, 5) &&
           size_le_power(in.C.size(), p, 3, 5);
}

bool zero_free(const Instance& in) {
    return !in.A.contains(0) && !in.B.contains(0) && !in.C.contains(0) && !in.D.contains(0);
}

std::vector<RatioRow> hh_row(const Instance& in, bool product) {
    const std::uint32_t m = product ? mu(pointwise_product(in.g1, in.h1)) : mu(in.g1);
    const FSet f = f_image(in.g1, in.h1, in.A, in.B);
    const FSet bc = combine(in.B, in.C, product ? SetOp::Prod : SetOp::Sum);
    const double p = in.p(), mm = m;
    const double rhs = std::min(sz(in.A) * sz(in.B) * sz(in.B) * sz(in.C) / (p * mm * mm), p * sz(in.B) / mm);
    RatioRow r = base_row(product ? "HH_1_1" : "HH_1_2", in, m);
    r.hyp_ok = zero_free(in);
    return {finish(r, sz(f) * sz(bc), rhs)};
}

std::vector<RatioRow> pm_row(const Instance& in, bool product) {
    const std::uint32_t m = product ? mu(pointwise_product(in.g1, in.h1)) : mu(in.g1);
    const FSet f = f_image(in.g1, in.h1, in.A, in.B);
    const FSet bc = combine(in.B, in.C, product ? SetOp::Prod : SetOp::Sum);
    const double a = sz(in.A), b = sz(in.B), c = sz(in.C), mm = m;
    const double rhs = std::min({std::pow(a, 0.2) * std::pow(b, 0.8) * std::pow(c, 0.2) / std::pow(mm, 0.8),
                                 b * std::sqrt(c) / mm, b * std::sqrt(a) / mm,
                                 std::cbrt(b * b * c * a) / std::cbrt(mm * mm)});
    RatioRow r = base_row(product ? "PM_1_3" : "PM_1_4", in, m);
    const std::uint64_t p = in.p();
    r.hyp_ok = zero_free(in) && size_le_power(in.A.size(), p, 5, 8) && size_le_power(in.B.size(), p, 5, 8) &&
               size_le_power(in.C.size(), p, 5, 8);
    return {finish(r, std::max(sz(f), sz(bc)), rhs)};
}

// max{|f1(A,B)|, |f2(D,C)|, |B op C|} against B^eb C^ec A^ea D^ed / m^(8/9).
RatioRow four_set_row(std::string name, const Instance& in, const FnTable& g1, const FnTable& h1, const FnTable& g2,
                      const FnTable& h2, SetOp op, std::uint32_t m, std::array<double, 4> e, bool hyp) {
    const FSet f1 = f_image(g1, h1, in.A, in.B);
    const FSet f2 = f_image(g2, h2, in.D, in.C);
    const FSet bc = combine(in.B, in.C, op);
    const double rhs = pw(in.B.size(), e[0]) * pw(in.C.size(), e[1]) * pw(in.A.size(), e[2]) *
                       pw(in.D.size(), e[3]) / std::pow(static_cast<double>(m), 8.0 / 9.0);
    RatioRow r = base_row(std::move(name), in, m);
    r.hyp_ok = hyp && zero_free(in);
    return finish(r, std::max({sz(f1), sz(f2), sz(bc)}), rhs);
}

RatioRow two_set_row(std::string name, const Instance& in, SetOp op, std::uint32_t m, double eb, double ec,
                     double ea) {
    const FSet f = f_image(in.g1, in.h1, in.A, in.B);
    const FSet bc = combine(in.B, in.C, op);
    const double rhs = pw(in.B.size(), eb) * pw(in.C.size(), ec) * pw(in.A.size(), ea) /
                       std::pow(static_cast<double>(m), 8.0 / 9.0);
    RatioRow r = base_row(std::move(name), in, m);
    r.hyp_ok = three_set_hyp(in) && zero_free(in);
    return finish(r, std::max(sz(f), sz(bc)), rhs);
}

RatioRow single_set_row(std::string name, const Instance& in, SetOp op, std::uint32_t m) {
    const FSet f = f_image(in.g1, in.h1, in.A, in.A);
    const FSet aa = combine(in.A, in.A, op);
    RatioRow r = base_row(std::move(name), in, m);
    r.hyp_ok = !in.A.contains(0) && size_le_power(in.A.size(), in.p(), 3, 5);
    return finish(r, std::max(sz(f), sz(aa)), pw(in.A.size(), 11.0 / 9.0));
}

std::vector<RatioRow> threshold_rows(const Instance& in) {
    const std::uint32_t m = mu(in.g1);
    const FSet f = f_image(in.g1, in.h1, in.A, in.A);
    const std::size_t a = in.A.size();
    const std::size_t small = std::min(combine(in.A, in.A, SetOp::Sum).size(), combine(in.A, in.A, SetOp::Prod).size());
    const bool hyp = !in.A.contains(0) && a >= 2 && size_le_power(a, in.p(), 3, 5);
    // epsilon read off the data: min{|A+A|, |A.A|} = |A|^(threshold - epsilon)
    const double logs = a >= 2 ? std::log(static_cast<double>(small)) / std::log(static_cast<double>(a)) : 0.0;

    const double eps_statement = 6.0 / 5.0 - logs;
    RatioRow st = base_row("T_1_12_threshold/statement", in, m);
    st.hyp_ok = hyp && eps_statement > 0;
    st = finish(st, sz(f), pw(a, 8.0 / 5.0 - 3.0 / 25.0 + 2.0 * eps_statement / 5.0));

    const double eps_proof = 9.0 / 8.0 - logs;
    RatioRow pr = base_row("T_1_12_threshold/proof", in, m);
    pr.hyp_ok = hyp && eps_proof > 0;
    pr = finish(pr, sz(f), pw(a, 13.0 / 10.0 + 4.0 * eps_proof / 5.0));
    return {st, pr};
}

}  // namespace

std::string theorem_name(TheoremId id) {
    for (const auto& [k, v] : kNames) {
        if (k == id) return v;
    }
    return "unknown";
}

std::optional<TheoremId> parse_theorem_id(const std::string& name) {
    for (const auto& [k, v] : kNames) {
        if (name == v) return k;
    }
    return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
    static const std::vector<TheoremId> ids = [] {
        std::vector<TheoremId> out;
        for (const auto& kv : kNames) out.push_back(kv.first);
        return out;
    }();
    return ids;
}

Instance uniform_instance(const FSet& A, const FnTable& g, const FnTable& h) {
    return Instance{A, A, A, A, g, h, g, h};
}

bool vinh_holds(std::uint64_t p, std::uint64_t a, std::uint64_t sum, std::uint64_t prod) {
    // p|A|^2 - mn|A| <= p * sqrt(p m n)
    const BigInt mn = BigInt(sum) * prod;
    const BigInt lhs = BigInt(p) * a * a - mn * a;
    if (lhs <= 0) return true;
    return lhs * lhs <= BigInt(p) * p * p * mn;
}

std::vector<RatioRow> theorem_ratio(TheoremId id, const Instance& in) {
    require_same_field(in.A, in.B);
    require_same_field(in.A, in.C);
    require_same_field(in.A, in.D);
    const double p = in.p();

    switch (id) {
        case TheoremId::HIS_1_1: {
            const double m = sz(combine(in.A, in.A, SetOp::Sum)), n = sz(combine(in.A, in.A, SetOp::Prod));
            RatioRow r = base_row("HIS_1_1", in, 1);
            const double a = sz(in.A);
            return {finish(r, a * a * a, m * m * n * a / p + std::sqrt(p) * m * n)};
        }
        case TheoremId::Vinh_1_2: {
            const std::size_t m = combine(in.A, in.A, SetOp::Sum).size();
            const std::size_t n = combine(in.A, in.A, SetOp::Prod).size();
            RatioRow r = base_row("Vinh_1_2", in, 1);
            const double a = sz(in.A), mn = static_cast<double>(m) * static_cast<double>(n);
            r.hyp_ok = BigInt(in.A.size()) * in.A.size() >= BigInt(in.p());
            r.asserted = true;
            r.pass = vinh_holds(in.p(), in.A.size(), m, n);
            return {finish(r, a * a, mn * a / p + std::sqrt(p) * std::sqrt(mn))};
        }
        case TheoremId::HH_1_1: return hh_row(in, true);
        case TheoremId::HH_1_2: return hh_row(in, false);
        case TheoremId::PM_1_3: return pm_row(in, true);
        case TheoremId::PM_1_4: return pm_row(in, false);
        case TheoremId::T_1_5:
            return {four_set_row("T_1_5", in, in.g1, in.h1, in.g2, in.h2, SetOp::Diff,
                                 std::max(mu(in.g1), mu(in.g2)), {23.0 / 36, 13.0 / 36, 7.0 / 36, 1.0 / 36},
                                 four_set_hyp(in))};
        case TheoremId::T_1_6: {
            const std::uint32_t m1 = mu(in.g1), m2 = mu(in.g2);
            return {four_set_row("T_1_6", in, in.g1, in.h1, in.g2, in.h2, SetOp::Sum, std::max(m1, m2),
                                 {13.0 / 18, 5.0 / 18, 1.0 / 6, 1.0 / 18}, four_set_hyp(in) && m1 == m2)};
        }
        case TheoremId::Cor_1_7: return {single_set_row("Cor_1_7", in, SetOp::Sum, mu(in.g1))};
        case TheoremId::Cor_1_8: {
            const std::uint32_t m = mu(in.g1);
            return {two_set_row("Cor_1_8/sum", in, SetOp::Sum, m, 13.0 / 18, 5.0 / 18, 2.0 / 9),
                    two_set_row("Cor_1_8/diff", in, SetOp::Diff, m, 23.0 / 36, 13.0 / 36, 2.0 / 9)};
        }
        case TheoremId::T_1_9: {
            const std::uint32_t m =
                std::max(mu(pointwise_product(in.g1, in.h1)), mu(pointwise_product(in.g2, in.h2)));
            return {four_set_row("T_1_9", in, in.g1, in.h1, in.g2, in.h2, SetOp::Prod, m,
                                 {13.0 / 18, 5.0 / 18, 1.0 / 6, 1.0 / 18}, four_set_hyp(in))};
        }
        case TheoremId::Cor_1_10:
            return {single_set_row("Cor_1_10", in, SetOp::Prod, mu(pointwise_product(in.g1, in.h1)))};
        case TheoremId::Cor_mult:
            return {two_set_row("Cor_mult", in, SetOp::Prod, mu(pointwise_product(in.g1, in.h1)), 13.0 / 18,
                                5.0 / 18, 2.0 / 9)};
        case TheoremId::Cor_1_11_Warren: {
            // x(1+y): g = id, h = 1.  x(1-y): g = -x, h = -1.
            const PrimeField& F = in.A.field();
            std::vector<Elem> id(F.p() - 1), neg(F.p() - 1), one(F.p() - 1, 1), minus_one(F.p() - 1, F.p() - 1);
            for (Elem x = 1; x < F.p(); ++x) {
                id[x - 1] = x;
                neg[x - 1] = F.neg(x);
            }
            const FnTable g1(F, id), h1(F, one), g2(F, neg), h2(F, minus_one);
            return {four_set_row("Cor_1_11_Warren", in, g1, h1, g2, h2, SetOp::Prod, 1,
                                 {13.0 / 18, 5.0 / 18, 1.0 / 6, 1.0 / 18}, four_set_hyp(in))};
        }
        case TheoremId::T_1_12_threshold: return threshold_rows(in);
    }
    throw Error(ErrorCode::BadParams, "unknown theorem id");
}

}  // namespace fpsp
