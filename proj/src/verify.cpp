#include "fpsp/verify.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <limits>

#include "fpsp/kernels.hpp"

namespace fpsp {

std::string relation_symbol(Relation r) {
    switch (r) {
        case Relation::LessEq: return "<=";
        case Relation::GreaterEq: return ">=";
        case Relation::Equal: return "==";
    }
    return "?";
}

Check make_check(std::string name, BigInt lhs, Relation rel, BigInt rhs) {
    Check c{std::move(name), std::move(lhs), std::move(rhs), rel, false, false, {}};
    switch (rel) {
        case Relation::LessEq: c.pass = c.lhs <= c.rhs; break;
        case Relation::GreaterEq: c.pass = c.lhs >= c.rhs; break;
        case Relation::Equal: c.pass = c.lhs == c.rhs; break;
    }
    return c;
}

Check skipped_check(std::string name, std::string why) {
    Check c{std::move(name), 0, 0, Relation::LessEq, false, true, std::move(why)};
    return c;
}

GuardedCheck make_guarded(std::string name, long double lhs, Relation rel, long double rhs) {
    GuardedCheck c{std::move(name), lhs, rhs, rel, false};
    constexpr long double inf = std::numeric_limits<long double>::infinity();
    switch (rel) {
        case Relation::LessEq: c.pass = lhs <= std::nextafter(rhs, inf); break;
        case Relation::GreaterEq: c.pass = lhs >= std::nextafter(rhs, -inf); break;
        case Relation::Equal: c.pass = lhs <= std::nextafter(rhs, inf) && lhs >= std::nextafter(rhs, -inf); break;
    }
    return c;
}

BoundReport make_report(std::string name, double lhs, double rhs) {
    const double ratio = rhs > 0 ? lhs / rhs : std::numeric_limits<double>::quiet_NaN();
    return BoundReport{std::move(name), lhs, rhs, ratio};
}

bool ChainReport::passed() const { return failures() == 0; }

std::size_t ChainReport::failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += (c.pass || c.skipped) ? 0 : 1;
    for (const auto& c : guarded) n += c.pass ? 0 : 1;
    return n;
}

std::size_t ChainReport::skipped() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.skipped ? 1 : 0;
    return n;
}

std::string quad_name(QuadVariant v) {
    switch (v) {
        case QuadVariant::E1Sum: return "E1_sum";
        case QuadVariant::E2Sum: return "E2_sum";
        case QuadVariant::E3Prod: return "E3_prod";
        case QuadVariant::E4Prod: return "E4_prod";
    }
    return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double log2_factor(std::size_t n) { return std::max(1.0, std::log2(static_cast<double>(n))); }

BigInt big(std::uint64_t v) { return BigInt(v); }

}  // namespace

std::vector<std::uint64_t> quad_histogram(QuadVariant variant, const FSet& A, const FSet& X, const FSet& third,
                                          const FnTable& g, const FnTable& h, const Caps& caps) {
    require_same_field(A, X);
    require_same_field(A, third);
    if (A.contains(0)) throw Error(ErrorCode::ZeroInA, "quad energies need 0 not in A");
    const bool prod = variant == QuadVariant::E3Prod || variant == QuadVariant::E4Prod;
    if (prod && X.contains(0)) throw Error(ErrorCode::ZeroDivisor, "multiplicative quad energies need 0 not in X");
    const double triples = static_cast<double>(A.size()) * static_cast<double>(X.size()) * static_cast<double>(third.size());
    if (triples > static_cast<double>(caps.max_triples)) {
        throw Error(ErrorCode::SizeCap, "quad-energy histogram over " + std::to_string(static_cast<std::uint64_t>(triples)) + " triples");
    }

    const PrimeField& F = A.field();
    const std::uint32_t p = F.p();
    const auto ea = A.elements(), ex = X.elements(), et = third.elements();
    std::vector<Elem> x_inv(ex.size(), 0);
    if (prod) {
        for (std::size_t i = 0; i < ex.size(); ++i) x_inv[i] = F.inverse(ex[i]);
    }
    std::vector<std::uint64_t> hist(p, 0);
    const auto na = static_cast<std::int64_t>(ea.size());
#pragma omp parallel if (triples >= 65536.0)
    {
        std::vector<std::uint64_t> local(p, 0);
#pragma omp for schedule(dynamic, 1) nowait
        for (std::int64_t ia = 0; ia < na; ++ia) {
            const Elem a = ea[static_cast<std::size_t>(ia)];
            const Elem ga = g(a), ha = h(a), ga_inv = F.inverse(ga);
            for (std::size_t ix = 0; ix < ex.size(); ++ix) {
                const Elem x = ex[ix];
                for (Elem t : et) {
                    Elem v = 0;
                    switch (variant) {
                        case QuadVariant::E1Sum: v = F.mul(ga, F.add(F.add(x, t), ha)); break;
                        case QuadVariant::E2Sum: v = F.sub(F.sub(F.mul(t, ga_inv), x), ha); break;
                        case QuadVariant::E3Prod: v = F.mul(ga, F.add(F.mul(x, t), ha)); break;
                        case QuadVariant::E4Prod: v = F.mul(x_inv[ix], F.sub(F.mul(t, ga_inv), ha)); break;
                    }
                    ++local[v];
                }
            }
        }
#pragma omp critical
        for (std::uint32_t v = 0; v < p; ++v) hist[v] += local[v];
    }
    return hist;
}

BigInt quad_energy(QuadVariant variant, const FSet& A, const FSet& X, const FSet& third, const FnTable& g,
                   const FnTable& h, const Caps& caps) {
    return kernels::sum_of_squares(quad_histogram(variant, A, X, third, g, h, caps));
}

BigInt solution_count_M(const FSet& A, const FSet& B, const FSet& C, const FSet& X, ChainKind kind) {
    require_same_field(A, X);
    if (kind == ChainKind::Prod && (X.contains(0) || C.contains(0))) {
        throw Error(ErrorCode::ZeroDivisor, "multiplicative solution count needs 0 outside X and C");
    }
    const RepFn r = rep_fn(B, C, kind == ChainKind::Sum ? RepKind::Difference : RepKind::Ratio);
    std::uint64_t total = 0;
    for (Elem x : X.elements()) total += r(x);
    return BigInt(A.size()) * total;
}

ChainReport lemma_chain_check(const FSet& A, const FSet& B, const FSet& C, const FnTable& g, const FnTable& h,
                              ChainKind kind, std::uint64_t k, const Caps& caps) {
    const auto t0 = Clock::now();
    const bool sum = kind == ChainKind::Sum;
    ChainReport rep;
    rep.chain = sum ? "lemma_sum" : "lemma_prod";

    const RepFn r = rep_fn(B, C, sum ? RepKind::Difference : RepKind::Ratio);
    if (k == 0) k = best_dyadic_level(r);
    const LevelSet level = level_set(r, k);
    const FSet& X = level.X;
    const FSet image = f_image(g, h, A, B);
    const std::uint32_t m = sum ? mu(g) : mu(pointwise_product(g, h));
    const BigInt M = solution_count_M(A, B, C, X, kind);
    const std::uint64_t nA = A.size(), nB = B.size(), nC = C.size(), nX = X.size(), nF = image.size();

    rep.instance = {{"p", A.p()},         {"|A|", nA}, {"|B|", nB}, {"|C|", nC}, {"k", k},
                    {"n_k", level.n_k},   {"|f(A,B)|", nF}, {"m", m}, {"M", to_decimal(M)}};

    rep.checks.push_back(make_check("M >= k|A|n_k", M, Relation::GreaterEq, big(k) * nA * level.n_k));

    const auto e1_variant = sum ? QuadVariant::E1Sum : QuadVariant::E3Prod;
    const auto e2_variant = sum ? QuadVariant::E2Sum : QuadVariant::E4Prod;
    const std::string e1 = sum ? "E1" : "E3";
    const std::string e2 = sum ? "E2" : "E4";
    const BigInt m2 = big(m) * m;

    const auto within_cap = [&](std::uint64_t third) {
        return static_cast<double>(nA) * static_cast<double>(nX) * static_cast<double>(third) <=
               static_cast<double>(caps.max_triples);
    };

    if (within_cap(nC)) {
        const BigInt E1 = quad_energy(e1_variant, A, X, C, g, h, caps);
        rep.instance[e1] = to_decimal(E1);
        rep.checks.push_back(make_check("M^2 <= |f(A,B)|*" + e1, M * M, Relation::LessEq, big(nF) * E1));
        const auto cfg = build_proof_config(sum ? ProofVariant::SumE1 : ProofVariant::ProdE1, A, X, C, g, h);
        const std::uint64_t I = incidences(cfg);
        rep.instance["I(R1,S1)"] = I;
        rep.instance["|R1|"] = cfg.points().size();
        rep.instance["|S1|"] = cfg.planes().size();
        rep.checks.push_back(make_check(e1 + " <= m^2*I(R1,S1)", E1, Relation::LessEq, m2 * I));
        if (cfg.points().size() <= caps.max_collinear_points) {
            const std::uint64_t line = max_collinear(A.field(), cfg.points());
            rep.instance["max_collinear(R1)"] = line;
            rep.checks.push_back(make_check("max_collinear(R1) <= max(|A|,|C|,|X_k|)", line, Relation::LessEq,
                                            std::max({nA, nC, nX})));
            rep.checks.push_back(make_check("max_collinear(R1) <= max(|A|,m|C|,|X_k|)", line, Relation::LessEq,
                                            std::max({nA, m * nC, nX})));
            const double planes = static_cast<double>(cfg.planes().size());
            rep.reports.push_back(make_report(
                "I(R1,S1) vs |R1|^(1/2)|S1| + k|S1|", static_cast<double>(I),
                std::sqrt(static_cast<double>(cfg.points().size())) * planes + static_cast<double>(line) * planes));
        } else {
            rep.checks.push_back(skipped_check("max_collinear(R1) <= max(|A|,|C|,|X_k|)",
                                               "|R1| = " + std::to_string(cfg.points().size()) + " over collinearity cap"));
        }
    } else {
        rep.checks.push_back(skipped_check("M^2 <= |f(A,B)|*" + e1, "triple cap"));
    }

    if (within_cap(nF)) {
        const BigInt E2 = quad_energy(e2_variant, A, X, image, g, h, caps);
        rep.instance[e2] = to_decimal(E2);
        rep.checks.push_back(make_check("M^2 <= |C|*" + e2, M * M, Relation::LessEq, big(nC) * E2));
        const auto cfg = build_proof_config(sum ? ProofVariant::SumE2 : ProofVariant::ProdE2, A, X, image, g, h);
        const std::uint64_t I = incidences(cfg);
        rep.instance["I(R2,S2)"] = I;
        rep.checks.push_back(make_check(e2 + " <= m^2*I(R2,S2)", E2, Relation::LessEq, m2 * I));
    } else {
        rep.checks.push_back(skipped_check("M^2 <= |C|*" + e2, "triple cap"));
    }

    // Layer-cake identity: sum_x r^4 = sum_{k>=1} n_k (k^4 - (k-1)^4).
    const BigInt E4 = moment_exact(r, 4);
    const std::uint64_t top = r.max_count();
    std::vector<std::uint64_t> at_least(top + 2, 0);
    for (std::uint64_t c : r.counts) ++at_least[c];
    for (std::uint64_t j = top; j >= 1; --j) at_least[j - 1] += at_least[j];
    BigInt layered = 0;
    for (std::uint64_t j = 1; j <= top; ++j) {
        layered += BigInt(at_least[j]) * (boost::multiprecision::pow(BigInt(j), 4) - boost::multiprecision::pow(BigInt(j - 1), 4));
    }
    rep.instance["E4"] = to_decimal(E4);
    rep.checks.push_back(make_check(std::string(sum ? "E4(B,C)" : "E4x(B,C)") + " == sum_k n_k(k^4-(k-1)^4)", E4,
                                    Relation::Equal, layered));

    const double fA = static_cast<double>(nF), dC = static_cast<double>(nC), dA = static_cast<double>(nA);
    const double m4 = std::pow(static_cast<double>(m), 4);
    const double bound = m4 * std::min(fA * fA * fA * dC * dC / dA, fA * fA * dC * dC * dC / dA) * log2_factor(nA);
    rep.reports.push_back(make_report(sum ? "E4(B,C) vs lemma bound" : "E4x(B,C) vs lemma bound",
                                      E4.convert_to<double>(), bound));
    if (sum && B == C) {
        rep.reports.push_back(make_report("E4(B) vs m^4 |f|^2 |B|^3 / |A| log|A|", E4.convert_to<double>(),
                                          m4 * fA * fA * std::pow(static_cast<double>(nB), 3) / dA * log2_factor(nA)));
    }
    rep.seconds = seconds_since(t0);
    return rep;
}

NShifted count_N_shifted(const FSet& B, const FSet& C, const FSet& P) {
    require_same_field(B, C);
    require_same_field(B, P);
    if (!P.is_subset_of(combine(B, C, SetOp::Diff))) throw Error(ErrorCode::BadP, "P is not contained in B-C");
    NShifted out;
    out.N = 0;
    if (P.empty() || B.empty() || C.empty()) {
        out.per_c.assign(C.size(), 0);
        return out;
    }
    // n(c) = #{a in B : a - c in P} = r_{B-P}(c)
    const RepFn r = rep_fn(B, P, RepKind::Difference);
    BigInt squares = 0;
    for (Elem c : C.elements()) {
        const std::uint64_t n = r(c);
        out.per_c.push_back(n);
        out.mass += n;
        squares += BigInt(n) * n;
    }
    out.N = squares * B.size();
    return out;
}

ChainReport n_chain_check(const FSet& B, const FSet& C) {
    const auto t0 = Clock::now();
    ChainReport rep;
    rep.chain = "n_chain";
    const FSet P = popular_diff(B, C);
    const NShifted ns = count_N_shifted(B, C, P);
    const std::uint64_t nB = B.size(), nC = C.size();
    rep.instance = {{"p", B.p()}, {"|B|", nB}, {"|C|", nC}, {"|P|", P.size()}, {"N", to_decimal(ns.N)}, {"mass", ns.mass}};
    rep.checks.push_back(make_check("2*mass >= |B||C|", big(2) * ns.mass, Relation::GreaterEq, big(nB) * nC));
    rep.checks.push_back(make_check("N*|C| >= mass^2*|B|", ns.N * nC, Relation::GreaterEq, big(ns.mass) * ns.mass * nB));
    rep.checks.push_back(make_check("4N >= |B|^3|C|", ns.N * 4, Relation::GreaterEq, big(nB) * nB * nB * nC));
    const double pp = static_cast<double>(P.size());
    rep.reports.push_back(make_report("N vs |P|^2|B|/|C|", ns.N.convert_to<double>(), pp * pp * static_cast<double>(nB) / static_cast<double>(nC)));
    rep.seconds = seconds_since(t0);
    return rep;
}

BigInt count_X(const FSet& P, const FSet& B) {
    require_same_field(P, B);
    if (P.empty() || B.empty()) return 0;
    const FSet D = combine(B, B, SetOp::Diff);
    const RepFn r = rep_fn(P, D, RepKind::Difference);
    return kernels::sum_of_squares(r.counts);
}

HolderSum holder_weighted_sum(const FSet& B, const FSet& C) {
    require_same_field(B, C);
    const RepFn rb = rep_fn(B, B, RepKind::Difference);
    const RepFn rc = rep_fn(C, C, RepKind::Difference);
    HolderSum out;
    out.lhs = 0;
    for (std::size_t x = 0; x < rb.counts.size(); ++x) {
        const std::uint64_t a = rb.counts[x], c = rc.counts[x];
        if (a != 0 && c != 0) out.lhs += BigInt(a) * a * a * c;
    }
    out.e4_b = moment_exact(rb, 4);
    out.e4_c = moment_exact(rc, 4);
    out.rhs = std::pow(out.e4_b.convert_to<long double>(), 0.75L) * std::pow(out.e4_c.convert_to<long double>(), 0.25L);
    const BigInt l2 = out.lhs * out.lhs;
    out.pass = l2 * l2 <= out.e4_b * out.e4_b * out.e4_b * out.e4_c;
    return out;
}

ChainReport composite_N_check(const FSet& B, const FSet& C) {
    const auto t0 = Clock::now();
    ChainReport rep;
    rep.chain = "composite";
    const FSet P = popular_diff(B, C);
    const NShifted ns = count_N_shifted(B, C, P);
    const BigInt X = count_X(P, B);
    const HolderSum H = holder_weighted_sum(B, C);
    const std::uint64_t nB = B.size(), nC = C.size();
    rep.instance = {{"p", B.p()},           {"|B|", nB},
                    {"|C|", nC},            {"|P|", P.size()},
                    {"N", to_decimal(ns.N)}, {"X", to_decimal(X)},
                    {"holder_lhs", to_decimal(H.lhs)}, {"E4(B)", to_decimal(H.e4_b)},
                    {"E4(C)", to_decimal(H.e4_c)}};
    rep.checks.push_back(make_check("2*mass >= |B||C|", big(2) * ns.mass, Relation::GreaterEq, big(nB) * nC));
    rep.checks.push_back(make_check("N*|C| >= mass^2*|B|", ns.N * nC, Relation::GreaterEq, big(ns.mass) * ns.mass * nB));
    rep.checks.push_back(make_check("N^2 <= X*sum r_{B-B}^3 r_{C-C}", ns.N * ns.N, Relation::LessEq, X * H.lhs));
    const BigInt l2 = H.lhs * H.lhs;
    rep.checks.push_back(make_check("(sum r_{B-B}^3 r_{C-C})^4 <= E4(B)^3 E4(C)", l2 * l2, Relation::LessEq,
                                    H.e4_b * H.e4_b * H.e4_b * H.e4_c));
    if (B == C) {
        rep.checks.push_back(make_check("sum r_{B-B}^4 == E4(B)", H.lhs, Relation::Equal, H.e4_b));
    }
    // N <= E4(B)^(3/8) E4(C)^(1/8) X^(1/2), raised to the 8th power.
    const BigInt n2 = ns.N * ns.N, n4 = n2 * n2, x2 = X * X;
    rep.checks.push_back(make_check("N^8 <= E4(B)^3 E4(C) X^4", n4 * n4, Relation::LessEq,
                                    H.e4_b * H.e4_b * H.e4_b * H.e4_c * x2 * x2));
    rep.guarded.push_back(make_guarded("holder lhs <= E4(B)^(3/4) E4(C)^(1/4)", H.lhs.convert_to<long double>(),
                                       Relation::LessEq, H.rhs));
    rep.seconds = seconds_since(t0);
    return rep;
}

BigInt phi_count(const FSet& B, const FSet& C, const FSet& P, const FSet& P_prime, const Caps& caps) {
    require_same_field(B, C);
    require_same_field(B, P);
    require_same_field(B, P_prime);
    if (B.size() > caps.phi_max_size || C.size() > caps.phi_max_size) {
        throw Error(ErrorCode::SizeCap, "phi enumeration capped at " + std::to_string(caps.phi_max_size) + " elements");
    }
    const PrimeField& F = B.field();
    const auto eb = B.elements(), ec = C.elements();
    // a and d range independently over the same condition, so phi = sum n(b,c)^2.
    BigInt phi = 0;
    for (Elem b : ec) {
        for (Elem c : ec) {
            if (!P_prime.contains(F.sub(b, c))) continue;
            std::uint64_t n = 0;
            for (Elem a : eb) n += (P.contains(F.add(a, b)) && P.contains(F.add(a, c))) ? 1 : 0;
            phi += BigInt(n) * n;
        }
    }
    return phi;
}

ChainReport phi_chain_check(const FSet& B, const FSet& C, std::optional<Rational> epsilon, const Caps& caps) {
    const auto t0 = Clock::now();
    ChainReport rep;
    rep.chain = "phi";
    const Rational eps = epsilon.value_or(default_epsilon(C.size()));
    const PopularSums core = popular_sum_core(C, eps);
    const std::uint64_t nB = B.size(), nC = C.size();
    rep.instance = {{"p", B.p()},   {"|B|", nB}, {"|C|", nC}, {"epsilon_num", eps.num}, {"epsilon_den", eps.den},
                    {"|P|", core.P.size()}, {"|C'|", core.C_prime.size()}};
    rep.checks.push_back(make_check("popular pairs*den >= (den-num)|C|^2", big(core.popular_pairs) * eps.den,
                                    Relation::GreaterEq, BigInt(eps.den - eps.num) * nC * nC));
    const double e = static_cast<double>(eps.value());
    rep.reports.push_back(make_report("|C'| vs (1-eps)|C|", static_cast<double>(core.C_prime.size()), (1.0 - e) * static_cast<double>(nC)));
    if (core.C_prime.empty()) {
        rep.seconds = seconds_since(t0);
        return rep;
    }
    const Exponent four_thirds{4, 3};
    const RepFn rp = rep_fn(core.C_prime, core.C_prime, RepKind::Difference);
    const DyadicBucket bucket = energy_popular(rp, four_thirds);
    const std::size_t nbuckets = dyadic_buckets(rp).size();
    const long double e43 = moment(rp, four_thirds).value;
    const long double score = static_cast<long double>(bucket.T.size()) * std::pow(static_cast<long double>(bucket.delta), four_thirds.value());
    rep.instance["delta'"] = bucket.delta;
    rep.instance["|P'|"] = bucket.T.size();
    rep.guarded.push_back(make_guarded("E_{4/3}(C') >= |P'| delta'^{4/3}", e43, Relation::GreaterEq, score));
    rep.guarded.push_back(make_guarded("E_{4/3}(C') <= buckets |P'| (2 delta')^{4/3}", e43, Relation::LessEq,
                                       static_cast<long double>(nbuckets) * score * std::pow(2.0L, four_thirds.value())));
    const long double e43_c = moment(rep_fn(C, C, RepKind::Difference), four_thirds).value;
    rep.reports.push_back(make_report("E_{4/3}(C') vs E_{4/3}(C)", static_cast<double>(e43), static_cast<double>(e43_c)));

    if (nB <= caps.phi_max_size && nC <= caps.phi_max_size) {
        const BigInt phi = phi_count(B, C, core.P, bucket.T, caps);
        rep.instance["phi"] = to_decimal(phi);
        rep.reports.push_back(make_report("phi vs (1-4eps)|P'|delta'|B|^2", phi.convert_to<double>(),
                                          (1.0 - 4.0 * e) * static_cast<double>(bucket.T.size()) *
                                              static_cast<double>(bucket.delta) * static_cast<double>(nB * nB)));
    }
    rep.seconds = seconds_since(t0);
    return rep;
}

ChainReport eplus_check(const FSet& A, const FSet& B, const FSet& C, const FnTable& g, const FnTable& h) {
    const auto t0 = Clock::now();
    ChainReport rep;
    rep.chain = "eplus";
    const PrimeField& F = A.field();
    const FSet D = combine(B, C, SetOp::Diff);
    const BigInt eplus = moment_exact(rep_fn(B, D, RepKind::Difference), 2);
    const FSet image = f_image(g, h, A, B);

    // u(a, f) = f / g(a) - h(a); N_t = #{(a, f, d) : u - d = t}.
    std::vector<std::uint64_t> hist_u(F.p(), 0);
    const auto ef = image.elements();
    for (Elem a : A.elements()) {
        const Elem gi = F.inverse(g(a)), ha = h(a);
        for (Elem f : ef) ++hist_u[F.sub(F.mul(f, gi), ha)];
    }
    std::vector<std::uint64_t> neg_d(F.p(), 0);
    for (Elem d : D.elements()) neg_d[F.neg(d)] = 1;
    const BigInt collisions = kernels::sum_of_squares(kernels::cyclic_convolve(hist_u, neg_d));

    const std::uint64_t nA = A.size();
    const std::uint32_t m = mu(g);
    rep.instance = {{"p", A.p()},  {"|A|", nA}, {"|B|", B.size()}, {"|C|", C.size()}, {"|B-C|", D.size()},
                    {"|f(A,B)|", image.size()}, {"m", m}, {"E+(B,B-C)", to_decimal(eplus)},
                    {"collisions", to_decimal(collisions)}};
    rep.checks.push_back(make_check("|A|^2 E+(B,B-C) <= collision count", eplus * nA * nA, Relation::LessEq, collisions));
    const double fsz = static_cast<double>(image.size()), dsz = static_cast<double>(D.size());
    rep.reports.push_back(make_report("E+(B,B-C) vs m^2|f|^{3/2}|A|^{-1/2}|B-C|^{3/2}", eplus.convert_to<double>(),
                                      static_cast<double>(m) * m * std::pow(fsz, 1.5) / std::sqrt(static_cast<double>(nA)) * std::pow(dsz, 1.5)));
    rep.seconds = seconds_since(t0);
    return rep;
}

nlohmann::json to_json(const ChainReport& r) {
    nlohmann::json j;
    j["chain"] = r.chain;
    j["instance"] = r.instance;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json cj = {{"name", c.name}, {"relation", relation_symbol(c.relation)}, {"pass", c.pass}};
        if (c.skipped) {
            cj["skipped"] = c.note;
        } else {
            cj["lhs"] = to_decimal(c.lhs);
            cj["rhs"] = to_decimal(c.rhs);
        }
        j["checks"].push_back(std::move(cj));
    }
    j["guarded"] = nlohmann::json::array();
    for (const auto& c : r.guarded) {
        j["guarded"].push_back({{"name", c.name}, {"lhs", static_cast<double>(c.lhs)}, {"rhs", static_cast<double>(c.rhs)},
                                {"relation", relation_symbol(c.relation)}, {"pass", c.pass}});
    }
    j["reports"] = nlohmann::json::array();
    for (const auto& b : r.reports) {
        j["reports"].push_back({{"name", b.name}, {"lhs", b.lhs}, {"rhs", b.rhs}, {"ratio", b.ratio}});
    }
    j["pass"] = r.passed();
    return j;
}

}  // namespace fpsp
