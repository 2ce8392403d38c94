#include <doctest.h>

#include "fpsp/verify.hpp"
#include "oracles.hpp"

using namespace fpsp;

namespace {

FSet S(const PrimeField& F, std::vector<Elem> e) { return FSet::from_elements(F, e); }

FSet interval(const PrimeField& F, Elem start, std::size_t n) {
    FamilyParams fp;
    fp.family = Family::Interval;
    fp.start = start;
    fp.length = n;
    return generate(F, fp, 0);
}

FSet random_set(const PrimeField& F, std::size_t n, std::uint64_t seed, std::uint64_t id) {
    FamilyParams fp;
    fp.family = Family::Random;
    fp.length = n;
    fp.instance_id = id;
    fp.zero_free = true;
    return generate(F, fp, seed);
}

const Check* find(const ChainReport& r, const std::string& name) {
    for (const auto& c : r.checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("make_check and guarded checks") {
    CHECK(make_check("a", 3, Relation::LessEq, 3).pass);
    CHECK_FALSE(make_check("a", 4, Relation::LessEq, 3).pass);
    CHECK(make_check("a", 4, Relation::GreaterEq, 3).pass);
    CHECK_FALSE(make_check("a", 4, Relation::Equal, 3).pass);
    CHECK(make_guarded("g", 1.0L, Relation::LessEq, std::nextafter(1.0L, 0.0L)).pass);
    CHECK_FALSE(make_guarded("g", 1.0L, Relation::LessEq, 0.99L).pass);
    const Check s = skipped_check("s", "cap");
    CHECK(s.skipped);
    ChainReport r;
    r.checks.push_back(s);
    CHECK(r.failures() == 0);
    CHECK(r.skipped() == 1);
}

TEST_CASE("quad_energy examples") {
    const PrimeField F = make_field(7);
    const FnTable id = parse_fn(F, "id"), one = parse_fn(F, "const:1");
    CHECK(quad_energy(QuadVariant::E1Sum, S(F, {2}), S(F, {3}), S(F, {4}), id, one) == 1);
    CHECK(quad_histogram(QuadVariant::E1Sum, S(F, {1, 2}), S(F, {1}), S(F, {3}), id, one)[5] == 1);
    CHECK(quad_histogram(QuadVariant::E1Sum, S(F, {1, 2}), S(F, {1}), S(F, {3}), id, one)[3] == 1);
    CHECK(quad_energy(QuadVariant::E1Sum, S(F, {1, 2}), S(F, {1}), S(F, {3}), id, one) == 2);
    CHECK_THROWS_AS(quad_energy(QuadVariant::E1Sum, S(F, {0}), S(F, {1}), S(F, {3}), id, one), Error);
    CHECK_THROWS_AS(quad_energy(QuadVariant::E3Prod, S(F, {1}), S(F, {0}), S(F, {3}), id, one), Error);
    Caps tiny;
    tiny.max_triples = 3;
    CHECK_THROWS_AS(quad_energy(QuadVariant::E1Sum, S(F, {1, 2}), S(F, {1, 2}), S(F, {3}), id, one, tiny), Error);
}

TEST_CASE("quad energies equal pair-collision enumeration") {
    const PrimeField F = make_field(101);
    std::uint64_t id = 0;
    for (const char* gs : {"id", "power:2", "random:7"}) {
        for (const char* hs : {"const:1", "random:8"}) {
            const FnTable g = parse_fn(F, gs), h = parse_fn(F, hs);
            for (int t = 0; t < 3; ++t, ++id) {
                const FSet A = random_set(F, 3 + t, 1, 4 * id), X = random_set(F, 4, 1, 4 * id + 1);
                const FSet C = random_set(F, 5 + t, 1, 4 * id + 2);
                const FSet Fi = f_image(g, h, A, C);
                CHECK(quad_energy(QuadVariant::E1Sum, A, X, C, g, h) == oracle::pair_collisions(oracle::e1_sum_values(A, X, C, g, h)));
                CHECK(quad_energy(QuadVariant::E2Sum, A, X, Fi, g, h) == oracle::pair_collisions(oracle::e2_sum_values(A, X, Fi, g, h)));
                CHECK(quad_energy(QuadVariant::E3Prod, A, X, C, g, h) == oracle::pair_collisions(oracle::e3_prod_values(A, X, C, g, h)));
                CHECK(quad_energy(QuadVariant::E4Prod, A, X, Fi, g, h) == oracle::pair_collisions(oracle::e4_prod_values(A, X, Fi, g, h)));
                // Cauchy-Schwarz over value classes
                const BigInt triples = BigInt(A.size()) * X.size() * C.size();
                CHECK(quad_energy(QuadVariant::E1Sum, A, X, C, g, h) * 101 >= triples * triples);
            }
        }
    }
}

TEST_CASE("solution_count_M examples") {
    const PrimeField F = make_field(7);
    const FSet B = S(F, {1, 2, 3});
    CHECK(solution_count_M(S(F, {5}), B, B, S(F, {0, 1, 6}), ChainKind::Sum) == 7);
    CHECK(solution_count_M(S(F, {5}), B, B, FSet(F), ChainKind::Sum) == 0);
    CHECK(solution_count_M(S(F, {5, 6}), B, B, S(F, {0, 1, 6}), ChainKind::Sum) == 14);
    CHECK_THROWS_AS(solution_count_M(S(F, {5}), B, B, S(F, {0}), ChainKind::Prod), Error);
}

TEST_CASE("lemma chain examples") {
    const PrimeField F7 = make_field(7);
    const FnTable one7 = parse_fn(F7, "const:1");
    const FSet B = S(F7, {1, 2, 3});
    const ChainReport small = lemma_chain_check(S(F7, {1}), B, B, one7, one7, ChainKind::Sum);
    CHECK(small.instance["k"] == 2);
    CHECK(small.instance["M"] == "7");
    const Check* first = find(small, "M >= k|A|n_k");
    REQUIRE(first);
    CHECK(first->lhs == 7);
    CHECK(first->rhs == 6);
    CHECK(small.passed());

    const PrimeField F = make_field(101);
    const FSet I = interval(F, 1, 8);
    const FnTable id = parse_fn(F, "id"), one = parse_fn(F, "const:1");
    for (auto kind : {ChainKind::Sum, ChainKind::Prod}) {
        const ChainReport r = lemma_chain_check(I, I, I, id, one, kind);
        CHECK(r.passed());
        CHECK(r.skipped() == 0);
        CHECK(r.checks.size() >= 8);
    }
    const FSet single = S(F, {5});
    const ChainReport s = lemma_chain_check(single, single, single, id, one, ChainKind::Sum);
    CHECK(s.passed());
    for (const auto& c : s.checks) {
        if (c.name.find("collinear") == std::string::npos) CHECK(c.lhs == c.rhs);
    }
}

TEST_CASE("lemma chain explicit k") {
    const PrimeField F = make_field(101);
    const FSet B = random_set(F, 20, 3, 0), A = random_set(F, 6, 3, 1);
    const FnTable g = parse_fn(F, "power:2"), h = parse_fn(F, "random:3");
    for (std::uint64_t k : {1u, 2u, 3u, 5u}) {
        const ChainReport r = lemma_chain_check(A, B, B, g, h, ChainKind::Sum, k);
        CHECK(r.instance["k"] == k);
        CHECK(r.passed());
    }
}

TEST_CASE("count_N_shifted examples") {
    const PrimeField F = make_field(7);
    const FSet B = S(F, {1, 2, 3});
    const NShifted ns = count_N_shifted(B, B, popular_diff(B, B));
    CHECK(ns.mass == 9);
    CHECK(ns.N == 81);
    CHECK(ns.per_c == std::vector<std::uint64_t>{3, 3, 3});
    CHECK(count_N_shifted(B, B, FSet(F)).N == 0);
    const FSet one = S(F, {4});
    const NShifted s = count_N_shifted(one, one, S(F, {0}));
    CHECK(s.N == 1);
    CHECK(s.mass == 1);
    try {
        count_N_shifted(B, B, S(F, {3}));
        FAIL("expected BadP");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadP);
    }
}

TEST_CASE("N and X agree with enumeration; Cauchy-Schwarz equality case") {
    const PrimeField F = make_field(101);
    for (std::uint64_t id = 0; id < 25; ++id) {
        const FSet B = random_set(F, 3 + id % 6, 2, 2 * id), C = random_set(F, 2 + id % 5, 2, 2 * id + 1);
        const FSet P = popular_diff(B, C);
        const NShifted ns = count_N_shifted(B, C, P);
        CHECK(ns.N == oracle::count_N(B, C, P));
        const BigInt lhs = ns.N * C.size(), rhs = BigInt(ns.mass) * ns.mass * B.size();
        CHECK(lhs >= rhs);
        const bool constant = std::adjacent_find(ns.per_c.begin(), ns.per_c.end(), std::not_equal_to<>()) == ns.per_c.end();
        CHECK((lhs == rhs) == constant);
        const std::size_t d = combine(B, B, SetOp::Diff).size();
        if (P.size() <= 60 && d <= 60) {
            const BigInt X = count_X(P, B);
            CHECK(X == oracle::count_X(P, B));
            CHECK(X >= BigInt(P.size()) * d);
        }
    }
    const FSet one = S(F, {9});
    CHECK(count_X(S(F, {0}), one) == 1);
}

TEST_CASE("holder weighted sum") {
    const PrimeField F = make_field(7);
    const HolderSum same = holder_weighted_sum(S(F, {1, 2, 3}), S(F, {1, 2, 3}));
    CHECK(same.lhs == same.e4_b);
    CHECK(same.lhs == 115);
    CHECK(same.pass);
    const HolderSum mixed = holder_weighted_sum(S(F, {1, 2, 3}), S(F, {1, 2, 4}));
    CHECK(mixed.pass);
    // r_{B-B}: {0:3,1:2,6:2,2:1,5:1}; r_{C-C}: 3 at 0, 1 elsewhere.
    CHECK(mixed.lhs == 27 * 3 + 8 + 8 + 1 + 1);
    const HolderSum single = holder_weighted_sum(S(F, {5}), S(F, {1, 2, 4}));
    CHECK(single.lhs == 3);
    CHECK(single.pass);
    CHECK(static_cast<double>(single.rhs) >= 3.0);
}

TEST_CASE("composite chain examples") {
    const PrimeField F = make_field(7);
    const ChainReport r = composite_N_check(S(F, {1, 2, 3}), S(F, {1, 2, 3}));
    CHECK(r.instance["N"] == "81");
    CHECK(r.passed());
    const ChainReport s = composite_N_check(S(F, {3}), S(F, {3}));
    CHECK(s.passed());
    const Check* c = find(s, "N^2 <= X*sum r_{B-B}^3 r_{C-C}");
    REQUIRE(c);
    CHECK(c->lhs == 1);
    CHECK(c->rhs == 1);

    const PrimeField G = make_field(101);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const ChainReport rr = composite_N_check(random_set(G, 10, seed, 0), random_set(G, 10, seed, 1));
        CHECK(rr.passed());
        CHECK(n_chain_check(random_set(G, 10, seed, 0), random_set(G, 10, seed, 1)).passed());
    }
}

TEST_CASE("phi count examples") {
    const PrimeField F = make_field(101);
    const FSet B = random_set(F, 6, 0, 0), C = random_set(F, 5, 0, 1);
    const FSet all = FSet::full(F);
    CHECK(phi_count(B, C, all, all) == BigInt(36) * 25);
    CHECK(phi_count(B, C, all, FSet(F)) == 0);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const FSet b = random_set(F, 6 + seed, seed, 2), c = random_set(F, 5 + seed, seed, 3);
        const PopularSums core = popular_sum_core(c, Rational{1, 3});
        const FSet Pp = popular_diff(c, c);
        CHECK(phi_count(b, c, core.P, Pp) == oracle::phi(b, c, core.P, Pp));
    }
    Caps caps;
    caps.phi_max_size = 4;
    CHECK_THROWS_AS(phi_count(B, C, all, all, caps), Error);

    const FSet I = interval(F, 1, 10);
    const ChainReport r = phi_chain_check(I, I, Rational{1, 4});
    CHECK(r.passed());
    CHECK(r.instance["|C'|"] == 10);
    CHECK(r.instance.contains("phi"));
}

TEST_CASE("eplus collision check") {
    const PrimeField F = make_field(101);
    for (const char* gs : {"id", "power:2", "const:5", "random:1"}) {
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            const FSet A = random_set(F, 4, seed, 0), B = random_set(F, 8, seed, 1), C = random_set(F, 7, seed, 2);
            const ChainReport r = eplus_check(A, B, C, parse_fn(F, gs), parse_fn(F, "random:2"));
            CHECK(r.passed());
        }
    }
}

TEST_CASE("chain JSON") {
    const PrimeField F = make_field(7);
    const auto j = to_json(n_chain_check(S(F, {1, 2, 3}), S(F, {1, 2, 3})));
    CHECK(j["chain"] == "n_chain");
    CHECK(j["pass"] == true);
    CHECK(j["checks"].size() == 3);
    CHECK(j["checks"][0].contains("lhs"));
}
