#include <doctest.h>

#include <cmath>

#include "fpsp/theorems.hpp"
#include "oracles.hpp"

using namespace fpsp;

namespace {

FSet subgroup(const PrimeField& F, std::uint32_t order) {
    FamilyParams fp;
    fp.family = Family::MulSubgroup;
    fp.order = order;
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

}  // namespace

TEST_CASE("theorem ids round trip") {
    CHECK(all_theorems().size() == 15);
    for (TheoremId id : all_theorems()) CHECK(parse_theorem_id(theorem_name(id)) == id);
    CHECK_FALSE(parse_theorem_id("T_9_9"));
}

TEST_CASE("Vinh with A = F_p") {
    const PrimeField F = make_field(101);
    const FnTable id = parse_fn(F, "id"), one = parse_fn(F, "const:1");
    const auto rows = theorem_ratio(TheoremId::Vinh_1_2, uniform_instance(FSet::full(F), id, one));
    REQUIRE(rows.size() == 1);
    const RatioRow& r = rows[0];
    CHECK(r.asserted);
    CHECK(r.pass);
    CHECK(r.hyp_ok);
    CHECK(r.lhs == 101.0 * 101.0);
    CHECK(r.rhs == doctest::Approx(101.0 * 101.0 + std::pow(101.0, 1.5)));
    CHECK(vinh_holds(101, 101, 101, 101));
}

TEST_CASE("vinh_holds matches a real-valued evaluation away from ties") {
    for (std::uint64_t p : {101u, 257u}) {
        for (std::uint64_t a = 1; a < 40; a += 3)
            for (std::uint64_t m = a; m < 3 * a; m += 5)
                for (std::uint64_t n = a; n < 3 * a; n += 7) {
                    const double lhs = double(a) * a, rhs = double(m) * n * a / p + std::sqrt(double(p) * m * n);
                    if (std::fabs(lhs - rhs) > 1e-6 * rhs) CHECK(vinh_holds(p, a, m, n) == (lhs <= rhs));
                }
    }
    CHECK_FALSE(vinh_holds(101, 100, 1, 1));
}

TEST_CASE("T_1_5 on a subgroup") {
    const PrimeField F = make_field(1009);
    const FSet G = subgroup(F, 21);
    const auto rows = theorem_ratio(TheoremId::T_1_5, uniform_instance(G, parse_fn(F, "id"), parse_fn(F, "const:1")));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].ratio > 0);
    CHECK(rows[0].m == 1);
    CHECK(rows[0].rhs == doctest::Approx(std::pow(21.0, 11.0 / 9.0)));
    const double lhs = std::max(oracle::f_image(parse_fn(F, "id"), parse_fn(F, "const:1"), G, G).size(),
                                oracle::combine(G, G, oracle::Op::Diff).size());
    CHECK(rows[0].lhs == lhs);
}

TEST_CASE("Cor_1_7 on a singleton") {
    const PrimeField F = make_field(101);
    const FSet one = FSet::from_elements(F, std::vector<Elem>{5});
    const auto rows = theorem_ratio(TheoremId::Cor_1_7, uniform_instance(one, parse_fn(F, "id"), parse_fn(F, "const:1")));
    CHECK(rows[0].lhs == 1);
    CHECK(rows[0].rhs == 1);
    CHECK(rows[0].ratio == 1);
}

TEST_CASE("double rows") {
    const PrimeField F = make_field(1009);
    const Instance inst = uniform_instance(random_set(F, 20, 1, 0), parse_fn(F, "id"), parse_fn(F, "const:1"));
    const auto cor = theorem_ratio(TheoremId::Cor_1_8, inst);
    REQUIRE(cor.size() == 2);
    CHECK(cor[0].theorem == "Cor_1_8/sum");
    CHECK(cor[1].theorem == "Cor_1_8/diff");
    const auto thr = theorem_ratio(TheoremId::T_1_12_threshold, inst);
    REQUIRE(thr.size() == 2);
    CHECK(thr[0].theorem == "T_1_12_threshold/statement");
    CHECK(thr[1].theorem == "T_1_12_threshold/proof");
}

TEST_CASE("every theorem produces positive ratios") {
    const PrimeField F = make_field(1009);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        Instance inst{random_set(F, 8, seed, 0),      random_set(F, 12, seed, 1),    random_set(F, 12, seed, 2),
                      random_set(F, 6, seed, 3),      parse_fn(F, "power:2"),        parse_fn(F, "random:1"),
                      parse_fn(F, "id"),              parse_fn(F, "const:1")};
        for (TheoremId id : all_theorems()) {
            for (const auto& r : theorem_ratio(id, inst)) {
                CHECK(r.ratio > 0);
                CHECK(r.lhs >= 1);
                CHECK(r.p == 1009);
                if (r.asserted) CHECK(r.pass);
            }
        }
    }
}

TEST_CASE("ratios are invariant under dilation and translation") {
    const PrimeField F = make_field(1009);
    const FnTable id = parse_fn(F, "id"), one = parse_fn(F, "const:1");
    const FSet A = random_set(F, 10, 4, 0), B = random_set(F, 14, 4, 1);
    for (Elem lambda : {2u, 17u, 500u}) {
        const Instance base{A, B, B, A, id, one, id, one};
        // additive set sizes are affine invariant
        const Instance shifted{A, affine(B, 1, 33), affine(B, 1, 33), A, id, one, id, one};
        const auto r0 = theorem_ratio(TheoremId::HIS_1_1, uniform_instance(B, id, one));
        const auto r1 = theorem_ratio(TheoremId::HIS_1_1, uniform_instance(affine(B, lambda, 0), id, one));
        CHECK(r0[0].ratio == r1[0].ratio);
        // |B - C| does not change under a common translation or dilation
        const auto d0 = theorem_ratio(TheoremId::Cor_1_8, base);
        const auto d1 = theorem_ratio(TheoremId::Cor_1_8, shifted);
        CHECK(d0[1].rhs == d1[1].rhs);
        CHECK(combine(B, B, SetOp::Diff).size() == combine(affine(B, lambda, 5), affine(B, lambda, 5), SetOp::Diff).size());
        // |B . C| does not change under a common dilation
        CHECK(combine(B, B, SetOp::Prod).size() == combine(affine(B, lambda, 0), affine(B, lambda, 0), SetOp::Prod).size());
    }
}

TEST_CASE("Warren row uses its fixed maps") {
    const PrimeField F = make_field(101);
    const FSet A = random_set(F, 5, 0, 0), B = random_set(F, 7, 0, 1), C = random_set(F, 7, 0, 2), D = random_set(F, 4, 0, 3);
    const FnTable junk = parse_fn(F, "const:3");
    const auto rows = theorem_ratio(TheoremId::Cor_1_11_Warren, Instance{A, B, C, D, junk, junk, junk, junk});
    std::set<std::uint64_t> one_plus, one_minus;
    for (auto a : A.elements())
        for (auto b : B.elements()) one_plus.insert(a * ((1 + b) % 101) % 101);
    for (auto d : D.elements())
        for (auto c : C.elements()) one_minus.insert(d * ((101 + 1 - c) % 101) % 101);
    const double lhs = std::max({one_plus.size(), one_minus.size(), oracle::combine(B, C, oracle::Op::Prod).size()});
    CHECK(rows[0].lhs == lhs);
    CHECK(rows[0].m == 1);
}
