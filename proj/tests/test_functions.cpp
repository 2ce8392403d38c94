#include <doctest.h>

#include "fpsp/functions.hpp"
#include "oracles.hpp"

using namespace fpsp;

namespace {

FSet S(const PrimeField& F, std::vector<Elem> e) { return FSet::from_elements(F, e); }

}  // namespace

TEST_CASE("make_fn examples") {
    const PrimeField F = make_field(7);
    const FnTable one = parse_fn(F, "const:1");
    for (Elem x = 1; x < 7; ++x) CHECK(one(x) == 1);
    CHECK(parse_fn(F, "power:2").values() == std::vector<Elem>{1, 4, 2, 2, 4, 1});
    try {
        parse_fn(F, "affine:1,6");
        FAIL("expected ZeroInCodomain");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroInCodomain);
    }
    CHECK_THROWS_AS(parse_fn(F, "const:0"), Error);
    CHECK_THROWS_AS(parse_fn(F, "bogus"), Error);
    CHECK(parse_fn(F, "affine:2,0").values() == std::vector<Elem>{2, 4, 6, 1, 3, 5});
    CHECK(parse_fn(F, "power:-1").values() == std::vector<Elem>{1, 4, 5, 2, 3, 6});
    CHECK(parse_fn(F, "random:5") == parse_fn(F, "random:5"));
    for (Elem v : parse_fn(make_field(101), "random:9").values()) CHECK(v != 0);
}

TEST_CASE("mu examples") {
    const PrimeField F = make_field(7);
    CHECK(mu(parse_fn(F, "power:2")) == 2);
    CHECK(mu(parse_fn(F, "id")) == 1);
    CHECK(mu(parse_fn(F, "const:1")) == 6);
    // Restricted to the subgroup {1,2,4}, squaring is a bijection.
    CHECK(mu(parse_fn(F, "power:2"), S(F, {1, 2, 4})) == 1);
}

TEST_CASE("pointwise_product examples") {
    const PrimeField F = make_field(7);
    const FnTable id = parse_fn(F, "id"), one = parse_fn(F, "const:1"), sq = parse_fn(F, "power:2");
    CHECK(pointwise_product(id, one) == id);
    CHECK(pointwise_product(sq, id).values() == std::vector<Elem>{1, 1, 6, 1, 6, 6});
    CHECK(pointwise_product(sq, one) == sq);
    CHECK_THROWS_AS(pointwise_product(id, parse_fn(make_field(11), "id")), Error);
}

TEST_CASE("f_image examples") {
    const PrimeField F = make_field(7);
    const FnTable one = parse_fn(F, "const:1"), id = parse_fn(F, "id");
    CHECK(f_image(one, one, S(F, {1}), S(F, {1, 2, 3})) == S(F, {2, 3, 4}));
    CHECK(f_image(id, one, S(F, {1}), S(F, {6})) == S(F, {0}));
    CHECK(f_image(one, one, S(F, {1, 3, 5}), S(F, {1})) == S(F, {2}));
    try {
        f_image(one, one, S(F, {0, 1}), S(F, {1}));
        FAIL("expected ZeroInA");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroInA);
    }
}

TEST_CASE("function invariants against brute force") {
    const PrimeField F = make_field(101);
    const FSet A = FSet::from_elements(F, std::vector<Elem>{1, 5, 17, 33, 60, 99});
    const FSet B = FSet::from_elements(F, std::vector<Elem>{2, 3, 10, 50, 77});
    for (const char* spec : {"id", "power:2", "power:5", "const:3", "affine:3,0", "random:1", "random:2"}) {
        const FnTable g = parse_fn(F, spec);
        CHECK(mu(g) == oracle::mu(g));
        CHECK(mu(g) >= 1);
        CHECK((mu(g) == 1) == (std::set<Elem>(g.values().begin(), g.values().end()).size() == 100));
        CHECK(mu(pointwise_product(g, parse_fn(F, "const:1"))) == mu(g));
        for (const char* hs : {"const:1", "random:3", "power:3"}) {
            const FnTable h = parse_fn(F, hs);
            const FSet img = f_image(g, h, A, B);
            CHECK(oracle::as_set(img) == oracle::f_image(g, h, A, B));
            CHECK(img.size() >= B.size());
            for (Elem a : A.elements()) {
                CHECK(f_image(g, h, FSet::from_elements(F, std::vector<Elem>{a}), B).size() == B.size());
            }
        }
    }
}
