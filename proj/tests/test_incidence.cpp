#include <doctest.h>

#include <cmath>

#include "fpsp/incidence.hpp"
#include "fpsp/reference.hpp"
#include "fpsp/rng.hpp"
#include "oracles.hpp"

using namespace fpsp;

namespace {

std::vector<Point3> all_points(std::uint32_t p) {
    std::vector<Point3> out;
    for (Elem x = 0; x < p; ++x)
        for (Elem y = 0; y < p; ++y)
            for (Elem z = 0; z < p; ++z) out.push_back({x, y, z});
    return out;
}

std::vector<Point3> diagonal(std::uint32_t p) {
    std::vector<Point3> out;
    for (Elem t = 0; t < p; ++t) out.push_back({t, t, t});
    return out;
}

IncidenceConfig random_config(const PrimeField& F, std::size_t n_pts, std::size_t n_planes, std::uint64_t seed) {
    CounterRng rng(seed, 0xC0F1);
    const auto r = [&] { return static_cast<Elem>(rng.uniform(F.p())); };
    std::vector<Point3> pts;
    std::vector<Plane3> planes;
    for (std::size_t i = 0; i < n_pts; ++i) pts.push_back({r(), r(), r()});
    while (planes.size() < n_planes) {
        const Elem a = r(), b = r(), c = r(), d = r();
        if (a == 0 && b == 0 && c == 0) continue;
        planes.push_back(Plane3::make(F, a, b, c, d));
    }
    return IncidenceConfig(F, std::move(pts), std::move(planes));
}

FSet S(const PrimeField& F, std::vector<Elem> e) { return FSet::from_elements(F, e); }

}  // namespace

TEST_CASE("plane normalization") {
    const PrimeField F = make_field(7);
    const Plane3 s = Plane3::make(F, 2, 6, 6, 1);
    CHECK(s.a == 1);
    CHECK(s.b == 3);
    CHECK(s.c == 3);
    CHECK(s.d == 4);
    CHECK(Plane3::make(F, 0, 3, 0, 3) == Plane3{0, 1, 0, 1});
    CHECK_THROWS_AS(Plane3::make(F, 0, 0, 0, 1), Error);
    CHECK(s.contains(F, {3, 0, 0}));
}

TEST_CASE("incidences examples") {
    const PrimeField F3 = make_field(3);
    CHECK(incidences(IncidenceConfig(F3, all_points(3), {Plane3::make(F3, 0, 0, 1, 0)})) == 9);
    const PrimeField F7 = make_field(7);
    CHECK(incidences(IncidenceConfig(F7, {{0, 0, 0}}, {Plane3::make(F7, 0, 0, 1, 0)})) == 1);
    const PrimeField F5 = make_field(5);
    CHECK(incidences(IncidenceConfig(F5, diagonal(5), {Plane3::make(F5, 1, 4, 0, 0)})) == 5);
    CHECK(incidences(IncidenceConfig(F5, {}, {Plane3::make(F5, 1, 4, 0, 0)})) == 0);
}

TEST_CASE("configs deduplicate") {
    const PrimeField F = make_field(5);
    const IncidenceConfig cfg(F, {{1, 2, 3}, {1, 2, 3}}, {Plane3::make(F, 1, 1, 1, 1), Plane3::make(F, 2, 2, 2, 2)});
    CHECK(cfg.points().size() == 1);
    CHECK(cfg.planes().size() == 1);
}

TEST_CASE("all points of F_p^3 meet every plane p^2 times") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const PrimeField F = make_field(p);
        std::vector<Plane3> planes;
        for (Elem a = 0; a < p; ++a)
            for (Elem b = 0; b < p; ++b)
                for (Elem c = 0; c < p; ++c)
                    for (Elem d = 0; d < p; d += 2) {
                        if (a || b || c) planes.push_back(Plane3::make(F, a, b, c, d));
                    }
        const IncidenceConfig cfg(F, all_points(p), planes);
        CHECK(incidences(cfg) == cfg.planes().size() * p * p);
    }
}

TEST_CASE("max_collinear examples") {
    const PrimeField F5 = make_field(5);
    CHECK(max_collinear(F5, diagonal(5)) == 5);
    const std::vector<Point3> one = {{1, 2, 3}};
    CHECK(max_collinear(F5, one) == 1);
    const PrimeField F3 = make_field(3);
    const std::vector<Point3> tri = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    CHECK(max_collinear(F3, tri) == 2);
    CHECK(max_collinear(F5, std::vector<Point3>{}) == 0);
    for (std::uint32_t p : {3u, 5u, 7u}) CHECK(max_collinear(make_field(p), diagonal(p)) == p);
}

TEST_CASE("rudnev_ratio examples") {
    const PrimeField F3 = make_field(3);
    const RudnevRow r = rudnev_ratio(IncidenceConfig(F3, all_points(3), {Plane3::make(F3, 0, 0, 1, 0)}));
    CHECK(r.incidences == 9);
    CHECK(r.k == 3);
    CHECK(r.bound == doctest::Approx(std::sqrt(27.0) + 3));
    CHECK(r.ratio == doctest::Approx(9 / (std::sqrt(27.0) + 3)));
    CHECK_FALSE(r.points_le_planes);
    CHECK_FALSE(r.points_le_p2);
    const PrimeField F7 = make_field(7);
    const RudnevRow s = rudnev_ratio(IncidenceConfig(F7, {{0, 0, 0}}, {Plane3::make(F7, 0, 0, 1, 0)}));
    CHECK(s.ratio == doctest::Approx(0.5));
    CHECK(s.points_le_planes);
}

TEST_CASE("incidence and collinearity agree with brute force") {
    for (std::uint32_t p : {5u, 11u, 31u, 101u}) {
        const PrimeField F = make_field(p);
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            const auto cfg = random_config(F, 20 + 10 * seed, 15 + 20 * seed, seed);
            CHECK(incidences(cfg) == oracle::incidences(p, cfg.points(), cfg.planes()));
            CHECK(incidences(cfg) == ref::incidences(cfg));
            const std::vector<Point3> pts(cfg.points().begin(), cfg.points().begin() + std::min<std::size_t>(60, cfg.points().size()));
            CHECK(max_collinear(F, pts) == oracle::max_collinear(p, pts));
            CHECK(ref::max_collinear(F, pts) == oracle::max_collinear(p, pts));
        }
        // points on a few lines
        std::vector<Point3> lines;
        for (Elem t = 0; t < std::min<Elem>(p, 9); ++t) {
            lines.push_back({t, F.mul(2, t), F.add(1, F.mul(3, t))});
            lines.push_back({1, t, F.mul(t, t)});
        }
        CHECK(max_collinear(F, lines) == oracle::max_collinear(p, lines));
    }
}

TEST_CASE("incidences invariant under an affine change of coordinates") {
    const PrimeField F = make_field(31);
    const auto cfg = random_config(F, 200, 150, 42);
    // (x,y,z) -> (y + 3, x + 2z, 5z + 1); planes transformed to preserve incidence.
    std::vector<Point3> pts;
    for (const auto& q : cfg.points()) pts.push_back({F.add(q.y, 3), F.add(q.x, F.mul(2, q.z)), F.add(F.mul(5, q.z), 1)});
    std::vector<Plane3> planes;
    const Elem inv5 = F.inverse(5);
    for (const auto& s : cfg.planes()) {
        // old: a x + b y + c z + d = 0 with y = X - 3, x = Y - 2z, z = (Z - 1)/5
        const Elem za = F.mul(inv5, F.sub(s.c, F.mul(2, s.a)));
        const Elem d = F.sub(F.sub(s.d, F.mul(3, s.b)), za);
        planes.push_back(Plane3::make(F, s.b, s.a, za, d));
    }
    CHECK(incidences(IncidenceConfig(F, pts, planes)) == incidences(cfg));
}

TEST_CASE("build_proof_config examples") {
    const PrimeField F = make_field(7);
    const FnTable id = parse_fn(F, "id"), one = parse_fn(F, "const:1");
    const auto single = build_proof_config(ProofVariant::SumE1, S(F, {3}), S(F, {2}), S(F, {5}), id, one);
    CHECK(single.points().size() == 1);
    CHECK(single.planes().size() == 1);

    const auto cfg = build_proof_config(ProofVariant::SumE1, S(F, {1, 2}), S(F, {1}), S(F, {3}), id, one);
    CHECK(cfg.points() == std::vector<Point3>{{1, 1, 4}, {1, 2, 1}});
    std::vector<Plane3> planes = {Plane3::make(F, 1, 6, 6, 4), Plane3::make(F, 2, 6, 6, 1)};
    std::sort(planes.begin(), planes.end());
    CHECK(cfg.planes() == planes);
    CHECK(cfg.provenance() == "sum_E1");
    CHECK_THROWS_AS(build_proof_config(ProofVariant::SumE1, S(F, {0, 1}), S(F, {1}), S(F, {3}), id, one), Error);
    CHECK_THROWS_AS(build_proof_config(ProofVariant::ProdE1, S(F, {1}), S(F, {0}), S(F, {3}), id, one), Error);
}

TEST_CASE("proof configs collapse duplicates only when the index map collides") {
    const PrimeField F = make_field(101);
    const FSet A = S(F, {1, 2, 3, 5}), X = S(F, {0, 4, 9}), C = S(F, {7, 8, 11});
    const FSet Xs = S(F, {1, 4, 9});
    for (const char* gs : {"id", "power:2", "const:4"}) {
        const FnTable g = parse_fn(F, gs), h = parse_fn(F, "random:4");
        for (auto v : {ProofVariant::SumE1, ProofVariant::SumE2, ProofVariant::ProdE1, ProofVariant::ProdE2}) {
            const bool prod = v == ProofVariant::ProdE1 || v == ProofVariant::ProdE2;
            const auto cfg = build_proof_config(v, A, prod ? Xs : X, C, g, h);
            CHECK(cfg.points().size() <= A.size() * X.size() * C.size());
            CHECK(cfg.planes().size() <= A.size() * X.size() * C.size());
        }
    }
    const auto inj = build_proof_config(ProofVariant::SumE1, A, X, C, parse_fn(F, "id"), parse_fn(F, "const:1"));
    CHECK(inj.points().size() == A.size() * X.size() * C.size());
}
