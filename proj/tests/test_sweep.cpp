#include <doctest.h>

#include "fpsp/sweep.hpp"

using namespace fpsp;
using nlohmann::json;

namespace {

ErrorCode config_code(const json& j) {
    try {
        parse_sweep_config(j);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::BadParams;
}

}  // namespace

TEST_CASE("empty theorem list gives an empty report") {
    const SweepConfig cfg = parse_sweep_config(json::object());
    const Report r = run_sweep(cfg, 1);
    CHECK(r.rows.empty());
    CHECK(r.chains.empty());
    CHECK(r.exact_failures == 0);
}

TEST_CASE("config validation") {
    CHECK(config_code({{"bogus", 1}}) == ErrorCode::ConfigError);
    CHECK(config_code({{"primes", {100}}}) == ErrorCode::ConfigError);
    CHECK(config_code({{"primes", {101}}, {"sizes", {200}}}) == ErrorCode::ConfigError);
    CHECK(config_code({{"primes", {101}}, {"sizes", {4}}, {"families", {"nope"}}}) == ErrorCode::ConfigError);
    CHECK(config_code({{"primes", {101}}, {"sizes", {4}}, {"theorems", {"T_0"}}}) == ErrorCode::ConfigError);
    CHECK(config_code({{"primes", {101}}, {"sizes", {4}}, {"chains", {"x"}}}) == ErrorCode::ConfigError);
    CHECK(config_code({{"theorems", "all"}}) == ErrorCode::ConfigError);
    CHECK(config_code({{"caps", {{"foo", 1}}}}) == ErrorCode::ConfigError);
    CHECK(config_code({{"seeds", {{"start", 0}}}}) == ErrorCode::ConfigError);
    CHECK(config_code({{"primes", {101}}, {"sizes", {-3}}}) == ErrorCode::ConfigError);

    const SweepConfig cfg = parse_sweep_config({{"primes", {101, 1009}},
                                                {"families", {"interval", "mul_subgroup"}},
                                                {"sizes", {4, {{"A", 2}, {"B", 8}}}},
                                                {"seeds", {{"start", 5}, {"count", 3}}},
                                                {"functions", {{{"g1", "power:2"}}}},
                                                {"theorems", "all"},
                                                {"chains", {"n_chain"}},
                                                {"output", {{"json", "x.json"}}}});
    CHECK(cfg.families == std::vector<std::string>{"interval", "subgroup"});
    CHECK(cfg.sizes[1].c == 8);
    CHECK(cfg.sizes[1].d == 2);
    CHECK(cfg.seeds == std::vector<std::uint64_t>{5, 6, 7});
    CHECK(cfg.functions[0].g2 == "power:2");
    CHECK(cfg.functions[0].h2 == "const:1");
    CHECK(cfg.theorems.size() == 15);
    CHECK(cfg.json_out == "x.json");
    CHECK_FALSE(cfg.source.contains("output"));
    CHECK(instance_grid(cfg).size() == 2 * 2 * 2 * 1 * 3);
}

TEST_CASE("subgroup size mapping") {
    CHECK(subgroup_order_for(101, 16) == 10);
    CHECK(subgroup_order_for(1009, 7) == 7);
    CHECK(subgroup_order_for(1009, 30) == 28);
    CHECK(subgroup_order_for(7, 1) == 1);
}

TEST_CASE("instance sets are zero-free and reproducible") {
    const PrimeField F = make_field(101);
    for (const char* fam : {"interval", "ap", "gp", "subgroup", "random"}) {
        const FSet s = instance_set(F, fam, 10, 3, 7, 1);
        CHECK_FALSE(s.contains(0));
        CHECK(s == instance_set(F, fam, 10, 3, 7, 1));
    }
    CHECK(instance_set(F, "subgroup", 16, 0, 0, 0).size() == 10);
    CHECK_FALSE(instance_set(F, "random", 10, 3, 7, 1) == instance_set(F, "random", 10, 3, 7, 2));
}

TEST_CASE("sweep runs the exact suite and is worker-count independent") {
    const json j = {{"primes", {101}},
                    {"families", {"interval", "random", "subgroup"}},
                    {"sizes", {4, 8, {{"A", 4}, {"B", 16}}}},
                    {"seeds", {{"start", 0}, {"count", 2}}},
                    {"functions", {{{"g1", "id"}, {"h1", "const:1"}}, {{"g1", "power:2"}, {"h1", "random"}}}},
                    {"theorems", "all"},
                    {"chains", "all"}};
    const SweepConfig cfg = parse_sweep_config(j);
    const Report one = run_sweep(cfg, 1);
    const Report three = run_sweep(cfg, 3);
    // With g = x^2 the literal collinearity bound max(|A|,|C|,|X_k|) can fail: one line
    // {(x, v, *)} carries up to m|C| points. Every other exact check must hold.
    std::size_t literal_failures = 0;
    for (const auto& c : one.chains) {
        for (const auto& k : c["checks"]) {
            if (k.contains("skipped") || k["pass"].get<bool>()) continue;
            CHECK(k["name"] == "max_collinear(R1) <= max(|A|,|C|,|X_k|)");
            CHECK(c["instance"]["functions"][0] == "power:2");
            ++literal_failures;
        }
    }
    CHECK(one.exact_failures == literal_failures);
    CHECK(report_to_json(one, false).dump() == report_to_json(three, false).dump());
    CHECK(rows_to_csv(one.rows) == rows_to_csv(three.rows));
    CHECK(one.aggregates["instances"] == 36);
    CHECK(one.envelope["workers"] == 1);
    CHECK(three.envelope["workers"] == 3);
    for (const auto& c : one.chains) CHECK_FALSE(c.contains("error"));
}

TEST_CASE("injective g passes every exact chain check") {
    const json j = {{"primes", {101, 1009}},
                    {"families", {"interval", "random", "subgroup"}},
                    {"sizes", {4, 8, {{"A", 4}, {"B", 16}}}},
                    {"functions", {{{"g1", "id"}, {"h1", "const:1"}}, {{"g1", "affine:3,0"}, {"h1", "random"}}}},
                    {"chains", {"lemma_sum", "lemma_prod"}}};
    const Report r = run_sweep(parse_sweep_config(j), 2);
    CHECK(r.exact_failures == 0);
    CHECK(r.aggregates["chains"]["lemma_sum"]["skipped"] == 0);
}
