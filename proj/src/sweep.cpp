#include "fpsp/sweep.hpp"

#include <omp.h>

#include <chrono>
#include <ctime>
#include <map>
#include <set>

#include "fpsp/error.hpp"
#include "fpsp/rng.hpp"

namespace fpsp {

namespace {

using nlohmann::json;

[[noreturn]] void config_fail(const std::string& key, const std::string& msg) {
    throw Error(ErrorCode::ConfigError, key + ": " + msg);
}

const std::set<std::string> kChains = {"lemma_sum", "lemma_prod", "n_chain", "composite", "phi", "eplus"};
const std::set<std::string> kFamilies = {"interval", "ap", "gp", "subgroup", "random"};

std::uint64_t get_uint(const json& j, const std::string& key) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        config_fail(key, "expected a non-negative integer");
    }
    return j.get<std::uint64_t>();
}

std::vector<std::uint64_t> uint_list(const json& j, const std::string& key) {
    if (!j.is_array()) config_fail(key, "expected an array");
    std::vector<std::uint64_t> out;
    for (const auto& v : j) out.push_back(get_uint(v, key));
    return out;
}

std::string get_string(const json& j, const std::string& key) {
    if (!j.is_string()) config_fail(key, "expected a string");
    return j.get<std::string>();
}

SizeSpec parse_size(const json& j) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (k != "A" && k != "B" && k != "C" && k != "D") config_fail("sizes", "unknown role '" + k + "'");
        }
        if (!j.contains("A") || !j.contains("B")) config_fail("sizes", "size objects need at least A and B");
        SizeSpec s;
        s.a = get_uint(j["A"], "sizes.A");
        s.b = get_uint(j["B"], "sizes.B");
        s.c = j.contains("C") ? get_uint(j["C"], "sizes.C") : s.b;
        s.d = j.contains("D") ? get_uint(j["D"], "sizes.D") : s.a;
        return s;
    }
    const std::size_t n = get_uint(j, "sizes");
    return {n, n, n, n};
}

Caps parse_caps(const json& j) {
    if (!j.is_object()) config_fail("caps", "expected an object");
    Caps c;
    for (const auto& [k, v] : j.items()) {
        if (k == "max_triples") c.max_triples = get_uint(v, "caps." + k);
        else if (k == "max_collinear_points") c.max_collinear_points = get_uint(v, "caps." + k);
        else if (k == "brute_quadruples") c.brute_quadruples = get_uint(v, "caps." + k);
        else if (k == "phi_max_size") c.phi_max_size = get_uint(v, "caps." + k);
        else config_fail("caps", "unknown cap '" + k + "'");
    }
    return c;
}

std::string per_instance_fn(const std::string& spec, std::uint64_t seed, std::uint64_t id, unsigned role) {
    if (spec != "random") return spec;
    return "random:" + std::to_string(mix64(seed ^ mix64(id * 8 + role)) >> 1);
}

json descriptor(const SweepInstance& si) {
    return {{"id", si.id},
            {"p", si.p},
            {"family", si.family},
            {"seed", si.seed},
            {"sizes", {si.size.a, si.size.b, si.size.c, si.size.d}},
            {"functions", {si.fns.g1, si.fns.h1, si.fns.g2, si.fns.h2}}};
}

struct InstanceOutput {
    std::vector<RatioRow> rows;
    json chains = json::array();
    std::map<std::string, double> seconds;
    std::size_t failures = 0;
};

InstanceOutput run_instance(const SweepConfig& cfg, const SweepInstance& si) {
    InstanceOutput out;
    const auto t0 = std::chrono::steady_clock::now();
    const auto record_error = [&](const std::string& what, const std::string& msg) {
        out.chains.push_back({{"instance", descriptor(si)}, {"chain", what}, {"error", msg}});
    };
    std::optional<Instance> inst;
    try {
        inst = realize(si);
    } catch (const Error& e) {
        record_error("setup", e.what());
        return out;
    }
    for (TheoremId id : cfg.theorems) {
        try {
            for (auto& row : theorem_ratio(id, *inst)) {
                out.failures += (row.asserted && !row.pass) ? 1 : 0;
                out.rows.push_back(std::move(row));
            }
        } catch (const Error& e) {
            record_error(theorem_name(id), e.what());
        }
    }
    for (const auto& name : cfg.chains) {
        try {
            ChainReport rep;
            if (name == "lemma_sum" || name == "lemma_prod") {
                rep = lemma_chain_check(inst->A, inst->B, inst->C, inst->g1, inst->h1,
                                        name == "lemma_sum" ? ChainKind::Sum : ChainKind::Prod, 0, cfg.caps);
            } else if (name == "n_chain") {
                rep = n_chain_check(inst->B, inst->C);
            } else if (name == "composite") {
                rep = composite_N_check(inst->B, inst->C);
            } else if (name == "phi") {
                rep = phi_chain_check(inst->B, inst->C, std::nullopt, cfg.caps);
            } else {
                rep = eplus_check(inst->A, inst->B, inst->C, inst->g1, inst->h1);
            }
            out.failures += rep.failures();
            out.seconds[name] += rep.seconds;
            json j = to_json(rep);
            j["instance"] = descriptor(si);
            j["failures"] = rep.failures();
            j["skipped"] = rep.skipped();
            out.chains.push_back(std::move(j));
        } catch (const Error& e) {
            record_error(name, e.what());
        }
    }
    out.seconds["total"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

std::string utc_now() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

SweepConfig parse_sweep_config(const json& j) {
    if (!j.is_object()) config_fail("config", "expected a JSON object");
    static const std::set<std::string> known = {"primes", "families", "sizes",  "seeds", "functions",
                                                "theorems", "chains",  "caps", "output"};
    for (const auto& [k, v] : j.items()) {
        if (!known.count(k)) config_fail(k, "unknown key");
    }
    SweepConfig cfg;
    cfg.source = j;
    cfg.source.erase("output");

    if (j.contains("primes")) cfg.primes = uint_list(j["primes"], "primes");
    for (auto p : cfg.primes) {
        try {
            make_field(p);
        } catch (const Error& e) {
            config_fail("primes", e.what());
        }
    }

    cfg.families = {"interval"};
    if (j.contains("families")) {
        if (!j["families"].is_array()) config_fail("families", "expected an array");
        cfg.families.clear();
        for (const auto& f : j["families"]) {
            std::string name = get_string(f, "families");
            if (name == "mul_subgroup") name = "subgroup";
            if (!kFamilies.count(name)) config_fail("families", "unknown family '" + name + "'");
            cfg.families.push_back(name);
        }
    }

    if (j.contains("sizes")) {
        if (!j["sizes"].is_array()) config_fail("sizes", "expected an array");
        for (const auto& s : j["sizes"]) cfg.sizes.push_back(parse_size(s));
    }
    for (auto p : cfg.primes) {
        for (const auto& s : cfg.sizes) {
            if (std::max({s.a, s.b, s.c, s.d}) >= p) {
                config_fail("sizes", "size exceeds |F_p^*| for p=" + std::to_string(p));
            }
            if (std::min({s.a, s.b, s.c, s.d}) == 0) config_fail("sizes", "sizes must be positive");
        }
    }

    cfg.seeds = {0};
    if (j.contains("seeds")) {
        const auto& s = j["seeds"];
        if (s.is_object()) {
            if (!s.contains("start") || !s.contains("count")) config_fail("seeds", "range needs start and count");
            const auto start = get_uint(s["start"], "seeds.start"), count = get_uint(s["count"], "seeds.count");
            cfg.seeds.clear();
            for (std::uint64_t i = 0; i < count; ++i) cfg.seeds.push_back(start + i);
        } else {
            cfg.seeds = uint_list(s, "seeds");
        }
    }

    cfg.functions = {FunctionSpec{}};
    if (j.contains("functions")) {
        if (!j["functions"].is_array()) config_fail("functions", "expected an array");
        cfg.functions.clear();
        for (const auto& f : j["functions"]) {
            if (!f.is_object()) config_fail("functions", "expected objects with g1, h1, g2, h2");
            FunctionSpec fs;
            for (const auto& [k, v] : f.items()) {
                if (k == "g1") fs.g1 = get_string(v, "functions.g1");
                else if (k == "h1") fs.h1 = get_string(v, "functions.h1");
                else if (k == "g2") fs.g2 = get_string(v, "functions.g2");
                else if (k == "h2") fs.h2 = get_string(v, "functions.h2");
                else config_fail("functions", "unknown key '" + k + "'");
            }
            if (!f.contains("g2")) fs.g2 = fs.g1;
            if (!f.contains("h2")) fs.h2 = fs.h1;
            cfg.functions.push_back(fs);
        }
    }

    if (j.contains("theorems")) {
        const auto& t = j["theorems"];
        if (t.is_string() && t.get<std::string>() == "all") {
            cfg.theorems = all_theorems();
        } else if (t.is_array()) {
            for (const auto& name : t) {
                const auto id = parse_theorem_id(get_string(name, "theorems"));
                if (!id) config_fail("theorems", "unknown theorem '" + name.get<std::string>() + "'");
                cfg.theorems.push_back(*id);
            }
        } else {
            config_fail("theorems", "expected an array or \"all\"");
        }
    }

    if (j.contains("chains")) {
        const auto& c = j["chains"];
        if (c.is_string() && c.get<std::string>() == "all") {
            cfg.chains.assign(kChains.begin(), kChains.end());
        } else if (c.is_array()) {
            for (const auto& name : c) {
                const std::string s = get_string(name, "chains");
                if (!kChains.count(s)) config_fail("chains", "unknown chain '" + s + "'");
                cfg.chains.push_back(s);
            }
        } else {
            config_fail("chains", "expected an array or \"all\"");
        }
    }

    if (j.contains("caps")) cfg.caps = parse_caps(j["caps"]);
    if (j.contains("output")) {
        const auto& o = j["output"];
        if (!o.is_object()) config_fail("output", "expected an object");
        for (const auto& [k, v] : o.items()) {
            if (k == "json") cfg.json_out = get_string(v, "output.json");
            else if (k == "csv") cfg.csv_out = get_string(v, "output.csv");
            else config_fail("output", "unknown key '" + k + "'");
        }
    }
    if ((!cfg.theorems.empty() || !cfg.chains.empty()) && (cfg.primes.empty() || cfg.sizes.empty())) {
        config_fail("config", "primes and sizes are required when theorems or chains are requested");
    }
    return cfg;
}

std::vector<SweepInstance> instance_grid(const SweepConfig& cfg) {
    std::vector<SweepInstance> out;
    if (cfg.theorems.empty() && cfg.chains.empty()) return out;
    for (auto p : cfg.primes) {
        for (const auto& fam : cfg.families) {
            for (const auto& size : cfg.sizes) {
                for (const auto& fns : cfg.functions) {
                    for (auto seed : cfg.seeds) {
                        out.push_back({out.size(), p, fam, size, fns, seed});
                    }
                }
            }
        }
    }
    return out;
}

std::uint64_t subgroup_order_for(std::uint64_t p, std::size_t n) {
    std::uint64_t best = 1;
    for (std::uint64_t d = 1; d <= n && d <= p - 1; ++d) {
        if ((p - 1) % d == 0) best = d;
    }
    return best;
}

FSet instance_set(const PrimeField& F, const std::string& family, std::size_t n, std::uint64_t seed,
                  std::uint64_t id, unsigned role) {
    FamilyParams params;
    params.zero_free = true;
    params.length = n;
    params.start = 1;
    if (family == "interval") {
        params.family = Family::Interval;
    } else if (family == "ap") {
        params.family = Family::ArithmeticProgression;
        params.step = 2;
    } else if (family == "gp") {
        params.family = Family::GeometricProgression;
        params.ratio = F.root();
    } else if (family == "subgroup") {
        params.family = Family::MulSubgroup;
        params.order = static_cast<std::uint32_t>(subgroup_order_for(F.p(), n));
    } else if (family == "random") {
        params.family = Family::Random;
        params.instance_id = id * 4 + role;
    } else {
        throw Error(ErrorCode::ConfigError, "unknown family '" + family + "'");
    }
    return generate(F, params, seed);
}

Instance realize(const SweepInstance& si) {
    const PrimeField F = make_field(si.p);
    const auto set = [&](std::size_t n, unsigned role) { return instance_set(F, si.family, n, si.seed, si.id, role); };
    const auto fn = [&](const std::string& spec, unsigned role) {
        return parse_fn(F, per_instance_fn(spec, si.seed, si.id, role));
    };
    Instance inst{set(si.size.a, 0),     set(si.size.b, 1),     set(si.size.c, 2),     set(si.size.d, 3),
                  fn(si.fns.g1, 0),      fn(si.fns.h1, 1),      fn(si.fns.g2, 2),      fn(si.fns.h2, 3)};
    inst.family = si.family;
    inst.seed = si.seed;
    return inst;
}

Report run_sweep(const SweepConfig& cfg, int workers) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string started = utc_now();
    const auto grid = instance_grid(cfg);
    std::vector<InstanceOutput> outputs(grid.size());
    const int threads = workers > 0 ? workers : omp_get_max_threads();

    const auto n = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t i = 0; i < n; ++i) {
        outputs[static_cast<std::size_t>(i)] = run_instance(cfg, grid[static_cast<std::size_t>(i)]);
    }

    Report rep;
    rep.config = cfg.source;
    std::map<std::string, double> seconds;
    std::map<std::string, json> chain_stats;
    for (auto& o : outputs) {
        rep.exact_failures += o.failures;
        for (auto& r : o.rows) rep.rows.push_back(std::move(r));
        for (auto& c : o.chains) {
            auto& st = chain_stats[c["chain"].get<std::string>()];
            if (st.is_null()) st = {{"runs", 0}, {"failures", 0}, {"skipped", 0}, {"errors", 0}};
            st["runs"] = st["runs"].get<std::size_t>() + 1;
            if (c.contains("error")) {
                st["errors"] = st["errors"].get<std::size_t>() + 1;
            } else {
                st["failures"] = st["failures"].get<std::size_t>() + c["failures"].get<std::size_t>();
                st["skipped"] = st["skipped"].get<std::size_t>() + c["skipped"].get<std::size_t>();
            }
            rep.chains.push_back(std::move(c));
        }
        for (const auto& [k, v] : o.seconds) seconds[k] += v;
    }
    rep.aggregates = {{"theorems", aggregate_rows(rep.rows)}, {"chains", json::object()}, {"instances", grid.size()}};
    for (auto& [k, v] : chain_stats) rep.aggregates["chains"][k] = v;

    rep.envelope = {{"started", started},
                    {"finished", utc_now()},
                    {"workers", threads},
                    {"wall_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()},
                    {"cpu_seconds", seconds}};
    return rep;
}

}  // namespace fpsp
