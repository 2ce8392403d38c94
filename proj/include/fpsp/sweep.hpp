#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpsp/report.hpp"
#include "fpsp/verify.hpp"

namespace fpsp {

struct SizeSpec {
    std::size_t a = 0, b = 0, c = 0, d = 0;
};

struct FunctionSpec {
    // `random` without a seed draws a fresh table per instance.
    std::string g1 = "id", h1 = "const:1", g2 = "id", h2 = "const:1";
};

struct SweepConfig {
    std::vector<std::uint64_t> primes;
    std::vector<std::string> families;
    std::vector<SizeSpec> sizes;
    std::vector<std::uint64_t> seeds;
    std::vector<FunctionSpec> functions;
    std::vector<TheoremId> theorems;
    std::vector<std::string> chains;  // lemma_sum, lemma_prod, n_chain, composite, phi, eplus
    Caps caps;
    std::optional<std::string> json_out;
    std::optional<std::string> csv_out;
    nlohmann::json source = nlohmann::json::object();
};

/// Throws ConfigError with the offending key.
SweepConfig parse_sweep_config(const nlohmann::json& j);

struct SweepInstance {
    std::uint64_t id = 0;
    std::uint64_t p = 0;
    std::string family;
    SizeSpec size;
    FunctionSpec fns;
    std::uint64_t seed = 0;
};

/// primes x families x sizes x functions x seeds, in that nesting order.
std::vector<SweepInstance> instance_grid(const SweepConfig& cfg);

/// Subgroup family: largest divisor of p-1 not above n.
std::uint64_t subgroup_order_for(std::uint64_t p, std::size_t n);

/// Sets for one grid point; role 0..3 selects A, B, C, D.
FSet instance_set(const PrimeField& F, const std::string& family, std::size_t n, std::uint64_t seed,
                  std::uint64_t id, unsigned role);

Instance realize(const SweepInstance& si);

/// Instances run on `workers` threads (0 = OpenMP default); output is merged in id order.
Report run_sweep(const SweepConfig& cfg, int workers = 0);

}  // namespace fpsp
