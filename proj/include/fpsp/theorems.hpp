#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpsp/functions.hpp"

namespace fpsp {

enum class TheoremId {
    HIS_1_1,
    Vinh_1_2,
    HH_1_1,
    HH_1_2,
    PM_1_3,
    PM_1_4,
    T_1_5,
    T_1_6,
    Cor_1_7,
    Cor_1_8,
    T_1_9,
    Cor_1_10,
    Cor_1_11_Warren,
    Cor_mult,
    T_1_12_threshold,
};

std::string theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem_id(const std::string& name);
const std::vector<TheoremId>& all_theorems();

/// Sets and maps for one evaluation. f1 = g1(x)(h1(x)+y) acts on (A,B), f2 on (D,C).
struct Instance {
    FSet A, B, C, D;
    FnTable g1, h1, g2, h2;
    std::string family = "explicit";
    std::uint64_t seed = 0;

    std::uint32_t p() const { return A.p(); }
};

/// Same sets in every role, f1 = f2 = g(x)(h(x)+y).
Instance uniform_instance(const FSet& A, const FnTable& g, const FnTable& h);

struct RatioRow {
    std::string theorem;
    std::uint32_t p = 0;
    std::string family;
    std::uint64_t seed = 0;
    std::size_t a = 0, b = 0, c = 0, d = 0;
    std::uint32_t m = 1;
    double lhs = 0;  // the max-term, an exact integer
    double rhs = 0;  // exponent formula, constants and logs dropped
    double ratio = 0;
    bool hyp_ok = true;
    bool asserted = false;  // only rows with explicit constants
    bool pass = true;       // meaningful when asserted

    friend bool operator==(const RatioRow&, const RatioRow&) = default;
};

/// One row per theorem, except Cor_1_8 (sum and difference forms) and
/// T_1_12_threshold (statement and proof exponents), which emit two.
std::vector<RatioRow> theorem_ratio(TheoremId id, const Instance& inst);

/// |A|^2 <= |A+A||A.A||A|/p + p^(1/2)(|A+A||A.A|)^(1/2), decided in integers.
bool vinh_holds(std::uint64_t p, std::uint64_t a, std::uint64_t sum, std::uint64_t prod);

}  // namespace fpsp
