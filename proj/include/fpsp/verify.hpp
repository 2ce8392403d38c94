#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpsp/bigint.hpp"
#include "fpsp/energy.hpp"
#include "fpsp/functions.hpp"
#include "fpsp/incidence.hpp"

namespace fpsp {

enum class Relation { LessEq, GreaterEq, Equal };

std::string relation_symbol(Relation r);

/// Integer comparison; pass is derived from lhs, rhs and the relation.
struct Check {
    std::string name;
    BigInt lhs;
    BigInt rhs;
    Relation relation = Relation::LessEq;
    bool pass = false;
    bool skipped = false;  // over a size cap; never counts as a pass
    std::string note;
};

Check make_check(std::string name, BigInt lhs, Relation rel, BigInt rhs);
Check skipped_check(std::string name, std::string why);

/// Real-valued comparison with a one-ulp guard in favour of the inequality.
struct GuardedCheck {
    std::string name;
    long double lhs = 0;
    long double rhs = 0;
    Relation relation = Relation::LessEq;
    bool pass = false;
};

GuardedCheck make_guarded(std::string name, long double lhs, Relation rel, long double rhs);

/// Unasserted comparison against a bound with an unspecified constant.
struct BoundReport {
    std::string name;
    double lhs = 0;
    double rhs = 0;
    double ratio = 0;
};

BoundReport make_report(std::string name, double lhs, double rhs);

struct ChainReport {
    std::string chain;
    nlohmann::json instance = nlohmann::json::object();
    std::vector<Check> checks;
    std::vector<GuardedCheck> guarded;
    std::vector<BoundReport> reports;
    double seconds = 0;

    bool passed() const;
    std::size_t failures() const;  // skipped checks are not failures
    std::size_t skipped() const;
};

struct Caps {
    std::uint64_t max_triples = 10'000'000;
    std::uint64_t max_collinear_points = 20'000;
    std::uint64_t brute_quadruples = 10'000;
    std::uint64_t phi_max_size = 100;
};

enum class QuadVariant { E1Sum, E2Sum, E3Prod, E4Prod };

std::string quad_name(QuadVariant v);

/// Histogram of the variant's value map over A x X x third, length p.
std::vector<std::uint64_t> quad_histogram(QuadVariant variant, const FSet& A, const FSet& X, const FSet& third,
                                          const FnTable& g, const FnTable& h, const Caps& caps = {});

/// sum_t N_t^2 of quad_histogram.
BigInt quad_energy(QuadVariant variant, const FSet& A, const FSet& X, const FSet& third, const FnTable& g,
                   const FnTable& h, const Caps& caps = {});

enum class ChainKind { Sum, Prod };

/// Sum kind: |A| * sum_{x in X} r_{B-C}(x); prod kind uses r_{B/C}.
BigInt solution_count_M(const FSet& A, const FSet& B, const FSet& C, const FSet& X, ChainKind kind);

/// k = 0 selects the dyadic level automatically.
ChainReport lemma_chain_check(const FSet& A, const FSet& B, const FSet& C, const FnTable& g, const FnTable& h,
                              ChainKind kind, std::uint64_t k = 0, const Caps& caps = {});

struct NShifted {
    BigInt N;
    std::uint64_t mass = 0;
    std::vector<std::uint64_t> per_c;  // n(c) for c in C, ascending c
};

NShifted count_N_shifted(const FSet& B, const FSet& C, const FSet& P);

ChainReport n_chain_check(const FSet& B, const FSet& C);

/// sum_w r'(w)^2 with r'(w) = #{(x, u) in P x (B-B) : x - u = w}.
BigInt count_X(const FSet& P, const FSet& B);

struct HolderSum {
    BigInt lhs;  // sum_x r_{B-B}(x)^3 r_{C-C}(x)
    BigInt e4_b;
    BigInt e4_c;
    long double rhs = 0;  // E4(B)^(3/4) E4(C)^(1/4)
    bool pass = false;    // lhs^4 <= E4(B)^3 E4(C), exact
};

HolderSum holder_weighted_sum(const FSet& B, const FSet& C);

ChainReport composite_N_check(const FSet& B, const FSet& C);

/// #{(a,b,c,d) in B x C x C x B : b - c in P', a+b, a+c, d+c, d+b in P}.
BigInt phi_count(const FSet& B, const FSet& C, const FSet& P, const FSet& P_prime, const Caps& caps = {});

ChainReport phi_chain_check(const FSet& B, const FSet& C, std::optional<Rational> epsilon = std::nullopt,
                            const Caps& caps = {});

/// |A|^2 E+(B, B-C) against the collision count of F/g(a) - h(a) - d over A x f(A,B) x (B-C).
ChainReport eplus_check(const FSet& A, const FSet& B, const FSet& C, const FnTable& g, const FnTable& h);

nlohmann::json to_json(const ChainReport& r);

}  // namespace fpsp
