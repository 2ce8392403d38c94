#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fpsp/functions.hpp"

namespace fpsp {

struct Point3 {
    Elem x = 0, y = 0, z = 0;
    auto operator<=>(const Point3&) const = default;
};

/// Plane aX + bY + cZ + d = 0 with (a,b,c) != 0, scaled so the first
/// nonzero of (a,b,c) is 1.
struct Plane3 {
    Elem a = 0, b = 0, c = 0, d = 0;

    static Plane3 make(const PrimeField& F, Elem a, Elem b, Elem c, Elem d);
    bool contains(const PrimeField& F, const Point3& q) const;

    auto operator<=>(const Plane3&) const = default;
};

class IncidenceConfig {
public:
    IncidenceConfig(PrimeField field, std::vector<Point3> points, std::vector<Plane3> planes,
                    std::string provenance = {});

    const PrimeField& field() const { return field_; }
    const std::vector<Point3>& points() const { return points_; }
    const std::vector<Plane3>& planes() const { return planes_; }
    const std::string& provenance() const { return provenance_; }

private:
    PrimeField field_;
    std::vector<Point3> points_;  // sorted, unique
    std::vector<Plane3> planes_;  // sorted, unique
    std::string provenance_;
};

/// Exact number of (point, plane) pairs with the point on the plane.
std::uint64_t incidences(const IncidenceConfig& cfg);

/// Largest number of points of R on one line of F_p^3 (0 for empty R).
std::uint64_t max_collinear(const PrimeField& F, std::span<const Point3> R);

struct RudnevRow {
    std::uint64_t incidences = 0;
    std::uint64_t k = 0;  // max collinear
    std::uint64_t points = 0;
    std::uint64_t planes = 0;
    double bound = 0;  // |R|^(1/2) |S| + k |S|
    double ratio = 0;
    bool points_le_planes = false;
    bool points_le_p2 = false;
};

RudnevRow rudnev_ratio(const IncidenceConfig& cfg);

enum class ProofVariant { SumE1, SumE2, ProdE1, ProdE2 };

std::string variant_name(ProofVariant v);

/// Point and plane families of the energy-to-incidence reductions, indexed by
/// A x X x third (third = C for the E1 variants, f(A,B) for the E2 variants).
IncidenceConfig build_proof_config(ProofVariant variant, const FSet& A, const FSet& X, const FSet& third,
                                   const FnTable& g, const FnTable& h);

}  // namespace fpsp
