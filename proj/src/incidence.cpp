#include "fpsp/incidence.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "fpsp/rng.hpp"

namespace fpsp {

Plane3 Plane3::make(const PrimeField& F, Elem a, Elem b, Elem c, Elem d) {
    const std::uint32_t p = F.p();
    a %= p, b %= p, c %= p, d %= p;
    const Elem lead = a != 0 ? a : b != 0 ? b : c;
    if (lead == 0) throw Error(ErrorCode::BadParams, "plane normal (0,0,0)");
    const Elem s = F.inverse(lead);
    return Plane3{F.mul(a, s), F.mul(b, s), F.mul(c, s), F.mul(d, s)};
}

bool Plane3::contains(const PrimeField& F, const Point3& q) const {
    return F.add(F.add(F.mul(a, q.x), F.mul(b, q.y)), F.add(F.mul(c, q.z), d)) == 0;
}

IncidenceConfig::IncidenceConfig(PrimeField field, std::vector<Point3> points, std::vector<Plane3> planes,
                                 std::string provenance)
    : field_(std::move(field)), points_(std::move(points)), planes_(std::move(planes)), provenance_(std::move(provenance)) {
    const std::uint32_t p = field_.p();
    for (const auto& q : points_) {
        if (q.x >= p || q.y >= p || q.z >= p) throw Error(ErrorCode::BadParams, "point coordinate is not canonical");
    }
    for (const auto& s : planes_) {
        if (!(s == Plane3::make(field_, s.a, s.b, s.c, s.d))) {
            throw Error(ErrorCode::BadParams, "plane is not in normalized form");
        }
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    std::sort(planes_.begin(), planes_.end());
    planes_.erase(std::unique(planes_.begin(), planes_.end()), planes_.end());
}

namespace {

/// Open-addressing set of 64-bit keys (keys must not equal kEmpty).
class CodeSet {
public:
    explicit CodeSet(std::size_t n) : slots_(std::bit_ceil(std::max<std::size_t>(16, 2 * n)), kEmpty), mask_(slots_.size() - 1) {}

    void insert(std::uint64_t key) {
        std::size_t i = mix64(key) & mask_;
        while (slots_[i] != kEmpty && slots_[i] != key) i = (i + 1) & mask_;
        slots_[i] = key;
    }
    bool contains(std::uint64_t key) const {
        std::size_t i = mix64(key) & mask_;
        while (slots_[i] != kEmpty) {
            if (slots_[i] == key) return true;
            i = (i + 1) & mask_;
        }
        return false;
    }

private:
    static constexpr std::uint64_t kEmpty = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> slots_;
    std::size_t mask_;
};

std::uint64_t encode(std::uint64_t p, Elem u, Elem v, Elem w) { return (static_cast<std::uint64_t>(u) * p + v) * p + w; }

Elem coord(const Point3& q, int i) { return i == 0 ? q.x : i == 1 ? q.y : q.z; }
Elem coeff(const Plane3& s, int i) { return i == 0 ? s.a : i == 1 ? s.b : s.c; }

/// Group planes by normal; for each normal, histogram a x + b y + c z over R.
std::uint64_t count_by_normals(const IncidenceConfig& cfg) {
    const PrimeField& F = cfg.field();
    const auto& R = cfg.points();
    const auto& S = cfg.planes();
    std::vector<std::size_t> starts;
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (i == 0 || S[i].a != S[i - 1].a || S[i].b != S[i - 1].b || S[i].c != S[i - 1].c) starts.push_back(i);
    }
    starts.push_back(S.size());
    const auto groups = static_cast<std::int64_t>(starts.size() - 1);
    std::uint64_t total = 0;
#pragma omp parallel reduction(+ : total)
    {
        std::vector<std::uint32_t> hist(F.p(), 0);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t gi = 0; gi < groups; ++gi) {
            const Plane3& n = S[starts[static_cast<std::size_t>(gi)]];
            for (const auto& q : R) ++hist[F.add(F.add(F.mul(n.a, q.x), F.mul(n.b, q.y)), F.mul(n.c, q.z))];
            for (std::size_t i = starts[static_cast<std::size_t>(gi)]; i < starts[static_cast<std::size_t>(gi) + 1]; ++i) {
                total += hist[F.neg(S[i].d)];
            }
            for (const auto& q : R) hist[F.add(F.add(F.mul(n.a, q.x), F.mul(n.b, q.y)), F.mul(n.c, q.z))] = 0;
        }
    }
    return total;
}

/// Group points by the two coordinates other than `free`; each plane either
/// pins the free coordinate (one lookup per class) or contains whole classes.
std::uint64_t count_by_point_classes(const IncidenceConfig& cfg, int free, std::span<const std::pair<std::uint64_t, std::uint64_t>> classes) {
    const PrimeField& F = cfg.field();
    const std::uint64_t p = F.p();
    const auto& R = cfg.points();
    const auto& S = cfg.planes();
    const int u = free == 0 ? 1 : 0;
    const int v = free == 2 ? 1 : 2;
    CodeSet codes(R.size());
    for (const auto& q : R) codes.insert(encode(p, coord(q, u), coord(q, v), coord(q, free)));

    const auto planes = static_cast<std::int64_t>(S.size());
    std::uint64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic, 64)
    for (std::int64_t si = 0; si < planes; ++si) {
        const Plane3& s = S[static_cast<std::size_t>(si)];
        const Elem cu = coeff(s, u), cv = coeff(s, v), cf = coeff(s, free);
        const Elem cf_inv = cf == 0 ? 0 : F.inverse(cf);
        for (const auto& [key, count] : classes) {
            const auto ku = static_cast<Elem>(key / p), kv = static_cast<Elem>(key % p);
            const Elem rest = F.add(F.add(F.mul(cu, ku), F.mul(cv, kv)), s.d);
            if (cf == 0) {
                if (rest == 0) total += count;
            } else {
                const Elem w = F.mul(F.neg(rest), cf_inv);
                if (codes.contains(encode(p, ku, kv, w))) ++total;
            }
        }
    }
    return total;
}

}  // namespace

std::uint64_t incidences(const IncidenceConfig& cfg) {
    const auto& R = cfg.points();
    const auto& S = cfg.planes();
    if (R.empty() || S.empty()) return 0;
    const std::uint64_t p = cfg.field().p();

    std::uint64_t normals = 0;
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (i == 0 || S[i].a != S[i - 1].a || S[i].b != S[i - 1].b || S[i].c != S[i - 1].c) ++normals;
    }
    const double normal_cost = static_cast<double>(normals) * static_cast<double>(R.size());

    int best_free = -1;
    double best_cost = normal_cost;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> best_classes;
    for (int free = 0; free < 3; ++free) {
        const int u = free == 0 ? 1 : 0;
        const int v = free == 2 ? 1 : 2;
        std::vector<std::uint64_t> keys;
        keys.reserve(R.size());
        for (const auto& q : R) keys.push_back(static_cast<std::uint64_t>(coord(q, u)) * p + coord(q, v));
        std::sort(keys.begin(), keys.end());
        std::vector<std::pair<std::uint64_t, std::uint64_t>> classes;
        for (std::uint64_t k : keys) {
            if (classes.empty() || classes.back().first != k) classes.emplace_back(k, 0);
            ++classes.back().second;
        }
        // A hash probe costs a few histogram increments.
        const double cost = 3.0 * static_cast<double>(classes.size()) * static_cast<double>(S.size());
        if (cost < best_cost) {
            best_cost = cost;
            best_free = free;
            best_classes = std::move(classes);
        }
    }
    return best_free < 0 ? count_by_normals(cfg) : count_by_point_classes(cfg, best_free, best_classes);
}

std::uint64_t max_collinear(const PrimeField& F, std::span<const Point3> points) {
    // R is a set: repeated points would give a zero direction.
    std::vector<Point3> R(points.begin(), points.end());
    std::sort(R.begin(), R.end());
    R.erase(std::unique(R.begin(), R.end()), R.end());
    const std::size_t n = R.size();
    if (n <= 2) return n;
    const std::uint64_t p = F.p();
    std::uint64_t best = 2;
    const auto anchors = static_cast<std::int64_t>(n - 1);
#pragma omp parallel reduction(max : best)
    {
        std::vector<std::uint64_t> dirs;
        dirs.reserve(n);
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t ii = 0; ii < anchors; ++ii) {
            const auto i = static_cast<std::size_t>(ii);
            // A line whose first point (in order) is R[i] has at most n - i points.
            if (n - i <= best) continue;
            dirs.clear();
            for (std::size_t j = i + 1; j < n; ++j) {
                Elem dx = F.sub(R[j].x, R[i].x), dy = F.sub(R[j].y, R[i].y), dz = F.sub(R[j].z, R[i].z);
                const Elem lead = dx != 0 ? dx : dy != 0 ? dy : dz;
                const Elem s = F.inverse(lead);
                dx = F.mul(dx, s), dy = F.mul(dy, s), dz = F.mul(dz, s);
                dirs.push_back(encode(p, dx, dy, dz));
            }
            std::sort(dirs.begin(), dirs.end());
            std::uint64_t run = 0;
            for (std::size_t j = 0; j < dirs.size(); ++j) {
                run = (j > 0 && dirs[j] == dirs[j - 1]) ? run + 1 : 1;
                best = std::max(best, run + 1);
            }
        }
    }
    return best;
}

RudnevRow rudnev_ratio(const IncidenceConfig& cfg) {
    RudnevRow row;
    row.points = cfg.points().size();
    row.planes = cfg.planes().size();
    row.incidences = incidences(cfg);
    row.k = max_collinear(cfg.field(), cfg.points());
    const double planes = static_cast<double>(row.planes);
    row.bound = std::sqrt(static_cast<double>(row.points)) * planes + static_cast<double>(row.k) * planes;
    row.ratio = row.bound > 0 ? static_cast<double>(row.incidences) / row.bound : 0.0;
    const std::uint64_t p = cfg.field().p();
    row.points_le_planes = row.points <= row.planes;
    row.points_le_p2 = row.points <= p * p;
    return row;
}

std::string variant_name(ProofVariant v) {
    switch (v) {
        case ProofVariant::SumE1: return "sum_E1";
        case ProofVariant::SumE2: return "sum_E2";
        case ProofVariant::ProdE1: return "prod_E1";
        case ProofVariant::ProdE2: return "prod_E2";
    }
    return "unknown";
}

IncidenceConfig build_proof_config(ProofVariant variant, const FSet& A, const FSet& X, const FSet& third,
                                   const FnTable& g, const FnTable& h) {
    require_same_field(A, X);
    require_same_field(A, third);
    if (!(g.field() == A.field()) || !(h.field() == A.field())) throw Error(ErrorCode::FieldMismatch, "function tables over a different field");
    if (A.contains(0)) throw Error(ErrorCode::ZeroInA, "proof configurations need 0 not in A");
    const bool prod = variant == ProofVariant::ProdE1 || variant == ProofVariant::ProdE2;
    if (prod && X.contains(0)) throw Error(ErrorCode::ZeroDivisor, "multiplicative configurations need 0 not in X");

    const PrimeField& F = A.field();
    const auto ea = A.elements(), ex = X.elements(), et = third.elements();
    std::vector<Point3> R;
    std::vector<Plane3> S;
    R.reserve(ea.size() * ex.size() * et.size());
    S.reserve(R.capacity());
    for (Elem a : ea) {
        const Elem ga = g(a), ha = h(a), ga_inv = F.inverse(ga);
        for (Elem x : ex) {
            for (Elem t : et) {
                switch (variant) {
                    case ProofVariant::SumE1:
                        // point (x, g(a), g(a)(c + h(a))); plane g(a) X - x Y - Z + g(a)(c + h(a)) = 0
                        R.push_back({x, ga, F.mul(ga, F.add(t, ha))});
                        S.push_back(Plane3::make(F, ga, F.neg(x), F.neg(1), F.mul(ga, F.add(t, ha))));
                        break;
                    case ProofVariant::SumE2:
                        // point (f, 1/g(a), h(a) + x); plane (1/g(a)) X - f Y + Z - h(a) - x = 0
                        R.push_back({t, ga_inv, F.add(ha, x)});
                        S.push_back(Plane3::make(F, ga_inv, F.neg(t), 1, F.neg(F.add(ha, x))));
                        break;
                    case ProofVariant::ProdE1:
                        // point (x, g(a) c, g(a) h(a)); plane g(a) c X - x Y - Z + g(a) h(a) = 0
                        R.push_back({x, F.mul(ga, t), F.mul(ga, ha)});
                        S.push_back(Plane3::make(F, F.mul(ga, t), F.neg(x), F.neg(1), F.mul(ga, ha)));
                        break;
                    case ProofVariant::ProdE2: {
                        // point (f, 1/(g(a) x), h(a)/x); plane (1/(x g(a))) X - f Y + Z - h(a)/x = 0
                        const Elem x_inv = F.inverse(x);
                        R.push_back({t, F.mul(ga_inv, x_inv), F.mul(ha, x_inv)});
                        S.push_back(Plane3::make(F, F.mul(ga_inv, x_inv), F.neg(t), 1, F.neg(F.mul(ha, x_inv))));
                        break;
                    }
                }
            }
        }
    }
    return IncidenceConfig(F, std::move(R), std::move(S), variant_name(variant));
}

}  // namespace fpsp
