#include "fpsp/reference.hpp"

#include <algorithm>

namespace fpsp::ref {

std::vector<std::uint64_t> cyclic_convolve(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    const std::size_t n = a.size();
    std::vector<std::uint64_t> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) out[(i + j) % n] += a[i] * b[j];
    }
    return out;
}

std::vector<std::uint64_t> pair_histogram(const PrimeField& F, std::span<const Elem> xs, std::span<const Elem> ys,
                                          kernels::PairOp op) {
    std::vector<std::uint64_t> counts(F.p(), 0);
    for (Elem x : xs) {
        for (Elem y : ys) {
            switch (op) {
                case kernels::PairOp::Sum: ++counts[F.add(x, y)]; break;
                case kernels::PairOp::Diff: ++counts[F.sub(x, y)]; break;
                case kernels::PairOp::Prod: ++counts[F.mul(x, y)]; break;
                case kernels::PairOp::Ratio: ++counts[F.div(x, y)]; break;
            }
        }
    }
    return counts;
}

std::uint64_t incidences(const IncidenceConfig& cfg) {
    std::uint64_t total = 0;
    for (const auto& s : cfg.planes()) {
        for (const auto& q : cfg.points()) total += s.contains(cfg.field(), q) ? 1 : 0;
    }
    return total;
}

std::uint64_t max_collinear(const PrimeField& F, std::span<const Point3> points) {
    std::vector<Point3> R(points.begin(), points.end());
    std::sort(R.begin(), R.end());
    R.erase(std::unique(R.begin(), R.end()), R.end());
    const std::size_t n = R.size();
    if (n <= 2) return n;
    std::uint64_t best = 2;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Elem ux = F.sub(R[j].x, R[i].x), uy = F.sub(R[j].y, R[i].y), uz = F.sub(R[j].z, R[i].z);
            std::uint64_t on_line = 0;
            for (std::size_t k = 0; k < n; ++k) {
                const Elem vx = F.sub(R[k].x, R[i].x), vy = F.sub(R[k].y, R[i].y), vz = F.sub(R[k].z, R[i].z);
                // u x v == 0
                const bool collinear = F.sub(F.mul(uy, vz), F.mul(uz, vy)) == 0 &&
                                       F.sub(F.mul(uz, vx), F.mul(ux, vz)) == 0 &&
                                       F.sub(F.mul(ux, vy), F.mul(uy, vx)) == 0;
                on_line += collinear ? 1 : 0;
            }
            best = std::max(best, on_line);
        }
    }
    return best;
}

BigInt pair_collisions(std::span<const Elem> values) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = 0; j < values.size(); ++j) total += values[i] == values[j] ? 1 : 0;
    }
    return total;
}

}  // namespace fpsp::ref
