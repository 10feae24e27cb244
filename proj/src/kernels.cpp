#include "kneser/kernels.hpp"

#include <atomic>
#include <bit>
#include <stdexcept>

namespace kneser::kernels {

namespace {

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<std::uint64_t> subsets_of_size(int n, int r) {
    std::vector<std::uint64_t> out;
    for (const auto& s : enumerate_ksubsets(n, r)) out.push_back(s.mask);
    return out;
}

IntMatrix rows_of(const IntMatrix& points, std::uint64_t mask) {
    IntMatrix rows;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) rows.push_back(points[std::countr_zero(m)]);
    return rows;
}

std::size_t dimension_of(const IntMatrix& points) {
    if (points.empty()) throw std::invalid_argument("point set is empty");
    const std::size_t d = points.front().size();
    for (const auto& p : points)
        if (p.size() != d) throw std::invalid_argument("points have inconsistent dimension");
    if (d < 2) throw std::domain_error("dimension must be at least 2");
    if (points.size() > 64) throw CapacityError("at most 64 points are supported");
    return d;
}

HyperplaneRow make_row(const IntMatrix& points, std::uint64_t support) {
    HyperplaneRow row;
    row.support = support;
    row.normal = orthogonal_complement(rows_of(points, support));
    row.signs.resize(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) row.signs[i] = static_cast<signed char>(sign_of(dot(row.normal, points[i])));
    return row;
}

bool disjoint_masks(const KSubset& a, const KSubset& b) { return (a.mask & b.mask) == 0; }

}  // namespace

std::uint64_t edge_hash(std::uint64_t seed, std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t h = mix64(seed ^ 0x9e3779b97f4a7c15ULL);
    h = mix64(h ^ (lo + 0x632be59bd9b4e019ULL));
    h = mix64(h ^ (hi + 0x8cb92ba72f3d8dd7ULL));
    return h;
}

double edge_uniform(std::uint64_t seed, std::uint64_t lo, std::uint64_t hi) {
    return static_cast<double>(edge_hash(seed, lo, hi) >> 11) * 0x1.0p-53;
}

namespace serial {

BitMatrix disjointness(std::span<const KSubset> vertices) {
    BitMatrix adj(vertices.size());
    for (std::size_t u = 0; u < vertices.size(); ++u)
        for (std::size_t v = u + 1; v < vertices.size(); ++v)
            if (disjoint_masks(vertices[u], vertices[v])) adj.set_sym(u, v);
    return adj;
}

BitMatrix sample(const BitMatrix& parent, std::span<const std::uint64_t> ranks, double p,
                 std::uint64_t seed) {
    BitMatrix out(parent.size());
    for (std::size_t u = 0; u < parent.size(); ++u)
        for (std::size_t v = u + 1; v < parent.size(); ++v) {
            if (!parent.test(u, v)) continue;
            const auto lo = std::min(ranks[u], ranks[v]);
            const auto hi = std::max(ranks[u], ranks[v]);
            if (edge_uniform(seed, lo, hi) < p) out.set_sym(u, v);
        }
    return out;
}

std::vector<HyperplaneRow> hyperplane_rows(const IntMatrix& points) {
    const std::size_t d = dimension_of(points);
    std::vector<HyperplaneRow> rows;
    for (std::uint64_t support : subsets_of_size(static_cast<int>(points.size()), static_cast<int>(d - 1)))
        rows.push_back(make_row(points, support));
    return rows;
}

bool all_minors_nonzero(const IntMatrix& points) {
    const std::size_t d = dimension_of(points);
    if (points.size() < d) return true;
    for (std::uint64_t mask : subsets_of_size(static_cast<int>(points.size()), static_cast<int>(d)))
        if (determinant(rows_of(points, mask)) == 0) return false;
    return true;
}

}  // namespace serial

namespace parallel {

BitMatrix disjointness(std::span<const KSubset> vertices) {
    const auto n = static_cast<std::int64_t>(vertices.size());
    BitMatrix adj(vertices.size());
    // Each thread writes only its own rows.
#pragma omp parallel for schedule(static)
    for (std::int64_t u = 0; u < n; ++u)
        for (std::int64_t v = 0; v < n; ++v)
            if (u != v && disjoint_masks(vertices[u], vertices[v])) adj.set(u, v);
    return adj;
}

BitMatrix sample(const BitMatrix& parent, std::span<const std::uint64_t> ranks, double p,
                 std::uint64_t seed) {
    const auto n = static_cast<std::int64_t>(parent.size());
    BitMatrix out(parent.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t u = 0; u < n; ++u)
        for (std::int64_t v = 0; v < n; ++v) {
            if (u == v || !parent.test(u, v)) continue;
            const auto lo = std::min(ranks[u], ranks[v]);
            const auto hi = std::max(ranks[u], ranks[v]);
            if (edge_uniform(seed, lo, hi) < p) out.set(u, v);
        }
    return out;
}

std::vector<HyperplaneRow> hyperplane_rows(const IntMatrix& points) {
    const std::size_t d = dimension_of(points);
    const auto supports = subsets_of_size(static_cast<int>(points.size()), static_cast<int>(d - 1));
    std::vector<HyperplaneRow> rows(supports.size());
    const auto count = static_cast<std::int64_t>(supports.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) rows[i] = make_row(points, supports[i]);
    return rows;
}

bool all_minors_nonzero(const IntMatrix& points) {
    const std::size_t d = dimension_of(points);
    if (points.size() < d) return true;
    const auto masks = subsets_of_size(static_cast<int>(points.size()), static_cast<int>(d));
    const auto count = static_cast<std::int64_t>(masks.size());
    std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) {
        if (!ok.load(std::memory_order_relaxed)) continue;
        if (determinant(rows_of(points, masks[i])) == 0) ok.store(false, std::memory_order_relaxed);
    }
    return ok.load();
}

}  // namespace parallel

}  // namespace kneser::kernels
