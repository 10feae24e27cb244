#pragma once

// Data-parallel inner loops. Every kernel has a serial reference in
// `kernels::serial` and an OpenMP version in `kernels::parallel` with
// bit-identical output; the public modules call the parallel versions and the
// test suite holds them to the serial ones.

#include <cstdint>
#include <span>
#include <vector>

#include "kneser/bitmatrix.hpp"
#include "kneser/exact.hpp"
#include "kneser/setfam.hpp"

namespace kneser::kernels {

/// Identifier of the per-edge keyed pseudorandom function below; recorded in
/// sampled-graph provenance.
inline constexpr const char* kEdgeRngId = "splitmix64-edge-v1";

/// Stateless keyed mix of (seed, lo, hi); lo/hi are colex ranks with lo < hi.
std::uint64_t edge_hash(std::uint64_t seed, std::uint64_t lo, std::uint64_t hi);

/// 53-bit uniform in [0,1) derived from edge_hash.
double edge_uniform(std::uint64_t seed, std::uint64_t lo, std::uint64_t hi);

/// Canonical hemisphere rows: one per (d-1)-subset of points in colex order.
struct HyperplaneRow {
    std::uint64_t support = 0;  // bitmask of the d-1 points spanning the boundary
    IntVector normal;
    std::vector<signed char> signs;  // sign of <normal, point_i>
};

namespace serial {
BitMatrix disjointness(std::span<const KSubset> vertices);
BitMatrix sample(const BitMatrix& parent, std::span<const std::uint64_t> ranks, double p,
                 std::uint64_t seed);
std::vector<HyperplaneRow> hyperplane_rows(const IntMatrix& points);
bool all_minors_nonzero(const IntMatrix& points);
}  // namespace serial

namespace parallel {
BitMatrix disjointness(std::span<const KSubset> vertices);
BitMatrix sample(const BitMatrix& parent, std::span<const std::uint64_t> ranks, double p,
                 std::uint64_t seed);
std::vector<HyperplaneRow> hyperplane_rows(const IntMatrix& points);
bool all_minors_nonzero(const IntMatrix& points);
}  // namespace parallel

}  // namespace kneser::kernels
