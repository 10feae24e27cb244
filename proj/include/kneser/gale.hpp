#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kneser/exact.hpp"

namespace kneser {

/// n integer points in Z^d. For the moment-curve embedding point i (1-based)
/// is (-1)^i * (1, i, i^2, ..., i^(d-1)) with d = n - 2s + 1.
struct GaleEmbedding {
    int n = 0;
    int s = 0;
    int d = 0;
    IntMatrix points;
};

/// Throws std::domain_error unless s >= 1 and d = n - 2s + 1 >= 2;
/// CapacityError for n > 64.
GaleEmbedding build_embedding(int n, int s);

/// Arbitrary point set (used to exercise the checks on non-Gale inputs).
GaleEmbedding custom_embedding(int s, IntMatrix points);

/// Every d points linearly independent (all d x d minors nonzero).
bool general_position_check(const GaleEmbedding& e);

/// Classification of the points by the sign of <normal, point>.
struct HemispherePartition {
    IntVector normal;
    std::vector<signed char> signs;

    std::uint64_t positive_mask() const;
    std::uint64_t negative_mask() const;
    std::uint64_t zero_mask() const;
    /// One character per point: '+', '0' or '-'.
    std::string sign_string() const;
    HemispherePartition flipped() const;
};

/// For every (d-1)-subset of points in colex order, the partition whose
/// boundary passes through exactly that subset, in both orientations
/// (normal first, then its negation). Throws std::logic_error when a subset
/// is rank deficient or the boundary meets other points.
std::vector<HemispherePartition> canonical_hemispheres(const GaleEmbedding& e);

struct GaleCheck {
    bool ok = true;
    std::optional<HemispherePartition> counterexample;
    std::size_t partitions_checked = 0;
};

/// Checks that the strictly positive side of every canonical partition holds a
/// stable s-subset of the cycle 1..n. Points on the boundary count for neither
/// side. Requires general position (std::domain_error otherwise).
GaleCheck verify_gale_property(const GaleEmbedding& e);

/// A region of directions with fixed signs; cells have no zeros, lower
/// faces have zeros on the points their directions are orthogonal to.
struct SignVector {
    std::vector<signed char> signs;
    IntVector direction;  // some direction realizing exactly these signs

    std::uint64_t positive_mask() const;
    std::uint64_t negative_mask() const;
    std::string sign_string() const;
};

enum class Coverage { Certified, Sampled };

std::string to_string(Coverage c);

struct CellSet {
    std::vector<SignVector> cells;
    Coverage coverage = Coverage::Certified;
};

/// All cells of the central arrangement of the point-normal hyperplanes.
/// Each canonical boundary is a ray of the arrangement; perturbing it towards
/// every side assignment of its d-1 boundary points reaches each cell incident
/// to that ray, and every cell has such a ray when the points span R^d. When
/// they do not, cells are found by deterministic random sampling and the
/// result is flagged Sampled.
CellSet enumerate_cells(const GaleEmbedding& e);

/// Every face of the same arrangement except the origin: the cells, then the
/// sign vectors with zeros (boundary rays included). Together they realize
/// every (S+, S-) split an arbitrary direction can produce. Falls back to
/// sampled cells like enumerate_cells.
CellSet enumerate_faces(const GaleEmbedding& e);

struct Witness {
    SignVector cell;
    int color = 0;
    int count_pos = 0;  // sets of `color` inside the positive side
    int count_neg = 0;
    int sets_pos = 0;   // stable k-subsets inside the positive side
    int sets_neg = 0;
    int t_pos = 0;      // ceil(sets_pos / d)
    int t_neg = 0;
};

struct WitnessSearch {
    std::optional<Witness> witness;
    Coverage coverage = Coverage::Certified;
    std::size_t cells_examined = 0;
};

/// Searches the given sign vectors, in order and then by color, for a
/// direction x and color i such that both open sides of x contain at least one
/// stable k-subset and at least ceil(|sets|/d) of those sets have color i.
/// Open cells alone are not enough: some colorings only have witnesses at
/// directions orthogonal to one or more points, so the first overload
/// searches enumerate_faces.
/// `coloring[j]` is the color of the j-th stable k-subset of [n] in colex
/// order; colors must lie in 0..d-1.
WitnessSearch antipodal_witness(const GaleEmbedding& e, int k, std::span<const int> coloring);
WitnessSearch antipodal_witness(const GaleEmbedding& e, const CellSet& cells, int k, std::span<const int> coloring);

}  // namespace kneser
