#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kneser/bitmatrix.hpp"
#include "kneser/setfam.hpp"

namespace kneser {

enum class Family { Kneser, Schrijver, Sampled };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

/// Where a sampled graph came from.
struct Provenance {
    double p = 1.0;
    std::uint64_t seed = 0;
    Family parent_family = Family::Kneser;
    std::string rng_id;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct GraphOptions {
    std::size_t vertex_cap = 5000;
};

/// Immutable graph whose vertices are k-subsets of [n] in colex order.
class Graph {
public:
    /// Assembles a graph from parts and checks the structural invariants
    /// (symmetric, irreflexive, vertex masks valid; for Kneser/Schrijver the
    /// edges are exactly the disjoint pairs).
    static Graph from_parts(Family family, int n, int k, std::vector<KSubset> vertices, BitMatrix adj,
                            std::optional<Provenance> provenance);

    Family family() const { return family_; }
    int n() const { return n_; }
    int k() const { return k_; }
    std::size_t size() const { return vertices_.size(); }
    const std::vector<KSubset>& vertices() const { return vertices_; }
    const BitMatrix& adjacency() const { return adj_; }
    const std::optional<Provenance>& provenance() const { return provenance_; }

    /// Throws std::out_of_range on a bad index; false for u == v.
    bool adjacent(std::size_t u, std::size_t v) const;
    std::size_t edge_count() const { return adj_.edge_count(); }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    /// Colex ranks of the vertices among all k-subsets of [n].
    std::vector<std::uint64_t> ranks() const;

    /// Index of the vertex with the given mask, if present.
    std::optional<std::size_t> index_of(std::uint64_t mask) const;

    /// The family the vertex set was drawn from (the parent's for samples).
    Family base_family() const { return provenance_ ? provenance_->parent_family : family_; }

private:
    Graph() = default;

    Family family_ = Family::Kneser;
    int n_ = 0;
    int k_ = 0;
    std::vector<KSubset> vertices_;
    BitMatrix adj_;
    std::optional<Provenance> provenance_;
};

Graph build_kneser(int n, int k, const GraphOptions& opts = {});
Graph build_schrijver(int n, int k, const GraphOptions& opts = {});
Graph build_family(Family family, int n, int k, const GraphOptions& opts = {});

/// Spanning subgraph keeping edge {u,v} iff edge_uniform(seed, lo, hi) < p,
/// where lo/hi are the endpoints' colex ranks.
Graph sample_subgraph(const Graph& g, double p, std::uint64_t seed);

}  // namespace kneser
