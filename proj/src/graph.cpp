#include "kneser/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "kneser/kernels.hpp"

namespace kneser {

std::string to_string(Family f) {
    switch (f) {
    case Family::Kneser: return "kneser";
    case Family::Schrijver: return "schrijver";
    case Family::Sampled: return "sampled";
    }
    return "unknown";
}

Family family_from_string(const std::string& s) {
    if (s == "kneser") return Family::Kneser;
    if (s == "schrijver") return Family::Schrijver;
    if (s == "sampled") return Family::Sampled;
    throw std::invalid_argument("unknown graph family '" + s + "'");
}

Graph Graph::from_parts(Family family, int n, int k, std::vector<KSubset> vertices, BitMatrix adj,
                        std::optional<Provenance> provenance) {
    if (adj.size() != vertices.size()) throw std::invalid_argument("adjacency size does not match vertex count");
    if (family == Family::Sampled && !provenance) throw std::invalid_argument("sampled graph requires provenance");
    if (family != Family::Sampled && provenance) throw std::invalid_argument("only sampled graphs carry provenance");
    if (provenance && provenance->parent_family == Family::Sampled)
        throw std::invalid_argument("parent family must be kneser or schrijver");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto& s = vertices[i];
        if (s.n != n || s.k != k || std::popcount(s.mask) != k) throw std::invalid_argument("vertex is not a k-subset of [n]");
        if (subset_from_mask(n, s.mask).mask != s.mask) throw std::invalid_argument("vertex mask outside ground set");
        if (i > 0 && !(vertices[i - 1].mask < s.mask)) throw std::invalid_argument("vertices not in strict colex order");
        if (family == Family::Schrijver || (provenance && provenance->parent_family == Family::Schrijver))
            if (!is_stable(s)) throw std::invalid_argument("schrijver vertex is not stable");
    }
    for (std::size_t u = 0; u < adj.size(); ++u) {
        if (adj.test(u, u)) throw std::invalid_argument("adjacency has a loop");
        for (std::size_t v = u + 1; v < adj.size(); ++v) {
            const bool e = adj.test(u, v);
            if (e != adj.test(v, u)) throw std::invalid_argument("adjacency is not symmetric");
            const bool disjoint = (vertices[u].mask & vertices[v].mask) == 0;
            if (family != Family::Sampled && e != disjoint) throw std::invalid_argument("edges differ from disjoint pairs");
            if (family == Family::Sampled && e && !disjoint) throw std::invalid_argument("sampled edge joins intersecting sets");
        }
    }
    Graph g;
    g.family_ = family;
    g.n_ = n;
    g.k_ = k;
    g.vertices_ = std::move(vertices);
    g.adj_ = std::move(adj);
    g.provenance_ = std::move(provenance);
    return g;
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
    if (u >= size() || v >= size()) throw std::out_of_range("vertex index out of range");
    return u != v && adj_.test(u, v);
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < size(); ++u)
        for (std::size_t v = u + 1; v < size(); ++v)
            if (adj_.test(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<std::uint64_t> Graph::ranks() const {
    std::vector<std::uint64_t> out;
    out.reserve(size());
    for (const auto& s : vertices_) out.push_back(rank(s));
    return out;
}

std::optional<std::size_t> Graph::index_of(std::uint64_t mask) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), mask,
                               [](const KSubset& s, std::uint64_t m) { return s.mask < m; });
    if (it == vertices_.end() || it->mask != mask) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

namespace {

void check_family_args(int n, int k, const GraphOptions& opts, std::uint64_t count) {
    if (n > kMaxGroundSet) throw CapacityError("n = " + std::to_string(n) + " exceeds 64");
    if (k < 1) throw std::domain_error("k must be at least 1");
    if (k > n) throw std::domain_error("k must not exceed n");
    if (count > opts.vertex_cap)
        throw CapacityError(std::to_string(count) + " vertices exceed the vertex cap of " +
                            std::to_string(opts.vertex_cap));
}

Graph assemble(Family family, int n, int k, std::vector<KSubset> vertices) {
    BitMatrix adj = kernels::parallel::disjointness(vertices);
    return Graph::from_parts(family, n, k, std::move(vertices), std::move(adj), std::nullopt);
}

}  // namespace

Graph build_kneser(int n, int k, const GraphOptions& opts) {
    if (n >= 0 && n <= kMaxGroundSet && k >= 1 && k <= n)
        check_family_args(n, k, opts, binomial_u64(n, k));
    else
        check_family_args(n, k, opts, 0);
    return assemble(Family::Kneser, n, k, enumerate_ksubsets(n, k));
}

Graph build_schrijver(int n, int k, const GraphOptions& opts) {
    check_family_args(n, k, opts, 0);
    auto vertices = enumerate_stable_ksubsets(n, k, opts.vertex_cap);
    return assemble(Family::Schrijver, n, k, std::move(vertices));
}

Graph build_family(Family family, int n, int k, const GraphOptions& opts) {
    switch (family) {
    case Family::Kneser: return build_kneser(n, k, opts);
    case Family::Schrijver: return build_schrijver(n, k, opts);
    case Family::Sampled: break;
    }
    throw std::invalid_argument("cannot build a sampled graph directly");
}

Graph sample_subgraph(const Graph& g, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("p must lie in [0,1]");
    const auto ranks = g.ranks();
    BitMatrix adj = kernels::parallel::sample(g.adjacency(), ranks, p, seed);
    Provenance prov{p, seed, g.base_family(), kernels::kEdgeRngId};
    return Graph::from_parts(Family::Sampled, g.n(), g.k(), g.vertices(), std::move(adj), prov);
}

}  // namespace kneser
