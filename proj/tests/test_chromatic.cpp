#include <numeric>
#include <random>

#include "doctest.h"
#include "kneser/chromatic.hpp"
#include "kneser/graph.hpp"

using namespace kneser;

namespace {

BitMatrix random_graph(std::size_t n, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution keep(density);
    BitMatrix m(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (keep(rng)) m.set_sym(u, v);
    return m;
}

BitMatrix complete(std::size_t n) {
    BitMatrix m(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) m.set_sym(u, v);
    return m;
}

// Plain backtracking over all colorings with at most c colors.
bool colorable_oracle(const BitMatrix& m, int c, std::vector<int>& col, std::size_t v) {
    if (v == m.size()) return true;
    for (int x = 0; x < c; ++x) {
        bool ok = true;
        for (std::size_t u = 0; u < v && ok; ++u) ok = !(m.test(u, v) && col[u] == x);
        if (!ok) continue;
        col[v] = x;
        if (colorable_oracle(m, c, col, v + 1)) return true;
    }
    return false;
}

int chi_oracle(const BitMatrix& m) {
    std::vector<int> col(m.size(), -1);
    for (int c = 1;; ++c)
        if (colorable_oracle(m, c, col, 0)) return c;
}

std::size_t alpha_oracle(const BitMatrix& m) {
    std::size_t best = 0;
    const std::size_t n = m.size();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool ok = true;
        for (std::size_t u = 0; u < n && ok; ++u)
            for (std::size_t v = u + 1; v < n && ok; ++v)
                ok = !((s >> u & 1) && (s >> v & 1) && m.test(u, v));
        if (ok) best = std::max<std::size_t>(best, std::popcount(s));
    }
    return best;
}

std::size_t omega_oracle(const BitMatrix& m) { return alpha_oracle(m.complement()); }

}  // namespace

TEST_CASE("chromatic number examples") {
    CHECK(chromatic_number(build_kneser(5, 2)).chi == 3);
    CHECK(chromatic_number(build_schrijver(6, 2)).chi == 4);
    CHECK(chromatic_number(build_kneser(7, 3)).chi == 3);
    CHECK(chromatic_number(BitMatrix(6)).chi == 1);
    CHECK(chromatic_number(complete(7)).chi == 7);
    CHECK_THROWS_AS(chromatic_number(BitMatrix(0)), std::domain_error);
}

TEST_CASE("chromatic number matches backtracking on random graphs") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const std::size_t n = 1 + seed % 11;
        const double density = 0.15 + 0.1 * static_cast<double>(seed % 8);
        const auto g = random_graph(n, density, seed);
        const auto r = chromatic_number(g);
        REQUIRE(r.status == SolveStatus::Exact);
        CHECK(r.chi == chi_oracle(g));
        CHECK(r.lower_bound == r.chi);
        CHECK(r.upper_bound == r.chi);
        CHECK(is_proper(g, r.coloring));
        CHECK(*std::max_element(r.coloring.begin(), r.coloring.end()) == r.chi - 1);
        // certificate: chi - 1 colors really are infeasible
        if (r.chi > 1) CHECK(k_colorable(g, r.chi - 1).decision == Decision::No);
        CHECK(k_colorable(g, r.chi).decision == Decision::Yes);
    }
}

TEST_CASE("sandwich clique <= chi <= greedy") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto g = random_graph(12 + seed % 10, 0.4, seed * 7 + 1);
        const auto chi = chromatic_number(g).chi;
        std::vector<std::size_t> ident(g.size());
        std::iota(ident.begin(), ident.end(), 0);
        CHECK(max_clique(g).vertices.size() <= static_cast<std::size_t>(chi));
        CHECK(greedy_upper(g, ident) >= chi);
        CHECK(greedy_upper(g, degeneracy_order(g)) >= chi);
    }
    for (int n = 5; n <= 9; ++n)
        for (int k = 2; 2 * k < n; ++k) {
            const auto g = build_kneser(n, k);
            const int chi = n - 2 * k + 2;
            CHECK(clique_lower(g) <= chi);
            CHECK(greedy_upper(g, degeneracy_order(g.adjacency())) >= chi);
        }
}

TEST_CASE("greedy, clique, independent set examples") {
    const auto k6 = complete(6);
    std::vector<std::size_t> order = {5, 3, 1, 0, 2, 4};
    CHECK(greedy_upper(k6, order) == 6);
    CHECK(greedy_upper(BitMatrix(6), order) == 1);
    const auto pet = build_kneser(5, 2);
    const int g = greedy_upper(pet, degeneracy_order(pet.adjacency()));
    CHECK(g >= 3);
    CHECK(g <= 4);

    CHECK(clique_lower(build_kneser(6, 2)) >= 3);
    CHECK(clique_lower(pet) == 2);
    CHECK(clique_lower(build_kneser(3, 2)) == 1);

    CHECK(max_independent_set(pet).alpha == 4);
    CHECK(max_independent_set(build_kneser(6, 2)).alpha == 5);
    CHECK(max_independent_set(BitMatrix(9)).alpha == 9);
}

TEST_CASE("clique and independent set match brute force") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const auto g = random_graph(4 + seed % 13, 0.2 + 0.08 * static_cast<double>(seed % 8), seed + 1000);
        const auto mis = max_independent_set(g);
        CHECK(mis.exact);
        CHECK(mis.alpha == alpha_oracle(g));
        CHECK(mis.vertices.size() == mis.alpha);
        for (auto u : mis.vertices)
            for (auto v : mis.vertices) CHECK_FALSE(g.test(u, v));
        const auto cl = max_clique(g);
        CHECK(cl.exact);
        CHECK(cl.vertices.size() == omega_oracle(g));
        for (auto u : cl.vertices)
            for (auto v : cl.vertices)
                if (u != v) CHECK(g.test(u, v));
    }
}

TEST_CASE("erdos-ko-rado: alpha(KG(n,k)) = C(n-1,k-1) for n >= 2k") {
    for (int n = 4; n <= 8; ++n)
        for (int k = 1; 2 * k <= n; ++k)
            CHECK(max_independent_set(build_kneser(n, k)).alpha == binomial_u64(n - 1, k - 1));
}

TEST_CASE("is_proper") {
    const auto pet = build_kneser(5, 2);
    CHECK(is_proper(pet, chromatic_number(pet).coloring));
    CHECK_FALSE(is_proper(pet, std::vector<int>(10, 0)));
    CHECK(is_proper(BitMatrix(4), std::vector<int>(4, 2)));
    CHECK_THROWS_AS(is_proper(pet, std::vector<int>(9, 0)), std::domain_error);
    std::vector<int> partial(10, 0);
    partial[3] = -1;
    CHECK_THROWS_AS(is_proper(pet, partial), std::domain_error);
}

TEST_CASE("budgets") {
    const auto g = build_kneser(8, 3);
    const auto r = chromatic_number(g, Budget::node_limit(1));
    CHECK(r.status == SolveStatus::TimedOut);
    CHECK(r.lower_bound <= 4);
    CHECK(r.upper_bound >= 4);
    CHECK(r.lower_bound <= r.upper_bound);
    CHECK(is_proper(g, r.coloring));
    // node mode is deterministic
    const auto a = chromatic_number(g, Budget::node_limit(500));
    const auto b = chromatic_number(g, Budget::node_limit(500));
    CHECK(a.chi == b.chi);
    CHECK(a.coloring == b.coloring);
    CHECK(a.nodes == b.nodes);
    CHECK(a.status == b.status);
    CHECK(k_colorable(g.adjacency(), 3, Budget::node_limit(1)).decision == Decision::Unknown);
}

TEST_CASE("vertex criticality") {
    CHECK(vertex_critical(build_schrijver(6, 2)).verdict == Criticality::Critical);
    CHECK(vertex_critical(build_schrijver(7, 2)).verdict == Criticality::Critical);
    const auto kg = vertex_critical(build_kneser(6, 2));
    CHECK(kg.verdict == Criticality::NotCritical);
    CHECK(kg.chi == 4);
    REQUIRE(kg.witness_vertex);
    CHECK(vertex_critical(build_kneser(6, 2), Budget::node_limit(1)).verdict == Criticality::Indeterminate);
    CHECK(vertex_critical(complete(5)).verdict == Criticality::Critical);
}

TEST_CASE("sampled subgraphs never need more colors than the parent") {
    const auto sg = build_schrijver(8, 2);
    const auto kg = build_kneser(7, 2);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        CHECK(chromatic_number(sample_subgraph(sg, 0.6, seed)).chi <= 6);
        CHECK(chromatic_number(sample_subgraph(kg, 0.6, seed)).chi <= 5);
    }
}
