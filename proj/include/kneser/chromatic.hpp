#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kneser/bitmatrix.hpp"
#include "kneser/graph.hpp"

namespace kneser {

/// Search limits. Node mode is deterministic; wall-clock mode is not.
struct Budget {
    std::optional<std::uint64_t> nodes;
    std::optional<std::chrono::milliseconds> time;

    static Budget unlimited() { return {}; }
    static Budget node_limit(std::uint64_t n) { return {n, std::nullopt}; }
    static Budget time_limit(std::chrono::milliseconds ms) { return {std::nullopt, ms}; }
};

enum class SolveStatus { Exact, TimedOut };

std::string to_string(SolveStatus s);

struct ColoringResult {
    int chi = 0;  // exact value, or the best upper bound when timed out
    int lower_bound = 0;
    int upper_bound = 0;
    std::vector<int> coloring;          // proper, colors 0..upper_bound-1
    std::vector<std::size_t> clique;    // clique backing the initial lower bound
    std::string lower_bound_source;     // "clique" or "search"
    std::uint64_t nodes = 0;
    SolveStatus status = SolveStatus::Exact;
};

/// Exact chromatic number by DSATUR branch and bound. Vertex selection:
/// maximum saturation, then maximum degree, then lowest index. Throws
/// std::domain_error on a graph with no vertices.
ColoringResult chromatic_number(const BitMatrix& adj, const Budget& budget = {});
ColoringResult chromatic_number(const Graph& g, const Budget& budget = {});

enum class Decision { Yes, No, Unknown };

struct ColorabilityResult {
    Decision decision = Decision::Unknown;
    std::vector<int> coloring;  // set when decision == Yes
    std::uint64_t nodes = 0;
};

/// Decides whether the graph has a proper coloring with at most `colors` colors.
ColorabilityResult k_colorable(const BitMatrix& adj, int colors, const Budget& budget = {});

/// Number of colors used by first-fit greedy coloring along `order`.
int greedy_upper(const BitMatrix& adj, std::span<const std::size_t> order);
int greedy_upper(const Graph& g, std::span<const std::size_t> order);

/// Smallest-last (degeneracy) vertex order.
std::vector<std::size_t> degeneracy_order(const BitMatrix& adj);

struct CliqueResult {
    std::vector<std::size_t> vertices;
    bool exact = false;
    std::uint64_t nodes = 0;
};

/// Maximum clique by bitset branch and bound with greedy-coloring bounds.
/// Falls back to the best clique found when the budget runs out.
CliqueResult max_clique(const BitMatrix& adj, const Budget& budget = {});

/// Size of a clique found within budget; always <= chi.
int clique_lower(const Graph& g, const Budget& budget = {});

struct IndependentSetResult {
    std::size_t alpha = 0;  // exact, or a lower bound when !exact
    std::vector<std::size_t> vertices;
    bool exact = false;
    std::uint64_t nodes = 0;
};

IndependentSetResult max_independent_set(const BitMatrix& adj, const Budget& budget = {});
IndependentSetResult max_independent_set(const Graph& g, const Budget& budget = {});

/// True iff no edge is monochromatic. Throws std::domain_error when the
/// coloring does not assign a nonnegative color to every vertex.
bool is_proper(const BitMatrix& adj, std::span<const int> coloring);
bool is_proper(const Graph& g, std::span<const int> coloring);

enum class Criticality { Critical, NotCritical, Indeterminate };

std::string to_string(Criticality c);

struct CriticalityResult {
    Criticality verdict = Criticality::Indeterminate;
    int chi = 0;
    std::optional<std::size_t> witness_vertex;  // a vertex whose removal keeps chi
    std::uint64_t nodes = 0;
};

/// Vertex-critical iff chi(G - v) < chi(G) for every v. The budget applies to
/// each individual search.
CriticalityResult vertex_critical(const BitMatrix& adj, const Budget& budget = {});
CriticalityResult vertex_critical(const Graph& g, const Budget& budget = {});

}  // namespace kneser
