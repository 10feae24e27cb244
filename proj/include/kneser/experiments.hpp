#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kneser/chromatic.hpp"
#include "kneser/gale.hpp"
#include "kneser/graph.hpp"

namespace kneser {

/// Seed of trial `index` under `master`; a keyed hash, so it does not depend
/// on the order in which trials run.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

struct TrialRow {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    int chi = 0;
    SolveStatus status = SolveStatus::Exact;
    std::uint64_t nodes = 0;
    double elapsed_ms = 0;
};

/// Samples parent(p) once per trial and solves it. Trials run concurrently;
/// rows come back in trial order.
std::vector<TrialRow> run_random_chi(const Graph& parent, double p, std::uint64_t master_seed, std::size_t trials,
                                     const Budget& budget);

struct RandomChiSummary {
    std::size_t trials = 0;
    std::size_t exact = 0;
    std::size_t timed_out = 0;
    std::optional<int> threshold;  // d + 1 when l is given
    std::size_t hits = 0;          // exact rows with chi >= threshold
    std::optional<double> frequency;
    double mean_chi = 0;  // over exact rows
};

RandomChiSummary summarize(const std::vector<TrialRow>& rows, std::optional<int> threshold);

/// Limits of the exhaustive event-A search.
struct EventACaps {
    std::size_t max_sets = 64;  // stable k-subsets on either side of a partition
    std::uint64_t max_nodes = 50'000'000;
};

struct EventAWitness {
    HemispherePartition partition;
    std::vector<std::size_t> m_pos;  // vertex indices in the graph
    std::vector<std::size_t> m_neg;
    int t_pos = 0;
    int t_neg = 0;
};

struct EventAReport {
    bool holds = false;
    std::optional<EventAWitness> witness;
    std::size_t partitions_examined = 0;
    std::uint64_t search_nodes = 0;
};

/// Looks for a canonical partition of the embedding and sets M+, M- of stable
/// k-subsets inside its open sides, of sizes ceil(|S+_k|/d) and ceil(|S-_k|/d),
/// with no edge of `g` between them. `g` must have the stable k-subsets of [n]
/// among its vertices. Candidates for M+ are tried in colex order of their
/// index sets. Throws CapacityError when a cap is exceeded.
EventAReport event_a(const Graph& g, const GaleEmbedding& e, int k, const EventACaps& caps = {});

/// Uniform coloring of `count` items with `colors` colors, keyed by seed.
std::vector<int> random_coloring(std::size_t count, int colors, std::uint64_t seed);

}  // namespace kneser
