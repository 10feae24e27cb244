#include "kneser/experiments.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include "kneser/kernels.hpp"

namespace kneser {

namespace {

constexpr std::uint64_t kTrialTag = 0x747269616c736565ULL;  // "trialsee"
constexpr std::uint64_t kColorTag = 0x636f6c6f72696e67ULL;  // "coloring"

// Depth-first search for M+ in colex order with candidate pruning on M-.
class CrossSearch {
public:
    CrossSearch(const std::vector<std::uint64_t>& free_of, int need_pos, int need_neg, std::uint64_t all_neg,
                std::uint64_t& nodes, std::uint64_t max_nodes)
        : free_of_(free_of), need_pos_(need_pos), need_neg_(need_neg), all_neg_(all_neg), nodes_(nodes),
          max_nodes_(max_nodes) {}

    bool run() { return choose(need_pos_, static_cast<int>(free_of_.size()), all_neg_); }

    std::vector<int> chosen() const {
        std::vector<int> c(chosen_.rbegin(), chosen_.rend());
        return c;
    }
    std::uint64_t candidates() const { return result_; }

private:
    // Picks `left` more indices below `limit`; colex order means the largest
    // remaining index varies slowest.
    bool choose(int left, int limit, std::uint64_t cand) {
        if (++nodes_ > max_nodes_) throw CapacityError("instance too large for event-A oracle");
        if (std::popcount(cand) < need_neg_) return false;
        if (left == 0) {
            result_ = cand;
            return true;
        }
        for (int top = left - 1; top < limit; ++top) {
            chosen_.push_back(top);
            if (choose(left - 1, top, cand & free_of_[top])) return true;
            chosen_.pop_back();
        }
        return false;
    }

    const std::vector<std::uint64_t>& free_of_;
    int need_pos_;
    int need_neg_;
    std::uint64_t all_neg_;
    std::uint64_t& nodes_;
    std::uint64_t max_nodes_;
    std::vector<int> chosen_;
    std::uint64_t result_ = 0;
};

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
    return kernels::edge_hash(master, index, kTrialTag);
}

std::vector<TrialRow> run_random_chi(const Graph& parent, double p, std::uint64_t master_seed, std::size_t trials,
                                     const Budget& budget) {
    std::vector<TrialRow> rows(trials);
    const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto start = std::chrono::steady_clock::now();
        TrialRow& row = rows[i];
        row.trial = static_cast<std::uint64_t>(i);
        row.seed = trial_seed(master_seed, row.trial);
        const Graph g = sample_subgraph(parent, p, row.seed);
        const auto res = chromatic_number(g, budget);
        row.chi = res.chi;
        row.status = res.status;
        row.nodes = res.nodes;
        row.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    return rows;
}

RandomChiSummary summarize(const std::vector<TrialRow>& rows, std::optional<int> threshold) {
    RandomChiSummary s;
    s.trials = rows.size();
    s.threshold = threshold;
    double total = 0;
    for (const auto& r : rows) {
        if (r.status != SolveStatus::Exact) {
            ++s.timed_out;
            continue;
        }
        ++s.exact;
        total += r.chi;
        if (threshold && r.chi >= *threshold) ++s.hits;
    }
    if (s.exact > 0) s.mean_chi = total / static_cast<double>(s.exact);
    if (threshold && s.exact > 0) s.frequency = static_cast<double>(s.hits) / static_cast<double>(s.exact);
    return s;
}

EventAReport event_a(const Graph& g, const GaleEmbedding& e, int k, const EventACaps& caps) {
    if (g.n() != e.n || g.k() != k) throw std::domain_error("graph and embedding disagree on n or k");
    const auto stable = enumerate_stable_ksubsets(e.n, k);
    std::vector<std::size_t> index(stable.size());
    for (std::size_t j = 0; j < stable.size(); ++j) {
        auto idx = g.index_of(stable[j].mask);
        if (!idx) throw std::domain_error("graph is missing stable k-subset " + stable[j].to_string());
        index[j] = *idx;
    }

    EventAReport report;
    for (const auto& part : canonical_hemispheres(e)) {
        ++report.partitions_examined;
        const std::uint64_t pm = part.positive_mask();
        const std::uint64_t nm = part.negative_mask();
        std::vector<std::size_t> pos, neg;
        for (std::size_t j = 0; j < stable.size(); ++j) {
            if ((stable[j].mask & ~pm) == 0) pos.push_back(index[j]);
            if ((stable[j].mask & ~nm) == 0) neg.push_back(index[j]);
        }
        if (pos.size() > caps.max_sets || neg.size() > caps.max_sets)
            throw CapacityError("instance too large for event-A oracle");
        const int t_pos = static_cast<int>((pos.size() + e.d - 1) / e.d);
        const int t_neg = static_cast<int>((neg.size() + e.d - 1) / e.d);

        // free_of[i]: members of S-_k with no edge to the i-th member of S+_k
        std::vector<std::uint64_t> free_of(pos.size(), 0);
        for (std::size_t i = 0; i < pos.size(); ++i)
            for (std::size_t j = 0; j < neg.size(); ++j)
                if (!g.adjacency().test(pos[i], neg[j])) free_of[i] |= std::uint64_t{1} << j;
        const std::uint64_t all_neg = neg.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << neg.size()) - 1;

        CrossSearch search(free_of, t_pos, t_neg, all_neg, report.search_nodes, caps.max_nodes);
        if (!search.run()) continue;

        EventAWitness w;
        w.partition = part;
        w.t_pos = t_pos;
        w.t_neg = t_neg;
        for (int i : search.chosen()) w.m_pos.push_back(pos[i]);
        std::uint64_t cand = search.candidates();
        for (int taken = 0; taken < t_neg; ++taken, cand &= cand - 1) w.m_neg.push_back(neg[std::countr_zero(cand)]);
        std::sort(w.m_pos.begin(), w.m_pos.end());
        std::sort(w.m_neg.begin(), w.m_neg.end());
        report.holds = true;
        report.witness = std::move(w);
        return report;
    }
    return report;
}

std::vector<int> random_coloring(std::size_t count, int colors, std::uint64_t seed) {
    if (colors < 1) throw std::domain_error("need at least one color");
    std::vector<int> out(count);
    for (std::size_t j = 0; j < count; ++j) {
        const double u = kernels::edge_uniform(seed, j, kColorTag);
        out[j] = std::min(colors - 1, static_cast<int>(u * colors));
    }
    return out;
}

}  // namespace kneser
