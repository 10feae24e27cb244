#include "kneser/chromatic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kneser {

std::string to_string(SolveStatus s) { return s == SolveStatus::Exact ? "Exact" : "TimedOut"; }

std::string to_string(Criticality c) {
    switch (c) {
    case Criticality::Critical: return "critical";
    case Criticality::NotCritical: return "not_critical";
    case Criticality::Indeterminate: return "indeterminate";
    }
    return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

// Shared node/time accounting for one search.
class Meter {
public:
    explicit Meter(const Budget& b) : budget_(b) {
        if (b.time) deadline_ = Clock::now() + *b.time;
    }

    /// Counts one node; false once the budget is exhausted.
    bool tick() {
        if (exhausted_) return false;
        ++nodes_;
        if (budget_.nodes && nodes_ > *budget_.nodes) {
            exhausted_ = true;
            --nodes_;
            return false;
        }
        if (budget_.time && (nodes_ & 1023) == 0 && Clock::now() > deadline_) exhausted_ = true;
        return !exhausted_;
    }

    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }

    /// Budget left for a follow-up search.
    Budget remaining() const {
        Budget r = budget_;
        if (r.nodes) r.nodes = *r.nodes - std::min(*r.nodes, nodes_);
        if (r.time) {
            auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline_ - Clock::now());
            r.time = std::max(left, std::chrono::milliseconds(0));
        }
        return r;
    }

private:
    Budget budget_;
    Clock::time_point deadline_{};
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

std::vector<std::vector<int>> neighbour_lists(const BitMatrix& adj) {
    std::vector<std::vector<int>> out(adj.size());
    for (std::size_t u = 0; u < adj.size(); ++u)
        for (std::size_t v = 0; v < adj.size(); ++v)
            if (adj.test(u, v)) out[u].push_back(static_cast<int>(v));
    return out;
}

// DSATUR greedy: the first dive of the exact search, without backtracking.
std::vector<int> dsatur_greedy(const std::vector<std::vector<int>>& nbrs) {
    const int n = static_cast<int>(nbrs.size());
    std::vector<int> color(n, -1);
    std::vector<std::vector<char>> seen(n);
    std::vector<int> sat(n, 0);
    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int u = 0; u < n; ++u) {
            if (color[u] >= 0) continue;
            if (v < 0 || sat[u] > sat[v] || (sat[u] == sat[v] && nbrs[u].size() > nbrs[v].size())) v = u;
        }
        int c = 0;
        while (c < static_cast<int>(seen[v].size()) && seen[v][c]) ++c;
        color[v] = c;
        for (int u : nbrs[v]) {
            if (color[u] >= 0) continue;
            if (static_cast<int>(seen[u].size()) <= c) seen[u].resize(c + 1, 0);
            if (!seen[u][c]) {
                seen[u][c] = 1;
                ++sat[u];
            }
        }
    }
    return color;
}

int colors_used(const std::vector<int>& coloring) {
    int m = -1;
    for (int c : coloring) m = std::max(m, c);
    return m + 1;
}

// Exact DSATUR branch and bound. Looks for proper colorings using fewer than
// `best_` colors; `first_only` stops at the first one found.
class DsaturSearch {
public:
    DsaturSearch(const std::vector<std::vector<int>>& nbrs, Meter& meter, int best, std::vector<int> best_coloring,
                 int lower, bool first_only)
        : nbrs_(nbrs),
          n_(static_cast<int>(nbrs.size())),
          width_(std::max(best, 1)),
          meter_(meter),
          best_(best),
          lower_(lower),
          first_only_(first_only),
          best_coloring_(std::move(best_coloring)),
          color_(n_, -1),
          sat_(n_, 0),
          count_(static_cast<std::size_t>(n_) * width_, 0) {}

    void run() {
        if (best_ <= lower_) {
            done_ = true;
            return;
        }
        dfs(0, 0);
    }

    bool aborted() const { return meter_.exhausted() && !done_ && !complete_; }
    int best() const { return best_; }
    const std::vector<int>& best_coloring() const { return best_coloring_; }
    bool found_any() const { return found_; }

private:
    int select() const {
        int v = -1;
        for (int u = 0; u < n_; ++u) {
            if (color_[u] >= 0) continue;
            if (v < 0 || sat_[u] > sat_[v] || (sat_[u] == sat_[v] && nbrs_[u].size() > nbrs_[v].size())) v = u;
        }
        return v;
    }

    int& count(int v, int c) { return count_[static_cast<std::size_t>(v) * width_ + c]; }

    // Assigns v := c and reports whether every uncolored neighbour still has
    // a color below `limit`.
    bool assign(int v, int c, int limit) {
        color_[v] = c;
        bool ok = true;
        for (int u : nbrs_[v]) {
            if (color_[u] >= 0) continue;
            if (count(u, c)++ == 0 && ++sat_[u] >= limit) ok = false;
        }
        return ok;
    }

    void unassign(int v, int c) {
        for (int u : nbrs_[v]) {
            if (color_[u] >= 0) continue;
            if (--count(u, c) == 0) --sat_[u];
        }
        color_[v] = -1;
    }

    void dfs(int colored, int used) {
        if (colored == n_) {
            best_ = used;
            best_coloring_ = color_;
            found_ = true;
            if (first_only_ || best_ <= lower_) done_ = true;
            return;
        }
        const int v = select();
        for (int c = 0;; ++c) {
            const int limit = best_ - 1;  // colors 0..limit-1 are allowed
            if (c >= limit || c > used) break;
            if (c < used && count(v, c) != 0) continue;
            if (!meter_.tick()) return;
            if (assign(v, c, limit)) dfs(colored + 1, std::max(used, c + 1));
            unassign(v, c);
            if (done_ || meter_.exhausted()) return;
        }
        if (colored == 0) complete_ = true;
    }

    const std::vector<std::vector<int>>& nbrs_;
    int n_;
    int width_;
    Meter& meter_;
    int best_;
    int lower_;
    bool first_only_;
    bool done_ = false;
    bool complete_ = false;
    bool found_ = false;
    std::vector<int> best_coloring_;
    std::vector<int> color_;
    std::vector<int> sat_;
    std::vector<int> count_;
};

// Maximum clique, colour-bounded branch and bound over bitsets.
class CliqueSearch {
public:
    CliqueSearch(const BitMatrix& adj, Meter& meter) : adj_(adj), words_(adj.words_per_row()), meter_(meter) {}

    void run() {
        seed_greedy();
        std::vector<std::uint64_t> all(words_, 0);
        for (std::size_t v = 0; v < adj_.size(); ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
        if (adj_.size() > 0) expand(all);
        exact_ = !meter_.exhausted();
    }

    std::vector<std::size_t> best() const {
        auto b = best_;
        std::sort(b.begin(), b.end());
        return b;
    }
    bool exact() const { return exact_; }

private:
    static bool any(const std::vector<std::uint64_t>& s) {
        return std::any_of(s.begin(), s.end(), [](std::uint64_t w) { return w != 0; });
    }

    void seed_greedy() {
        if (adj_.size() == 0) return;
        std::vector<std::size_t> order(adj_.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return adj_.degree(a) > adj_.degree(b); });
        std::vector<std::size_t> clique;
        for (std::size_t v : order) {
            bool ok = true;
            for (std::size_t u : clique) ok = ok && adj_.test(u, v);
            if (ok) clique.push_back(v);
        }
        best_ = clique;
    }

    void expand(std::vector<std::uint64_t> cand) {
        if (!meter_.tick()) return;
        std::vector<std::size_t> order;
        std::vector<int> bound;
        std::vector<std::uint64_t> uncolored = cand;
        int color = 0;
        while (any(uncolored)) {
            ++color;
            std::vector<std::uint64_t> q = uncolored;
            for (std::size_t w = 0; w < words_; ++w) {
                while (q[w] != 0) {
                    const std::size_t v = w * 64 + std::countr_zero(q[w]);
                    q[w] &= q[w] - 1;
                    uncolored[w] &= ~(std::uint64_t{1} << (v & 63));
                    const std::uint64_t* nv = adj_.row(v);
                    for (std::size_t x = w; x < words_; ++x) q[x] &= ~nv[x];
                    order.push_back(v);
                    bound.push_back(color);
                }
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current_.size() + static_cast<std::size_t>(bound[i]) <= best_.size()) return;
            const std::size_t v = order[i];
            current_.push_back(v);
            std::vector<std::uint64_t> next(words_);
            const std::uint64_t* nv = adj_.row(v);
            for (std::size_t x = 0; x < words_; ++x) next[x] = cand[x] & nv[x];
            if (!any(next)) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(std::move(next));
            }
            current_.pop_back();
            cand[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
            if (meter_.exhausted()) return;
        }
    }

    const BitMatrix& adj_;
    std::size_t words_;
    Meter& meter_;
    std::vector<std::size_t> best_;
    std::vector<std::size_t> current_;
    bool exact_ = false;
};

constexpr std::uint64_t kCliqueNodeCap = 100000;

}  // namespace

ColoringResult chromatic_number(const BitMatrix& adj, const Budget& budget) {
    if (adj.size() == 0) throw std::domain_error("chromatic number of a graph with no vertices is undefined");
    Meter meter(budget);
    const auto nbrs = neighbour_lists(adj);

    ColoringResult r;
    {
        Budget cb = budget;
        cb.nodes = std::min(budget.nodes.value_or(kCliqueNodeCap), kCliqueNodeCap);
        Meter cm(cb);
        CliqueSearch cs(adj, cm);
        cs.run();
        r.clique = cs.best();
        // Clique nodes count against the caller's budget.
        for (std::uint64_t i = 0; i < cm.nodes(); ++i) meter.tick();
    }
    const int lower = std::max<int>(1, static_cast<int>(r.clique.size()));

    auto greedy = dsatur_greedy(nbrs);
    const int upper = colors_used(greedy);

    DsaturSearch search(nbrs, meter, upper, std::move(greedy), lower, false);
    search.run();

    r.coloring = search.best_coloring();
    r.upper_bound = search.best();
    r.nodes = meter.nodes();
    if (search.aborted()) {
        r.status = SolveStatus::TimedOut;
        r.lower_bound = lower;
        r.lower_bound_source = "clique";
    } else {
        r.status = SolveStatus::Exact;
        r.lower_bound = r.upper_bound;
        r.lower_bound_source = (r.upper_bound == lower) ? "clique" : "search";
    }
    r.chi = r.upper_bound;
    return r;
}

ColoringResult chromatic_number(const Graph& g, const Budget& budget) {
    return chromatic_number(g.adjacency(), budget);
}

ColorabilityResult k_colorable(const BitMatrix& adj, int colors, const Budget& budget) {
    ColorabilityResult r;
    const int n = static_cast<int>(adj.size());
    if (n == 0) {
        r.decision = Decision::Yes;
        return r;
    }
    if (colors <= 0) {
        r.decision = Decision::No;
        return r;
    }
    if (colors >= n) {
        r.coloring.resize(n);
        std::iota(r.coloring.begin(), r.coloring.end(), 0);
        r.decision = Decision::Yes;
        return r;
    }
    Meter meter(budget);
    const auto nbrs = neighbour_lists(adj);
    auto greedy = dsatur_greedy(nbrs);
    if (colors_used(greedy) <= colors) {
        r.coloring = std::move(greedy);
        r.decision = Decision::Yes;
        return r;
    }
    DsaturSearch search(nbrs, meter, colors + 1, {}, 0, true);
    search.run();
    r.nodes = meter.nodes();
    if (search.found_any()) {
        r.decision = Decision::Yes;
        r.coloring = search.best_coloring();
    } else {
        r.decision = search.aborted() ? Decision::Unknown : Decision::No;
    }
    return r;
}

int greedy_upper(const BitMatrix& adj, std::span<const std::size_t> order) {
    const std::size_t n = adj.size();
    if (order.size() != n) throw std::invalid_argument("order must be a permutation of the vertices");
    std::vector<char> placed(n, 0);
    for (auto v : order) {
        if (v >= n || placed[v]) throw std::invalid_argument("order must be a permutation of the vertices");
        placed[v] = 1;
    }
    std::vector<int> color(n, -1);
    int used = 0;
    std::vector<char> taken;
    for (auto v : order) {
        taken.assign(used + 1, 0);
        for (std::size_t u = 0; u < n; ++u)
            if (color[u] >= 0 && adj.test(v, u)) taken[color[u]] = 1;
        int c = 0;
        while (taken[c]) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

int greedy_upper(const Graph& g, std::span<const std::size_t> order) { return greedy_upper(g.adjacency(), order); }

std::vector<std::size_t> degeneracy_order(const BitMatrix& adj) {
    const std::size_t n = adj.size();
    std::vector<std::size_t> deg(n);
    for (std::size_t v = 0; v < n; ++v) deg[v] = adj.degree(v);
    std::vector<char> removed(n, 0);
    std::vector<std::size_t> reversed;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!removed[v] && (best == n || deg[v] < deg[best])) best = v;
        removed[best] = 1;
        reversed.push_back(best);
        for (std::size_t u = 0; u < n; ++u)
            if (!removed[u] && adj.test(best, u)) --deg[u];
    }
    return {reversed.rbegin(), reversed.rend()};
}

CliqueResult max_clique(const BitMatrix& adj, const Budget& budget) {
    Meter meter(budget);
    CliqueSearch cs(adj, meter);
    cs.run();
    return {cs.best(), cs.exact(), meter.nodes()};
}

int clique_lower(const Graph& g, const Budget& budget) {
    return static_cast<int>(max_clique(g.adjacency(), budget).vertices.size());
}

IndependentSetResult max_independent_set(const BitMatrix& adj, const Budget& budget) {
    const auto c = max_clique(adj.complement(), budget);
    return {c.vertices.size(), c.vertices, c.exact, c.nodes};
}

IndependentSetResult max_independent_set(const Graph& g, const Budget& budget) {
    return max_independent_set(g.adjacency(), budget);
}

bool is_proper(const BitMatrix& adj, std::span<const int> coloring) {
    if (coloring.size() != adj.size()) throw std::domain_error("coloring must assign every vertex");
    for (int c : coloring)
        if (c < 0) throw std::domain_error("coloring must assign every vertex");
    for (std::size_t u = 0; u < adj.size(); ++u)
        for (std::size_t v = u + 1; v < adj.size(); ++v)
            if (adj.test(u, v) && coloring[u] == coloring[v]) return false;
    return true;
}

bool is_proper(const Graph& g, std::span<const int> coloring) { return is_proper(g.adjacency(), coloring); }

CriticalityResult vertex_critical(const BitMatrix& adj, const Budget& budget) {
    CriticalityResult r;
    const auto base = chromatic_number(adj, budget);
    r.nodes = base.nodes;
    r.chi = base.chi;
    if (base.status != SolveStatus::Exact) return r;

    const auto n = static_cast<std::int64_t>(adj.size());
    std::vector<Decision> verdicts(n, Decision::Unknown);
    std::vector<std::uint64_t> nodes(n, 0);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t v = 0; v < n; ++v) {
        const auto res = k_colorable(adj.without_vertex(v), base.chi - 1, budget);
        verdicts[v] = res.decision;
        nodes[v] = res.nodes;
    }
    r.nodes += std::accumulate(nodes.begin(), nodes.end(), std::uint64_t{0});
    bool unknown = false;
    for (std::int64_t v = 0; v < n; ++v) {
        if (verdicts[v] == Decision::No) {
            r.verdict = Criticality::NotCritical;
            r.witness_vertex = static_cast<std::size_t>(v);
            return r;
        }
        unknown = unknown || verdicts[v] == Decision::Unknown;
    }
    r.verdict = unknown ? Criticality::Indeterminate : Criticality::Critical;
    return r;
}

CriticalityResult vertex_critical(const Graph& g, const Budget& budget) { return vertex_critical(g.adjacency(), budget); }

}  // namespace kneser
