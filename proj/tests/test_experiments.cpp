#include <omp.h>

#include <functional>
#include <set>

#include "doctest.h"
#include "kneser/experiments.hpp"

using namespace kneser;

namespace {

bool choose_rec(const std::vector<std::size_t>& pool, std::size_t need, std::size_t from, std::vector<std::size_t>& cur,
                const std::function<bool(const std::vector<std::size_t>&)>& f) {
    if (cur.size() == need) return f(cur);
    for (std::size_t i = from; i < pool.size(); ++i) {
        cur.push_back(pool[i]);
        if (choose_rec(pool, need, i + 1, cur, f)) return true;
        cur.pop_back();
    }
    return false;
}

// Every pair of candidate sets, no pruning.
bool event_a_oracle(const Graph& g, const GaleEmbedding& e, int k) {
    const auto stable = enumerate_stable_ksubsets(e.n, k);
    for (const auto& h : canonical_hemispheres(e)) {
        std::vector<std::size_t> pos, neg;
        for (const auto& s : stable) {
            if ((s.mask & ~h.positive_mask()) == 0) pos.push_back(*g.index_of(s.mask));
            if ((s.mask & ~h.negative_mask()) == 0) neg.push_back(*g.index_of(s.mask));
        }
        const std::size_t tp = (pos.size() + e.d - 1) / e.d, tn = (neg.size() + e.d - 1) / e.d;
        std::vector<std::size_t> a, b;
        const bool ok = choose_rec(pos, tp, 0, a, [&](const std::vector<std::size_t>& mp) {
            return choose_rec(neg, tn, 0, b, [&](const std::vector<std::size_t>& mn) {
                for (auto u : mp)
                    for (auto v : mn)
                        if (g.adjacent(u, v)) return false;
                return true;
            });
        });
        if (ok) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("trial seeds") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 10000; ++i) seen.insert(trial_seed(5, i));
    CHECK(seen.size() == 10000);
    CHECK(trial_seed(5, 17) == trial_seed(5, 17));
    CHECK(trial_seed(5, 17) != trial_seed(6, 17));
}

TEST_CASE("random chi: extremes and determinism") {
    const auto sg = build_schrijver(8, 2);
    for (const auto& r : run_random_chi(sg, 1.0, 3, 5, {})) CHECK(r.chi == 6);
    for (const auto& r : run_random_chi(sg, 0.0, 3, 5, {})) CHECK(r.chi == 1);

    const auto a = run_random_chi(sg, 0.6, 11, 40, {});
    omp_set_num_threads(3);
    const auto b = run_random_chi(sg, 0.6, 11, 40, {});
    omp_set_num_threads(1);
    REQUIRE(a.size() == 40);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].trial == i);
        CHECK(a[i].seed == trial_seed(11, i));
        CHECK(a[i].chi == b[i].chi);
        CHECK(a[i].nodes == b[i].nodes);
        CHECK(a[i].chi == chromatic_number(sample_subgraph(sg, 0.6, a[i].seed)).chi);
        CHECK(a[i].chi <= 6);
    }
}

TEST_CASE("summary") {
    std::vector<TrialRow> rows(5);
    rows[0].chi = 4;
    rows[1].chi = 3;
    rows[2].chi = 4;
    rows[3].chi = 2;
    rows[3].status = SolveStatus::TimedOut;
    rows[4].chi = 1;
    const auto s = summarize(rows, 4);
    CHECK(s.trials == 5);
    CHECK(s.exact == 4);
    CHECK(s.timed_out == 1);
    CHECK(s.hits == 2);
    CHECK(*s.frequency == doctest::Approx(0.5));
    CHECK(s.mean_chi == doctest::Approx(3.0));
    CHECK_FALSE(summarize(rows, std::nullopt).frequency);
}

TEST_CASE("event A at p = 0 and p = 1") {
    for (auto [n, k, ell] : {std::tuple{7, 2, 1}, {8, 2, 1}, {9, 2, 1}, {9, 3, 1}}) {
        const auto e = build_embedding(n, k + ell);
        const auto sg = build_schrijver(n, k);
        CHECK(event_a(sample_subgraph(sg, 0.0, 1), e, k).holds);
        CHECK_FALSE(event_a(sample_subgraph(sg, 1.0, 1), e, k).holds);
    }
}

TEST_CASE("event A agrees with unpruned search and witnesses are valid") {
    for (auto [n, k, ell] : {std::tuple{7, 2, 1}, {8, 2, 1}, {9, 3, 1}}) {
        const auto e = build_embedding(n, k + ell);
        const auto sg = build_schrijver(n, k);
        for (double p : {0.1, 0.3, 0.5, 0.7})
            for (std::uint64_t seed = 0; seed < 15; ++seed) {
                const auto g = sample_subgraph(sg, p, seed);
                const auto r = event_a(g, e, k);
                CHECK(r.holds == event_a_oracle(g, e, k));
                if (!r.holds) continue;
                const auto& w = *r.witness;
                CHECK(w.m_pos.size() == static_cast<std::size_t>(w.t_pos));
                CHECK(w.m_neg.size() == static_cast<std::size_t>(w.t_neg));
                for (auto u : w.m_pos) {
                    CHECK((g.vertices()[u].mask & ~w.partition.positive_mask()) == 0);
                    for (auto v : w.m_neg) CHECK_FALSE(g.adjacent(u, v));
                }
                for (auto v : w.m_neg) CHECK((g.vertices()[v].mask & ~w.partition.negative_mask()) == 0);
            }
    }
}

TEST_CASE("event A works on sampled kneser graphs too and enforces caps") {
    const auto e = build_embedding(8, 3);
    CHECK(event_a(sample_subgraph(build_kneser(8, 2), 0.0, 1), e, 2).holds);
    CHECK_THROWS_AS(event_a(sample_subgraph(build_schrijver(8, 2), 0.5, 1), e, 2, EventACaps{2, 1000}), CapacityError);
    CHECK_THROWS_AS(event_a(sample_subgraph(build_schrijver(8, 2), 0.5, 1), e, 2, EventACaps{64, 1}), CapacityError);
    CHECK_THROWS_AS(event_a(build_schrijver(9, 2), e, 2), std::domain_error);
}

TEST_CASE("random colorings") {
    const auto c = random_coloring(1000, 3, 9);
    CHECK(c == random_coloring(1000, 3, 9));
    std::size_t counts[3] = {0, 0, 0};
    for (int x : c) {
        REQUIRE((x >= 0 && x < 3));
        ++counts[x];
    }
    for (auto n : counts) CHECK(n > 250);
    CHECK_THROWS(random_coloring(5, 0, 1));
}
