#include "kneser/commands.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kneser/bounds.hpp"
#include "kneser/chromatic.hpp"
#include "kneser/experiments.hpp"
#include "kneser/gale.hpp"
#include "kneser/graph.hpp"
#include "kneser/graph_io.hpp"
#include "kneser/kernels.hpp"

namespace kneser::cli {

namespace {

using ojson = nlohmann::ordered_json;

/// Input error carrying a message for stderr.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reported falsification of a guaranteed property.
class Falsified : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string family = "kneser";
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> k;
    std::optional<std::int64_t> ell;
    std::optional<std::int64_t> s;
    std::optional<double> p;
    std::optional<double> eps;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> budget_nodes;
    std::optional<std::int64_t> budget_ms;
    std::string out;
    std::string in;
    std::string format = "csv";
    std::string coloring_file;
    std::string from_graph;
    std::vector<std::int64_t> ells;
    std::size_t vertex_cap = 5000;
    bool sweep = false;
    bool timing = false;
};

ojson real(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::string real_text(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

ojson big(const BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return x.convert_to<std::int64_t>();
    return x.str();
}

ojson int_vector(const IntVector& v) {
    ojson a = ojson::array();
    for (const auto& x : v) a.push_back(big(x));
    return a;
}

template <class T>
ojson opt(const std::optional<T>& v) {
    return v ? ojson(*v) : ojson(nullptr);
}

std::int64_t need(const std::optional<std::int64_t>& v, const char* name) {
    if (!v) throw InputError(std::string("--") + name + " is required");
    return *v;
}

double need_real(const std::optional<double>& v, const char* name) {
    if (!v) throw InputError(std::string("--") + name + " is required");
    return *v;
}

int small_int(std::int64_t v, const char* name) {
    if (v < 0 || v > 64) throw CapacityError(std::string(name) + " = " + std::to_string(v) + " is outside 0..64");
    return static_cast<int>(v);
}

Budget budget_of(const Options& o) {
    Budget b;
    b.nodes = o.budget_nodes;
    if (o.budget_ms) b.time = std::chrono::milliseconds(*o.budget_ms);
    return b;
}

ojson budget_json(const Options& o) {
    ojson b;
    b["nodes"] = opt(o.budget_nodes);
    b["ms"] = opt(o.budget_ms);
    return b;
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw InputError("cannot open " + o.out + " for writing");
    f << text;
}

std::string dump(const ojson& doc) { return doc.dump(2) + "\n"; }

Family parent_family_of(const std::string& name) {
    if (name == "kneser") return Family::Kneser;
    if (name == "schrijver") return Family::Schrijver;
    throw InputError("--family must be kneser or schrijver");
}

// ---------------------------------------------------------------- gen-graph

int cmd_gen_graph(const Options& o, std::ostream& out) {
    const int n = small_int(need(o.n, "n"), "n");
    const int k = small_int(need(o.k, "k"), "k");
    const Graph parent = build_family(parent_family_of(o.family), n, k, GraphOptions{o.vertex_cap});
    if (o.p) {
        emit(to_json(sample_subgraph(parent, *o.p, o.seed)), o, out);
    } else {
        emit(to_json(parent), o, out);
    }
    return kOk;
}

// ---------------------------------------------------------------------- chi

int cmd_chi(const Options& o, std::ostream& out) {
    if (o.in.empty()) throw InputError("an input graph file is required");
    const Graph g = read_graph(o.in);
    const auto r = chromatic_number(g, budget_of(o));
    ojson doc;
    doc["config"] = {{"command", "chi"}, {"in", o.in}, {"budget", budget_json(o)}};
    doc["family"] = to_string(g.family());
    doc["n"] = g.n();
    doc["k"] = g.k();
    doc["vertices"] = g.size();
    doc["edges"] = g.edge_count();
    doc["chi"] = r.chi;
    doc["status"] = to_string(r.status);
    doc["lower_bound"] = r.lower_bound;
    doc["upper_bound"] = r.upper_bound;
    doc["lower_bound_source"] = r.lower_bound_source;
    doc["clique"] = r.clique;
    doc["nodes"] = r.nodes;
    doc["coloring"] = r.coloring;
    emit(dump(doc), o, out);
    return r.status == SolveStatus::Exact ? kOk : kTimedOut;
}

// --------------------------------------------------------------- random-chi

int cmd_random_chi(const Options& o, std::ostream& out) {
    const int n = small_int(need(o.n, "n"), "n");
    const int k = small_int(need(o.k, "k"), "k");
    const double p = need_real(o.p, "p");
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("--p must lie in [0,1]");
    if (o.trials < 1) throw InputError("--trials must be at least 1");
    if (o.format != "csv" && o.format != "json") throw InputError("--format must be csv or json");
    std::optional<int> threshold;
    if (o.ell) {
        const std::int64_t d = n - 2 * k - 2 * *o.ell + 1;
        if (*o.ell < 1) throw InputError("ℓ ≥ 1 violated");
        if (d < 2) throw InputError("d ≥ 2 violated");
        threshold = static_cast<int>(d + 1);
    }
    const Graph parent = build_family(parent_family_of(o.family), n, k, GraphOptions{o.vertex_cap});
    const auto rows = run_random_chi(parent, p, o.seed, o.trials, budget_of(o));
    const auto summary = summarize(rows, threshold);

    ojson config = {{"command", "random-chi"}, {"family", o.family}, {"n", n},         {"k", k},
                    {"ell", opt(o.ell)},       {"p", p},            {"trials", o.trials}, {"seed", o.seed},
                    {"budget", budget_json(o)}, {"rng_id", kernels::kEdgeRngId}};
    auto elapsed = [&](const TrialRow& r) { return o.timing ? real_text(r.elapsed_ms) : std::string("NA"); };

    if (o.format == "json") {
        ojson doc;
        doc["config"] = config;
        ojson arr = ojson::array();
        for (const auto& r : rows)
            arr.push_back({{"trial", r.trial},
                           {"seed", r.seed},
                           {"chi", r.chi},
                           {"status", to_string(r.status)},
                           {"nodes", r.nodes},
                           {"elapsed_ms", o.timing ? real(r.elapsed_ms) : ojson(nullptr)}});
        doc["rows"] = std::move(arr);
        doc["summary"] = {{"trials", summary.trials},
                          {"exact", summary.exact},
                          {"timed_out", summary.timed_out},
                          {"threshold", opt(summary.threshold)},
                          {"hits", summary.hits},
                          {"frequency", summary.frequency ? real(*summary.frequency) : ojson(nullptr)},
                          {"mean_chi", real(summary.mean_chi)}};
        emit(dump(doc), o, out);
    } else {
        std::ostringstream csv;
        csv << "# config: " << config.dump() << "\n";
        csv << "trial,seed,chi,status,nodes,elapsed_ms\n";
        for (const auto& r : rows)
            csv << r.trial << ',' << r.seed << ',' << r.chi << ',' << to_string(r.status) << ',' << r.nodes << ','
                << elapsed(r) << '\n';
        csv << "# summary: trials=" << summary.trials << ",exact=" << summary.exact
            << ",timed_out=" << summary.timed_out
            << ",threshold=" << (summary.threshold ? std::to_string(*summary.threshold) : "NA")
            << ",hits=" << summary.hits
            << ",frequency=" << (summary.frequency ? real_text(*summary.frequency) : "NA")
            << ",mean_chi=" << real_text(summary.mean_chi) << '\n';
        emit(csv.str(), o, out);
    }
    return summary.timed_out == 0 ? kOk : kTimedOut;
}

// ------------------------------------------------------------------ event-a

ojson partition_json(const HemispherePartition& h) {
    return {{"normal", int_vector(h.normal)}, {"signs", h.sign_string()}};
}

int cmd_event_a(const Options& o, std::ostream& out) {
    const int n = small_int(need(o.n, "n"), "n");
    const int k = small_int(need(o.k, "k"), "k");
    const std::int64_t ell = need(o.ell, "ell");
    const double p = need_real(o.p, "p");
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("--p must lie in [0,1]");
    if (k < 1) throw InputError("k ≥ 1 violated");
    if (ell < 1) throw InputError("ℓ ≥ 1 violated");
    if (n - 2 * k - 2 * ell + 1 < 2) throw InputError("d ≥ 2 violated");
    if (o.trials < 1) throw InputError("--trials must be at least 1");

    const auto e = build_embedding(n, static_cast<int>(k + ell));
    const Graph sg = build_schrijver(n, k, GraphOptions{o.vertex_cap});

    std::vector<EventAReport> reports(o.trials);
    std::vector<std::uint64_t> seeds(o.trials);
    std::vector<std::string> failures(o.trials);
    const auto count = static_cast<std::int64_t>(o.trials);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
        seeds[i] = trial_seed(o.seed, static_cast<std::uint64_t>(i));
        try {
            reports[i] = event_a(sample_subgraph(sg, p, seeds[i]), e, k);
        } catch (const CapacityError& err) {
            failures[i] = err.what();
        }
    }
    for (const auto& f : failures)
        if (!f.empty()) throw CapacityError(f);

    std::size_t holds = 0;
    ojson results = ojson::array();
    for (std::size_t i = 0; i < o.trials; ++i) {
        const auto& r = reports[i];
        holds += r.holds ? 1 : 0;
        ojson row = {{"trial", i},
                     {"seed", seeds[i]},
                     {"holds", r.holds},
                     {"partitions_examined", r.partitions_examined},
                     {"search_nodes", r.search_nodes}};
        if (r.witness) {
            row["witness"] = {{"partition", partition_json(r.witness->partition)},
                              {"m_pos", r.witness->m_pos},
                              {"m_neg", r.witness->m_neg},
                              {"t_pos", r.witness->t_pos},
                              {"t_neg", r.witness->t_neg}};
        } else {
            row["witness"] = nullptr;
        }
        results.push_back(std::move(row));
    }
    const double freq = static_cast<double>(holds) / static_cast<double>(o.trials);

    ojson doc;
    doc["config"] = {{"command", "event-a"}, {"n", n}, {"k", k}, {"ell", ell}, {"p", p},
                     {"trials", o.trials}, {"seed", o.seed}, {"rng_id", kernels::kEdgeRngId}};
    doc["d"] = e.d;
    doc["holds_count"] = holds;
    doc["frequency"] = real(freq);
    if (k >= 2) {
        const double l1 = ln_pA_first_bound(n, k, ell, p);
        const double bound = std::min(1.0, std::exp(l1));
        doc["ln_pA_L1"] = real(l1);
        doc["bound"] = real(bound);
        doc["sigma"] = real(std::sqrt(bound * (1 - bound) / static_cast<double>(o.trials)));
    } else {
        doc["ln_pA_L1"] = nullptr;
        doc["bound"] = nullptr;
        doc["sigma"] = nullptr;
    }
    doc["results"] = std::move(results);
    emit(dump(doc), o, out);
    return kOk;
}

// ------------------------------------------------------------------ witness

std::vector<int> coloring_from_file(const std::string& path, std::size_t count, int d) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    ojson doc;
    try {
        doc = ojson::parse(in);
    } catch (const std::exception& e) {
        throw InputError(std::string("coloring file is not valid JSON: ") + e.what());
    }
    if (doc.contains("num_colors") && doc["num_colors"].get<int>() != d)
        throw InputError("coloring uses " + doc["num_colors"].dump() + " colors but d = " + std::to_string(d));
    if (!doc.contains("colors") || !doc["colors"].is_array()) throw InputError("coloring file needs a colors array");
    std::vector<int> colors = doc["colors"].get<std::vector<int>>();
    if (colors.size() != count)
        throw InputError("coloring has " + std::to_string(colors.size()) + " entries, expected " + std::to_string(count));
    for (int c : colors)
        if (c < 0 || c >= d) throw InputError("color " + std::to_string(c) + " outside 0..d-1 (d = " + std::to_string(d) + ")");
    return colors;
}

int cmd_witness(const Options& o, std::ostream& out) {
    const int n = small_int(need(o.n, "n"), "n");
    const int k = small_int(need(o.k, "k"), "k");
    const std::int64_t ell = need(o.ell, "ell");
    if (k < 1) throw InputError("k ≥ 1 violated");
    if (ell < 1) throw InputError("ℓ ≥ 1 violated");
    if (n - 2 * k - 2 * ell + 1 < 2) throw InputError("d ≥ 2 violated");
    const auto e = build_embedding(n, static_cast<int>(k + ell));
    const auto cells = enumerate_faces(e);
    const std::size_t count = enumerate_stable_ksubsets(n, k).size();

    std::vector<std::vector<int>> colorings;
    std::vector<ojson> sources;
    std::string source;
    if (!o.coloring_file.empty()) {
        source = "file";
        colorings.push_back(coloring_from_file(o.coloring_file, count, e.d));
        sources.push_back({{"file", o.coloring_file}});
    } else if (!o.from_graph.empty()) {
        source = "graph";
        const Graph g = read_graph(o.from_graph);
        if (g.n() != n || g.k() != k || g.base_family() != Family::Schrijver)
            throw InputError("--from-graph must be a Schrijver graph (or sample) on the same n and k");
        const auto r = chromatic_number(g, budget_of(o));
        if (r.status != SolveStatus::Exact) return kTimedOut;
        if (r.chi > e.d) throw InputError("graph needs " + std::to_string(r.chi) + " colors, more than d = " + std::to_string(e.d));
        colorings.push_back(r.coloring);
        sources.push_back({{"graph", o.from_graph}, {"chi", r.chi}});
    } else {
        source = "random";
        if (o.trials < 1) throw InputError("--trials must be at least 1");
        for (std::size_t i = 0; i < o.trials; ++i) {
            const auto seed = trial_seed(o.seed, i);
            colorings.push_back(random_coloring(count, e.d, seed));
            sources.push_back({{"trial", i}, {"seed", seed}});
        }
    }

    std::vector<WitnessSearch> found(colorings.size());
    const auto total = static_cast<std::int64_t>(colorings.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < total; ++i) found[i] = antipodal_witness(e, cells, k, colorings[i]);

    bool missing = false;
    ojson results = ojson::array();
    for (std::size_t i = 0; i < found.size(); ++i) {
        ojson row = sources[i];
        if (const auto& w = found[i].witness) {
            row["witness"] = {{"normal", int_vector(w->cell.direction)},
                              {"signs", w->cell.sign_string()},
                              {"color", w->color},
                              {"counts", {{"pos", w->count_pos}, {"neg", w->count_neg}}},
                              {"sets", {{"pos", w->sets_pos}, {"neg", w->sets_neg}}},
                              {"t", {{"pos", w->t_pos}, {"neg", w->t_neg}}}};
        } else {
            missing = true;
            row["witness"] = nullptr;
        }
        row["faces_examined"] = found[i].cells_examined;
        results.push_back(std::move(row));
    }

    ojson doc;
    doc["config"] = {{"command", "witness"}, {"n", n},           {"k", k},         {"ell", ell},
                     {"source", source},     {"trials", o.trials}, {"seed", o.seed}};
    doc["d"] = e.d;
    doc["coverage"] = to_string(cells.coverage);
    doc["faces"] = cells.cells.size();
    doc["stable_sets"] = count;
    doc["results"] = std::move(results);
    emit(dump(doc), o, out);
    if (missing) throw Falsified("no antipodal witness found (face coverage: " + to_string(cells.coverage) + ")");
    return kOk;
}

// ------------------------------------------------------------------- bounds

ojson chain_json(const PABoundChain& c) {
    return {{"L1", real(c.l1)},
            {"L2", c.l2 ? real(*c.l2) : ojson(nullptr)},
            {"L3", c.l3 ? real(*c.l3) : ojson(nullptr)},
            {"L4", c.l4 ? real(*c.l4) : ojson(nullptr)},
            {"conclusive", c.conclusive}};
}

int cmd_bounds(const Options& o, std::ostream& out) {
    const std::int64_t n = need(o.n, "n");
    const std::int64_t k = need(o.k, "k");
    const double p = need_real(o.p, "p");
    const double eps = need_real(o.eps, "eps");
    if (!o.ell && !o.sweep) throw InputError("either --ell or --sweep is required");

    ojson doc;
    doc["config"] = {{"command", "bounds"}, {"n", n}, {"k", k}, {"ell", opt(o.ell)}, {"p", p}, {"eps", eps},
                     {"sweep", o.sweep},    {"ells", o.ells}};
    try {
        if (o.ell) {
            TheoremParams params{n, k, *o.ell, p, eps};
            const auto dp = params.validate();
            doc["d"] = dp.d;
            doc["t"] = big(dp.t);
            doc["rhs"] = real(condition_rhs(n, k, *o.ell));
            doc["lhs"] = real((1.0 - eps) * p);
            doc["condition"] = condition_holds(params);
            doc["g_is_decreasing"] = g_is_decreasing(dp.d, dp.t, p);
            doc["chain"] = chain_json(ln_pA_bound(params));
            doc["chi_lower_if_condition"] = n - 2 * k - 2 * *o.ell + 2;
        }
        if (o.sweep) {
            if (!(eps > 0.0 && eps < 1.0)) throw PreconditionError("0 < ε < 1");
            const auto gap = best_gap(n, k, p, eps);
            doc["best_gap"] = gap ? ojson{{"ell", gap->ell}, {"gap", gap->gap}, {"chi_lower", gap->chi_lower}}
                                  : ojson(nullptr);
            const auto report = corollary_regime_report(n, k, p, eps, o.ells);
            ojson entries = ojson::array();
            for (const auto& e : report.entries) {
                ojson row = {{"ell", e.ell}, {"valid", e.valid}, {"regime", e.regime}};
                if (e.valid) {
                    row["d"] = e.d;
                    row["t"] = big(e.t);
                    row["rhs"] = real(e.rhs);
                    row["lhs"] = real(e.lhs);
                    row["condition"] = e.condition;
                    row["certified_gap"] = e.certified_gap;
                    row["chi_lower"] = e.chi_lower;
                    row["t_over_sqrt_n"] = real(e.t_over_sqrt_n);
                } else {
                    row["reason"] = e.invalid_reason;
                }
                row["ln_fixed_l_surrogate"] = real(e.ln_fixed_l_surrogate);
                row["ln_fixed_k_surrogate"] = real(e.ln_fixed_k_surrogate);
                entries.push_back(std::move(row));
            }
            doc["regime"] = {{"entries", std::move(entries)}, {"certifications", report.certifications}};
        }
    } catch (const PreconditionError& e) {
        throw InputError(e.what());
    }
    emit(dump(doc), o, out);
    return kOk;
}

// -------------------------------------------------------------- gale-verify

int cmd_gale_verify(const Options& o, std::ostream& out) {
    const int n = small_int(need(o.n, "n"), "n");
    std::int64_t s = 0;
    if (o.s) {
        s = *o.s;
    } else {
        s = need(o.k, "k") + need(o.ell, "ell");
    }
    if (s < 1) throw InputError("s ≥ 1 violated");
    if (n - 2 * s + 1 < 2) throw InputError("d ≥ 2 violated");
    const auto e = build_embedding(n, static_cast<int>(s));
    const bool gp = general_position_check(e);
    ojson doc;
    doc["config"] = {{"command", "gale-verify"}, {"n", n}, {"s", s}};
    doc["d"] = e.d;
    doc["general_position"] = gp;
    bool ok = gp;
    if (gp) {
        const auto check = verify_gale_property(e);
        ok = check.ok;
        doc["ok"] = check.ok;
        doc["partitions_checked"] = check.partitions_checked;
        doc["counterexample"] = check.counterexample ? partition_json(*check.counterexample) : ojson(nullptr);
    } else {
        doc["ok"] = false;
    }
    emit(dump(doc), o, out);
    if (!ok) throw Falsified("moment-curve embedding failed the hemisphere check");
    return kOk;
}

}  // namespace

void apply_thread_env() {
    if (const char* env = std::getenv("KNESER_CHROMA_THREADS")) {
        const int threads = std::atoi(env);
        if (threads > 0) omp_set_num_threads(threads);
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Kneser/Schrijver random-subgraph chromatic experiments", "kneser-chroma"};
    app.set_config("--config", "", "TOML config file; command-line flags take precedence");
    app.require_subcommand(1);

    auto add_nk = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "ground set size");
        sub->add_option("--k", o.k, "subset size");
    };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget-nodes", o.budget_nodes, "search node budget (deterministic)");
        sub->add_option("--budget-ms", o.budget_ms, "wall-clock budget in milliseconds");
    };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "output file (default: stdout)"); };

    auto* gen = app.add_subcommand("gen-graph", "write a Kneser/Schrijver graph or a sampled subgraph as JSON");
    gen->add_option("--family", o.family, "kneser or schrijver");
    add_nk(gen);
    gen->add_option("--p", o.p, "keep each edge with this probability");
    gen->add_option("--seed", o.seed, "sampling seed");
    gen->add_option("--vertex-cap", o.vertex_cap, "maximum vertex count");
    add_out(gen);

    auto* chi = app.add_subcommand("chi", "exact chromatic number of a graph file");
    chi->add_option("in,--in", o.in, "graph JSON file");
    add_budget(chi);
    add_out(chi);

    auto* rchi = app.add_subcommand("random-chi", "chromatic numbers of sampled subgraphs");
    rchi->add_option("--family", o.family, "kneser or schrijver");
    add_nk(rchi);
    rchi->add_option("--ell", o.ell, "l for the d+1 threshold");
    rchi->add_option("--p", o.p, "edge probability");
    rchi->add_option("--trials", o.trials, "number of trials");
    rchi->add_option("--seed", o.seed, "master seed");
    rchi->add_option("--format", o.format, "csv or json");
    rchi->add_option("--vertex-cap", o.vertex_cap, "maximum vertex count");
    rchi->add_flag("--timing", o.timing, "record elapsed_ms (output is then not reproducible)");
    add_budget(rchi);
    add_out(rchi);

    auto* eva = app.add_subcommand("event-a", "exhaustive event-A oracle on sampled Schrijver graphs");
    add_nk(eva);
    eva->add_option("--ell", o.ell, "l");
    eva->add_option("--p", o.p, "edge probability");
    eva->add_option("--seed", o.seed, "master seed");
    eva->add_option("--trials", o.trials, "number of sampled graphs");
    eva->add_option("--vertex-cap", o.vertex_cap, "maximum vertex count");
    add_out(eva);

    auto* wit = app.add_subcommand("witness", "antipodal monochromatic witness for d-colorings of stable k-sets");
    add_nk(wit);
    wit->add_option("--ell", o.ell, "l");
    wit->add_option("--seed", o.seed, "master seed for random colorings");
    wit->add_option("--trials", o.trials, "number of random colorings");
    auto* cf = wit->add_option("--coloring", o.coloring_file, "JSON file {\"colors\": [...]} over stable k-subsets");
    wit->add_option("--from-graph", o.from_graph, "use an exact coloring of this graph file")->excludes(cf);
    add_budget(wit);
    add_out(wit);

    auto* bnd = app.add_subcommand("bounds", "evaluate the probability condition and bound chain");
    add_nk(bnd);
    bnd->add_option("--ell", o.ell, "l");
    bnd->add_option("--p", o.p, "edge probability");
    bnd->add_option("--eps", o.eps, "epsilon in (0,1)");
    bnd->add_flag("--sweep", o.sweep, "search for the smallest certified gap");
    bnd->add_option("--ells", o.ells, "extra l values for the regime report");
    add_out(bnd);

    auto* gv = app.add_subcommand("gale-verify", "check the moment-curve embedding hemisphere property");
    gv->add_option("--n", o.n, "number of points");
    gv->add_option("--s", o.s, "stable subset size s (default k + ell)");
    gv->add_option("--k", o.k, "k");
    gv->add_option("--ell", o.ell, "l");
    add_out(gv);

    std::vector<std::string> argv_store{"kneser-chroma"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*gen) return cmd_gen_graph(o, out);
        if (*chi) return cmd_chi(o, out);
        if (*rchi) return cmd_random_chi(o, out);
        if (*eva) return cmd_event_a(o, out);
        if (*wit) return cmd_witness(o, out);
        if (*bnd) return cmd_bounds(o, out);
        if (*gv) return cmd_gale_verify(o, out);
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return kCapacity;
    } catch (const Falsified& e) {
        err << "error: " << e.what() << "\n";
        return kFalsified;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace kneser::cli
