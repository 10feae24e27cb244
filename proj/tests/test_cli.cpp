#include <omp.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "kneser/commands.hpp"
#include "kneser/graph_io.hpp"

using namespace kneser;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void spit(const std::string& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("gen-graph") {
    auto r = invoke({"gen-graph", "--family", "kneser", "--n", "5", "--k", "2", "--out", "cli_pet.json"});
    REQUIRE(r.code == 0);
    const auto pet = read_graph("cli_pet.json");
    CHECK(pet.size() == 10);
    CHECK(pet.edge_count() == 15);
    const auto first = slurp("cli_pet.json");
    invoke({"gen-graph", "--family", "kneser", "--n", "5", "--k", "2", "--out", "cli_pet.json"});
    CHECK(slurp("cli_pet.json") == first);

    const auto full = invoke({"gen-graph", "--family", "schrijver", "--n", "5", "--k", "2"});
    const auto kept = invoke({"gen-graph", "--family", "schrijver", "--n", "5", "--k", "2", "--p", "1", "--seed", "4"});
    CHECK(json::parse(full.out)["edges"] == json::parse(kept.out)["edges"]);
    CHECK(json::parse(kept.out)["family"] == "sampled");
    CHECK(json::parse(kept.out)["parent_family"] == "schrijver");

    CHECK(invoke({"gen-graph", "--family", "kneser", "--n", "30", "--k", "10"}).code == cli::kCapacity);
    CHECK(invoke({"gen-graph", "--family", "petersen", "--n", "5", "--k", "2"}).code == cli::kInputError);
    CHECK(invoke({"gen-graph", "--n", "5"}).code == cli::kInputError);
    std::remove("cli_pet.json");
}

TEST_CASE("chi") {
    invoke({"gen-graph", "--family", "kneser", "--n", "5", "--k", "2", "--out", "cli_chi_pet.json"});
    auto r = invoke({"chi", "cli_chi_pet.json"});
    CHECK(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["chi"] == 3);
    CHECK(doc["status"] == "Exact");
    CHECK(doc.contains("nodes"));
    CHECK(doc["config"]["command"] == "chi");

    invoke({"gen-graph", "--family", "schrijver", "--n", "6", "--k", "2", "--out", "cli_chi_sg.json"});
    CHECK(json::parse(invoke({"chi", "--in", "cli_chi_sg.json"}).out)["chi"] == 4);

    invoke({"gen-graph", "--family", "kneser", "--n", "8", "--k", "3", "--out", "cli_chi_big.json"});
    r = invoke({"chi", "cli_chi_big.json", "--budget-nodes", "1"});
    CHECK(r.code == cli::kTimedOut);
    doc = json::parse(r.out);
    CHECK(doc["status"] == "TimedOut");
    CHECK(doc["lower_bound"].get<int>() <= 4);
    CHECK(doc["upper_bound"].get<int>() >= 4);

    spit("cli_chi_bad.json", "{\"family\":\"kneser\",\"n\":4}");
    CHECK(invoke({"chi", "cli_chi_bad.json"}).code == cli::kInputError);
    CHECK(invoke({"chi", "does_not_exist.json"}).code == cli::kInputError);
    for (auto f : {"cli_chi_pet.json", "cli_chi_sg.json", "cli_chi_big.json", "cli_chi_bad.json"}) std::remove(f);
}

TEST_CASE("random-chi csv schema is pinned") {
    const auto r = invoke({"random-chi", "--family", "schrijver", "--n", "8", "--k", "2", "--ell", "1", "--p", "0.9",
                        "--trials", "20", "--seed", "5"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 23);
    CHECK(ls[0] ==
          "# config: {\"command\":\"random-chi\",\"family\":\"schrijver\",\"n\":8,\"k\":2,\"ell\":1,\"p\":0.9,"
          "\"trials\":20,\"seed\":5,\"budget\":{\"nodes\":null,\"ms\":null},\"rng_id\":\"splitmix64-edge-v1\"}");
    CHECK(ls[1] == "trial,seed,chi,status,nodes,elapsed_ms");
    CHECK(ls[22].rfind("# summary: trials=20,exact=20,timed_out=0,threshold=4,hits=", 0) == 0);
    for (std::size_t i = 2; i < 22; ++i) {
        std::istringstream row(ls[i]);
        std::vector<std::string> cells;
        for (std::string c; std::getline(row, c, ',');) cells.push_back(c);
        REQUIRE(cells.size() == 6);
        CHECK(cells[0] == std::to_string(i - 2));
        CHECK(std::stoi(cells[2]) <= 6);
        CHECK(cells[3] == "Exact");
        CHECK(cells[5] == "NA");
    }
}

TEST_CASE("random-chi extremes, json, and reproducibility") {
    const std::vector<std::string> base = {"random-chi", "--family", "kneser", "--n", "7", "--k", "2", "--trials", "5",
                                           "--seed", "1", "--format", "json"};
    auto with_p = [&](const std::string& p) {
        auto a = base;
        a.push_back("--p");
        a.push_back(p);
        return invoke(a);
    };
    for (const auto& row : json::parse(with_p("1").out)["rows"]) CHECK(row["chi"] == 5);
    for (const auto& row : json::parse(with_p("0").out)["rows"]) CHECK(row["chi"] == 1);
    const auto doc = json::parse(with_p("0.5").out);
    CHECK(doc["rows"].size() == 5);
    CHECK(doc["summary"]["frequency"].is_null());

    const std::vector<std::string> args = {"random-chi", "--family", "kneser", "--n", "7", "--k", "2", "--p", "0.6",
                                           "--trials", "30", "--seed", "77"};
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const auto one = invoke(args).out;
    omp_set_num_threads(4);
    const auto four = invoke(args).out;
    omp_set_num_threads(saved);
    CHECK(one == four);
    CHECK(invoke(args).out == one);

    auto timed = args;
    timed.push_back("--budget-nodes");
    timed.push_back("1");
    const auto t = invoke(timed);
    CHECK(t.code == cli::kTimedOut);
    CHECK(t.out.find("TimedOut") != std::string::npos);

    CHECK(invoke({"random-chi", "--n", "7", "--k", "2", "--p", "1.5"}).code == cli::kInputError);
    CHECK(invoke({"random-chi", "--n", "7", "--k", "2", "--p", "0.5", "--trials", "0"}).code == cli::kInputError);
    CHECK(invoke({"random-chi", "--n", "7", "--k", "2", "--p", "0.5", "--format", "xml"}).code == cli::kInputError);
}

TEST_CASE("event-a") {
    auto freq = [](const std::string& p) {
        const auto r = invoke({"event-a", "--n", "8", "--k", "2", "--ell", "1", "--p", p, "--trials", "10", "--seed", "2"});
        REQUIRE(r.code == 0);
        return json::parse(r.out)["frequency"].get<double>();
    };
    CHECK(freq("0") == 1.0);
    CHECK(freq("1") == 0.0);
    const auto r = invoke({"event-a", "--n", "8", "--k", "2", "--ell", "1", "--p", "0.5", "--trials", "10", "--seed", "2"});
    const auto doc = json::parse(r.out);
    CHECK(doc["results"].size() == 10);
    CHECK(doc.contains("bound"));
    CHECK(invoke({"event-a", "--n", "8", "--k", "2", "--ell", "3", "--p", "0.5"}).code == cli::kInputError);
    CHECK(invoke({"event-a", "--n", "30", "--k", "2", "--ell", "12", "--p", "0.5"}).code == cli::kCapacity);
}

TEST_CASE("witness") {
    // 20 stable 2-subsets of [8]
    spit("cli_const.json", "{\"num_colors\":3,\"colors\":[" + std::string("0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0") + "]}");
    auto r = invoke({"witness", "--n", "8", "--k", "2", "--ell", "1", "--coloring", "cli_const.json"});
    CHECK(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["results"][0]["witness"]["color"] == 0);
    CHECK(doc["coverage"] == "certified");

    spit("cli_short.json", "{\"colors\":[0,1,2]}");
    CHECK(invoke({"witness", "--n", "8", "--k", "2", "--ell", "1", "--coloring", "cli_short.json"}).code ==
          cli::kInputError);
    spit("cli_wrongd.json", "{\"num_colors\":4,\"colors\":[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0]}");
    CHECK(invoke({"witness", "--n", "8", "--k", "2", "--ell", "1", "--coloring", "cli_wrongd.json"}).code ==
          cli::kInputError);
    spit("cli_range.json", "{\"colors\":[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,3]}");
    CHECK(invoke({"witness", "--n", "8", "--k", "2", "--ell", "1", "--coloring", "cli_range.json"}).code ==
          cli::kInputError);

    r = invoke({"witness", "--n", "8", "--k", "2", "--ell", "1", "--trials", "50", "--seed", "3"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["results"].size() == 50);

    // exact 3-coloring of a sampled subgraph of SG(8,2)
    invoke({"gen-graph", "--family", "schrijver", "--n", "8", "--k", "2", "--p", "0.5", "--seed", "8", "--out",
         "cli_sub.json"});
    r = invoke({"witness", "--n", "8", "--k", "2", "--ell", "1", "--from-graph", "cli_sub.json"});
    const int chi = json::parse(invoke({"chi", "cli_sub.json"}).out)["chi"];
    if (chi <= 3) {
        CHECK(r.code == 0);
        CHECK(!json::parse(r.out)["results"][0]["witness"].is_null());
    } else {
        CHECK(r.code == cli::kInputError);
    }
    for (auto f : {"cli_const.json", "cli_short.json", "cli_wrongd.json", "cli_range.json", "cli_sub.json"})
        std::remove(f);
}

TEST_CASE("bounds") {
    auto r = invoke({"bounds", "--n", "1000000", "--k", "2", "--ell", "63096", "--p", "0.5", "--eps", "0.5"});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["condition"] == true);
    CHECK(doc["d"] == 873805);
    CHECK(doc["t"] == 2279);
    CHECK(doc["rhs"].get<double>() == doctest::Approx(0.224405506545816).epsilon(1e-11));
    CHECK(r.out.find("\"rhs\": 0.224405506546,") != std::string::npos);

    doc = json::parse(invoke({"bounds", "--n", "13", "--k", "2", "--ell", "2", "--p", "1", "--eps", "0.1"}).out);
    CHECK(doc["condition"] == false);
    CHECK(doc["chain"]["conclusive"] == false);

    r = invoke({"bounds", "--n", "10", "--k", "2", "--ell", "4", "--p", "0.5", "--eps", "0.5"});
    CHECK(r.code == cli::kInputError);
    CHECK(r.err.find("d ≥ 2 violated") != std::string::npos);
    r = invoke({"bounds", "--n", "10", "--k", "1", "--ell", "1", "--p", "0.5", "--eps", "0.5"});
    CHECK(r.err.find("k ≥ 2 violated") != std::string::npos);
    r = invoke({"bounds", "--n", "10", "--k", "2", "--ell", "0", "--p", "0.5", "--eps", "0.5"});
    CHECK(r.err.find("ℓ ≥ 1 violated") != std::string::npos);
    CHECK(invoke({"bounds", "--n", "10", "--k", "2", "--p", "0.5", "--eps", "0.5"}).code == cli::kInputError);

    doc = json::parse(invoke({"bounds", "--n", "1000000", "--k", "2", "--p", "0.5", "--eps", "0.5", "--sweep"}).out);
    CHECK(doc["best_gap"]["ell"] == 61481);
    doc = json::parse(invoke({"bounds", "--n", "13", "--k", "2", "--p", "0.5", "--eps", "0.1", "--sweep"}).out);
    CHECK(doc["best_gap"].is_null());
}

TEST_CASE("gale-verify") {
    auto r = invoke({"gale-verify", "--n", "10", "--s", "3"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["ok"] == true);
    r = invoke({"gale-verify", "--n", "9", "--k", "2", "--ell", "1"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["config"]["s"] == 3);
    CHECK(invoke({"gale-verify", "--n", "6", "--s", "3"}).code == cli::kInputError);
}

TEST_CASE("config file, precedence and misc") {
    spit("cli_conf.toml", "[gen-graph]\nfamily = \"schrijver\"\nn = 6\nk = 2\n");
    auto doc = json::parse(invoke({"--config", "cli_conf.toml", "gen-graph"}).out);
    CHECK(doc["family"] == "schrijver");
    CHECK(doc["n"] == 6);
    doc = json::parse(invoke({"--config", "cli_conf.toml", "gen-graph", "--n", "7"}).out);
    CHECK(doc["n"] == 7);
    std::remove("cli_conf.toml");

    CHECK(invoke({}).code == cli::kInputError);
    CHECK(invoke({"frobnicate"}).code == cli::kInputError);
    CHECK(invoke({"--help"}).code == 0);
}
