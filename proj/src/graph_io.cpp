#include "kneser/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace kneser {

using ojson = nlohmann::ordered_json;

std::string to_json(const Graph& g) {
    ojson doc;
    doc["family"] = to_string(g.family());
    doc["n"] = g.n();
    doc["k"] = g.k();
    const auto& prov = g.provenance();
    doc["p"] = prov ? ojson(prov->p) : ojson(nullptr);
    doc["seed"] = prov ? ojson(prov->seed) : ojson(nullptr);
    doc["rng_id"] = prov ? ojson(prov->rng_id) : ojson(nullptr);
    doc["parent_family"] = prov ? ojson(to_string(prov->parent_family)) : ojson(nullptr);
    ojson vertices = ojson::array();
    for (const auto& s : g.vertices()) vertices.push_back(s.mask);
    doc["vertices"] = std::move(vertices);
    ojson edges = ojson::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    return doc.dump() + "\n";
}

Graph graph_from_json(const std::string& text) {
    ojson doc;
    try {
        doc = ojson::parse(text);
    } catch (const ojson::parse_error& e) {
        throw FormatError(std::string("graph file is not valid JSON: ") + e.what());
    }
    try {
        const Family family = family_from_string(doc.at("family").get<std::string>());
        const int n = doc.at("n").get<int>();
        const int k = doc.at("k").get<int>();
        std::vector<KSubset> vertices;
        for (const auto& m : doc.at("vertices")) {
            KSubset s = subset_from_mask(n, m.get<std::uint64_t>());
            vertices.push_back(s);
        }
        BitMatrix adj(vertices.size());
        std::pair<std::size_t, std::size_t> prev{0, 0};
        bool first = true;
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw FormatError("edge must be a [u, v] pair");
            const auto u = e[0].get<std::size_t>();
            const auto v = e[1].get<std::size_t>();
            if (u >= v || v >= vertices.size()) throw FormatError("edge indices must satisfy u < v < |V|");
            if (!first && !(prev < std::pair{u, v})) throw FormatError("edges must be strictly sorted");
            prev = {u, v};
            first = false;
            adj.set_sym(u, v);
        }
        std::optional<Provenance> prov;
        if (family == Family::Sampled) {
            Provenance pv;
            pv.p = doc.at("p").get<double>();
            pv.seed = doc.at("seed").get<std::uint64_t>();
            pv.rng_id = doc.at("rng_id").get<std::string>();
            pv.parent_family = family_from_string(doc.at("parent_family").get<std::string>());
            prov = pv;
        }
        return Graph::from_parts(family, n, k, std::move(vertices), std::move(adj), std::move(prov));
    } catch (const FormatError&) {
        throw;
    } catch (const std::exception& e) {
        throw FormatError(std::string("invalid graph document: ") + e.what());
    }
}

void write_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << to_json(g);
}

Graph read_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return graph_from_json(ss.str());
}

}  // namespace kneser
