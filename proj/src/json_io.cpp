#include "dht/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dht/gamma.hpp"

#include "json.hpp"

namespace dht {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph graph_from(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw std::runtime_error("graph JSON: expected {\"vertices\":[...],\"edges\":[...]}");
    Graph g;
    for (const auto& v : j.at("vertices")) g.add_vertex(v.get<std::string>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::runtime_error("graph JSON: each edge must be a pair of labels");
        std::string a = e[0].get<std::string>(), b = e[1].get<std::string>();
        if (a == b) throw std::runtime_error("graph JSON: loops are forbidden (edge " + a + ")");
        auto ia = g.index_of(a), ib = g.index_of(b);
        if (!ia || !ib) throw std::runtime_error("graph JSON: unknown label in edge: " + a + "," + b);
        g.add_edge(*ia, *ib);
    }
    return g;
}

GraphMap map_from(const json& j, const Graph& src, const Graph& tgt, const std::string& name) {
    std::vector<int> assign(src.size(), -1);
    if (!j.is_object()) throw std::runtime_error("square JSON: map " + name + " must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto s = src.index_of(it.key());
        auto t = tgt.index_of(it.value().get<std::string>());
        if (!s || !t)
            throw std::runtime_error("square JSON: unknown label in map " + name);
        assign[*s] = *t;
    }
    for (int v : assign)
        if (v < 0) throw std::runtime_error("square JSON: map " + name + " is not total");
    GraphMap m{src, tgt, std::move(assign)};
    if (!m.is_valid())
        throw std::runtime_error("square JSON: map " + name + " does not preserve edges");
    return m;
}

}  // namespace

Graph graph_from_json(const std::string& text) { return graph_from(json::parse(text)); }

Graph graph_from_json_file(const std::string& path) { return graph_from_json(slurp(path)); }

std::string graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = json::array();
    for (int v = 0; v < g.size(); ++v) j["vertices"].push_back(g.label(v));
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({g.label(u), g.label(v)});
    return j.dump(2) + "\n";
}

GraphSquare square_from_json(const std::string& text) {
    json j = json::parse(text);
    for (const char* key : {"G", "H", "K", "L", "maps"})
        if (!j.contains(key))
            throw std::runtime_error(std::string("square JSON: missing key ") + key);
    Graph G = graph_from(j["G"]), H = graph_from(j["H"]), K = graph_from(j["K"]),
          L = graph_from(j["L"]);
    const json& maps = j["maps"];
    for (const char* key : {"GH", "GK", "HL", "KL"})
        if (!maps.contains(key))
            throw std::runtime_error(std::string("square JSON: missing map ") + key);
    GraphSquare sq{map_from(maps["GH"], G, H, "GH"), map_from(maps["GK"], G, K, "GK"),
                   map_from(maps["HL"], H, L, "HL"), map_from(maps["KL"], K, L, "KL")};
    return sq;
}

GraphSquare square_from_json_file(const std::string& path) {
    return square_from_json(slurp(path));
}

SimplicialComplex complex_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("vertices") || !j.contains("facets"))
        throw std::runtime_error("complex JSON: expected {\"vertices\":[...],\"facets\":[...]}");
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    for (const auto& v : j["vertices"]) {
        std::string lab = v.get<std::string>();
        if (index.count(lab)) throw std::runtime_error("complex JSON: duplicate vertex " + lab);
        index.emplace(lab, static_cast<int>(labels.size()));
        labels.push_back(lab);
    }
    std::vector<std::vector<int>> facets;
    for (const auto& f : j["facets"]) {
        std::vector<int> facet;
        for (const auto& v : f) {
            auto it = index.find(v.get<std::string>());
            if (it == index.end())
                throw std::runtime_error("complex JSON: unknown vertex in facet");
            facet.push_back(it->second);
        }
        facets.push_back(std::move(facet));
    }
    return make_complex(std::move(labels), std::move(facets));
}

SimplicialComplex complex_from_json_file(const std::string& path) {
    return complex_from_json(slurp(path));
}

}  // namespace dht
