#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "graph.hpp"

namespace gsphere {

// Graph JSON: {"name": s, "vertices": [ascending ids], "edges": [[u, v] with u < v, sorted]}
// Edge-list text: one "u v" per line, a lone "v" declares an isolated vertex, '#' starts a comment.

struct NamedGraph {
    std::string name;
    Graph graph;
};

inline nlohmann::json graph_to_json(const Graph& g, const std::string& name = "") {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    return {{"name", name}, {"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

inline NamedGraph graph_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
            throw FormatError("graph JSON needs \"vertices\" and \"edges\"");
        }
        NamedGraph out;
        if (j.contains("name") && j["name"].is_string()) out.name = j["name"].get<std::string>();
        auto ids = j["vertices"].get<std::vector<Vertex>>();
        std::vector<Edge> edges;
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw FormatError("edge entries must be [u, v] pairs");
            edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
        }
        out.graph = Graph::build(std::move(ids), edges);
        return out;
    } catch (const nlohmann::json::exception& ex) {
        throw FormatError(std::string("graph JSON: ") + ex.what());
    } catch (const GraphError& ex) {
        throw FormatError(std::string("graph JSON: ") + ex.what());
    }
}

inline std::string graph_to_text(const Graph& g, const std::string& name = "") {
    std::ostringstream out;
    if (!name.empty()) out << "# " << name << "\n";
    for (Vertex v : g.vertices()) {
        if (g.degree(v) == 0) out << v << "\n";
    }
    for (auto [a, b] : g.edges()) out << a << " " << b << "\n";
    return out.str();
}

inline Graph graph_from_text(const std::string& text) {
    std::vector<Vertex> ids;
    std::vector<Edge> edges;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<long long> nums;
        std::string tok;
        while (fields >> tok) {
            try {
                std::size_t used = 0;
                long long v = std::stoll(tok, &used);
                if (used != tok.size() || v < 0 || v > 0xFFFFFFFFLL) throw std::invalid_argument(tok);
                nums.push_back(v);
            } catch (const std::exception&) {
                throw FormatError("line " + std::to_string(lineno) + ": bad vertex id '" + tok + "'");
            }
        }
        if (nums.empty()) continue;
        if (nums.size() > 2) throw FormatError("line " + std::to_string(lineno) + ": expected 'u v' or 'v'");
        for (auto v : nums) ids.push_back(static_cast<Vertex>(v));
        if (nums.size() == 2) edges.emplace_back(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    try {
        return Graph::build(std::move(ids), edges);
    } catch (const GraphError& ex) {
        throw FormatError(std::string("edge list: ") + ex.what());
    }
}

inline bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// Format chosen by extension: .json or .txt.
inline NamedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    if (ends_with(path, ".json")) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(buf.str());
        } catch (const nlohmann::json::exception& ex) {
            throw FormatError("'" + path + "': " + ex.what());
        }
        return graph_from_json(j);
    }
    if (ends_with(path, ".txt")) return {"", graph_from_text(buf.str())};
    throw FormatError("'" + path + "': unknown extension, expected .json or .txt");
}

inline void write_graph_file(const std::string& path, const Graph& g, const std::string& name = "") {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write '" + path + "'");
    if (ends_with(path, ".txt")) {
        out << graph_to_text(g, name);
    } else {
        out << graph_to_json(g, name).dump(2) << "\n";
    }
}

} // namespace gsphere
