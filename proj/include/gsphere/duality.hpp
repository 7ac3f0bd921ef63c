#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "recognition.hpp"

namespace gsphere {

// =============================================================================
// Complementary duals
// =============================================================================

struct DualResult {
    Graph dual;
    VertexSubset source;
};

namespace detail {

inline void require_members(const Graph& g, const VertexSubset& h) {
    for (Vertex v : h) {
        if (!g.contains(v)) throw GraphError("vertex " + std::to_string(v) + " not in graph");
    }
}

} // namespace detail

/// Induced subgraph on the common neighbors of H; the whole graph when H is empty.
inline DualResult complementary_dual(const Graph& g, const VertexSubset& h) {
    detail::require_members(g, h);
    return {induced(g, common_neighbors(g, h)), h};
}

inline DualResult double_dual(const Graph& g, const VertexSubset& h) {
    auto first = complementary_dual(g, h);
    return {complementary_dual(g, VertexSubset(first.dual.vertices())).dual, h};
}

/// Order of the dual of a clique.
inline std::size_t simplex_degree(const Graph& g, const VertexSubset& x) {
    detail::require_members(g, x);
    if (!is_clique(g, x)) throw PreconditionError("simplex_degree: vertex set is not a clique");
    return common_neighbors(g, x).size();
}

/// As simplex_degree, but for a (d-2)-clique of a d-sphere the dual has to be a cycle.
inline std::size_t checked_simplex_degree(const Graph& g, const VertexSubset& x, int d) {
    auto n = simplex_degree(g, x);
    if (static_cast<int>(x.size()) == d - 1) {
        auto dual = complementary_dual(g, x).dual;
        if (!is_cycle_graph(dual)) {
            std::string name;
            for (Vertex v : x) name += (name.empty() ? "" : ",") + std::to_string(v);
            throw StructuralError("dual of clique {" + name + "} is not a cycle");
        }
    }
    return n;
}

// =============================================================================
// Nerve
// =============================================================================

/// Maximal simplices as nodes 0..m-1, joined when they share all but one vertex.
struct NerveGraph {
    Graph graph;
    std::vector<Simplex> simplices;
};

inline NerveGraph nerve(const Graph& g) {
    NerveGraph out;
    out.simplices = maximal_cliques(g);
    std::sort(out.simplices.begin(), out.simplices.end());
    if (out.simplices.empty()) {
        out.graph = Graph::on_range(0, {});
        return out;
    }
    const std::size_t size = out.simplices.front().size();
    for (const auto& s : out.simplices) {
        if (s.size() != size) throw StructuralError("nerve: maximal cliques of different dimensions (graph is not pure)");
    }
    std::map<Simplex, std::vector<Vertex>> by_face;
    for (std::size_t i = 0; i < out.simplices.size(); ++i) {
        const auto& s = out.simplices[i];
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
            Simplex face;
            for (std::size_t j = 0; j < s.size(); ++j) {
                if (j != skip) face.push_back(s[j]);
            }
            by_face[face].push_back(static_cast<Vertex>(i));
        }
    }
    std::vector<Edge> edges;
    for (const auto& [face, nodes] : by_face) {
        if (face.empty()) continue; // K1 components: vertices share nothing
        for (std::size_t a = 0; a < nodes.size(); ++a) {
            for (std::size_t b = a + 1; b < nodes.size(); ++b) edges.push_back(make_edge(nodes[a], nodes[b]));
        }
    }
    out.graph = Graph::on_range(static_cast<Vertex>(out.simplices.size()), edges);
    return out;
}

// =============================================================================
// Bipartiteness
// =============================================================================

struct BipartiteResult {
    bool bipartite = true;
    std::map<Vertex, int> side;    // filled when bipartite
    std::vector<Vertex> odd_cycle; // closed walk v0 .. vk (v0 adjacent to vk) otherwise
};

inline BipartiteResult is_bipartite(const Graph& g) {
    BipartiteResult out;
    const std::size_t n = g.order();
    std::vector<int> color(n, -1);
    std::vector<std::size_t> parent(n, n), depth(n, 0);
    for (std::size_t root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::queue<std::size_t> queue;
        queue.push(root);
        while (!queue.empty()) {
            auto u = queue.front();
            queue.pop();
            for (Vertex w : g.neighbors_at(u)) {
                auto j = g.index_of(w);
                if (color[j] == -1) {
                    color[j] = 1 - color[u];
                    parent[j] = u;
                    depth[j] = depth[u] + 1;
                    queue.push(j);
                } else if (color[j] == color[u]) {
                    // climb both ends to their common ancestor
                    std::vector<std::size_t> left, right;
                    std::size_t a = u, b = j;
                    while (depth[a] > depth[b]) { left.push_back(a); a = parent[a]; }
                    while (depth[b] > depth[a]) { right.push_back(b); b = parent[b]; }
                    while (a != b) {
                        left.push_back(a);
                        right.push_back(b);
                        a = parent[a];
                        b = parent[b];
                    }
                    left.push_back(a);
                    for (auto it = right.rbegin(); it != right.rend(); ++it) left.push_back(*it);
                    out.bipartite = false;
                    for (auto i : left) out.odd_cycle.push_back(g.vertices()[i]);
                    return out;
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) out.side[g.vertices()[i]] = color[i];
    return out;
}

// =============================================================================
// Dual completion
// =============================================================================

/// Original vertices plus one node per triangle (ids from next_id, in sorted triangle
/// order). Edges: triangle adjacency plus vertex-triangle incidence.
inline Graph dual_completion_2d(const Graph& g, std::uint64_t budget = default_budget) {
    Recognizer rec(budget);
    auto c = rec.classify(g);
    if (c.kind == GraphKind::unknown) throw BudgetExceeded("dual_completion_2d: input classification budget exhausted");
    if (!c.is_sphere(2)) throw PreconditionError("dual_completion_2d: input is not a 2-sphere");
    auto nv = nerve(g);
    const Vertex base = g.next_id();
    auto ids = g.vertices();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < nv.simplices.size(); ++i) {
        const Vertex node = base + static_cast<Vertex>(i);
        ids.push_back(node);
        for (Vertex v : nv.simplices[i]) edges.emplace_back(v, node);
    }
    for (auto [a, b] : nv.graph.edges()) edges.emplace_back(base + a, base + b);
    auto out = Graph::build(std::move(ids), edges);
    if (!rec.classify(out).is_sphere(2)) throw StructuralError("dual_completion_2d: completion is not a 2-sphere");
    return out;
}

} // namespace gsphere
