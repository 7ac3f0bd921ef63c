#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace gsphere {

using Vertex = std::uint32_t;

// Undirected edge, always stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// =============================================================================
// VertexSubset
// =============================================================================

/// Sorted, duplicate-free set of vertex ids.
class VertexSubset {
public:
    VertexSubset() = default;
    VertexSubset(std::initializer_list<Vertex> ids) : VertexSubset(std::vector<Vertex>(ids)) {}
    explicit VertexSubset(std::vector<Vertex> ids) : members_(std::move(ids)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    const std::vector<Vertex>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }
    bool includes(const VertexSubset& other) const {
        return std::includes(members_.begin(), members_.end(), other.members_.begin(), other.members_.end());
    }

    friend bool operator==(const VertexSubset&, const VertexSubset&) = default;
    friend auto operator<=>(const VertexSubset&, const VertexSubset&) = default;

private:
    std::vector<Vertex> members_;
};

// =============================================================================
// Graph
// =============================================================================

/// Immutable finite simple graph. Vertex ids are sorted, adjacency lists are sorted,
/// and derived graphs keep the ids of their host.
class Graph {
public:
    Graph() = default;

    /// Validating constructor. Duplicate edges are merged; duplicate ids, loops and
    /// undeclared endpoints throw GraphError.
    static Graph build(std::vector<Vertex> ids, const std::vector<Edge>& edges) {
        std::sort(ids.begin(), ids.end());
        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
            throw GraphError("duplicate vertex id " + std::to_string(*std::adjacent_find(ids.begin(), ids.end())));
        }
        Graph g;
        g.ids_ = std::move(ids);
        g.adj_.resize(g.ids_.size());
        for (auto [a, b] : edges) {
            if (a == b) throw GraphError("loop edge at vertex " + std::to_string(a));
            auto ia = g.find_index(a);
            auto ib = g.find_index(b);
            if (!ia || !ib) {
                throw GraphError("edge endpoint not declared: " + std::to_string(ia ? b : a));
            }
            g.adj_[*ia].push_back(b);
            g.adj_[*ib].push_back(a);
        }
        for (auto& row : g.adj_) {
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
            g.edge_count_ += row.size();
        }
        g.edge_count_ /= 2;
        return g;
    }

    /// Graph on vertices 0..n-1.
    static Graph on_range(Vertex n, const std::vector<Edge>& edges) {
        std::vector<Vertex> ids(n);
        for (Vertex i = 0; i < n; ++i) ids[i] = i;
        return build(std::move(ids), edges);
    }

    const std::vector<Vertex>& vertices() const noexcept { return ids_; }
    std::size_t order() const noexcept { return ids_.size(); }
    std::size_t size() const noexcept { return edge_count_; }
    bool empty() const noexcept { return ids_.empty(); }

    bool contains(Vertex v) const { return find_index(v).has_value(); }

    std::size_t index_of(Vertex v) const {
        auto i = find_index(v);
        if (!i) throw GraphError("vertex " + std::to_string(v) + " not in graph");
        return *i;
    }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[index_of(v)]; }
    std::span<const Vertex> neighbors_at(std::size_t index) const { return adj_[index]; }
    std::size_t degree(Vertex v) const { return adj_[index_of(v)].size(); }

    bool adjacent(Vertex a, Vertex b) const {
        auto i = find_index(a);
        if (!i) return false;
        return std::binary_search(adj_[*i].begin(), adj_[*i].end(), b);
    }

    /// Sorted edge list with first < second.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (std::size_t i = 0; i < ids_.size(); ++i) {
            for (Vertex w : adj_[i]) {
                if (ids_[i] < w) out.emplace_back(ids_[i], w);
            }
        }
        return out;
    }

    /// Largest id, or nullopt for the empty graph.
    std::optional<Vertex> max_vertex() const {
        if (ids_.empty()) return std::nullopt;
        return ids_.back();
    }

    /// First id not used by this graph (max + 1, or 0 when empty).
    Vertex next_id() const { return ids_.empty() ? 0 : ids_.back() + 1; }

    friend bool operator==(const Graph& a, const Graph& b) { return a.ids_ == b.ids_ && a.adj_ == b.adj_; }

private:
    std::optional<std::size_t> find_index(Vertex v) const {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it == ids_.end() || *it != v) return std::nullopt;
        return static_cast<std::size_t>(it - ids_.begin());
    }

    std::vector<Vertex> ids_;
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

inline Graph build_graph(std::vector<Vertex> ids, const std::vector<Edge>& edges) {
    return Graph::build(std::move(ids), edges);
}

// =============================================================================
// VertexMap (isomorphism certificates, automorphisms, permutations)
// =============================================================================

/// Bijection between two vertex sets, stored as parallel arrays sorted by source.
class VertexMap {
public:
    VertexMap() = default;
    explicit VertexMap(std::map<Vertex, Vertex> pairs) {
        for (auto [s, t] : pairs) {
            source_.push_back(s);
            target_.push_back(t);
        }
    }
    VertexMap(std::vector<Vertex> sorted_source, std::vector<Vertex> target)
        : source_(std::move(sorted_source)), target_(std::move(target)) {}

    static VertexMap identity(const std::vector<Vertex>& ids) { return VertexMap(ids, ids); }

    Vertex operator()(Vertex v) const {
        auto it = std::lower_bound(source_.begin(), source_.end(), v);
        if (it == source_.end() || *it != v) throw GraphError("vertex " + std::to_string(v) + " not in map domain");
        return target_[static_cast<std::size_t>(it - source_.begin())];
    }

    const std::vector<Vertex>& source() const noexcept { return source_; }
    const std::vector<Vertex>& target() const noexcept { return target_; }
    std::size_t size() const noexcept { return source_.size(); }

    VertexMap inverse() const {
        std::map<Vertex, Vertex> inv;
        for (std::size_t i = 0; i < source_.size(); ++i) inv[target_[i]] = source_[i];
        return VertexMap(std::move(inv));
    }

    /// (other ∘ this): apply this first, then other.
    VertexMap then(const VertexMap& other) const {
        std::vector<Vertex> out(target_.size());
        for (std::size_t i = 0; i < target_.size(); ++i) out[i] = other(target_[i]);
        return VertexMap(source_, std::move(out));
    }

    bool is_identity() const { return source_ == target_; }

    friend bool operator==(const VertexMap&, const VertexMap&) = default;
    friend auto operator<=>(const VertexMap&, const VertexMap&) = default;

private:
    std::vector<Vertex> source_;
    std::vector<Vertex> target_;
};

using IsoCertificate = VertexMap;

/// True when `m` is a bijection V(g) -> V(h) carrying edges to edges and non-edges to non-edges.
inline bool is_isomorphism(const Graph& g, const Graph& h, const VertexMap& m) {
    if (g.order() != h.order() || g.size() != h.size() || m.source() != g.vertices()) return false;
    std::vector<Vertex> image = m.target();
    std::sort(image.begin(), image.end());
    if (image != h.vertices()) return false;
    for (auto [a, b] : g.edges()) {
        if (!h.adjacent(m(a), m(b))) return false;
    }
    return true; // edge counts agree, so non-edges map to non-edges
}

// =============================================================================
// Subgraphs and distances
// =============================================================================

/// Induced subgraph on `s`; ids preserved.
inline Graph induced(const Graph& g, const VertexSubset& s) {
    std::vector<Edge> edges;
    for (Vertex v : s) {
        if (!g.contains(v)) throw GraphError("vertex " + std::to_string(v) + " not in graph");
        for (Vertex w : g.neighbors(v)) {
            if (v < w && s.contains(w)) edges.emplace_back(v, w);
        }
    }
    return Graph::build(s.members(), edges);
}

/// S(v): induced subgraph on the neighbors of v.
inline Graph unit_sphere(const Graph& g, Vertex v) {
    auto nb = g.neighbors(v);
    return induced(g, VertexSubset(std::vector<Vertex>(nb.begin(), nb.end())));
}

/// G - {v}.
inline Graph delete_vertex(const Graph& g, Vertex v) {
    if (!g.contains(v)) throw GraphError("vertex " + std::to_string(v) + " not in graph");
    std::vector<Vertex> rest;
    rest.reserve(g.order() - 1);
    for (Vertex w : g.vertices()) {
        if (w != v) rest.push_back(w);
    }
    return induced(g, VertexSubset(std::move(rest)));
}

/// Vertices adjacent to every member of `s`; all of g when `s` is empty.
inline VertexSubset common_neighbors(const Graph& g, const VertexSubset& s) {
    if (s.empty()) return VertexSubset(g.vertices());
    for (Vertex v : s) {
        if (!g.contains(v)) throw GraphError("vertex " + std::to_string(v) + " not in graph");
    }
    auto first = g.neighbors(s.members().front());
    std::vector<Vertex> acc(first.begin(), first.end());
    for (std::size_t i = 1; i < s.size() && !acc.empty(); ++i) {
        auto nb = g.neighbors(s.members()[i]);
        std::vector<Vertex> next;
        std::set_intersection(acc.begin(), acc.end(), nb.begin(), nb.end(), std::back_inserter(next));
        acc = std::move(next);
    }
    return VertexSubset(std::move(acc));
}

constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

/// BFS distances from `source`, indexed like g.vertices(); `unreachable` where disconnected.
inline std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
    std::vector<std::size_t> dist(g.order(), unreachable);
    std::queue<std::size_t> queue;
    auto s = g.index_of(source);
    dist[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
        auto i = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors_at(i)) {
            auto j = g.index_of(w);
            if (dist[j] == unreachable) {
                dist[j] = dist[i] + 1;
                queue.push(j);
            }
        }
    }
    return dist;
}

/// Shortest-path length, or nullopt when u and v lie in different components.
inline std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v) {
    auto dist = bfs_distances(g, u);
    auto d = dist[g.index_of(v)];
    if (d == unreachable) return std::nullopt;
    return d;
}

/// Induced subgraph on {y : d(v,y) = r}.
inline Graph sphere_of_radius(const Graph& g, Vertex v, std::size_t r) {
    auto dist = bfs_distances(g, v);
    std::vector<Vertex> ring;
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (dist[i] == r) ring.push_back(g.vertices()[i]);
    }
    return induced(g, VertexSubset(std::move(ring)));
}

/// Induced subgraph on {y : d(v,y) <= r}.
inline Graph ball_of_radius(const Graph& g, Vertex v, std::size_t r) {
    auto dist = bfs_distances(g, v);
    std::vector<Vertex> disc;
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (dist[i] <= r) disc.push_back(g.vertices()[i]);
    }
    return induced(g, VertexSubset(std::move(disc)));
}

inline bool is_connected(const Graph& g) {
    if (g.empty()) return true;
    auto dist = bfs_distances(g, g.vertices().front());
    return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == unreachable; });
}

/// Connected, 2-regular, at least 4 vertices: the graphs C_n with n >= 4.
inline bool is_cycle_graph(const Graph& g) {
    if (g.order() < 4) return false;
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (g.neighbors_at(i).size() != 2) return false;
    }
    return is_connected(g);
}

/// Vertices of a cycle graph in traversal order, starting at the smallest id and
/// stepping first to its smaller neighbor.
inline std::vector<Vertex> cycle_order(const Graph& g) {
    std::vector<Vertex> order;
    if (g.empty()) return order;
    Vertex prev = g.vertices().front();
    Vertex cur = g.neighbors(prev).front();
    order.push_back(prev);
    while (cur != order.front()) {
        order.push_back(cur);
        auto nb = g.neighbors(cur);
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    return order;
}

} // namespace gsphere
