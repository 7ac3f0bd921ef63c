#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "isomorphism.hpp"
#include "recognition.hpp"

namespace gsphere {

// =============================================================================
// Records
// =============================================================================

/// Degree change of one (d-2)-clique, where degree is the order of its dual.
struct ParityFlip {
    Simplex clique;
    std::size_t degree_before = 0;
    std::size_t degree_after = 0;
};

struct SurgeryRecord {
    std::string operation; // "subdivide" or "collapse"
    Edge edge{};
    std::optional<Vertex> new_vertex;     // subdivide
    std::optional<Vertex> kept_vertex;    // collapse
    std::optional<Vertex> removed_vertex; // collapse
    int dimension = -1;                   // clique dimension used for parity bookkeeping
    std::vector<ParityFlip> parity_flips; // (d-2)-cliques present before and after whose parity changed
    std::string note;
};

struct SurgeryResult {
    Graph graph;
    SurgeryRecord record;
};

struct SurgeryOptions {
    bool track_parity = true;
};

namespace detail {

// All cliques with `size` vertices; the empty clique when size == 0.
inline std::vector<Simplex> cliques_of_size(const CliqueComplex& c, std::size_t size) {
    if (size == 0) return {Simplex{}};
    return c.layer(static_cast<int>(size) - 1);
}

inline std::size_t dual_order(const Graph& g, const Simplex& s) {
    return common_neighbors(g, VertexSubset(s)).size();
}

inline std::vector<ParityFlip> parity_changes(const Graph& before, const Graph& after, int d) {
    std::vector<ParityFlip> flips;
    if (d < 1) return flips;
    const auto size = static_cast<std::size_t>(d - 1);
    auto old_cliques = cliques_of_size(clique_complex(before), size);
    auto new_cliques = cliques_of_size(clique_complex(after), size);
    for (const auto& s : old_cliques) {
        if (!std::binary_search(new_cliques.begin(), new_cliques.end(), s)) continue;
        auto a = dual_order(before, s);
        auto b = dual_order(after, s);
        if (a % 2 != b % 2) flips.push_back({s, a, b});
    }
    return flips;
}

inline Graph from_adjacency(const std::map<Vertex, std::set<Vertex>>& adj) {
    std::vector<Vertex> ids;
    std::vector<Edge> edges;
    for (const auto& [v, nb] : adj) {
        ids.push_back(v);
        for (Vertex w : nb) {
            if (v < w) edges.emplace_back(v, w);
        }
    }
    return Graph::build(std::move(ids), edges);
}

inline std::map<Vertex, std::set<Vertex>> to_adjacency(const Graph& g) {
    std::map<Vertex, std::set<Vertex>> adj;
    for (std::size_t i = 0; i < g.order(); ++i) {
        auto nb = g.neighbors_at(i);
        adj[g.vertices()[i]] = std::set<Vertex>(nb.begin(), nb.end());
    }
    return adj;
}

inline int clique_dimension(const Graph& g) { return clique_complex(g).dimension(); }

} // namespace detail

// =============================================================================
// Subdivision and collapse
// =============================================================================

/// Removes e = (a,b) and adds a vertex x = max id + 1 joined to a, b and every vertex of
/// the dual of e.
inline SurgeryResult edge_subdivide(const Graph& g, Edge e, SurgeryOptions opts = {}) {
    e = make_edge(e.first, e.second);
    if (!g.adjacent(e.first, e.second)) {
        throw PreconditionError("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ") not in graph");
    }
    const Vertex x = g.next_id();
    auto dual = common_neighbors(g, VertexSubset{e.first, e.second});
    auto adj = detail::to_adjacency(g);
    adj[e.first].erase(e.second);
    adj[e.second].erase(e.first);
    adj[x] = {e.first, e.second};
    adj[e.first].insert(x);
    adj[e.second].insert(x);
    for (Vertex y : dual) {
        adj[x].insert(y);
        adj[y].insert(x);
    }
    SurgeryResult out{detail::from_adjacency(adj), {}};
    out.record.operation = "subdivide";
    out.record.edge = e;
    out.record.new_vertex = x;
    if (opts.track_parity) {
        out.record.dimension = detail::clique_dimension(g);
        out.record.parity_flips = detail::parity_changes(g, out.graph, out.record.dimension);
    }
    return out;
}

/// Identifies the endpoints of e; the merged vertex keeps the smaller id.
inline SurgeryResult edge_collapse(const Graph& g, Edge e, SurgeryOptions opts = {}) {
    e = make_edge(e.first, e.second);
    if (!g.adjacent(e.first, e.second)) {
        throw PreconditionError("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ") not in graph");
    }
    const Vertex keep = e.first, drop = e.second;
    auto adj = detail::to_adjacency(g);
    for (Vertex y : adj[drop]) {
        adj[y].erase(drop);
        if (y != keep) {
            adj[y].insert(keep);
            adj[keep].insert(y);
        }
    }
    adj.erase(drop);
    SurgeryResult out{detail::from_adjacency(adj), {}};
    out.record.operation = "collapse";
    out.record.edge = e;
    out.record.kept_vertex = keep;
    out.record.removed_vertex = drop;
    if (opts.track_parity) {
        out.record.dimension = detail::clique_dimension(g);
        out.record.parity_flips = detail::parity_changes(g, out.graph, out.record.dimension);
    }
    return out;
}

/// Re-applies a recorded subdivision or collapse.
inline Graph replay(const Graph& g, const SurgeryRecord& r) {
    SurgeryOptions quiet{false};
    if (r.operation == "subdivide") return edge_subdivide(g, r.edge, quiet).graph;
    if (r.operation == "collapse") return edge_collapse(g, r.edge, quiet).graph;
    throw PreconditionError("cannot replay operation '" + r.operation + "'");
}

// =============================================================================
// Irreducibility
// =============================================================================

struct CollapseCheck {
    Edge edge{};
    Answer stays_geometric = Answer::no; // budget_exceeded when undecided
};

/// Classifies every edge collapse of a geometric(d) graph. Each collapse is verified
/// from scratch.
inline std::vector<CollapseCheck> check_collapses(const Graph& g, int d, std::uint64_t budget = default_budget) {
    auto c = classify(g, budget);
    if (c.kind == GraphKind::unknown) throw BudgetExceeded("safe_collapse_candidates: input classification budget exhausted");
    if (!c.is_geometric(d)) {
        throw PreconditionError("safe_collapse_candidates: input is not geometric of dimension " + std::to_string(d));
    }
    std::vector<CollapseCheck> out;
    for (auto e : g.edges()) {
        auto collapsed = edge_collapse(g, e, SurgeryOptions{false}).graph;
        auto cc = classify(collapsed, budget);
        CollapseCheck chk{e, Answer::no};
        if (cc.kind == GraphKind::unknown) {
            chk.stays_geometric = Answer::budget_exceeded;
        } else if (cc.is_geometric(d)) {
            chk.stays_geometric = Answer::yes;
        }
        out.push_back(chk);
    }
    return out;
}

/// Edges whose collapse stays in the geometric class of dimension d.
inline std::vector<Edge> safe_collapse_candidates(const Graph& g, int d, std::uint64_t budget = default_budget) {
    std::vector<Edge> out;
    for (const auto& chk : check_collapses(g, d, budget)) {
        if (chk.stays_geometric == Answer::yes) out.push_back(chk.edge);
    }
    return out;
}

/// yes: no collapse stays geometric; no: some does; budget_exceeded: undecided edges remain.
inline Answer is_irreducible(const Graph& g, int d, std::uint64_t budget = default_budget) {
    bool undecided = false;
    for (const auto& chk : check_collapses(g, d, budget)) {
        if (chk.stays_geometric == Answer::yes) return Answer::no;
        if (chk.stays_geometric == Answer::budget_exceeded) undecided = true;
    }
    return undecided ? Answer::budget_exceeded : Answer::yes;
}

// =============================================================================
// Suspension and connected sum
// =============================================================================

/// Adds two non-adjacent vertices joined to everything.
inline Graph suspend(const Graph& g) {
    const Vertex n = g.next_id(), s = n + 1;
    auto ids = g.vertices();
    ids.push_back(n);
    ids.push_back(s);
    auto edges = g.edges();
    for (Vertex v : g.vertices()) {
        edges.emplace_back(v, n);
        edges.emplace_back(v, s);
    }
    return Graph::build(std::move(ids), edges);
}

/// Removes x from g1 and y from g2 and glues the two unit spheres along the first
/// isomorphism found. g2's remaining vertices get fresh ids above g1's.
inline Graph connected_sum(const Graph& g1, Vertex x, const Graph& g2, Vertex y) {
    auto s1 = unit_sphere(g1, x);
    auto s2 = unit_sphere(g2, y);
    auto cert = are_isomorphic(s2, s1);
    if (!cert) throw PreconditionError("connected_sum: unit spheres are not isomorphic");

    std::map<Vertex, Vertex> relabel;
    Vertex next = g1.next_id();
    for (Vertex v : g2.vertices()) {
        if (v == y) continue;
        relabel[v] = s2.contains(v) ? (*cert)(v) : next++;
    }
    std::vector<Vertex> ids;
    for (Vertex v : g1.vertices()) {
        if (v != x) ids.push_back(v);
    }
    for (auto [old_id, new_id] : relabel) {
        if (!s2.contains(old_id)) ids.push_back(new_id);
    }
    std::vector<Edge> edges;
    for (auto [a, b] : g1.edges()) {
        if (a != x && b != x) edges.push_back(make_edge(a, b));
    }
    for (auto [a, b] : g2.edges()) {
        if (a != y && b != y) edges.push_back(make_edge(relabel[a], relabel[b]));
    }
    return Graph::build(std::move(ids), edges);
}

// =============================================================================
// Degree-4 collapse
// =============================================================================

/// In a 2-sphere, removes a degree-4 vertex x whose radius-2 disc is a 2-ball and joins
/// the smallest neighbor a to its opposite c in S(x).
inline Graph degree4_collapse(const Graph& g, Vertex x, std::uint64_t budget = default_budget) {
    if (!g.contains(x)) throw GraphError("vertex " + std::to_string(x) + " not in graph");
    if (g.degree(x) != 4) {
        throw PreconditionError("degree4_collapse: vertex " + std::to_string(x) + " has degree " +
                                std::to_string(g.degree(x)));
    }
    Recognizer rec(budget);
    auto cls = rec.classify(g);
    if (!cls.is_sphere(2)) throw PreconditionError("degree4_collapse: input is not a 2-sphere");
    auto disc = rec.classify(ball_of_radius(g, x, 2));
    if (!(disc.kind == GraphKind::ball && disc.dimension == 2)) {
        throw PreconditionError("degree4_collapse: radius-2 disc at " + std::to_string(x) + " is not a 2-ball");
    }
    auto s = unit_sphere(g, x);
    const Vertex a = s.vertices().front();
    std::optional<Vertex> c;
    for (Vertex w : s.vertices()) {
        if (w != a && !s.adjacent(a, w)) c = w;
    }
    if (!c) throw StructuralError("degree4_collapse: unit sphere has no pair opposite to " + std::to_string(a));
    auto adj = detail::to_adjacency(g);
    for (Vertex w : adj[x]) adj[w].erase(x);
    adj.erase(x);
    adj[a].insert(*c);
    adj[*c].insert(a);
    auto out = detail::from_adjacency(adj);
    if (!rec.classify(out).is_sphere(2)) throw StructuralError("degree4_collapse: result is not a 2-sphere");
    return out;
}

} // namespace gsphere
