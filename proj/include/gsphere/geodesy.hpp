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
#include "rational.hpp"
#include "recognition.hpp"

namespace gsphere {

// =============================================================================
// Involutions
// =============================================================================

inline bool is_fixed_point_free_involution(const VertexMap& m) {
    for (Vertex v : m.source()) {
        Vertex w = m(v);
        if (w == v || m(w) != v) return false;
    }
    return true;
}

/// Automorphisms that are involutions without fixed vertices, in automorphism order.
inline std::vector<VertexMap> fixed_point_free_involutions(const Graph& g, AutomorphismLimits limits = {}) {
    std::vector<VertexMap> out;
    for (auto& m : automorphisms(g, limits)) {
        if (is_fixed_point_free_involution(m)) out.push_back(std::move(m));
    }
    return out;
}

/// The antipodal rotation on an even cycle; otherwise the first fixed-point-free
/// involutive automorphism.
inline std::optional<VertexMap> canonical_involution(const Graph& s, AutomorphismLimits limits = {}) {
    if (is_cycle_graph(s)) {
        if (s.order() % 2 != 0) return std::nullopt;
        auto order = cycle_order(s);
        std::map<Vertex, Vertex> m;
        for (std::size_t i = 0; i < order.size(); ++i) m[order[i]] = order[(i + order.size() / 2) % order.size()];
        return VertexMap(std::move(m));
    }
    auto all = fixed_point_free_involutions(s, limits);
    if (all.empty()) return std::nullopt;
    return all.front();
}

// =============================================================================
// Projective structure and geodesic flow
// =============================================================================

struct DirectedEdge {
    Vertex tail = 0, head = 0;
    friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
    friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

struct ProjectiveStructure {
    Graph host;
    std::map<Vertex, VertexMap> involution; // T_x on the vertices of S(x)

    Vertex apply(Vertex x, Vertex y) const { return involution.at(x)(y); }
};

struct ProjectiveOutcome {
    std::optional<ProjectiveStructure> structure;
    std::optional<Vertex> failing_vertex; // first vertex whose unit sphere has no such involution
};

inline ProjectiveOutcome projective_structure(const Graph& g, AutomorphismLimits limits = {}) {
    ProjectiveOutcome out;
    ProjectiveStructure p{g, {}};
    for (Vertex x : g.vertices()) {
        auto t = canonical_involution(unit_sphere(g, x), limits);
        if (!t) {
            out.failing_vertex = x;
            return out;
        }
        p.involution.emplace(x, std::move(*t));
    }
    out.structure = std::move(p);
    return out;
}

/// (y, x) -> (x, T_x(y)).
inline DirectedEdge geodesic_step(const ProjectiveStructure& p, DirectedEdge e) {
    if (!p.host.adjacent(e.tail, e.head)) {
        throw PreconditionError("(" + std::to_string(e.tail) + "," + std::to_string(e.head) + ") is not an edge");
    }
    return {e.head, p.apply(e.head, e.tail)};
}

struct Trajectory {
    std::vector<DirectedEdge> edges; // e0 .. en
    std::size_t period = 0;          // return time of e0; the flow is a bijection, so it always closes
};

inline std::size_t orbit_period(const ProjectiveStructure& p, DirectedEdge e0) {
    auto e = e0;
    const std::size_t limit = 2 * p.host.size();
    for (std::size_t t = 1; t <= limit; ++t) {
        e = geodesic_step(p, e);
        if (e == e0) return t;
    }
    throw StructuralError("geodesic flow is not a bijection on directed edges");
}

inline Trajectory trajectory(const ProjectiveStructure& p, DirectedEdge e0, std::size_t n) {
    Trajectory out;
    out.edges.push_back(e0);
    auto e = e0;
    for (std::size_t i = 0; i < n; ++i) {
        e = geodesic_step(p, e);
        out.edges.push_back(e);
    }
    out.period = orbit_period(p, e0);
    return out;
}

/// Vertices on the closed geodesics leaving x.
inline VertexSubset exponential_reach(const ProjectiveStructure& p, Vertex x) {
    if (!p.host.contains(x)) throw GraphError("vertex " + std::to_string(x) + " not in graph");
    std::set<Vertex> seen{x};
    for (Vertex y : p.host.neighbors(x)) {
        DirectedEdge e0{x, y}, e = e0;
        do {
            seen.insert(e.head);
            e = geodesic_step(p, e);
        } while (e != e0);
    }
    return VertexSubset(std::vector<Vertex>(seen.begin(), seen.end()));
}

/// Synchronous wavefront from x. At time t a vertex joins the caustic when it is first
/// reached at t, by at least two trajectories that have not yet passed through the
/// caustic. A trajectory stops once its head lies in the caustic.
inline VertexSubset primary_caustic(const ProjectiveStructure& p, Vertex x) {
    if (!p.host.contains(x)) throw GraphError("vertex " + std::to_string(x) + " not in graph");
    std::vector<DirectedEdge> front;
    for (Vertex y : p.host.neighbors(x)) front.push_back({x, y});
    std::vector<bool> alive(front.size(), true);
    std::set<Vertex> reached{x}, caustic;
    const std::size_t horizon = 2 * p.host.size();
    for (std::size_t t = 1; t <= horizon; ++t) {
        if (t > 1) {
            for (std::size_t i = 0; i < front.size(); ++i) {
                if (alive[i]) front[i] = geodesic_step(p, front[i]);
            }
        }
        std::map<Vertex, std::size_t> hits;
        for (std::size_t i = 0; i < front.size(); ++i) {
            if (alive[i]) ++hits[front[i].head];
        }
        if (hits.empty()) break;
        for (auto [v, count] : hits) {
            if (count >= 2 && !reached.count(v)) caustic.insert(v);
        }
        for (auto [v, count] : hits) reached.insert(v);
        for (std::size_t i = 0; i < front.size(); ++i) {
            if (alive[i] && caustic.count(front[i].head)) alive[i] = false;
        }
    }
    return VertexSubset(std::vector<Vertex>(caustic.begin(), caustic.end()));
}

// =============================================================================
// Quotients
// =============================================================================

struct QuotientResult {
    Graph graph;            // one vertex per orbit, named by its smaller member
    VertexSubset boundary;  // fixed vertices
};

inline QuotientResult quotient_by_involution(const Graph& g, const VertexMap& t) {
    if (t.source() != g.vertices()) throw PreconditionError("quotient: map domain differs from the vertex set");
    for (Vertex v : g.vertices()) {
        if (t(t(v)) != v) throw PreconditionError("quotient: map is not an involution");
    }
    for (auto [a, b] : g.edges()) {
        if (!g.adjacent(t(a), t(b))) throw PreconditionError("quotient: map is not an automorphism");
    }
    auto rep = [&](Vertex v) { return std::min(v, t(v)); };
    std::vector<Vertex> ids, fixed;
    for (Vertex v : g.vertices()) {
        if (rep(v) == v) ids.push_back(v);
        if (t(v) == v) fixed.push_back(v);
    }
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges()) {
        if (rep(a) != rep(b)) edges.push_back(make_edge(rep(a), rep(b)));
    }
    return {Graph::build(std::move(ids), edges), VertexSubset(std::move(fixed))};
}

// =============================================================================
// Curvature
// =============================================================================

/// K = 1 + sum_{k>=0} (-1)^(k+1) V_k / (k+2).
inline Rational curvature_from_local_volumes(const std::vector<std::uint64_t>& v) {
    Rational k = 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational term(BigInt(v[i]), BigInt(i + 2));
        k += (i % 2 == 0) ? -term : term;
    }
    return k;
}

inline Rational curvature(const Graph& g, Vertex x) {
    if (!g.contains(x)) throw GraphError("vertex " + std::to_string(x) + " not in graph");
    return curvature_from_local_volumes(volumes(unit_sphere(g, x)));
}

struct GaussBonnet {
    Rational total;
    std::int64_t euler_characteristic = 0;
    bool matches = false;
};

inline GaussBonnet gauss_bonnet_total(const Graph& g) {
    GaussBonnet out;
    for (Vertex x : g.vertices()) out.total += curvature(g, x);
    out.euler_characteristic = euler_characteristic(g);
    out.matches = out.total == Rational(out.euler_characteristic);
    return out;
}

struct SecondOrderCurvature {
    std::int64_t value = 0;         // 2|S_1(x)| - |S_2(x)|
    bool second_sphere_is_circle = false;
};

inline SecondOrderCurvature second_order_curvature(const Graph& g, Vertex x) {
    if (!g.contains(x)) throw GraphError("vertex " + std::to_string(x) + " not in graph");
    auto s2 = sphere_of_radius(g, x, 2);
    return {2 * static_cast<std::int64_t>(g.degree(x)) - static_cast<std::int64_t>(s2.order()), is_cycle_graph(s2)};
}

struct CurvatureReport {
    std::map<Vertex, Rational> curvature;
    Rational total;
    std::int64_t euler_characteristic = 0;
    std::map<Vertex, std::int64_t> second_order;
    std::int64_t second_order_total = 0;
    std::vector<Vertex> non_circle; // vertices whose second sphere is not a cycle
};

inline CurvatureReport curvature_report(const Graph& g) {
    CurvatureReport r;
    for (Vertex x : g.vertices()) {
        auto k = curvature(g, x);
        r.total += k;
        r.curvature.emplace(x, std::move(k));
        auto k2 = second_order_curvature(g, x);
        r.second_order[x] = k2.value;
        r.second_order_total += k2.value;
        if (!k2.second_sphere_is_circle) r.non_circle.push_back(x);
    }
    r.euler_characteristic = euler_characteristic(g);
    return r;
}

// =============================================================================
// Weak projectivity
// =============================================================================

struct WeakProjectivity {
    bool holds = false;
    std::optional<Vertex> failing_vertex;
    std::map<Vertex, VertexMap> reflection; // chosen involution per vertex when it holds
};

/// Every unit sphere S(x) has an involutive automorphism whose fixed vertices induce
/// a (d-2)-sphere in S(x). For d = 1 the fixed set is empty, so this is projectivity.
inline WeakProjectivity is_weakly_projective(const Graph& g, int d, std::uint64_t budget = default_budget,
                                             AutomorphismLimits limits = {}) {
    WeakProjectivity out;
    Recognizer rec(budget);
    for (Vertex x : g.vertices()) {
        auto s = unit_sphere(g, x);
        std::optional<VertexMap> pick;
        for (const auto& m : automorphisms(s, limits)) {
            if (m.is_identity()) continue;
            bool involutive = true;
            std::vector<Vertex> fixed;
            for (Vertex v : s.vertices()) {
                if (m(m(v)) != v) involutive = false;
                if (m(v) == v) fixed.push_back(v);
            }
            if (!involutive) continue;
            auto c = rec.classify(induced(s, VertexSubset(std::move(fixed))));
            if (c.kind == GraphKind::unknown) throw BudgetExceeded("is_weakly_projective: classification budget exhausted");
            if (c.is_sphere(d - 2)) {
                pick = m;
                break;
            }
        }
        if (!pick) {
            out.failing_vertex = x;
            out.reflection.clear();
            return out;
        }
        out.reflection.emplace(x, std::move(*pick));
    }
    out.holds = true;
    return out;
}

} // namespace gsphere
