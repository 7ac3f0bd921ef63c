#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "random.hpp"
#include "recognition.hpp"
#include "surgery.hpp"

namespace gsphere {

// =============================================================================
// Named families
// =============================================================================

enum class Family { cycle, path, complete, wheel, octahedron, icosahedron, cross_polytope, six_hundred_cell, stellated_cube };

struct GeneratorSpec {
    Family family = Family::octahedron;
    int param = 0; // n for cycle/path/complete/wheel, d for cross_polytope
};

inline const char* to_string(Family f) {
    switch (f) {
        case Family::cycle: return "cycle";
        case Family::path: return "path";
        case Family::complete: return "complete";
        case Family::wheel: return "wheel";
        case Family::octahedron: return "octahedron";
        case Family::icosahedron: return "icosahedron";
        case Family::cross_polytope: return "cross_polytope";
        case Family::six_hundred_cell: return "six_hundred_cell";
        case Family::stellated_cube: return "stellated_cube";
    }
    return "?";
}

inline std::optional<Family> parse_family(std::string_view name) {
    for (auto f : {Family::cycle, Family::path, Family::complete, Family::wheel, Family::octahedron,
                   Family::icosahedron, Family::cross_polytope, Family::six_hundred_cell, Family::stellated_cube}) {
        if (name == to_string(f)) return f;
    }
    return std::nullopt;
}

inline Graph cycle(int n) {
    if (n < 3) throw PreconditionError("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)));
    return Graph::on_range(static_cast<Vertex>(n), edges);
}

inline Graph path(int n) {
    if (n < 1) throw PreconditionError("path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
    return Graph::on_range(static_cast<Vertex>(n), edges);
}

inline Graph complete(int n) {
    if (n < 1) throw PreconditionError("complete needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
    return Graph::on_range(static_cast<Vertex>(n), edges);
}

/// Rim C_n on 0..n-1 plus center n.
inline Graph wheel(int n) {
    if (n < 3) throw PreconditionError("wheel needs n >= 3");
    auto edges = cycle(n).edges();
    for (int i = 0; i < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(n));
    return Graph::on_range(static_cast<Vertex>(n + 1), edges);
}

/// 2(d+1) vertices; i and i + d + 1 are antipodes, every other pair is an edge.
inline Graph cross_polytope(int d) {
    if (d < 0) throw PreconditionError("cross_polytope needs d >= 0");
    const int n = 2 * (d + 1);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (j - i != d + 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    return Graph::on_range(static_cast<Vertex>(n), edges);
}

inline Graph octahedron() { return cross_polytope(2); }

/// Vertex 0 on top, upper ring 1..5, lower ring 6..10, vertex 11 at the bottom.
/// Upper i joins lower i and lower i+1 (indices mod 5).
inline Graph icosahedron() {
    static const std::array<Edge, 30> table = {{
        {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
        {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5},
        {1, 6}, {1, 7}, {2, 7}, {2, 8}, {3, 8}, {3, 9}, {4, 9}, {4, 10}, {5, 10}, {5, 6},
        {6, 7}, {7, 8}, {8, 9}, {9, 10}, {6, 10},
        {6, 11}, {7, 11}, {8, 11}, {9, 11}, {10, 11},
    }};
    return Graph::on_range(12, std::vector<Edge>(table.begin(), table.end()));
}

/// Cube corners 0..7 (bit i = coordinate i) and face centers 8..13, center 8 + 2i + b
/// sitting on the face where coordinate i equals b.
inline Graph stellated_cube() {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < 8; ++a) {
        for (int i = 0; i < 3; ++i) {
            Vertex b = a ^ (1u << i);
            if (a < b) edges.emplace_back(a, b);
            Vertex center = 8 + 2 * static_cast<Vertex>(i) + ((a >> i) & 1u);
            edges.emplace_back(a, center);
        }
    }
    return Graph::on_range(14, edges);
}

namespace detail {

// a + b*sqrt(5) with integer coefficients.
struct QuadraticInt {
    long long a = 0, b = 0;
    friend QuadraticInt operator-(QuadraticInt x, QuadraticInt y) { return {x.a - y.a, x.b - y.b}; }
    friend QuadraticInt operator+(QuadraticInt x, QuadraticInt y) { return {x.a + y.a, x.b + y.b}; }
    friend QuadraticInt operator*(QuadraticInt x, QuadraticInt y) {
        return {x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    int sign() const {
        auto sgn = [](long long v) { return (v > 0) - (v < 0); };
        int sa = sgn(a), sb = sgn(b);
        if (sa == 0) return sb;
        if (sb == 0 || sa == sb) return sa;
        // opposite signs: compare a^2 with 5 b^2
        long long lhs = a * a, rhs = 5 * b * b;
        return lhs > rhs ? sa : (lhs < rhs ? sb : 0);
    }
    friend bool operator==(QuadraticInt, QuadraticInt) = default;
};

} // namespace detail

/// The 120 unit icosians scaled by 4, with edges at the minimal nonzero distance.
/// Coordinates live in Z[sqrt 5]: 4, 2, 2*phi = 1 + sqrt5, 2/phi = -1 + sqrt5.
inline Graph six_hundred_cell() {
    using Q = detail::QuadraticInt;
    using Point = std::array<Q, 4>;
    std::vector<Point> pts;
    for (int axis = 0; axis < 4; ++axis) {
        for (int s : {1, -1}) {
            Point p{};
            p[static_cast<std::size_t>(axis)] = Q{4 * s, 0};
            pts.push_back(p);
        }
    }
    for (int mask = 0; mask < 16; ++mask) {
        Point p{};
        for (int i = 0; i < 4; ++i) p[static_cast<std::size_t>(i)] = Q{(mask >> i) & 1 ? -2 : 2, 0};
        pts.push_back(p);
    }
    const std::array<Q, 4> base = {Q{1, 1}, Q{2, 0}, Q{-1, 1}, Q{0, 0}};
    std::array<int, 4> perm = {0, 1, 2, 3};
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
        }
        if (inversions % 2 != 0) continue;
        for (int mask = 0; mask < 8; ++mask) {
            Point p{};
            for (int i = 0; i < 4; ++i) {
                Q v = base[static_cast<std::size_t>(i)];
                if (i < 3 && ((mask >> i) & 1)) v = Q{-v.a, -v.b};
                p[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = v;
            }
            pts.push_back(p);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto dist2 = [&](const Point& x, const Point& y) {
        Q s{};
        for (std::size_t i = 0; i < 4; ++i) {
            Q d = x[i] - y[i];
            s = s + d * d;
        }
        return s;
    };
    std::optional<Q> minimal;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Q d = dist2(pts[i], pts[j]);
            if (!minimal || (d - *minimal).sign() < 0) minimal = d;
        }
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (dist2(pts[i], pts[j]) == *minimal) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    return Graph::on_range(static_cast<Vertex>(pts.size()), edges);
}

inline Graph generate(const GeneratorSpec& spec) {
    switch (spec.family) {
        case Family::cycle: return cycle(spec.param);
        case Family::path: return path(spec.param);
        case Family::complete: return complete(spec.param);
        case Family::wheel: return wheel(spec.param);
        case Family::octahedron: return octahedron();
        case Family::icosahedron: return icosahedron();
        case Family::cross_polytope: return cross_polytope(spec.param);
        case Family::six_hundred_cell: return six_hundred_cell();
        case Family::stellated_cube: return stellated_cube();
    }
    throw PreconditionError("unknown generator family");
}

// =============================================================================
// Refinement families
// =============================================================================

/// One new vertex per edge (ids above the originals, in edge order); each triangle is
/// replaced by four. Input must be a 2-sphere.
inline Graph loop_subdivide(const Graph& g, std::uint64_t budget = default_budget) {
    auto c = classify(g, budget);
    if (c.kind == GraphKind::unknown) throw BudgetExceeded("loop_subdivide: classification budget exhausted");
    if (!c.is_sphere(2)) throw PreconditionError("loop_subdivide: input is not a 2-sphere");
    auto edges = g.edges();
    const Vertex base = g.next_id();
    auto mid = [&](Vertex a, Vertex b) {
        auto e = make_edge(a, b);
        return base + static_cast<Vertex>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
    };
    std::vector<Vertex> ids = g.vertices();
    std::vector<Edge> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        ids.push_back(base + static_cast<Vertex>(i));
        out.emplace_back(edges[i].first, base + static_cast<Vertex>(i));
        out.emplace_back(edges[i].second, base + static_cast<Vertex>(i));
    }
    const auto complex = clique_complex(g);
    for (const auto& t : complex.layer(2)) {
        Vertex ab = mid(t[0], t[1]), bc = mid(t[1], t[2]), ca = mid(t[0], t[2]);
        out.push_back(make_edge(ab, bc));
        out.push_back(make_edge(bc, ca));
        out.push_back(make_edge(ab, ca));
    }
    return Graph::build(std::move(ids), out);
}

enum class RefineMode {
    single, // one subdivision per step
    paired  // subdivide (a,b), then (a,x) with x the new vertex: parity flips cancel
};

struct RefineResult {
    Graph graph;
    std::vector<SurgeryRecord> records;
};

struct RefineOptions {
    RefineMode mode = RefineMode::single;
    bool verify_input = true;  // classify the input as a sphere first
    bool track_parity = false; // fill parity_flips in the records
    std::uint64_t budget = default_budget;
};

/// `steps` edge subdivisions at edges drawn with Lcg64(seed).below(edge count) from the
/// sorted edge list of the current graph.
inline RefineResult random_refine(const Graph& g, std::size_t steps, std::uint64_t seed, RefineOptions opts = {}) {
    if (opts.verify_input) {
        auto c = classify(g, opts.budget);
        if (c.kind == GraphKind::unknown) throw BudgetExceeded("random_refine: classification budget exhausted");
        if (c.kind != GraphKind::sphere) throw PreconditionError("random_refine: input is not a sphere");
    }
    Lcg64 rng(seed);
    RefineResult out{g, {}};
    SurgeryOptions so{opts.track_parity};
    for (std::size_t step = 0; step < steps; ++step) {
        auto edges = out.graph.edges();
        if (edges.empty()) throw PreconditionError("random_refine: graph has no edges");
        auto e = edges[rng.below(static_cast<std::uint32_t>(edges.size()))];
        auto first = edge_subdivide(out.graph, e, so);
        out.graph = std::move(first.graph);
        out.records.push_back(std::move(first.record));
        if (opts.mode == RefineMode::paired) {
            Vertex x = *out.records.back().new_vertex;
            auto second = edge_subdivide(out.graph, make_edge(e.first, x), so);
            second.record.note = "paired subdivision: second edge joins the first endpoint to the new vertex";
            out.graph = std::move(second.graph);
            out.records.push_back(std::move(second.record));
        }
    }
    return out;
}

} // namespace gsphere
