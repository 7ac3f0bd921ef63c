#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "complex.hpp"
#include "duality.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace gsphere {

// =============================================================================
// Eulerian criterion
// =============================================================================

struct CliqueDegree {
    Simplex clique;
    std::size_t degree = 0;
};

/// All (d-2)-cliques of odd degree. For d = 1 the only such clique is the empty one,
/// whose dual is the whole graph.
inline std::vector<CliqueDegree> eulerian_obstructions(const Graph& g, int d) {
    if (d < 1) throw PreconditionError("eulerian_obstructions: dimension must be at least 1");
    std::vector<CliqueDegree> out;
    if (d == 1) {
        if (g.order() % 2 != 0) out.push_back({Simplex{}, g.order()});
        return out;
    }
    auto c = clique_complex(g);
    if (c.dimension() != d) {
        throw PreconditionError("eulerian_obstructions: graph has clique dimension " + std::to_string(c.dimension()) +
                                ", expected " + std::to_string(d));
    }
    for (const auto& s : c.layer(d - 2)) {
        auto deg = common_neighbors(g, VertexSubset(s)).size();
        if (deg % 2 != 0) out.push_back({s, deg});
    }
    return out;
}

/// Connected once isolated vertices are ignored, and every degree even.
inline bool is_eulerian_graph(const Graph& g) {
    std::vector<Vertex> active;
    for (Vertex v : g.vertices()) {
        if (g.degree(v) % 2 != 0) return false;
        if (g.degree(v) > 0) active.push_back(v);
    }
    return is_connected(induced(g, VertexSubset(active)));
}

// =============================================================================
// Chain coloring
// =============================================================================

enum class ColoringOutcome { colored, obstruction, conflict };

inline const char* to_string(ColoringOutcome o) {
    switch (o) {
        case ColoringOutcome::colored: return "colored";
        case ColoringOutcome::obstruction: return "obstruction";
        case ColoringOutcome::conflict: return "conflict";
    }
    return "?";
}

/// Two propagation paths that disagree on one vertex.
struct ColoringConflict {
    Simplex from, to; // nerve edge crossed when the disagreement showed up
    Vertex vertex = 0;
    int existing = -1, forced = -1;
};

struct ColoringResult {
    ColoringOutcome outcome = ColoringOutcome::colored;
    int colors = 0;
    std::map<Vertex, int> assignment;
    std::vector<CliqueDegree> obstructions;
    std::optional<ColoringConflict> conflict;
};

inline bool is_proper_coloring(const Graph& g, const std::map<Vertex, int>& c) {
    for (auto [a, b] : g.edges()) {
        auto ia = c.find(a), ib = c.find(b);
        if (ia == c.end() || ib == c.end() || ia->second == ib->second) return false;
    }
    return true;
}

inline int color_count(const std::map<Vertex, int>& c) {
    int top = -1;
    for (const auto& [v, col] : c) top = std::max(top, col);
    return top + 1;
}

namespace detail {

inline ColoringResult color_cycle(const Graph& g) {
    if (!is_cycle_graph(g)) throw PreconditionError("chain_color: a 1-sphere must be a cycle");
    ColoringResult out;
    if (g.order() % 2 != 0) {
        out.outcome = ColoringOutcome::obstruction;
        out.obstructions.push_back({Simplex{}, g.order()});
        return out;
    }
    auto order = cycle_order(g);
    for (std::size_t i = 0; i < order.size(); ++i) out.assignment[order[i]] = static_cast<int>(i % 2);
    out.colors = 2;
    return out;
}

} // namespace detail

/// Colors the lexicographically least maximal simplex 0..d, then walks the nerve
/// breadth-first: crossing a shared face hands the color of the dropped vertex to the
/// new one. Stops at the first nerve edge where this disagrees with an earlier choice.
inline ColoringResult chain_color(const Graph& g, int d) {
    if (d < 1) throw PreconditionError("chain_color: dimension must be at least 1");
    if (d == 1) return detail::color_cycle(g);
    auto nv = nerve(g);
    for (const auto& s : nv.simplices) {
        if (static_cast<int>(s.size()) != d + 1) {
            throw PreconditionError("chain_color: maximal simplices are not all of dimension " + std::to_string(d));
        }
    }
    ColoringResult out;
    const std::size_t m = nv.simplices.size();
    std::vector<bool> seen(m, false);
    auto& color = out.assignment;
    for (std::size_t root = 0; root < m; ++root) {
        if (seen[root]) continue;
        // a fresh component: keep any colors already fixed, fill the rest in order
        {
            const auto& s = nv.simplices[root];
            std::vector<bool> used(static_cast<std::size_t>(d + 1), false);
            for (Vertex v : s) {
                if (color.count(v)) used[static_cast<std::size_t>(color[v])] = true;
            }
            int next = 0;
            for (Vertex v : s) {
                if (color.count(v)) continue;
                while (used[static_cast<std::size_t>(next)]) ++next;
                color[v] = next;
                used[static_cast<std::size_t>(next)] = true;
            }
        }
        seen[root] = true;
        std::queue<std::size_t> queue;
        queue.push(root);
        while (!queue.empty()) {
            auto u = queue.front();
            queue.pop();
            const auto& su = nv.simplices[u];
            for (Vertex w : nv.graph.neighbors_at(u)) {
                const auto& sw = nv.simplices[w];
                Vertex dropped = 0, added = 0;
                for (Vertex v : su) {
                    if (!std::binary_search(sw.begin(), sw.end(), v)) dropped = v;
                }
                for (Vertex v : sw) {
                    if (!std::binary_search(su.begin(), su.end(), v)) added = v;
                }
                const int forced = color.at(dropped);
                auto it = color.find(added);
                if (it != color.end() && it->second != forced) {
                    out.outcome = ColoringOutcome::conflict;
                    out.conflict = ColoringConflict{su, sw, added, it->second, forced};
                    out.colors = color_count(color);
                    return out;
                }
                color[added] = forced;
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push(w);
                }
            }
        }
    }
    for (Vertex v : g.vertices()) {
        if (!color.count(v)) throw PreconditionError("chain_color: vertex " + std::to_string(v) + " lies in no maximal simplex");
    }
    if (!is_proper_coloring(g, color)) throw StructuralError("chain_color: propagated coloring is not proper");
    out.colors = color_count(color);
    return out;
}

// =============================================================================
// Orientation classes
// =============================================================================

struct SignPartition {
    bool ok = false;
    std::vector<int> sign;          // per nerve node (index into simplices)
    std::vector<Simplex> simplices;
    std::size_t positive = 0, negative = 0;
    ColoringResult coloring;        // the failed coloring when !ok
    std::optional<Edge> bad_edge;   // nerve edge with equal signs, if any
};

/// Orients the maximal simplices coherently along a breadth-first walk of the nerve
/// (crossing a face swaps the new vertex into the dropped one's slot, then transposes
/// the first two entries) and splits them by the parity of their color tuples.
inline SignPartition nerve_sign_partition(const Graph& g, int d) {
    SignPartition out;
    out.coloring = chain_color(g, d);
    if (out.coloring.outcome != ColoringOutcome::colored) return out;
    auto nv = nerve(g);
    out.simplices = nv.simplices;
    const std::size_t m = nv.simplices.size();
    std::vector<std::optional<Simplex>> oriented(m);
    for (std::size_t root = 0; root < m; ++root) {
        if (oriented[root]) continue;
        oriented[root] = nv.simplices[root];
        std::queue<std::size_t> queue;
        queue.push(root);
        while (!queue.empty()) {
            auto u = queue.front();
            queue.pop();
            for (Vertex w : nv.graph.neighbors_at(u)) {
                if (oriented[w]) continue;
                const auto& sw = nv.simplices[w];
                Simplex next = *oriented[u];
                for (auto& v : next) {
                    if (!std::binary_search(sw.begin(), sw.end(), v)) {
                        for (Vertex a : sw) {
                            if (std::find(next.begin(), next.end(), a) == next.end()) v = a;
                        }
                        break;
                    }
                }
                if (next.size() >= 2) std::swap(next[0], next[1]);
                oriented[w] = std::move(next);
                queue.push(w);
            }
        }
    }
    for (const auto& s : oriented) {
        int inversions = 0;
        for (std::size_t i = 0; i < s->size(); ++i) {
            for (std::size_t j = i + 1; j < s->size(); ++j) {
                inversions += out.coloring.assignment.at((*s)[i]) > out.coloring.assignment.at((*s)[j]);
            }
        }
        out.sign.push_back(inversions % 2);
        (inversions % 2 ? out.negative : out.positive) += 1;
    }
    for (auto [a, b] : nv.graph.edges()) {
        if (out.sign[a] == out.sign[b]) {
            out.bad_edge = Edge{a, b};
            return out;
        }
    }
    out.ok = true;
    return out;
}

// =============================================================================
// Exact chromatic number
// =============================================================================

struct ChromaticOptions {
    std::size_t cap = 150;                  // larger graphs only get the bracket from clique and greedy
    std::uint64_t node_budget = 20'000'000; // search nodes over all color counts
    std::optional<int> lower_bound_hint;    // externally proven lower bound
    std::string hint_provenance;
};

struct ChromaticResult {
    int lower = 0, upper = 0;
    bool exact = false;
    std::map<Vertex, int> coloring; // uses `upper` colors
    std::vector<std::string> provenance;
    std::uint64_t nodes = 0;
};

namespace detail {

class DsaturSearch {
public:
    DsaturSearch(const Graph& g, std::uint64_t budget) : g_(g), n_(g.order()), budget_(budget) {
        adj_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (Vertex w : g.neighbors_at(i)) adj_[i].push_back(static_cast<std::uint32_t>(g.index_of(w)));
        }
    }

    /// Greedy DSATUR: a proper coloring, no backtracking.
    std::vector<int> greedy() {
        reset(n_);
        for (std::size_t step = 0; step < n_; ++step) {
            auto v = pick();
            int c = 0;
            while (count_[v][static_cast<std::size_t>(c)] > 0) ++c;
            assign(v, c);
        }
        return color_;
    }

    /// yes: colored with k colors; no: impossible; budget_exceeded.
    Answer try_colors(int k) {
        reset(static_cast<std::size_t>(k));
        hit_ = false;
        bool found = descend(0, k, 0);
        if (found) return Answer::yes;
        return hit_ ? Answer::budget_exceeded : Answer::no;
    }

    const std::vector<int>& coloring() const { return color_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void reset(std::size_t colors) {
        color_.assign(n_, -1);
        count_.assign(n_, std::vector<int>(std::max<std::size_t>(colors, n_ + 1), 0));
        sat_.assign(n_, 0);
    }

    void assign(std::size_t v, int c) {
        color_[v] = c;
        for (auto w : adj_[v]) {
            if (count_[w][static_cast<std::size_t>(c)]++ == 0) ++sat_[w];
        }
    }

    void unassign(std::size_t v) {
        int c = color_[v];
        color_[v] = -1;
        for (auto w : adj_[v]) {
            if (--count_[w][static_cast<std::size_t>(c)] == 0) --sat_[w];
        }
    }

    // most saturated uncolored vertex, ties by uncolored degree, then index
    std::size_t pick() const {
        std::size_t best = n_;
        int best_sat = -1, best_deg = -1;
        for (std::size_t v = 0; v < n_; ++v) {
            if (color_[v] != -1) continue;
            int deg = 0;
            for (auto w : adj_[v]) deg += color_[w] == -1;
            if (sat_[v] > best_sat || (sat_[v] == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat_[v];
                best_deg = deg;
            }
        }
        return best;
    }

    bool descend(std::size_t colored, int k, int used) {
        if (colored == n_) return true;
        if (++nodes_ > budget_) {
            hit_ = true;
            return false;
        }
        auto v = pick();
        if (sat_[v] >= k) return false;
        // new colors are interchangeable, so only the first unused one is tried
        for (int c = 0; c < std::min(k, used + 1); ++c) {
            if (count_[v][static_cast<std::size_t>(c)] > 0) continue;
            assign(v, c);
            if (descend(colored + 1, k, std::max(used, c + 1))) return true;
            unassign(v);
            if (hit_) return false;
        }
        return false;
    }

    const Graph& g_;
    std::size_t n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool hit_ = false;
    std::vector<std::vector<std::uint32_t>> adj_;
    std::vector<int> color_;
    std::vector<std::vector<int>> count_;
    std::vector<int> sat_;
};

} // namespace detail

/// Branch and bound between a lower bound (largest clique, or an accepted hint) and
/// a greedy upper bound. An exhausted budget leaves a bracket.
inline ChromaticResult chromatic_number(const Graph& g, ChromaticOptions opts = {}) {
    ChromaticResult out;
    if (g.empty()) {
        out.exact = true;
        out.provenance.push_back("empty graph");
        return out;
    }
    std::size_t clique = 0;
    for (const auto& m : maximal_cliques(g)) clique = std::max(clique, m.size());
    out.lower = static_cast<int>(clique);
    out.provenance.push_back("lower bound " + std::to_string(clique) + " from largest clique");
    if (opts.lower_bound_hint && *opts.lower_bound_hint > out.lower) {
        out.lower = *opts.lower_bound_hint;
        out.provenance.push_back("lower bound " + std::to_string(out.lower) + " from hint: " +
                                 (opts.hint_provenance.empty() ? std::string("caller supplied") : opts.hint_provenance));
    }

    detail::DsaturSearch search(g, opts.node_budget);
    auto to_map = [&](const std::vector<int>& c) {
        std::map<Vertex, int> m;
        for (std::size_t i = 0; i < c.size(); ++i) m[g.vertices()[i]] = c[i];
        return m;
    };
    out.coloring = to_map(search.greedy());
    out.upper = color_count(out.coloring);
    out.provenance.push_back("upper bound " + std::to_string(out.upper) + " from greedy coloring");
    if (out.lower > out.upper) throw PreconditionError("chromatic_number: lower bound hint exceeds a valid coloring");

    if (g.order() > opts.cap) {
        out.provenance.push_back("exact search skipped: " + std::to_string(g.order()) + " vertices above cap");
        out.exact = out.lower == out.upper;
        return out;
    }
    while (out.lower < out.upper) {
        auto answer = search.try_colors(out.upper - 1);
        if (answer == Answer::yes) {
            out.coloring = to_map(search.coloring());
            out.upper = color_count(out.coloring);
            out.provenance.push_back("coloring with " + std::to_string(out.upper) + " colors found by search");
        } else if (answer == Answer::no) {
            out.lower = out.upper;
            out.provenance.push_back("no coloring with " + std::to_string(out.upper - 1) + " colors (exhaustive)");
        } else {
            out.provenance.push_back("search budget exhausted at " + std::to_string(out.upper - 1) + " colors");
            break;
        }
    }
    out.nodes = search.nodes();
    out.exact = out.lower == out.upper;
    if (!is_proper_coloring(g, out.coloring)) throw StructuralError("chromatic_number: witness coloring is not proper");
    return out;
}

} // namespace gsphere
