#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace gsphere {

namespace detail {

// Graph on indices 0..n-1 mirroring the positions of Graph::vertices().
struct IndexGraph {
    std::size_t n = 0;
    std::vector<std::vector<std::uint32_t>> adj;
    std::vector<std::uint8_t> matrix;

    explicit IndexGraph(const Graph& g) : n(g.order()), adj(n), matrix(n * n, 0) {
        for (std::size_t i = 0; i < n; ++i) {
            for (Vertex w : g.neighbors_at(i)) {
                auto j = static_cast<std::uint32_t>(g.index_of(w));
                adj[i].push_back(j);
                matrix[i * n + j] = 1;
            }
        }
    }
    bool has_edge(std::size_t a, std::size_t b) const { return matrix[a * n + b] != 0; }
};

// Ordered partition of 0..n-1. Cell order is label-invariant.
struct Partition {
    std::vector<std::vector<std::uint32_t>> cells;
    std::vector<std::uint32_t> cell_of;

    bool discrete() const { return cells.size() == cell_of.size(); }

    std::optional<std::size_t> first_nonsingleton() const {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].size() > 1) return c;
        }
        return std::nullopt;
    }

    static Partition unit(std::size_t n) {
        Partition p;
        p.cell_of.assign(n, 0);
        if (n > 0) {
            p.cells.emplace_back(n);
            std::iota(p.cells[0].begin(), p.cells[0].end(), 0u);
        }
        return p;
    }

    Partition individualize(std::size_t cell, std::uint32_t v) const {
        Partition p;
        p.cell_of.resize(cell_of.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c == cell) {
                p.cells.push_back({v});
                std::vector<std::uint32_t> rest;
                for (auto w : cells[c]) {
                    if (w != v) rest.push_back(w);
                }
                p.cells.push_back(std::move(rest));
            } else {
                p.cells.push_back(cells[c]);
            }
        }
        for (std::uint32_t c = 0; c < p.cells.size(); ++c) {
            for (auto w : p.cells[c]) p.cell_of[w] = c;
        }
        return p;
    }
};

// Refines to the coarsest equitable partition below `p`. Cells split by the multiset
// of neighbor-cell indices; new cells are ordered by that signature. The trace records
// every split so that two refinements can be compared for compatibility.
inline void refine(const IndexGraph& g, Partition& p, std::vector<std::uint32_t>* trace) {
    std::vector<std::vector<std::uint32_t>> sig(g.n);
    for (;;) {
        bool split = false;
        std::vector<std::vector<std::uint32_t>> next;
        next.reserve(p.cells.size());
        for (std::size_t c = 0; c < p.cells.size(); ++c) {
            const auto& cell = p.cells[c];
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            for (auto v : cell) {
                auto& s = sig[v];
                s.clear();
                for (auto w : g.adj[v]) s.push_back(p.cell_of[w]);
                std::sort(s.begin(), s.end());
            }
            std::vector<std::uint32_t> ordered = cell;
            std::stable_sort(ordered.begin(), ordered.end(),
                             [&](std::uint32_t a, std::uint32_t b) { return sig[a] < sig[b]; });
            std::size_t groups_before = next.size();
            for (std::size_t i = 0; i < ordered.size();) {
                std::size_t j = i;
                while (j < ordered.size() && sig[ordered[j]] == sig[ordered[i]]) ++j;
                std::vector<std::uint32_t> group(ordered.begin() + static_cast<std::ptrdiff_t>(i),
                                                 ordered.begin() + static_cast<std::ptrdiff_t>(j));
                std::sort(group.begin(), group.end());
                if (trace) {
                    trace->push_back(static_cast<std::uint32_t>(c));
                    trace->push_back(static_cast<std::uint32_t>(group.size()));
                    trace->push_back(static_cast<std::uint32_t>(sig[ordered[i]].size()));
                    trace->insert(trace->end(), sig[ordered[i]].begin(), sig[ordered[i]].end());
                }
                next.push_back(std::move(group));
                i = j;
            }
            if (next.size() - groups_before > 1) split = true;
        }
        p.cells = std::move(next);
        for (std::uint32_t c = 0; c < p.cells.size(); ++c) {
            for (auto w : p.cells[c]) p.cell_of[w] = c;
        }
        if (!split) return;
        if (trace) trace->push_back(0xFFFFFFFFu);
    }
}

// Certificate of a discrete partition: n followed by the sorted relabeled edge list.
inline std::vector<std::uint32_t> leaf_certificate(const IndexGraph& g, const Partition& p) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::size_t v = 0; v < g.n; ++v) {
        for (auto w : g.adj[v]) {
            auto a = p.cell_of[v], b = p.cell_of[w];
            if (a < b) edges.emplace_back(a, b);
        }
    }
    std::sort(edges.begin(), edges.end());
    std::vector<std::uint32_t> cert;
    cert.reserve(1 + 2 * edges.size());
    cert.push_back(static_cast<std::uint32_t>(g.n));
    for (auto [a, b] : edges) {
        cert.push_back(a);
        cert.push_back(b);
    }
    return cert;
}

inline std::vector<std::uint32_t> leaf_labeling(const Partition& p) {
    std::vector<std::uint32_t> lab;
    lab.reserve(p.cells.size());
    for (const auto& c : p.cells) lab.push_back(c.front());
    return lab;
}

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

class CanonicalSearch {
public:
    explicit CanonicalSearch(const IndexGraph& g) : g_(g) {}

    void run() {
        auto p = Partition::unit(g_.n);
        search(std::move(p), {});
    }

    std::vector<std::uint32_t> best_cert;
    std::vector<std::uint32_t> best_lab;

private:
    // Returns the depth the search should unwind to; a value below the current depth
    // means the caller's subtree is already covered by a known automorphism.
    std::size_t search(Partition p, std::vector<std::uint32_t> path) {
        refine(g_, p, nullptr);
        std::size_t depth = path.size();
        if (p.discrete()) {
            auto cert = leaf_certificate(g_, p);
            auto lab = leaf_labeling(p);
            if (!have_first_) {
                have_first_ = true;
                first_cert_ = cert;
                first_lab_ = lab;
                first_path_ = path;
                best_cert = std::move(cert);
                best_lab = std::move(lab);
                return depth;
            }
            if (cert == first_cert_) {
                record_automorphism(first_lab_, lab);
                std::size_t common = 0;
                while (common < path.size() && common < first_path_.size() && path[common] == first_path_[common]) {
                    ++common;
                }
                return common; // unwind to the divergence level
            }
            if (cert == best_cert) {
                record_automorphism(best_lab, lab);
            } else if (cert < best_cert) {
                best_cert = std::move(cert);
                best_lab = std::move(lab);
            }
            return depth;
        }
        auto target = *p.first_nonsingleton();
        std::vector<std::uint32_t> tried;
        const auto cell = p.cells[target];
        for (auto v : cell) {
            if (in_tried_orbit(v, tried, path)) continue;
            tried.push_back(v);
            auto child_path = path;
            child_path.push_back(v);
            auto back = search(p.individualize(target, v), std::move(child_path));
            if (back < depth) return back;
        }
        return depth;
    }

    void record_automorphism(const std::vector<std::uint32_t>& from, const std::vector<std::uint32_t>& to) {
        std::vector<std::uint32_t> gamma(g_.n);
        for (std::size_t i = 0; i < g_.n; ++i) gamma[from[i]] = to[i];
        automorphisms_.push_back(std::move(gamma));
    }

    bool in_tried_orbit(std::uint32_t v, const std::vector<std::uint32_t>& tried,
                        const std::vector<std::uint32_t>& path) const {
        if (tried.empty() || automorphisms_.empty()) return false;
        UnionFind uf(g_.n);
        for (const auto& gamma : automorphisms_) {
            bool fixes = std::all_of(path.begin(), path.end(), [&](std::uint32_t x) { return gamma[x] == x; });
            if (!fixes) continue;
            for (std::uint32_t x = 0; x < g_.n; ++x) uf.unite(x, gamma[x]);
        }
        auto root = uf.find(v);
        return std::any_of(tried.begin(), tried.end(), [&](std::uint32_t u) { return uf.find(u) == root; });
    }

    const IndexGraph& g_;
    bool have_first_ = false;
    std::vector<std::uint32_t> first_cert_;
    std::vector<std::uint32_t> first_lab_;
    std::vector<std::uint32_t> first_path_;
    std::vector<std::vector<std::uint32_t>> automorphisms_;
};

} // namespace detail

// =============================================================================
// Canonical forms
// =============================================================================

/// Label-independent code of a graph plus the labeling that produced it.
/// `code` is equal for two graphs exactly when they are isomorphic.
struct CanonicalForm {
    std::vector<std::uint32_t> code;
    std::vector<Vertex> labeling; // labeling[i] = original vertex placed at canonical position i
};

inline CanonicalForm canonical_form(const Graph& g) {
    detail::IndexGraph ig(g);
    CanonicalForm out;
    if (g.empty()) {
        out.code = {0};
        return out;
    }
    detail::CanonicalSearch search(ig);
    search.run();
    out.code = std::move(search.best_cert);
    out.labeling.reserve(g.order());
    for (auto i : search.best_lab) out.labeling.push_back(g.vertices()[i]);
    return out;
}

struct CodeHash {
    std::size_t operator()(const std::vector<std::uint32_t>& code) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : code) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// =============================================================================
// Isomorphism
// =============================================================================

inline std::vector<std::size_t> degree_sequence(const Graph& g) {
    std::vector<std::size_t> d;
    d.reserve(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) d.push_back(g.neighbors_at(i).size());
    std::sort(d.begin(), d.end());
    return d;
}

/// Certificate mapping g onto h when the two are isomorphic. Deterministic.
inline std::optional<IsoCertificate> are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
    if (degree_sequence(g) != degree_sequence(h)) return std::nullopt;
    auto cg = canonical_form(g);
    auto ch = canonical_form(h);
    if (cg.code != ch.code) return std::nullopt;
    std::map<Vertex, Vertex> m;
    for (std::size_t i = 0; i < cg.labeling.size(); ++i) m[cg.labeling[i]] = ch.labeling[i];
    return IsoCertificate(std::move(m));
}

// =============================================================================
// Automorphisms
// =============================================================================

struct AutomorphismLimits {
    std::size_t max_vertices = 60;
    std::size_t max_group_size = 2'000'000;
};

/// All automorphisms of g, sorted by image sequence (identity first).
/// Throws BudgetExceeded above the vertex cap or group-size cap.
inline std::vector<VertexMap> automorphisms(const Graph& g, AutomorphismLimits limits = {}) {
    if (g.order() > limits.max_vertices) {
        throw BudgetExceeded("automorphism search capped at " + std::to_string(limits.max_vertices) +
                             " vertices, graph has " + std::to_string(g.order()));
    }
    std::vector<VertexMap> result;
    if (g.empty()) {
        result.push_back(VertexMap{});
        return result;
    }
    detail::IndexGraph ig(g);
    std::vector<std::vector<std::uint32_t>> found;

    // The left side individualizes the first vertex of the target cell; the right side
    // tries every vertex of the matching cell. Traces must agree at every step.
    std::function<void(detail::Partition, detail::Partition)> search = [&](detail::Partition left,
                                                                           detail::Partition right) {
        std::vector<std::uint32_t> tl, tr;
        detail::refine(ig, left, &tl);
        detail::refine(ig, right, &tr);
        if (tl != tr || left.cells.size() != right.cells.size()) return;
        for (std::size_t c = 0; c < left.cells.size(); ++c) {
            if (left.cells[c].size() != right.cells[c].size()) return;
        }
        if (left.discrete()) {
            std::vector<std::uint32_t> gamma(ig.n);
            for (std::size_t c = 0; c < left.cells.size(); ++c) gamma[left.cells[c][0]] = right.cells[c][0];
            for (std::size_t v = 0; v < ig.n; ++v) {
                for (auto w : ig.adj[v]) {
                    if (!ig.has_edge(gamma[v], gamma[w])) return;
                }
            }
            found.push_back(std::move(gamma));
            if (found.size() > limits.max_group_size) {
                throw BudgetExceeded("automorphism group larger than " + std::to_string(limits.max_group_size));
            }
            return;
        }
        auto target = *left.first_nonsingleton();
        auto v = left.cells[target].front();
        auto next_left = left.individualize(target, v);
        for (auto w : right.cells[target]) search(next_left, right.individualize(target, w));
    };
    search(detail::Partition::unit(ig.n), detail::Partition::unit(ig.n));

    std::sort(found.begin(), found.end());
    result.reserve(found.size());
    for (const auto& gamma : found) {
        std::vector<Vertex> image(ig.n);
        for (std::size_t i = 0; i < ig.n; ++i) image[i] = g.vertices()[gamma[i]];
        result.emplace_back(g.vertices(), std::move(image));
    }
    return result;
}

/// Finds an automorphism sending `from` to `to`, if any.
inline std::optional<VertexMap> automorphism_mapping(const Graph& g, Vertex from, Vertex to) {
    detail::IndexGraph ig(g);
    auto a = static_cast<std::uint32_t>(g.index_of(from));
    auto b = static_cast<std::uint32_t>(g.index_of(to));
    std::optional<std::vector<std::uint32_t>> hit;

    std::function<bool(detail::Partition, detail::Partition)> search = [&](detail::Partition left,
                                                                           detail::Partition right) {
        std::vector<std::uint32_t> tl, tr;
        detail::refine(ig, left, &tl);
        detail::refine(ig, right, &tr);
        if (tl != tr || left.cells.size() != right.cells.size()) return false;
        for (std::size_t c = 0; c < left.cells.size(); ++c) {
            if (left.cells[c].size() != right.cells[c].size()) return false;
        }
        if (left.discrete()) {
            std::vector<std::uint32_t> gamma(ig.n);
            for (std::size_t c = 0; c < left.cells.size(); ++c) gamma[left.cells[c][0]] = right.cells[c][0];
            for (std::size_t v = 0; v < ig.n; ++v) {
                for (auto w : ig.adj[v]) {
                    if (!ig.has_edge(gamma[v], gamma[w])) return false;
                }
            }
            hit = std::move(gamma);
            return true;
        }
        auto target = *left.first_nonsingleton();
        auto v = left.cells[target].front();
        auto next_left = left.individualize(target, v);
        for (auto w : right.cells[target]) {
            if (search(next_left, right.individualize(target, w))) return true;
        }
        return false;
    };

    auto unit = detail::Partition::unit(ig.n);
    auto left = unit.individualize(0, a);
    auto right = unit.individualize(0, b);
    if (!search(left, right)) return std::nullopt;
    std::vector<Vertex> image(ig.n);
    for (std::size_t i = 0; i < ig.n; ++i) image[i] = g.vertices()[(*hit)[i]];
    return VertexMap(g.vertices(), std::move(image));
}

} // namespace gsphere
