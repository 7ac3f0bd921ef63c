#pragma once

// Slow, definition-level reference implementations. They share no code with the
// library beyond the Graph container, so agreement is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include <gsphere/complex.hpp>
#include <gsphere/graph.hpp>
#include <gsphere/random.hpp>
#include <gsphere/rational.hpp>

namespace oracle {

using gsphere::Edge;
using gsphere::Graph;
using gsphere::Vertex;

inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    gsphere::Lcg64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (rng.unit() < p) edges.emplace_back(a, b);
        }
    }
    return Graph::on_range(static_cast<Vertex>(n), edges);
}

/// Same graph with ids pushed through a seeded shuffle (and shifted, so ids are sparse).
inline Graph relabel(const Graph& g, std::uint64_t seed, std::map<Vertex, Vertex>* map_out = nullptr) {
    gsphere::Lcg64 rng(seed);
    std::vector<Vertex> target(g.order());
    for (std::size_t i = 0; i < target.size(); ++i) target[i] = static_cast<Vertex>(3 * i + 7);
    for (std::size_t i = target.size(); i > 1; --i) std::swap(target[i - 1], target[rng.below(static_cast<std::uint32_t>(i))]);
    std::map<Vertex, Vertex> m;
    for (std::size_t i = 0; i < g.order(); ++i) m[g.vertices()[i]] = target[i];
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges()) edges.push_back(gsphere::make_edge(m[a], m[b]));
    std::vector<Vertex> ids(target.begin(), target.end());
    std::sort(ids.begin(), ids.end());
    if (map_out) *map_out = m;
    return Graph::build(ids, edges);
}

/// Counts of k-cliques by checking every vertex subset.
inline std::vector<std::uint64_t> brute_volumes(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::uint64_t> v;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Vertex> s;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) s.push_back(g.vertices()[i]);
        }
        bool clique = true;
        for (std::size_t i = 0; i < s.size() && clique; ++i) {
            for (std::size_t j = i + 1; j < s.size() && clique; ++j) clique = g.adjacent(s[i], s[j]);
        }
        if (!clique) continue;
        if (v.size() < s.size()) v.resize(s.size(), 0);
        ++v[s.size() - 1];
    }
    return v;
}

inline std::vector<std::vector<Vertex>> brute_maximal_cliques(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::vector<Vertex>> cliques;
    auto is_clique = [&](const std::vector<Vertex>& s) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                if (!g.adjacent(s[i], s[j])) return false;
            }
        }
        return true;
    };
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Vertex> s;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) s.push_back(g.vertices()[i]);
        }
        if (!is_clique(s)) continue;
        bool maximal = true;
        for (Vertex w : g.vertices()) {
            if (std::find(s.begin(), s.end(), w) != s.end()) continue;
            auto t = s;
            t.push_back(w);
            if (is_clique(t)) {
                maximal = false;
                break;
            }
        }
        if (maximal) cliques.push_back(s);
    }
    std::sort(cliques.begin(), cliques.end());
    return cliques;
}

/// Every permutation of the vertex list that preserves adjacency.
inline std::size_t brute_automorphism_count(const Graph& g) {
    std::vector<std::size_t> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t count = 0;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < perm.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < perm.size() && ok; ++j) {
                ok = g.adjacent(g.vertices()[i], g.vertices()[j]) ==
                     g.adjacent(g.vertices()[perm[i]], g.vertices()[perm[j]]);
            }
        }
        count += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

inline bool brute_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    std::vector<std::size_t> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < perm.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < perm.size() && ok; ++j) {
                ok = g.adjacent(g.vertices()[i], g.vertices()[j]) ==
                     h.adjacent(h.vertices()[perm[i]], h.vertices()[perm[j]]);
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Smallest k admitting a proper coloring, by plain backtracking in vertex order.
inline int brute_chromatic(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0) return 0;
    std::vector<int> color(n, -1);
    std::function<bool(std::size_t, int)> place = [&](std::size_t i, int k) {
        if (i == n) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                if (color[j] == c && g.adjacent(g.vertices()[i], g.vertices()[j])) ok = false;
            }
            if (!ok) continue;
            color[i] = c;
            if (place(i + 1, k)) return true;
        }
        color[i] = -1;
        return false;
    };
    for (int k = 1;; ++k) {
        if (place(0, k)) return k;
    }
}

/// Rank over Q by dense Gaussian elimination with exact rationals.
inline std::size_t dense_rank(const gsphere::SparseMatrix& m) {
    using gsphere::Rational;
    std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols, Rational(0)));
    for (std::size_t c = 0; c < m.cols; ++c) {
        for (auto [r, v] : m.columns[c]) a[r][c] = Rational(v);
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows && a[pivot][c] == 0) ++pivot;
        if (pivot == m.rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            Rational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < m.cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// All-pairs distances by Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<long>> all_pairs(const Graph& g) {
    const std::size_t n = g.order();
    const long inf = 1L << 40;
    std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
    for (std::size_t i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (Vertex w : g.neighbors_at(i)) d[i][g.index_of(w)] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        }
    }
    for (auto& row : d) {
        for (auto& x : row) {
            if (x >= inf) x = -1;
        }
    }
    return d;
}

inline Graph remove(const Graph& g, Vertex x) {
    std::vector<Vertex> keep;
    for (Vertex v : g.vertices()) {
        if (v != x) keep.push_back(v);
    }
    return gsphere::induced(g, gsphere::VertexSubset(keep));
}

inline Graph neighborhood(const Graph& g, Vertex x) {
    auto nb = g.neighbors(x);
    return gsphere::induced(g, gsphere::VertexSubset(std::vector<Vertex>(nb.begin(), nb.end())));
}

/// The recursive definition verbatim: no pruning, no memo.
inline bool contractible(const Graph& g) {
    if (g.order() == 1) return true;
    if (g.empty()) return false;
    for (Vertex x : g.vertices()) {
        if (contractible(neighborhood(g, x)) && contractible(remove(g, x))) return true;
    }
    return false;
}

inline bool sphere(const Graph& g, int d) {
    if (d == -1) return g.empty();
    if (g.empty() || d < -1) return false;
    for (Vertex x : g.vertices()) {
        if (!sphere(neighborhood(g, x), d - 1)) return false;
    }
    for (Vertex x : g.vertices()) {
        if (contractible(remove(g, x))) return true;
    }
    return false;
}

/// Triangulated torus on an n x m grid (n, m >= 4): each square split by one diagonal.
inline Graph grid_torus(int n, int m) {
    std::vector<Edge> edges;
    auto id = [&](int i, int j) { return static_cast<Vertex>(((i % n + n) % n) * m + ((j % m + m) % m)); };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            edges.push_back(gsphere::make_edge(id(i, j), id(i + 1, j)));
            edges.push_back(gsphere::make_edge(id(i, j), id(i, j + 1)));
            edges.push_back(gsphere::make_edge(id(i, j), id(i + 1, j + 1)));
        }
    }
    return Graph::on_range(static_cast<Vertex>(n * m), edges);
}

} // namespace oracle
