#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace gsphere {

/// A complete subgraph, vertices ascending. Its dimension is size() - 1.
using Simplex = std::vector<Vertex>;

/// v_0, v_1, ... ; empty for the empty graph.
using VolumeVector = std::vector<std::uint64_t>;

// =============================================================================
// Cliques
// =============================================================================

/// Maximal cliques by Bron-Kerbosch with pivoting, each ascending, list sorted.
inline std::vector<Simplex> maximal_cliques(const Graph& g) {
    std::vector<Simplex> out;
    if (g.empty()) return out;
    const std::size_t n = g.order();
    std::vector<std::vector<std::uint32_t>> nb(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (Vertex w : g.neighbors_at(i)) nb[i].push_back(static_cast<std::uint32_t>(g.index_of(w)));
    }
    auto intersect = [&](const std::vector<std::uint32_t>& s, std::uint32_t v) {
        std::vector<std::uint32_t> r;
        std::set_intersection(s.begin(), s.end(), nb[v].begin(), nb[v].end(), std::back_inserter(r));
        return r;
    };
    std::vector<std::uint32_t> current;
    auto expand = [&](auto&& self, std::vector<std::uint32_t> p, std::vector<std::uint32_t> x) -> void {
        if (p.empty()) {
            if (x.empty()) {
                Simplex s;
                for (auto i : current) s.push_back(g.vertices()[i]);
                std::sort(s.begin(), s.end());
                out.push_back(std::move(s));
            }
            return;
        }
        // pivot: vertex of P ∪ X with most neighbors in P
        std::uint32_t pivot = p.front();
        std::size_t best = 0;
        for (const auto* set : {&p, &x}) {
            for (auto u : *set) {
                auto c = intersect(p, u).size();
                if (c > best || (c == best && u < pivot)) {
                    best = c;
                    pivot = u;
                }
            }
        }
        std::vector<std::uint32_t> candidates;
        std::set_difference(p.begin(), p.end(), nb[pivot].begin(), nb[pivot].end(), std::back_inserter(candidates));
        for (auto v : candidates) {
            current.push_back(v);
            self(self, intersect(p, v), intersect(x, v));
            current.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            x.insert(std::upper_bound(x.begin(), x.end(), v), v);
        }
    };
    std::vector<std::uint32_t> all(n);
    for (std::uint32_t i = 0; i < n; ++i) all[i] = i;
    expand(expand, all, {});
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_clique(const Graph& g, const VertexSubset& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!g.contains(s.members()[i])) return false;
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (!g.adjacent(s.members()[i], s.members()[j])) return false;
        }
    }
    return true;
}

// =============================================================================
// CliqueComplex
// =============================================================================

/// All complete subgraphs of a graph, grouped by dimension. layers[k] holds the
/// k-simplices in lexicographic order; layers[0] is the vertex set.
struct CliqueComplex {
    std::vector<std::vector<Simplex>> layers;

    /// Largest simplex dimension, -1 for the empty complex.
    int dimension() const { return static_cast<int>(layers.size()) - 1; }

    const std::vector<Simplex>& layer(int k) const {
        static const std::vector<Simplex> none;
        if (k < 0 || k > dimension()) return none;
        return layers[static_cast<std::size_t>(k)];
    }

    /// Position of `s` in its layer.
    std::size_t index_of(const Simplex& s) const {
        const auto& layer = layers.at(s.size() - 1);
        auto it = std::lower_bound(layer.begin(), layer.end(), s);
        if (it == layer.end() || *it != s) throw GraphError("simplex not in complex");
        return static_cast<std::size_t>(it - layer.begin());
    }
};

inline CliqueComplex clique_complex(const Graph& g) {
    CliqueComplex c;
    auto maximal = maximal_cliques(g);
    std::size_t top = 0;
    for (const auto& m : maximal) top = std::max(top, m.size());
    std::vector<std::set<Simplex>> faces(top);
    for (const auto& m : maximal) {
        const std::size_t s = m.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < s; ++i) {
                if (mask & (std::uint64_t{1} << i)) face.push_back(m[i]);
            }
            faces[face.size() - 1].insert(std::move(face));
        }
    }
    c.layers.reserve(top);
    for (auto& f : faces) c.layers.emplace_back(f.begin(), f.end());
    return c;
}

inline VolumeVector volumes(const CliqueComplex& c) {
    VolumeVector v;
    for (const auto& layer : c.layers) v.push_back(layer.size());
    return v;
}

inline VolumeVector volumes(const Graph& g) { return volumes(clique_complex(g)); }

inline std::int64_t euler_characteristic(const VolumeVector& v) {
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(v[k]);
    }
    return chi;
}

inline std::int64_t euler_characteristic(const Graph& g) { return euler_characteristic(volumes(g)); }

/// V_k(x) = v_k(S(x)), with V_{-1}(x) = 1.
inline std::uint64_t local_volume(const Graph& g, Vertex x, int k) {
    if (!g.contains(x)) throw GraphError("vertex " + std::to_string(x) + " not in graph");
    if (k < -1) return 0;
    if (k == -1) return 1;
    auto v = volumes(unit_sphere(g, x));
    return static_cast<std::size_t>(k) < v.size() ? v[static_cast<std::size_t>(k)] : 0;
}

// =============================================================================
// Incidence matrices
// =============================================================================

/// Column-major sparse integer matrix.
struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::pair<std::uint32_t, int>>> columns; // (row, value), rows ascending

    int at(std::size_t r, std::size_t c) const {
        for (auto [row, value] : columns[c]) {
            if (row == r) return value;
        }
        return 0;
    }
};

/// boundary[k] is d_k : C_k -> C_{k-1} for k >= 1; boundary[0] is an empty placeholder.
/// Orientation: simplex vertices ascending, the face omitting position i carries sign (-1)^i.
struct IncidenceMatrices {
    std::vector<SparseMatrix> boundary;
};

inline IncidenceMatrices incidence_matrices(const CliqueComplex& c) {
    IncidenceMatrices out;
    out.boundary.resize(std::max<std::size_t>(c.layers.size(), 1));
    for (std::size_t k = 1; k < c.layers.size(); ++k) {
        SparseMatrix m;
        m.rows = c.layers[k - 1].size();
        m.cols = c.layers[k].size();
        m.columns.resize(m.cols);
        for (std::size_t j = 0; j < m.cols; ++j) {
            const auto& s = c.layers[k][j];
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face;
                face.reserve(s.size() - 1);
                for (std::size_t t = 0; t < s.size(); ++t) {
                    if (t != i) face.push_back(s[t]);
                }
                m.columns[j].emplace_back(static_cast<std::uint32_t>(c.index_of(face)), i % 2 == 0 ? 1 : -1);
            }
            std::sort(m.columns[j].begin(), m.columns[j].end());
        }
        out.boundary[k] = std::move(m);
    }
    return out;
}

/// True when a * b is the zero matrix (a: rows x mid, b: mid x cols).
inline bool product_is_zero(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols != b.rows) return false;
    for (const auto& col : b.columns) {
        std::map<std::uint32_t, long long> acc;
        for (auto [mid, bv] : col) {
            for (auto [row, av] : a.columns[mid]) acc[row] += static_cast<long long>(av) * bv;
        }
        for (auto [row, v] : acc) {
            if (v != 0) return false;
        }
    }
    return true;
}

// =============================================================================
// Ranks and Betti numbers
// =============================================================================

namespace detail {

// Column reduction keyed on the lowest nonzero row, fraction-free over the integers:
// col <- p*col - c*piv, then divided by the content. The rank over Q is the number of
// surviving columns.
inline std::size_t integer_rank(const SparseMatrix& m) {
    using Column = std::vector<std::pair<std::uint32_t, BigInt>>;
    std::vector<Column> reduced;
    std::map<std::uint32_t, std::size_t> pivot_of;
    std::size_t rank = 0;
    for (const auto& src : m.columns) {
        Column col;
        for (auto [r, v] : src) col.emplace_back(r, BigInt(v));
        while (!col.empty()) {
            auto low = col.back().first;
            auto it = pivot_of.find(low);
            if (it == pivot_of.end()) break;
            const Column& piv = reduced[it->second];
            BigInt p = piv.back().second;
            BigInt c = col.back().second;
            BigInt g = boost::multiprecision::gcd(p, c);
            p /= g;
            c /= g;
            Column next;
            std::size_t i = 0, j = 0;
            while (i < col.size() || j < piv.size()) {
                if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
                    next.emplace_back(col[i].first, p * col[i].second);
                    ++i;
                } else if (i == col.size() || piv[j].first < col[i].first) {
                    next.emplace_back(piv[j].first, -c * piv[j].second);
                    ++j;
                } else {
                    BigInt v = p * col[i].second - c * piv[j].second;
                    if (v != 0) next.emplace_back(col[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            BigInt content = 0;
            for (const auto& [r, v] : next) content = boost::multiprecision::gcd(content, v);
            if (content > 1) {
                for (auto& [r, v] : next) v /= content;
            }
            col = std::move(next);
        }
        if (!col.empty()) {
            pivot_of[col.back().first] = reduced.size();
            reduced.push_back(std::move(col));
            ++rank;
        }
    }
    return rank;
}

inline std::size_t modular_rank(const SparseMatrix& m, std::uint64_t prime) {
    using Column = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
    auto inv = [prime](std::uint64_t a) {
        std::uint64_t result = 1, base = a % prime, e = prime - 2;
        while (e) {
            if (e & 1) result = result * base % prime;
            base = base * base % prime;
            e >>= 1;
        }
        return result;
    };
    std::vector<Column> reduced;
    std::map<std::uint32_t, std::size_t> pivot_of;
    std::size_t rank = 0;
    for (const auto& src : m.columns) {
        Column col;
        for (auto [r, v] : src) col.emplace_back(r, static_cast<std::uint64_t>((v % static_cast<long long>(prime) + static_cast<long long>(prime)) % static_cast<long long>(prime)));
        while (!col.empty()) {
            auto it = pivot_of.find(col.back().first);
            if (it == pivot_of.end()) break;
            const Column& piv = reduced[it->second];
            std::uint64_t factor = col.back().second * inv(piv.back().second) % prime;
            Column next;
            std::size_t i = 0, j = 0;
            while (i < col.size() || j < piv.size()) {
                if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
                    next.push_back(col[i++]);
                } else if (i == col.size() || piv[j].first < col[i].first) {
                    next.emplace_back(piv[j].first, (prime - factor * piv[j].second % prime) % prime);
                    ++j;
                } else {
                    std::uint64_t v = (col[i].second + prime - factor * piv[j].second % prime) % prime;
                    if (v != 0) next.emplace_back(col[i].first, v);
                    ++i;
                    ++j;
                }
            }
            col = std::move(next);
        }
        if (!col.empty()) {
            pivot_of[col.back().first] = reduced.size();
            reduced.push_back(std::move(col));
            ++rank;
        }
    }
    return rank;
}

} // namespace detail

inline constexpr std::uint64_t rank_check_prime = 2147483647; // 2^31 - 1

struct BettiReport {
    std::vector<std::uint64_t> betti;
    std::vector<std::size_t> ranks; // ranks[k] = rank d_k over Q, ranks[0] = 0
    bool modular_agrees = true;     // ranks mod rank_check_prime match the rational ranks
};

/// b_k = v_k - rank d_k - rank d_{k+1}, ranks over Q, cross-checked modulo a prime.
inline BettiReport betti_report(const Graph& g) {
    auto c = clique_complex(g);
    auto inc = incidence_matrices(c);
    BettiReport out;
    const std::size_t top = c.layers.size();
    out.ranks.assign(top + 1, 0);
    for (std::size_t k = 1; k < top; ++k) {
        out.ranks[k] = detail::integer_rank(inc.boundary[k]);
        if (detail::modular_rank(inc.boundary[k], rank_check_prime) != out.ranks[k]) out.modular_agrees = false;
    }
    for (std::size_t k = 0; k < top; ++k) {
        out.betti.push_back(c.layers[k].size() - out.ranks[k] - out.ranks[k + 1]);
    }
    return out;
}

inline std::vector<std::uint64_t> betti_numbers(const Graph& g) { return betti_report(g).betti; }

} // namespace gsphere
