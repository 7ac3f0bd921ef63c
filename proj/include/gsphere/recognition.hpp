#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "isomorphism.hpp"
#include "rational.hpp"

namespace gsphere {

// =============================================================================
// Verdicts
// =============================================================================

enum class Answer { yes, no, budget_exceeded };

inline const char* to_string(Answer a) {
    switch (a) {
        case Answer::yes: return "yes";
        case Answer::no: return "no";
        case Answer::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

/// Three-valued answer. A budget hit is never reported as yes or no.
struct ClassVerdict {
    Answer answer = Answer::no;
    std::vector<Vertex> witness; // removal sequence, deleted vertex, or failing vertex
    std::string clause;          // which clause holds or fails
    std::uint64_t budget_spent = 0;
};

enum class GraphKind { sphere, ball, geometric, none, unknown };

inline const char* to_string(GraphKind k) {
    switch (k) {
        case GraphKind::sphere: return "sphere";
        case GraphKind::ball: return "ball";
        case GraphKind::geometric: return "geometric";
        case GraphKind::none: return "none";
        case GraphKind::unknown: return "unknown";
    }
    return "?";
}

struct Classification {
    GraphKind kind = GraphKind::unknown;
    int dimension = -1;        // meaningful for sphere/ball/geometric
    bool has_boundary = false; // geometric graphs only
    VertexSubset boundary;
    ClassVerdict verdict;

    bool is_sphere(int d) const { return kind == GraphKind::sphere && dimension == d; }
    /// Member of the geometric class of dimension d (spheres and balls included).
    bool is_geometric(int d) const {
        return (kind == GraphKind::sphere || kind == GraphKind::ball || kind == GraphKind::geometric) &&
               dimension == d;
    }
};

inline constexpr std::uint64_t default_budget = 10'000'000;

// =============================================================================
// Recognizer
// =============================================================================

/// Recursive recognition of contractible, ball, sphere and geometric graphs.
///
/// Results are memoized on canonical codes, so isomorphic subproblems are solved once.
/// The memo is insert-only and only holds fully resolved answers, so it behaves as a
/// function of the key and may be shared between threads. The node budget applies per
/// top-level call.
///
/// Two exact counting facts prune the search without changing any answer:
/// a contractible graph is connected with Euler characteristic 1, and for every vertex
/// chi(G) = chi(G - x) + 1 - chi(S(x)).
class Recognizer {
public:
    explicit Recognizer(std::uint64_t budget = default_budget) : budget_(budget) {}

    std::uint64_t budget() const noexcept { return budget_; }
    void set_budget(std::uint64_t b) noexcept { budget_ = b; }

    void clear_memo() {
        std::lock_guard lock(mutex_);
        contract_memo_.clear();
        class_memo_.clear();
    }

    ClassVerdict contractible(const Graph& g) {
        Run run{budget_};
        ClassVerdict v;
        try {
            bool yes = contractible_rec(g, run);
            v.answer = yes ? Answer::yes : Answer::no;
            if (yes) {
                v.witness = contraction_sequence(g, run);
                v.clause = "vertex removal sequence with contractible unit spheres";
            } else {
                v.clause = g.empty() ? "empty graph" : "no removable vertex leaves a contractible graph";
            }
        } catch (const BudgetHit&) {
            v.answer = Answer::budget_exceeded;
            v.clause = "node budget exhausted";
        }
        v.budget_spent = run.spent;
        return v;
    }

    Classification classify(const Graph& g) {
        Run run{budget_};
        Classification c;
        try {
            c = classify_rec(g, run);
            if (c.kind == GraphKind::ball && c.dimension >= 0) {
                c.verdict.witness = contraction_sequence(g, run);
            }
        } catch (const BudgetHit&) {
            c = Classification{};
            c.kind = GraphKind::unknown;
            c.verdict.answer = Answer::budget_exceeded;
            c.verdict.clause = "node budget exhausted";
        }
        c.verdict.budget_spent = run.spent;
        return c;
    }

    /// Platonic spheres: every sphere of dimension <= 1 is Platonic; above that, all unit
    /// spheres must be pairwise isomorphic and Platonic themselves.
    ClassVerdict is_platonic_sphere(const Graph& g) {
        Run run{budget_};
        ClassVerdict v;
        try {
            v = platonic_rec(g, run);
        } catch (const BudgetHit&) {
            v = ClassVerdict{};
            v.answer = Answer::budget_exceeded;
            v.clause = "node budget exhausted";
        }
        v.budget_spent = run.spent;
        return v;
    }

private:
    struct BudgetHit {};

    struct Run {
        std::uint64_t limit;
        std::uint64_t spent = 0;
        void tick() {
            if (++spent > limit) throw BudgetHit{};
        }
    };

    struct ClassEntry {
        GraphKind kind;
        int dimension;
        bool has_boundary;
    };

    using Code = std::vector<std::uint32_t>;

    // contractible memo value: canonical position of the removed vertex, or -1 for "no"
    std::optional<long> find_contract(const Code& key) {
        std::lock_guard lock(mutex_);
        auto it = contract_memo_.find(key);
        if (it == contract_memo_.end()) return std::nullopt;
        return it->second;
    }
    void store_contract(const Code& key, long value) {
        std::lock_guard lock(mutex_);
        contract_memo_.emplace(key, value);
    }
    std::optional<ClassEntry> find_class(const Code& key) {
        std::lock_guard lock(mutex_);
        auto it = class_memo_.find(key);
        if (it == class_memo_.end()) return std::nullopt;
        return it->second;
    }
    void store_class(const Code& key, ClassEntry e) {
        std::lock_guard lock(mutex_);
        class_memo_.emplace(key, e);
    }

    bool contractible_rec(const Graph& g, Run& run) {
        run.tick();
        if (g.empty()) return false;
        if (g.order() == 1) return true;
        if (!is_connected(g)) return false;
        if (euler_characteristic(g) != 1) return false;
        auto cf = canonical_form(g);
        if (auto hit = find_contract(cf.code)) return *hit >= 0;
        for (std::size_t pos = 0; pos < cf.labeling.size(); ++pos) {
            Vertex x = g.vertices()[pos];
            auto s = unit_sphere(g, x);
            if (!contractible_rec(s, run)) continue;
            if (contractible_rec(delete_vertex(g, x), run)) {
                auto canon_pos = std::find(cf.labeling.begin(), cf.labeling.end(), x) - cf.labeling.begin();
                store_contract(cf.code, static_cast<long>(canon_pos));
                return true;
            }
        }
        store_contract(cf.code, -1);
        return false;
    }

    // Replays memo entries to list the removal order of a graph already known contractible.
    std::vector<Vertex> contraction_sequence(const Graph& g, Run& run) {
        std::vector<Vertex> seq;
        Graph h = g;
        while (h.order() > 1) {
            auto cf = canonical_form(h);
            auto hit = find_contract(cf.code);
            if (!hit || *hit < 0) {
                contractible_rec(h, run);
                hit = find_contract(cf.code);
            }
            Vertex x = cf.labeling[static_cast<std::size_t>(*hit)];
            seq.push_back(x);
            h = delete_vertex(h, x);
        }
        if (h.order() == 1) seq.push_back(h.vertices().front());
        return seq;
    }

    Classification classify_rec(const Graph& g, Run& run) {
        run.tick();
        Classification c;
        if (g.empty()) {
            c.kind = GraphKind::sphere;
            c.dimension = -1;
            c.verdict.answer = Answer::yes;
            c.verdict.clause = "empty graph is the (-1)-sphere";
            return c;
        }
        auto cf = canonical_form(g);
        auto memo = find_class(cf.code);

        std::optional<int> sub_dim;
        std::vector<Vertex> boundary;
        for (Vertex x : g.vertices()) {
            auto s = unit_sphere(g, x);
            auto sc = classify_rec(s, run);
            bool ok = (sc.kind == GraphKind::sphere || sc.kind == GraphKind::ball) &&
                      (!sub_dim || *sub_dim == sc.dimension);
            if (!ok) {
                c.kind = GraphKind::none;
                c.verdict.answer = Answer::no;
                c.verdict.witness = {x};
                c.verdict.clause = sc.kind == GraphKind::sphere || sc.kind == GraphKind::ball
                                       ? "unit sphere dimensions differ"
                                       : "unit sphere is neither a sphere nor a ball";
                if (!memo) store_class(cf.code, {c.kind, -1, false});
                return c;
            }
            sub_dim = sc.dimension;
            if (sc.kind == GraphKind::ball) boundary.push_back(x);
        }
        const int d = *sub_dim + 1;
        c.dimension = d;
        c.boundary = VertexSubset(boundary);
        c.has_boundary = !boundary.empty();
        c.verdict.answer = Answer::yes;

        if (memo) {
            c.kind = memo->kind;
            c.verdict.clause = "memoized";
            if (c.kind == GraphKind::sphere) c.verdict.witness = sphere_witness(g, run);
            return c;
        }

        if (boundary.empty()) {
            const std::int64_t chi = euler_characteristic(g);
            if (chi == 1 + (d % 2 == 0 ? 1 : -1)) {
                for (Vertex x : g.vertices()) {
                    if (contractible_rec(delete_vertex(g, x), run)) {
                        c.kind = GraphKind::sphere;
                        c.verdict.witness = {x};
                        c.verdict.clause = "unit spheres are spheres and G - x is contractible";
                        store_class(cf.code, {c.kind, d, false});
                        return c;
                    }
                }
            }
            if (contractible_rec(g, run)) {
                c.kind = GraphKind::ball;
                c.verdict.clause = "contractible with empty boundary";
            } else {
                c.kind = GraphKind::geometric;
                c.verdict.clause = "unit spheres are spheres, no contractible vertex deletion";
            }
        } else if (boundary.size() == g.order()) {
            // the boundary graph would be g itself, which has dimension d
            c.kind = GraphKind::geometric;
            c.verdict.clause = "every vertex is a boundary vertex";
        } else {
            auto bc = classify_rec(induced(g, c.boundary), run);
            if (bc.is_sphere(d - 1) && contractible_rec(g, run)) {
                c.kind = GraphKind::ball;
                c.verdict.clause = "contractible with sphere boundary";
            } else {
                c.kind = GraphKind::geometric;
                c.verdict.clause = "geometric with boundary";
            }
        }
        store_class(cf.code, {c.kind, d, c.has_boundary});
        return c;
    }

    std::vector<Vertex> sphere_witness(const Graph& g, Run& run) {
        for (Vertex x : g.vertices()) {
            if (contractible_rec(delete_vertex(g, x), run)) return {x};
        }
        return {};
    }

    ClassVerdict platonic_rec(const Graph& g, Run& run) {
        ClassVerdict v;
        auto c = classify_rec(g, run);
        if (c.kind != GraphKind::sphere) {
            v.answer = Answer::no;
            v.clause = "not a sphere";
            return v;
        }
        if (c.dimension <= 1) {
            v.answer = Answer::yes;
            v.clause = "every sphere of dimension at most 1 is Platonic";
            return v;
        }
        std::optional<Code> first_code;
        Vertex first = g.vertices().front();
        for (Vertex x : g.vertices()) {
            run.tick();
            auto code = canonical_form(unit_sphere(g, x)).code;
            if (!first_code) {
                first_code = std::move(code);
            } else if (code != *first_code) {
                v.answer = Answer::no;
                v.witness = {first, x};
                v.clause = "unit spheres not isomorphic";
                return v;
            }
        }
        auto inner = platonic_rec(unit_sphere(g, first), run);
        if (inner.answer != Answer::yes) {
            v.answer = Answer::no;
            v.witness = {first};
            v.clause = "unit sphere is not Platonic";
            return v;
        }
        v.answer = Answer::yes;
        v.clause = "unit spheres pairwise isomorphic and Platonic";
        return v;
    }

    std::uint64_t budget_;
    std::mutex mutex_;
    std::unordered_map<Code, long, CodeHash> contract_memo_;
    std::unordered_map<Code, ClassEntry, CodeHash> class_memo_;
};

// =============================================================================
// Free functions
// =============================================================================

inline ClassVerdict is_contractible(const Graph& g, std::uint64_t budget = default_budget) {
    return Recognizer(budget).contractible(g);
}

inline Classification classify(const Graph& g, std::uint64_t budget = default_budget) {
    return Recognizer(budget).classify(g);
}

inline ClassVerdict is_platonic_sphere(const Graph& g, std::uint64_t budget = default_budget) {
    return Recognizer(budget).is_platonic_sphere(g);
}

/// Vertices whose unit spheres are balls. Throws PreconditionError unless g is geometric.
inline VertexSubset boundary(const Graph& g, std::uint64_t budget = default_budget) {
    auto c = classify(g, budget);
    if (c.kind == GraphKind::unknown) throw BudgetExceeded("boundary: classification budget exhausted");
    if (c.kind == GraphKind::none) throw PreconditionError("boundary: graph is not geometric");
    return c.boundary;
}

/// Replays a removal sequence: each removed vertex must have a contractible unit sphere
/// in the remaining graph, and the sequence must end at a single vertex.
inline bool verify_contraction_witness(const Graph& g, const std::vector<Vertex>& seq,
                                       std::uint64_t budget = default_budget) {
    if (seq.size() != g.order() || g.empty()) return false;
    Recognizer r(budget);
    Graph h = g;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (!h.contains(seq[i])) return false;
        if (r.contractible(unit_sphere(h, seq[i])).answer != Answer::yes) return false;
        h = delete_vertex(h, seq[i]);
    }
    return h.order() == 1 && h.vertices().front() == seq.back();
}

/// 1 + mean dimension of the unit spheres; -1 for the empty graph. Exact.
inline Rational inductive_dimension(const Graph& g) {
    std::unordered_map<std::vector<std::uint32_t>, Rational, CodeHash> memo;
    auto rec = [&](auto&& self, const Graph& h) -> Rational {
        if (h.empty()) return Rational(-1);
        auto code = canonical_form(h).code;
        if (auto it = memo.find(code); it != memo.end()) return it->second;
        Rational sum = 0;
        for (Vertex x : h.vertices()) sum += self(self, unit_sphere(h, x));
        Rational d = 1 + sum / Rational(static_cast<long long>(h.order()));
        memo.emplace(std::move(code), d);
        return d;
    };
    return rec(rec, g);
}

} // namespace gsphere
