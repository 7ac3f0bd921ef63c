#include <gtest/gtest.h>

#include <gsphere/gsphere.hpp>

#include "support/battery.hpp"
#include "support/oracles.hpp"

using namespace gsphere;

TEST(Obstructions, Examples) {
    auto ico = eulerian_obstructions(icosahedron(), 2);
    ASSERT_EQ(ico.size(), 12u);
    for (const auto& o : ico) EXPECT_EQ(o.degree, 5u);
    EXPECT_TRUE(eulerian_obstructions(cross_polytope(3), 3).empty());
    auto c600 = eulerian_obstructions(six_hundred_cell(), 3);
    ASSERT_EQ(c600.size(), 720u);
    for (const auto& o : c600) EXPECT_EQ(o.degree, 5u);
    EXPECT_TRUE(eulerian_obstructions(cycle(6), 1).empty());
    EXPECT_EQ(eulerian_obstructions(cycle(7), 1).size(), 1u);
    EXPECT_THROW(eulerian_obstructions(octahedron(), 3), PreconditionError);
}

TEST(EulerianGraph, Examples) {
    EXPECT_TRUE(is_eulerian_graph(octahedron()));
    EXPECT_FALSE(is_eulerian_graph(icosahedron()));
    EXPECT_TRUE(is_eulerian_graph(cycle(5)));
    EXPECT_FALSE(is_eulerian_graph(build_graph({0, 1, 2, 3, 4, 5}, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})));
    EXPECT_TRUE(is_eulerian_graph(build_graph({0, 1, 2, 3}, {{0, 1}, {1, 2}, {0, 2}})));
}

TEST(ChainColor, Examples) {
    auto oct = chain_color(octahedron(), 2);
    EXPECT_EQ(oct.outcome, ColoringOutcome::colored);
    EXPECT_EQ(oct.colors, 3);
    EXPECT_TRUE(is_proper_coloring(octahedron(), oct.assignment));

    auto c16 = cross_polytope(3);
    auto r = chain_color(c16, 3);
    ASSERT_EQ(r.outcome, ColoringOutcome::colored);
    EXPECT_EQ(r.colors, 4);
    for (Vertex i = 0; i < 4; ++i) EXPECT_EQ(r.assignment.at(i), r.assignment.at(i + 4));

    auto ico = chain_color(icosahedron(), 2);
    EXPECT_NE(ico.outcome, ColoringOutcome::colored);
    ASSERT_TRUE(ico.conflict);
    EXPECT_NE(ico.conflict->existing, ico.conflict->forced);

    EXPECT_EQ(chain_color(cycle(8), 1).colors, 2);
    EXPECT_EQ(chain_color(cycle(9), 1).outcome, ColoringOutcome::obstruction);
}

TEST(ChainColor, IsDeterministic) {
    auto g = random_refine(cross_polytope(3), 6, 17, {RefineMode::paired}).graph;
    auto a = chain_color(g, 3);
    auto b = chain_color(g, 3);
    EXPECT_EQ(a.assignment, b.assignment);
}

// Main theorem: no odd simplex degree <=> (d+1)-coloring by propagation <=> bipartite nerve.
TEST(MainTheorem, ThreeWayEquivalence) {
    auto spheres = battery::named_spheres();
    for (auto& s : battery::refined_spheres(5, 4, RefineMode::paired)) spheres.push_back(std::move(s));
    for (auto& s : battery::refined_spheres(3, 3, RefineMode::single, 7)) spheres.push_back(std::move(s));
    spheres.push_back({"six_hundred_cell", six_hundred_cell(), 3});
    spheres.push_back({"loop_octahedron", loop_subdivide(octahedron()), 2});
    for (const auto& s : spheres) {
        bool no_obstruction = eulerian_obstructions(s.graph, s.dimension).empty();
        auto c = chain_color(s.graph, s.dimension);
        bool colored = c.outcome == ColoringOutcome::colored && c.colors == s.dimension + 1;
        bool bipartite = s.dimension == 1 ? s.graph.order() % 2 == 0 : is_bipartite(nerve(s.graph).graph).bipartite;
        EXPECT_EQ(no_obstruction, colored) << s.name;
        EXPECT_EQ(no_obstruction, bipartite) << s.name;
        if (colored) EXPECT_TRUE(is_proper_coloring(s.graph, c.assignment)) << s.name;
    }
}

TEST(ChainColor, UnitSpheresInheritFewerColors) {
    for (auto& s : battery::refined_spheres(3, 4, RefineMode::paired)) {
        auto c = chain_color(s.graph, s.dimension);
        if (c.outcome != ColoringOutcome::colored) continue;
        for (Vertex x : s.graph.vertices()) {
            std::set<int> used;
            for (Vertex y : s.graph.neighbors(x)) used.insert(c.assignment.at(y));
            EXPECT_LE(static_cast<int>(used.size()), s.dimension);
        }
    }
}

TEST(SignPartition, Examples) {
    auto oct = nerve_sign_partition(octahedron(), 2);
    ASSERT_TRUE(oct.ok);
    EXPECT_EQ(oct.positive, 4u);
    EXPECT_EQ(oct.negative, 4u);
    auto c16 = nerve_sign_partition(cross_polytope(3), 3);
    ASSERT_TRUE(c16.ok);
    EXPECT_EQ(c16.positive, 8u);
    EXPECT_EQ(c16.negative, 8u);
    EXPECT_FALSE(nerve_sign_partition(icosahedron(), 2).ok);
}

TEST(SignPartition, AdjacentSimplicesHaveOppositeSigns) {
    for (auto& s : battery::refined_spheres(3, 4, RefineMode::paired, 11)) {
        auto p = nerve_sign_partition(s.graph, s.dimension);
        if (!eulerian_obstructions(s.graph, s.dimension).empty()) {
            EXPECT_FALSE(p.ok);
            continue;
        }
        ASSERT_TRUE(p.ok) << s.name;
        auto n = nerve(s.graph);
        for (auto [a, b] : n.graph.edges()) EXPECT_NE(p.sign[a], p.sign[b]);
    }
}

TEST(Chromatic, Examples) {
    auto oct = chromatic_number(octahedron());
    EXPECT_TRUE(oct.exact);
    EXPECT_EQ(oct.upper, 3);
    auto ico = chromatic_number(icosahedron());
    EXPECT_TRUE(ico.exact);
    EXPECT_EQ(ico.upper, 4);
    EXPECT_EQ(chromatic_number(cross_polytope(3)).upper, 4);
    EXPECT_EQ(chromatic_number(wheel(6)).upper, 3);
    EXPECT_EQ(chromatic_number(wheel(5)).upper, 4);
    EXPECT_EQ(chromatic_number(build_graph({}, {})).upper, 0);
}

TEST(Chromatic, SixHundredCell) {
    auto g = six_hundred_cell();
    ChromaticOptions o;
    o.lower_bound_hint = 5;
    o.hint_provenance = "not an Eulerian sphere";
    auto r = chromatic_number(g, o);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.lower, 5);
    EXPECT_EQ(r.upper, 5);
    EXPECT_TRUE(is_proper_coloring(g, r.coloring));
    EXPECT_EQ(color_count(r.coloring), 5);
}

TEST(Chromatic, MatchesPlainBacktracking) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto g = oracle::random_graph(10, 0.2 + 0.01 * static_cast<double>(seed % 50), seed);
        auto r = chromatic_number(g);
        ASSERT_TRUE(r.exact);
        EXPECT_EQ(r.upper, oracle::brute_chromatic(g)) << "seed " << seed;
        EXPECT_TRUE(is_proper_coloring(g, r.coloring));
        EXPECT_EQ(color_count(r.coloring), r.upper);
    }
}

TEST(Chromatic, ExhaustedBudgetGivesBracket) {
    ChromaticOptions o;
    o.node_budget = 5;
    auto r = chromatic_number(six_hundred_cell(), o);
    EXPECT_LE(r.lower, 5);
    EXPECT_GE(r.upper, 5);
    EXPECT_TRUE(is_proper_coloring(six_hundred_cell(), r.coloring));
}

TEST(Chromatic, SpheresNeedDPlusOneExactlyWhenEulerian) {
    for (auto& s : battery::refined_spheres(3, 3, RefineMode::single, 5)) {
        if (s.dimension > 3) continue;
        auto r = chromatic_number(s.graph);
        ASSERT_TRUE(r.exact);
        bool eulerian = chain_color(s.graph, s.dimension).outcome == ColoringOutcome::colored;
        if (eulerian) {
            EXPECT_EQ(r.upper, s.dimension + 1) << s.name;
        } else {
            EXPECT_GE(r.upper, s.dimension + 2) << s.name;
        }
    }
}
