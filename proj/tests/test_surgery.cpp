#include <gtest/gtest.h>

#include <gsphere/gsphere.hpp>

#include "support/battery.hpp"
#include "support/oracles.hpp"

using namespace gsphere;

TEST(Subdivide, Examples) {
    auto c5 = edge_subdivide(cycle(4), {0, 1}).graph;
    EXPECT_TRUE(are_isomorphic(c5, cycle(5)));

    auto r = edge_subdivide(octahedron(), {0, 1});
    EXPECT_EQ(r.graph.order(), 7u);
    EXPECT_TRUE(classify(r.graph).is_sphere(2));
    ASSERT_EQ(r.record.parity_flips.size(), 2u);
    for (const auto& f : r.record.parity_flips) {
        EXPECT_EQ(f.degree_before, 4u);
        EXPECT_EQ(f.degree_after, 5u);
    }
    EXPECT_EQ(r.record.new_vertex, 6u);
    EXPECT_THROW(edge_subdivide(octahedron(), {0, 3}), PreconditionError);
}

TEST(Subdivide, SixteenCellFlipsTheDualCircle) {
    auto g = cross_polytope(3);
    auto r = edge_subdivide(g, {0, 1});
    auto circle = complementary_dual(g, {0, 1}).dual;
    ASSERT_TRUE(is_cycle_graph(circle));
    ASSERT_EQ(r.record.parity_flips.size(), 4u);
    for (const auto& f : r.record.parity_flips) {
        ASSERT_EQ(f.clique.size(), 2u);
        EXPECT_TRUE(circle.adjacent(f.clique[0], f.clique[1]));
        EXPECT_EQ(f.degree_after, f.degree_before + 1);
    }
    EXPECT_EQ(eulerian_obstructions(r.graph, 3).size(), 4u);
}

TEST(Collapse, Examples) {
    auto g = octahedron();
    auto s = edge_subdivide(g, {0, 1});
    auto x = *s.record.new_vertex;
    auto back = edge_collapse(s.graph, {0, x}).graph;
    EXPECT_TRUE(are_isomorphic(back, g));

    EXPECT_TRUE(are_isomorphic(edge_collapse(cycle(4), {0, 1}).graph, complete(3)));
    EXPECT_TRUE(are_isomorphic(edge_collapse(complete(3), {1, 2}).graph, complete(2)));
    auto rec = edge_collapse(cycle(4), {2, 1}).record;
    EXPECT_EQ(rec.kept_vertex, 1u);
    EXPECT_EQ(rec.removed_vertex, 2u);
}

TEST(Replay, ReproducesRecords) {
    auto r = random_refine(cross_polytope(3), 5, 8);
    Graph g = cross_polytope(3);
    for (const auto& rec : r.records) g = replay(g, rec);
    EXPECT_EQ(g, r.graph);
}

// Parity lemma: subdividing e raises by one exactly the degrees of the maximal
// simplices of its dual, and nothing else changes parity.
TEST(ParityLemma, OverSeededSubdivisions) {
    std::size_t count = 0;
    for (int d = 2; d <= 4; ++d) {
        for (std::uint64_t trial = 0; trial < 35; ++trial) {
            auto seed = derive_seed(900 + static_cast<std::uint64_t>(d), trial);
            auto g = random_refine(cross_polytope(d), trial % 4, seed, {RefineMode::single, false}).graph;
            auto edges = g.edges();
            Lcg64 rng(seed);
            auto e = edges[rng.below(static_cast<std::uint32_t>(edges.size()))];
            auto r = edge_subdivide(g, e);
            ++count;

            auto dual = complementary_dual(g, {e.first, e.second}).dual;
            auto expected = maximal_cliques(dual);
            if (d == 2) {
                // the dual is a 0-sphere: its maximal cliques are single vertices
                ASSERT_EQ(expected.size(), 2u);
            }
            std::vector<Simplex> flipped;
            for (const auto& f : r.record.parity_flips) {
                EXPECT_EQ(f.degree_after, f.degree_before + 1);
                flipped.push_back(f.clique);
            }
            std::sort(flipped.begin(), flipped.end());
            EXPECT_EQ(flipped, expected) << "d=" << d << " trial " << trial;
            EXPECT_EQ(euler_characteristic(r.graph), euler_characteristic(g));
            auto back = edge_collapse(r.graph, make_edge(e.second, *r.record.new_vertex)).graph;
            EXPECT_TRUE(are_isomorphic(back, g));
        }
    }
    EXPECT_GE(count, 100u);
}

TEST(Subdivide, PreservesSpheres) {
    for (int d = 1; d <= 3; ++d) {
        auto g = random_refine(cross_polytope(d), 6, 40 + static_cast<std::uint64_t>(d)).graph;
        EXPECT_TRUE(classify(g).is_sphere(d));
    }
}

TEST(Irreducible, Examples) {
    EXPECT_TRUE(safe_collapse_candidates(octahedron(), 2).empty());
    EXPECT_EQ(is_irreducible(octahedron(), 2), Answer::yes);
    EXPECT_FALSE(safe_collapse_candidates(icosahedron(), 2).empty());
    EXPECT_EQ(is_irreducible(icosahedron(), 2), Answer::no);
    EXPECT_TRUE(safe_collapse_candidates(cycle(4), 1).empty());
    EXPECT_FALSE(safe_collapse_candidates(cycle(5), 1).empty());
    EXPECT_EQ(is_irreducible(cross_polytope(3), 3), Answer::yes);
    EXPECT_THROW(safe_collapse_candidates(complete(4), 2), PreconditionError);
}

TEST(Suspend, Examples) {
    EXPECT_TRUE(are_isomorphic(suspend(cycle(4)), octahedron()));
    EXPECT_TRUE(are_isomorphic(suspend(octahedron()), cross_polytope(3)));
    auto z = suspend(build_graph({}, {}));
    EXPECT_EQ(z.order(), 2u);
    EXPECT_EQ(z.size(), 0u);
}

TEST(ConnectedSum, Examples) {
    auto g = connected_sum(octahedron(), 0, octahedron(), 5);
    EXPECT_TRUE(are_isomorphic(g, octahedron()));

    auto l = loop_subdivide(octahedron());
    auto sum = connected_sum(l, 0, l, 1);
    EXPECT_TRUE(classify(sum).is_sphere(2));
    EXPECT_TRUE(eulerian_obstructions(sum, 2).empty());

    EXPECT_THROW(connected_sum(octahedron(), 0, icosahedron(), 0), PreconditionError);
}

TEST(Degree4Collapse, Examples) {
    auto l = loop_subdivide(octahedron());
    ASSERT_EQ(l.degree(0), 4u);
    auto g = degree4_collapse(l, 0);
    EXPECT_TRUE(classify(g).is_sphere(2));
    EXPECT_EQ(g.order(), l.order() - 1);
    EXPECT_THROW(degree4_collapse(octahedron(), 0), PreconditionError);
    Vertex six = 0;
    for (Vertex v : l.vertices()) {
        if (l.degree(v) == 6) six = v;
    }
    EXPECT_THROW(degree4_collapse(l, six), PreconditionError);
}
