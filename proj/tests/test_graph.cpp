#include <gtest/gtest.h>

#include <set>

#include <gsphere/gsphere.hpp>

#include "support/oracles.hpp"

using namespace gsphere;

TEST(GraphBuild, EmptyGraph) {
    auto g = build_graph({}, {});
    EXPECT_TRUE(g.empty());
    EXPECT_EQ(g.size(), 0u);
}

TEST(GraphBuild, OctahedronCounts) {
    auto g = octahedron();
    EXPECT_EQ(g.order(), 6u);
    EXPECT_EQ(g.size(), 12u);
}

TEST(GraphBuild, DuplicateEdgesCollapse) {
    auto g = build_graph({0, 1}, {{0, 1}, {1, 0}});
    EXPECT_EQ(g.size(), 1u);
}

TEST(GraphBuild, RejectsBadInput) {
    EXPECT_THROW(build_graph({0, 0}, {}), GraphError);
    EXPECT_THROW(build_graph({0, 1}, {{0, 0}}), GraphError);
    EXPECT_THROW(build_graph({0, 1}, {{0, 2}}), GraphError);
}

TEST(GraphBuild, AdjacencyInvariants) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto g = oracle::random_graph(12, 0.4, seed);
        for (Vertex v : g.vertices()) {
            auto nb = g.neighbors(v);
            EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
            for (Vertex w : nb) {
                EXPECT_NE(v, w);
                EXPECT_TRUE(g.contains(w));
                EXPECT_TRUE(g.adjacent(w, v));
            }
        }
    }
}

TEST(UnitSphere, Examples) {
    EXPECT_TRUE(are_isomorphic(unit_sphere(octahedron(), 0), cycle(4)));
    EXPECT_TRUE(are_isomorphic(unit_sphere(complete(5), 2), complete(4)));
    auto s = unit_sphere(cycle(6), 0);
    EXPECT_EQ(s.order(), 2u);
    EXPECT_EQ(s.size(), 0u);
}

TEST(UnitSphere, NeverContainsCenter) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto g = oracle::random_graph(10, 0.5, seed);
        for (Vertex v : g.vertices()) {
            auto s = unit_sphere(g, v);
            EXPECT_FALSE(s.contains(v));
            EXPECT_EQ(s.order(), g.degree(v));
        }
    }
}

TEST(Spheres, RadiusTwo) {
    auto s = sphere_of_radius(octahedron(), 0, 2);
    ASSERT_EQ(s.order(), 1u);
    EXPECT_EQ(s.vertices().front(), 3u);
    auto t = sphere_of_radius(icosahedron(), 0, 2);
    EXPECT_TRUE(are_isomorphic(t, cycle(5)));
    auto z = sphere_of_radius(icosahedron(), 4, 0);
    ASSERT_EQ(z.order(), 1u);
    EXPECT_EQ(z.vertices().front(), 4u);
}

TEST(Distance, Examples) {
    EXPECT_EQ(distance(octahedron(), 0, 3), 2u);
    EXPECT_EQ(distance(octahedron(), 5, 5), 0u);
    auto two = build_graph({0, 1, 2, 3}, {{0, 1}, {2, 3}});
    EXPECT_FALSE(distance(two, 0, 3).has_value());
}

TEST(Distance, MatchesFloydWarshall) {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        auto g = oracle::random_graph(11, 0.25, seed);
        auto ref = oracle::all_pairs(g);
        for (std::size_t i = 0; i < g.order(); ++i) {
            for (std::size_t j = 0; j < g.order(); ++j) {
                auto d = distance(g, g.vertices()[i], g.vertices()[j]);
                if (ref[i][j] < 0) {
                    EXPECT_FALSE(d.has_value());
                } else {
                    ASSERT_TRUE(d.has_value());
                    EXPECT_EQ(static_cast<long>(*d), ref[i][j]);
                }
            }
        }
    }
}

TEST(Distance, IsAMetricOnComponents) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto g = oracle::random_graph(9, 0.35, seed);
        for (Vertex a : g.vertices()) {
            for (Vertex b : g.vertices()) {
                auto ab = distance(g, a, b);
                EXPECT_EQ(ab, distance(g, b, a));
                if (!ab) continue;
                for (Vertex c : g.vertices()) {
                    auto bc = distance(g, b, c);
                    auto ac = distance(g, a, c);
                    if (bc) {
                        ASSERT_TRUE(ac.has_value());
                        EXPECT_LE(*ac, *ab + *bc);
                    }
                }
            }
        }
    }
}

TEST(Induced, Examples) {
    EXPECT_TRUE(are_isomorphic(induced(octahedron(), {0, 1, 2}), complete(3)));
    EXPECT_TRUE(induced(octahedron(), VertexSubset{}).empty());
    auto g = induced(cycle(6), {0, 2, 4});
    EXPECT_EQ(g.order(), 3u);
    EXPECT_EQ(g.size(), 0u);
}

TEST(Isomorphism, Examples) {
    auto c4 = cycle(4);
    auto relabeled = oracle::relabel(c4, 9);
    auto cert = are_isomorphic(c4, relabeled);
    ASSERT_TRUE(cert);
    EXPECT_TRUE(is_isomorphism(c4, relabeled, *cert));
    EXPECT_FALSE(are_isomorphic(c4, complete(4)));
    EXPECT_TRUE(are_isomorphic(octahedron(), suspend(cycle(4))));
}

TEST(Isomorphism, AgreesWithPermutationSearch) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto g = oracle::random_graph(7, 0.45, seed);
        auto h = oracle::random_graph(7, 0.45, seed + 1000);
        auto h2 = oracle::relabel(g, seed);
        EXPECT_EQ(are_isomorphic(g, h).has_value(), oracle::brute_isomorphic(g, h)) << "seed " << seed;
        EXPECT_TRUE(are_isomorphic(g, h2).has_value());
    }
}

TEST(Isomorphism, EquivalenceRelation) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        auto g = oracle::random_graph(9, 0.4, seed);
        auto self = are_isomorphic(g, g);
        ASSERT_TRUE(self);
        EXPECT_TRUE(is_isomorphism(g, g, *self));
        auto h = oracle::relabel(g, seed * 7);
        auto k = oracle::relabel(h, seed * 13);
        auto gh = are_isomorphic(g, h);
        auto hk = are_isomorphic(h, k);
        ASSERT_TRUE(gh && hk);
        EXPECT_TRUE(is_isomorphism(h, g, gh->inverse()));
        EXPECT_TRUE(is_isomorphism(g, k, gh->then(*hk)));
    }
}

TEST(Isomorphism, CanonicalCodeIsLabelInvariant) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto g = oracle::random_graph(14, 0.3, seed);
        auto h = oracle::relabel(g, seed + 5);
        EXPECT_EQ(canonical_form(g).code, canonical_form(h).code);
    }
    auto a = six_hundred_cell();
    EXPECT_EQ(canonical_form(a).code, canonical_form(oracle::relabel(a, 77)).code);
}

TEST(Automorphisms, Examples) {
    EXPECT_EQ(automorphisms(cycle(4)).size(), 8u);
    EXPECT_EQ(automorphisms(complete(3)).size(), 6u);
    EXPECT_EQ(automorphisms(complete(2)).size(), 2u);
    EXPECT_EQ(automorphisms(octahedron()).size(), 48u);
    EXPECT_EQ(automorphisms(icosahedron()).size(), 120u);
    EXPECT_EQ(automorphisms(cross_polytope(3)).size(), 384u);
    EXPECT_TRUE(automorphisms(cycle(5)).front().is_identity());
}

TEST(Automorphisms, CountMatchesPermutationSearch) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto g = oracle::random_graph(7, 0.5, seed);
        EXPECT_EQ(automorphisms(g).size(), oracle::brute_automorphism_count(g)) << "seed " << seed;
    }
}

TEST(Automorphisms, FormAGroup) {
    for (const auto& g : {cycle(6), octahedron(), icosahedron(), wheel(5)}) {
        auto all = automorphisms(g);
        ASSERT_LE(all.size(), 120u);
        std::set<VertexMap> set(all.begin(), all.end());
        for (const auto& a : all) {
            EXPECT_TRUE(is_isomorphism(g, g, a));
            EXPECT_TRUE(set.count(a.inverse()));
            for (const auto& b : all) EXPECT_TRUE(set.count(a.then(b)));
        }
    }
}

TEST(Automorphisms, CapIsReported) {
    AutomorphismLimits tight{60, 10};
    EXPECT_THROW(automorphisms(octahedron(), tight), BudgetExceeded);
    EXPECT_THROW(automorphisms(six_hundred_cell()), BudgetExceeded);
}

TEST(Automorphisms, MappingBetweenVertices) {
    auto g = icosahedron();
    for (Vertex v : g.vertices()) {
        auto m = automorphism_mapping(g, 0, v);
        ASSERT_TRUE(m);
        EXPECT_EQ((*m)(0), v);
        EXPECT_TRUE(is_isomorphism(g, g, *m));
    }
    EXPECT_FALSE(automorphism_mapping(wheel(5), 0, 5));
}

TEST(VertexSubsetOps, SortsAndDeduplicates) {
    VertexSubset s{5, 1, 5, 3};
    EXPECT_EQ(s.members(), (std::vector<Vertex>{1, 3, 5}));
    EXPECT_TRUE(s.contains(3));
    EXPECT_TRUE(s.includes(VertexSubset{1, 5}));
    EXPECT_FALSE(s.includes(VertexSubset{2}));
}
