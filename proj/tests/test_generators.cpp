#include <gtest/gtest.h>

#include <gsphere/gsphere.hpp>

#include "support/battery.hpp"
#include "support/oracles.hpp"

using namespace gsphere;

TEST(Lcg64, ReferenceOutputs) {
    Lcg64 rng(42);
    std::vector<std::uint32_t> got;
    for (int i = 0; i < 5; ++i) got.push_back(rng.next());
    EXPECT_EQ(got, (std::vector<std::uint32_t>{2440530669u, 968358053u, 1773127077u, 2707539007u, 2921212588u}));
    EXPECT_EQ(Lcg64(42).below(10), 5u);
}

TEST(Lcg64, StepMatchesHandArithmetic) {
    std::uint64_t s = 7;
    Lcg64 rng(7);
    for (int i = 0; i < 20; ++i) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        EXPECT_EQ(rng.next(), static_cast<std::uint32_t>(s >> 32));
    }
}

TEST(Lcg64, DerivedSeedsDiffer) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 200; ++i) seen.insert(derive_seed(5, i));
    EXPECT_EQ(seen.size(), 200u);
    EXPECT_EQ(derive_seed(5, 3), derive_seed(5, 3));
}

TEST(Families, Volumes) {
    EXPECT_EQ(volumes(octahedron()), (VolumeVector{6, 12, 8}));
    EXPECT_EQ(volumes(icosahedron()), (VolumeVector{12, 30, 20}));
    EXPECT_EQ(volumes(cross_polytope(3)), (VolumeVector{8, 24, 32, 16}));
    EXPECT_EQ(volumes(cross_polytope(4)), (VolumeVector{10, 40, 80, 80, 32}));
    EXPECT_EQ(volumes(six_hundred_cell()), (VolumeVector{120, 720, 1200, 600}));
    EXPECT_EQ(volumes(stellated_cube()), (VolumeVector{14, 36, 24}));
    EXPECT_EQ(volumes(wheel(6)), (VolumeVector{7, 12, 6}));
    EXPECT_EQ(volumes(cycle(5)), (VolumeVector{5, 5}));
    EXPECT_THROW(cycle(2), PreconditionError);
}

TEST(Families, CrossPolytopeUnitSpheres) {
    for (int d = 1; d <= 4; ++d) {
        auto g = cross_polytope(d);
        auto lower = cross_polytope(d - 1);
        for (Vertex x : g.vertices()) EXPECT_TRUE(are_isomorphic(unit_sphere(g, x), lower));
    }
}

TEST(Families, SixHundredCellIsVertexTransitiveWithIcosahedralLinks) {
    auto g = six_hundred_cell();
    auto ico = icosahedron();
    for (Vertex x : g.vertices()) {
        ASSERT_EQ(g.degree(x), 12u);
        EXPECT_TRUE(are_isomorphic(unit_sphere(g, x), ico));
    }
    for (Vertex x : {1u, 17u, 63u, 119u}) {
        auto m = automorphism_mapping(g, 0, x);
        ASSERT_TRUE(m);
        EXPECT_EQ((*m)(0), x);
        for (auto [a, b] : g.edges()) EXPECT_TRUE(g.adjacent((*m)(a), (*m)(b)));
    }
}

TEST(Families, StellatedCubeIsTheOctahedronCompletion) {
    EXPECT_TRUE(are_isomorphic(stellated_cube(), dual_completion_2d(octahedron())));
    EXPECT_TRUE(classify(stellated_cube()).is_sphere(2));
}

TEST(Families, ParseFamily) {
    EXPECT_EQ(parse_family("six_hundred_cell"), Family::six_hundred_cell);
    EXPECT_EQ(parse_family("cross_polytope"), Family::cross_polytope);
    EXPECT_FALSE(parse_family("dodecahedron"));
    EXPECT_EQ(generate({Family::cycle, 6}), cycle(6));
}

TEST(LoopSubdivide, Volumes) {
    auto once = loop_subdivide(octahedron());
    EXPECT_EQ(volumes(once), (VolumeVector{18, 48, 32}));
    EXPECT_EQ(volumes(loop_subdivide(icosahedron())), (VolumeVector{42, 120, 80}));
    EXPECT_TRUE(classify(once).is_sphere(2));
    // originals keep their degree, midpoints get degree 6
    for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(once.degree(v), 4u);
    for (Vertex v = 6; v < 18; ++v) EXPECT_EQ(once.degree(v), 6u);
    EXPECT_THROW(loop_subdivide(cross_polytope(3)), PreconditionError);
}

TEST(RandomRefine, Deterministic) {
    auto a = random_refine(cross_polytope(3), 5, 1234);
    auto b = random_refine(cross_polytope(3), 5, 1234);
    EXPECT_EQ(a.graph, b.graph);
    EXPECT_EQ(a.records.size(), 5u);
    auto c = random_refine(cross_polytope(3), 5, 1235);
    EXPECT_EQ(c.graph.order(), a.graph.order());
}

TEST(RandomRefine, StaysASphere) {
    auto r = random_refine(cross_polytope(3), 5, 9);
    EXPECT_EQ(r.graph.order(), 13u);
    EXPECT_TRUE(classify(r.graph).is_sphere(3));
    EXPECT_EQ(euler_characteristic(r.graph), 0);
    auto p = random_refine(octahedron(), 4, 9, {RefineMode::paired});
    EXPECT_EQ(p.records.size(), 8u);
    EXPECT_TRUE(eulerian_obstructions(p.graph, 2).empty());
    EXPECT_THROW(random_refine(complete(4), 1, 1), PreconditionError);
}

TEST(RandomRefine, FirstEdgeFollowsTheGenerator) {
    auto g = octahedron();
    auto edges = g.edges();
    auto r = random_refine(g, 1, 42);
    EXPECT_EQ(r.records.front().edge, edges[Lcg64(42).below(static_cast<std::uint32_t>(edges.size()))]);
}
