#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbow/connectivity.hpp"
#include "rainbow/generators.hpp"

using namespace rainbow;

TEST(SplitMix64, ReferenceOutputs) {
  // Published reference stream for seed 0.
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFull);
  EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ull);
  EXPECT_EQ(rng.next(), 0x06C45D188009454Full);
}

TEST(SplitMix64, BelowStaysInRange) {
  SplitMix64 rng(42);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) ++hits[rng.below(7)];
  for (int h : hits) EXPECT_GT(h, 800);
  EXPECT_THROW(rng.below(0), GeneratorError);
}

TEST(CliqueTower, Examples) {
  const Graph prism = clique_tower(3, 1);
  EXPECT_EQ(prism.n(), 6);
  EXPECT_EQ(prism.m(), 9);
  EXPECT_EQ(vertex_connectivity(prism), 3);
  EXPECT_EQ(metrics(prism).diameter, 2);
  const Graph k4k2 = clique_tower(4, 1);
  EXPECT_EQ(k4k2.n(), 8);
  EXPECT_EQ(vertex_connectivity(k4k2), 4);
  const Graph tall = clique_tower(3, 10);
  EXPECT_EQ(tall.n(), 33);
  EXPECT_EQ(metrics(tall).diameter, 11);
  EXPECT_THROW(clique_tower(1, 3), GeneratorError);
  EXPECT_THROW(clique_tower(3, 0), GeneratorError);
}

TEST(CliqueTower, DiameterAndConnectivityLaws) {
  for (int kappa = 3; kappa <= 5; ++kappa) {
    for (int layers = 1; layers <= 6; ++layers) {
      const Graph g = clique_tower(kappa, layers);
      const auto d = oracle::distances(g);
      int diam = 0;
      for (const auto& row : d)
        for (int x : row) diam = std::max(diam, x);
      EXPECT_EQ(diam, layers + 1);
      if (g.n() <= 20) EXPECT_EQ(oracle::min_vertex_cut(g), kappa);
      EXPECT_EQ(vertex_connectivity(g), kappa);
    }
  }
}

TEST(Stacked, SmallCases) {
  const PlanarEmbedding four = stacked_triangulation(4, 9);
  EXPECT_EQ(four.graph(), complete_graph(4));
  EXPECT_EQ(validate_maximal_planar(four).faces, 4);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const PlanarEmbedding five = stacked_triangulation(5, seed);
    EXPECT_EQ(five.graph().n(), 5);
    EXPECT_EQ(five.graph().m(), 9);
    EXPECT_EQ(validate_maximal_planar(five).faces, 6);
  }
  EXPECT_THROW(stacked_triangulation(3, 1), GeneratorError);
}

TEST(Stacked, Fifty) {
  const PlanarEmbedding emb = stacked_triangulation(50, 7);
  EXPECT_EQ(emb.graph().m(), 144);
  EXPECT_TRUE(validate_maximal_planar(emb).maximal);
  EXPECT_GE(vertex_connectivity(emb.graph()), 3);
}

TEST(Stacked, Deterministic) {
  EXPECT_EQ(stacked_triangulation(80, 3).rotations(), stacked_triangulation(80, 3).rotations());
  EXPECT_NE(stacked_triangulation(80, 3).rotations(), stacked_triangulation(80, 4).rotations());
}

TEST(RandomGraphs, ConnectedAndDeterministic) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = random_connected_graph(9, 1, 3, seed);
    EXPECT_TRUE(is_connected(g));
    EXPECT_EQ(g, random_connected_graph(9, 1, 3, seed));
  }
  EXPECT_EQ(random_connected_graph(8, 1, 1, 5), complete_graph(8));
}

TEST(RandomGraphs, ChordsAddEdgesOnly) {
  const Graph base = clique_tower(3, 5);
  const Graph more = add_random_chords(base, 3, 11);
  EXPECT_EQ(more.m(), base.m() + 3);
  for (const Edge& e : base.edges()) EXPECT_TRUE(more.has_edge(e.u, e.v));
  EXPECT_EQ(add_random_chords(complete_graph(4), 5, 1), complete_graph(4));
}

TEST(Named, Solids) {
  const auto oct = std::get<PlanarEmbedding>(named("octahedron"));
  EXPECT_EQ(oct.graph().n(), 6);
  EXPECT_EQ(oct.graph().m(), 12);
  EXPECT_EQ(vertex_connectivity(oct.graph()), 4);
  EXPECT_TRUE(validate_maximal_planar(oct).maximal);
  const auto ico = std::get<PlanarEmbedding>(named("icosahedron"));
  EXPECT_EQ(ico.graph().n(), 12);
  EXPECT_EQ(ico.graph().m(), 30);
  EXPECT_EQ(vertex_connectivity(ico.graph()), 5);
  EXPECT_TRUE(validate_maximal_planar(ico).maximal);
}

TEST(Named, Families) {
  const auto pet = std::get<Graph>(named("petersen"));
  EXPECT_EQ(pet.n(), 10);
  EXPECT_EQ(pet.m(), 15);
  EXPECT_EQ(metrics(pet).girth, 5);
  EXPECT_EQ(std::get<Graph>(named("K6")), complete_graph(6));
  EXPECT_EQ(std::get<PlanarEmbedding>(named("K4")).graph(), complete_graph(4));
  EXPECT_EQ(std::get<Graph>(named("P5")), path_graph(5));
  EXPECT_EQ(std::get<PlanarEmbedding>(named("C7")).graph(), cycle_graph(7));
  EXPECT_EQ(std::get<Graph>(named("star4")).m(), 4);
  EXPECT_THROW(named("dodecahedron"), GeneratorError);
  EXPECT_THROW(named("K"), GeneratorError);
}
