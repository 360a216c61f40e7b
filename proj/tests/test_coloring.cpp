#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/generators.hpp"

using namespace rainbow;

namespace {

// Colors a cycle graph's edges in cycle order 0-1, 1-2, ..., (n-1)-0.
EdgeColoring around(const Graph& c, const std::vector<Color>& seq) {
  EdgeColoring col(c);
  for (int i = 0; i < c.n(); ++i) col.set(c.edge_id(i, (i + 1) % c.n()), seq[i]);
  return col;
}

}  // namespace

TEST(EdgeColoring, PaletteAndTotality) {
  const Graph g = path_graph(4);
  EdgeColoring col(g);
  EXPECT_FALSE(col.is_total());
  col.set(0, 5);
  col.set(1, 5);
  EXPECT_EQ(col.palette_size(), 1);
  col.set(2, 9);
  EXPECT_TRUE(col.is_total());
  EXPECT_EQ(col.palette_size(), 2);
}

TEST(ColorRegistry, InjectiveFirstUse) {
  ColorRegistry reg;
  EXPECT_EQ(reg.id("c1"), 1);
  EXPECT_EQ(reg.id("d"), 2);
  EXPECT_EQ(reg.id("c1"), 1);
  EXPECT_EQ(reg.name(2), "d");
  EXPECT_FALSE(reg.find("e").has_value());
  EXPECT_EQ(reg.size(), 2);
}

TEST(RainbowPath, SingleEdge) {
  const Graph k2 = complete_graph(2);
  const EdgeColoring col(std::vector<Color>{7});
  EXPECT_EQ(exists_rainbow_path(k2, col, 0, 1), (Path{0, 1}));
}

TEST(RainbowPath, RepeatedColorBlocks) {
  const Graph p3 = path_graph(3);
  const EdgeColoring col(std::vector<Color>{1, 1});
  EXPECT_FALSE(exists_rainbow_path(p3, col, 0, 2).has_value());
}

TEST(RainbowPath, C4Alternating) {
  const Graph c4 = cycle_graph(4);
  const EdgeColoring col = around(c4, {1, 2, 1, 2});
  const auto p = exists_rainbow_path(c4, col, 0, 2);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->size(), 3u);
  EXPECT_TRUE(is_rainbow_path(c4, col, *p));
  // Both 2-edge paths are rainbow.
  for (const auto& q : oracle::simple_paths(c4, 0, 2)) EXPECT_TRUE(oracle::rainbow(c4, col.colors(), q));
}

TEST(RainbowPath, PartialColoringRejected) {
  const Graph p3 = path_graph(3);
  EdgeColoring col(p3);
  col.set(0, 1);
  EXPECT_THROW(exists_rainbow_path(p3, col, 0, 2), ColoringError);
}

TEST(RainbowPath, PaletteCap) {
  const Graph p = path_graph(kMaxPalette + 2);
  std::vector<Color> colors(p.m());
  for (int i = 0; i < p.m(); ++i) colors[i] = i;
  EXPECT_THROW(exists_rainbow_path(p, EdgeColoring(colors), 0, 1), ColoringError);
}

TEST(RainbowPath, AgreesWithPathEnumeration) {
  SplitMix64 rng(99);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = random_connected_graph(7, 1, 3, seed);
    std::vector<Color> colors(g.m());
    for (auto& c : colors) c = static_cast<Color>(rng.below(4));
    const EdgeColoring col(colors);
    for (Vertex a = 0; a < g.n(); ++a) {
      for (Vertex b = a + 1; b < g.n(); ++b) {
        const auto fwd = exists_rainbow_path(g, col, a, b);
        const auto back = exists_rainbow_path(g, col, b, a);
        const bool truth = oracle::has_rainbow_path(g, colors, a, b);
        EXPECT_EQ(fwd.has_value(), truth);
        EXPECT_EQ(back.has_value(), truth);
        if (fwd) {
          EXPECT_TRUE(oracle::rainbow(g, colors, *fwd));
          EXPECT_LE(static_cast<int>(fwd->size()) - 1, col.palette_size());
          // Shortest among rainbow paths.
          std::size_t best = SIZE_MAX;
          for (const auto& p : oracle::simple_paths(g, a, b))
            if (oracle::rainbow(g, colors, p)) best = std::min(best, p.size());
          EXPECT_EQ(fwd->size(), best);
        }
      }
    }
  }
}

TEST(Verify, CompleteGraphAlwaysConnected) {
  const Graph k6 = complete_graph(6);
  EXPECT_TRUE(is_rainbow_connected(k6, EdgeColoring(std::vector<Color>(k6.m(), 3))).rainbow_connected);
}

TEST(Verify, C6Optimal) {
  const Graph c6 = cycle_graph(6);
  const auto report = is_rainbow_connected(c6, around(c6, {1, 2, 3, 1, 2, 3}));
  EXPECT_TRUE(report.rainbow_connected);
  EXPECT_FALSE(report.failing_pair.has_value());
}

TEST(Verify, C6MonochromeFailsLexFirst) {
  const Graph c6 = cycle_graph(6);
  const auto d = oracle::distances(c6);
  const auto report = is_rainbow_connected(c6, around(c6, {1, 1, 1, 1, 1, 1}));
  EXPECT_FALSE(report.rainbow_connected);
  ASSERT_TRUE(report.failing_pair.has_value());
  EXPECT_EQ(*report.failing_pair, std::make_pair(0, 2));
  EXPECT_GE(d[report.failing_pair->first][report.failing_pair->second], 2);
}

TEST(Verify, ParallelSerialAndOracleAgree) {
  SplitMix64 rng(5);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = random_connected_graph(8, 1, 4, seed);
    std::vector<Color> colors(g.m());
    for (auto& c : colors) c = static_cast<Color>(rng.below(5));
    const EdgeColoring col(colors);
    const auto par = is_rainbow_connected(g, col, {.collect_witnesses = true});
    const auto ser = is_rainbow_connected_serial(g, col, true);
    EXPECT_EQ(par.rainbow_connected, oracle::rainbow_connected(g, colors));
    EXPECT_EQ(par.rainbow_connected, ser.rainbow_connected);
    EXPECT_EQ(par.failing_pair, ser.failing_pair);
    EXPECT_EQ(par.rainbow_connected, !par.failing_pair.has_value());
    if (par.rainbow_connected) {
      EXPECT_EQ(par.witness_paths.size(), static_cast<std::size_t>(g.n() * (g.n() - 1) / 2));
      for (const auto& [pair, path] : par.witness_paths) {
        EXPECT_EQ(path.front(), pair.first);
        EXPECT_EQ(path.back(), pair.second);
        EXPECT_TRUE(oracle::rainbow(g, colors, path));
      }
    } else {
      // Reported pair is the lexicographically first failing one.
      std::optional<std::pair<Vertex, Vertex>> first;
      for (Vertex a = 0; a < g.n() && !first; ++a)
        for (Vertex b = a + 1; b < g.n() && !first; ++b)
          if (!oracle::has_rainbow_path(g, colors, a, b)) first = {a, b};
      EXPECT_EQ(par.failing_pair, first);
    }
  }
}

TEST(Verify, RejectsPartialAndDisconnected) {
  const Graph p3 = path_graph(3);
  EXPECT_THROW(is_rainbow_connected(p3, EdgeColoring(p3)), ColoringError);
  const Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(is_rainbow_connected(two, EdgeColoring(std::vector<Color>{1, 2})), GraphError);
}

TEST(CycleColoring, Sequences) {
  EXPECT_EQ(cycle_color_sequence(6), (std::vector<Color>{1, 2, 3, 1, 2, 3}));
  EXPECT_EQ(cycle_color_sequence(3), (std::vector<Color>{1, 2, 1}));
  EXPECT_EQ(cycle_color_sequence(5), (std::vector<Color>{1, 2, 3, 1, 2}));
  EXPECT_EQ(cycle_color_sequence(4, 10), (std::vector<Color>{10, 11, 10, 11}));
  EXPECT_THROW(cycle_color_sequence(2), ColoringError);
}

TEST(CycleColoring, VerifiesOnCycles) {
  for (int len = 3; len <= 12; ++len) {
    const Graph c = cycle_graph(len);
    Path cyc(len);
    for (int i = 0; i < len; ++i) cyc[i] = i;
    const EdgeColoring col = color_cycle(c, cyc);
    EXPECT_EQ(col.palette_size(), (len + 1) / 2);
    EXPECT_TRUE(is_rainbow_connected(c, col).rainbow_connected);
    EXPECT_TRUE(oracle::rainbow_connected(c, col.colors()));
  }
}

TEST(CycleColoring, PartialOnLargerGraph) {
  const Graph k4 = complete_graph(4);
  const EdgeColoring col = color_cycle(k4, {0, 1, 2, 3});
  EXPECT_FALSE(col.is_colored(k4.edge_id(0, 2)));
  EXPECT_FALSE(col.is_colored(k4.edge_id(1, 3)));
  EXPECT_EQ(col.palette_size(), 2);
  EXPECT_THROW(color_cycle(cycle_graph(5), {0, 2, 4}), ColoringError);
}

TEST(RcExact, PaperValues) {
  EXPECT_EQ(rc_exact(complete_graph(4)).value, 1);
  EXPECT_EQ(rc_exact(path_graph(4)).value, 3);
  EXPECT_EQ(rc_exact(cycle_graph(6)).value, 3);
}

TEST(RcExact, FamilyLaws) {
  for (int n = 4; n <= 8; ++n) EXPECT_EQ(rc_exact(cycle_graph(n)).value, (n + 1) / 2) << "C" << n;
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(rc_exact(complete_graph(n)).value, 1) << "K" << n;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const int n = 2 + static_cast<int>(seed % 6);
    const Graph tree = random_connected_graph(n, 0, 1, seed);
    ASSERT_EQ(tree.m(), n - 1);
    EXPECT_EQ(rc_exact(tree, {.start_at_one = true}).value, n - 1);
  }
}

TEST(RcExact, MatchesBruteForceOnTinyGraphs) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Graph g = random_connected_graph(5, 1, 2, seed);
    if (g.m() > 8) continue;
    const RcResult r = rc_exact(g, {.start_at_one = true});
    ASSERT_EQ(r.status, RcStatus::kFound);
    EXPECT_EQ(r.value, oracle::brute_rc(g)) << "seed " << seed;
    EXPECT_EQ(r.witness.palette_size(), r.value);
    EXPECT_TRUE(oracle::rainbow_connected(g, r.witness.colors()));
  }
}

TEST(RcExact, StatusCodes) {
  const RcResult small = rc_exact(path_graph(6), {.budget = 3});
  EXPECT_EQ(small.status, RcStatus::kBudgetTooSmall);
  const RcResult capped = rc_exact(petersen_graph(), {.work_cap = 10, .start_at_one = true});
  EXPECT_EQ(capped.status, RcStatus::kExceeded);
  EXPECT_GT(capped.steps, 0u);
}
