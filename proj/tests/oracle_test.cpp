#include "tbp/oracle.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "tbp/generator.hpp"

namespace tbp {
namespace {

TEST(WalkEnumeration, G1HasExactlyThreeWalks) {
  auto walks = enumerate_beer_walks(g1(), 0, whole(), g1_beer());
  ASSERT_EQ(walks.size(), 3u);
  // expansion is depth-first over departure-ordered edges
  EXPECT_EQ(walks[0].edges.size(), 2u);  // 0 -> 1 -> 2
  EXPECT_TRUE(walks[0].beer_ok);
  EXPECT_EQ(walks[0].start, 1);
  EXPECT_EQ(walks[0].end, 8);
  EXPECT_EQ(walks[0].distance, 4);
  EXPECT_EQ(walks[1].edges.size(), 1u);  // 0 -> 1, beer on arrival
  EXPECT_TRUE(walks[1].beer_ok);
  EXPECT_EQ(walks[2].edges.size(), 1u);  // 0 -> 2, no beer
  EXPECT_FALSE(walks[2].beer_ok);
}

TEST(WalkEnumeration, EmptyCases) {
  EXPECT_TRUE(enumerate_beer_walks(g1(), 2, whole(), g1_beer()).empty());
  EXPECT_TRUE(
      enumerate_beer_walks(g1(), 0, TimeWindow(9, 10), g1_beer()).empty());
}

TEST(Objectives, G1PinnedValues) {
  ObjectiveValues v = oracle_objectives(g1(), 0, 2, whole(), g1_beer());
  EXPECT_EQ(v.eabp, 8);
  EXPECT_EQ(v.ldbp, 1);
  EXPECT_EQ(v.fbp, 7);
  EXPECT_EQ(v.sbp, 4);
  // arrival at the beer vertex itself counts once the beer is in hand
  EXPECT_EQ(oracle_objectives(g1(), 0, 1, whole(), g1_beer()).eabp, 5);
  BeerConfig inactive({1}, {{}}, 3);
  ObjectiveValues none = oracle_objectives(g1(), 0, 2, whole(), inactive);
  EXPECT_EQ(none.eabp, kInf);
  EXPECT_EQ(none.ldbp, kNegInf);
  EXPECT_EQ(none.fbp, kInf);
  EXPECT_EQ(none.sbp, kInf);
}

TEST(Generator, DeterministicUnderSeed) {
  Instance a = gen_instance(InstanceSpec{.seed = 1});
  Instance b = gen_instance(InstanceSpec{.seed = 1});
  std::ostringstream ga, gb;
  write_edge_stream(ga, a.graph);
  write_edge_stream(gb, b.graph);
  std::ostringstream ba, bb;
  write_beer_config(ba, a.beer);
  write_beer_config(bb, b.beer);
  EXPECT_EQ(ga.str(), gb.str());
  EXPECT_EQ(ba.str(), bb.str());

  Instance c = gen_instance(InstanceSpec{.seed = 2});
  std::ostringstream gc;
  write_edge_stream(gc, c.graph);
  EXPECT_NE(ga.str(), gc.str());
}

TEST(Generator, EdgelessSpec) {
  Instance inst = gen_instance(InstanceSpec{.seed = 7, .max_edges = 0});
  EXPECT_EQ(inst.graph.stats().edge_count, 0u);
}

TEST(Generator, RejectsOversizedSpec) {
  EXPECT_THROW(gen_instance(InstanceSpec{.seed = 1, .max_edges = 31}),
               std::invalid_argument);
}

TEST(ReferenceFrontiers, MatchHandDerivation) {
  auto sa = oracle_sa_frontiers(g1(), 0, whole());
  EXPECT_EQ(sa[1], (std::vector<FrontierPair>{{1, 3}}));
  auto ds = oracle_ds_frontiers(g1(), 2, whole());
  EXPECT_EQ(ds[0], (std::vector<FrontierPair>{{1, 2}}));
  TemporalGraph empty(1, {});
  EXPECT_TRUE(oracle_sa_frontiers(empty, 0, whole())[0].empty());
}

// Every reported optimum is witnessed by an enumerated qualifying walk (or
// the implicit stay-put walk at the source), and no qualifying walk beats
// it. Endpoint beer stops adjust arrival/start instants but never distance.
TEST(Objectives, WitnessedByEnumeratedWalks) {
  for (std::uint64_t seed = 50; seed < 90; ++seed) {
    Instance inst = gen_instance(InstanceSpec{.seed = seed});
    const TemporalGraph& g = inst.graph;
    SplitMix64 rng(seed);
    TimeWindow w = random_window(rng, 35);
    Vertex x = static_cast<Vertex>(rng.range(0, g.vertex_count() - 1));
    auto walks = enumerate_beer_walks(g, x, w, inst.beer);
    auto oracle = oracle_one_to_all(g, x, w, inst.beer);
    bool stay_put = inst.beer.is_beer(x) &&
                    inst.beer.min_active_at_or_after(x, w.alpha) <= w.omega;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      Time best_dist = v == x && stay_put ? 0 : kInf;
      bool any = v == x && stay_put;
      for (const WalkRecord& rec : walks) {
        if (!rec.beer_ok || rec.edges.back().to != v) continue;
        any = true;
        best_dist = std::min(best_dist, rec.distance);
        EXPECT_GE(rec.distance, oracle.sbp[v]);
      }
      EXPECT_EQ(oracle.eabp[v] != kInf, any) << "seed " << seed << " v " << v;
      EXPECT_EQ(oracle.fbp[v] != kInf, any) << "seed " << seed << " v " << v;
      EXPECT_EQ(oracle.sbp[v], best_dist) << "seed " << seed << " v " << v;
    }
  }
}

}  // namespace
}  // namespace tbp
