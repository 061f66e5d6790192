#include "tbp/beerpath.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "tbp/generator.hpp"
#include "tbp/oracle.hpp"

namespace tbp {
namespace {

using Times = std::vector<Time>;

TEST(Mseap, SingleSourceCoincidesWithEarliestArrival) {
  Times init{0, kInf, kInf};
  EXPECT_EQ(mseap_stream(g1(), whole(), init), (Times{0, 3, 3}));
  // one-pass textbook earliest arrival, reimplemented here as the reference
  Times reference{0, kInf, kInf};
  for (const TemporalEdge& e : g1().ascending())
    if (reference[e.from] <= e.depart && e.arrive() <= 10)
      reference[e.to] = std::min(reference[e.to], e.arrive());
  EXPECT_EQ(mseap_stream(g1(), whole(), init), reference);
}

TEST(Mseap, MultipleSources) {
  EXPECT_EQ(mseap_stream(g1(), whole(), Times{0, 6, kInf}), (Times{0, 3, 3}));
  EXPECT_EQ(mseap_stream(g1(), whole(), Times{kInf, kInf, kInf}),
            (Times{kInf, kInf, kInf}));
}

TEST(Mseap, RejectsInitOutsideWindow) {
  EXPECT_THROW(mseap_stream(g1(), TimeWindow(2, 10), Times{0, kInf, kInf}),
               std::invalid_argument);
  EXPECT_THROW(mseap_stream(g1(), whole(), Times{0, kInf}),
               std::invalid_argument);
}

TEST(Mseap, AdjacencyListVariantAgrees) {
  for (const Times& init :
       {Times{0, kInf, kInf}, Times{0, 6, kInf}, Times{kInf, kInf, kInf},
        Times{10, 2, 7}}) {
    EXPECT_EQ(mseap_adjlist(g1(), whole(), init),
              mseap_stream(g1(), whole(), init));
  }
}

TEST(Mseap, AdjacencyListRejectsUnprunedGraph) {
  EXPECT_THROW(mseap_adjlist(g3(), whole(), Times{0, kInf}),
               std::invalid_argument);
  EXPECT_NO_THROW(
      mseap_adjlist(remove_dominated_edges(g3()), whole(), Times{0, kInf}));
}

TEST(Mtldp, StreamExamples) {
  EXPECT_EQ(mtldp_stream(g1(), whole(), Times{kNegInf, kNegInf, 10}),
            (Times{2, 6, 10}));
  EXPECT_EQ(mtldp_stream(g1(), whole(), Times{kNegInf, kNegInf, 7}),
            (Times{2, kNegInf, 7}));
  EXPECT_EQ(mtldp_stream(g1(), whole(), Times{kNegInf, kNegInf, kNegInf}),
            (Times{kNegInf, kNegInf, kNegInf}));
}

TEST(Mtldp, AdjacencyListVariantAgrees) {
  for (const Times& fin :
       {Times{kNegInf, kNegInf, 10}, Times{kNegInf, kNegInf, 7},
        Times{3, 8, 9}, Times{kNegInf, kNegInf, kNegInf}}) {
    EXPECT_EQ(mtldp_adjlist(g1(), whole(), fin),
              mtldp_stream(g1(), whole(), fin));
  }
  EXPECT_THROW(mtldp_adjlist(g3(), whole(), Times{kNegInf, 5}),
               std::invalid_argument);
}

TEST(ActiveTimes, BinarySearches) {
  BeerConfig bc = g1_beer();
  EXPECT_EQ(bc.min_active_at_or_after(1, 3), 5);
  EXPECT_EQ(bc.min_active_at_or_after(1, 6), kInf);
  EXPECT_EQ(bc.max_active_at_or_before(1, 6), 5);
  EXPECT_EQ(bc.max_active_at_or_before(1, 4), kNegInf);
  BeerConfig multi({0}, {{2, 5, 9}}, 3);
  EXPECT_EQ(multi.min_active_at_or_after(0, 5), 5);
  EXPECT_EQ(multi.max_active_at_or_before(0, 5), 5);
  EXPECT_THROW(bc.min_active_at_or_after(0, 3), std::invalid_argument);
  EXPECT_THROW(bc.max_active_at_or_before(2, 3), std::invalid_argument);
}

TEST(Eabp, G1Examples) {
  EXPECT_EQ(eabp(g1(), 0, whole(), g1_beer()), (Times{kInf, 5, 8}));
  EXPECT_EQ(eabp(g1(), 0, TimeWindow(0, 7), g1_beer()),
            (Times{kInf, 5, kInf}));
  BeerConfig inactive({1}, {{}}, 3);
  EXPECT_EQ(eabp(g1(), 0, whole(), inactive), (Times{kInf, kInf, kInf}));
  EXPECT_EQ(eabp(g1(), 0, whole(), g1_beer(), Variant::AdjList),
            (Times{kInf, 5, 8}));
}

TEST(Ldbp, G1Examples) {
  EXPECT_EQ(ldbp(g1(), 2, whole(), g1_beer()), (Times{1, 5, kNegInf}));
  EXPECT_EQ(ldbp(g1(), 2, TimeWindow(0, 7), g1_beer()),
            (Times{kNegInf, kNegInf, kNegInf}));
  BeerConfig none({}, {}, 3);
  EXPECT_EQ(ldbp(g1(), 2, whole(), none),
            (Times{kNegInf, kNegInf, kNegInf}));
  EXPECT_EQ(ldbp(g1(), 2, whole(), g1_beer(), Variant::AdjList),
            (Times{1, 5, kNegInf}));
}

TEST(Fbp, G1Examples) {
  EXPECT_EQ(fbp(g1(), 0, whole(), g1_beer()), (Times{kInf, 4, 7}));
  BeerConfig at_three({1}, {{3}}, 3);
  EXPECT_EQ(fbp(g1(), 0, whole(), at_three)[2], 7);
  BeerConfig unreachable({1}, {{20}}, 3);
  EXPECT_EQ(fbp(g1(), 0, whole(), unreachable),
            (Times{kInf, kInf, kInf}));
}

TEST(Sbp, G1Examples) {
  EXPECT_EQ(sbp(g1(), 0, 2, whole(), g1_beer()), 4);
  EXPECT_EQ(sbp(g1(), 0, 2, TimeWindow(0, 7), g1_beer()), kInf);
  EXPECT_EQ(sbp(g1(), 2, 0, whole(), g1_beer()), kInf);  // no outgoing edges
}

TEST(BeerObjectives, SourceIsBeerVertex) {
  // journeys out of the beer vertex itself: wait for the active instant,
  // then leave; staying put is a valid beer journey too
  BeerConfig at_source({0}, {{1}}, 3);
  EXPECT_EQ(eabp(g2(), 0, whole(), at_source), (Times{1, 2, 4}));
  EXPECT_EQ(fbp(g2(), 0, whole(), at_source), (Times{0, 1, 3}));
  EXPECT_EQ(sbp(g2(), 0, 2, whole(), at_source), 2);
  EXPECT_EQ(sbp(g2(), 0, 0, whole(), at_source), 0);
  auto oracle = oracle_one_to_all(g2(), 0, whole(), at_source);
  EXPECT_EQ(eabp(g2(), 0, whole(), at_source), oracle.eabp);
  EXPECT_EQ(fbp(g2(), 0, whole(), at_source), oracle.fbp);
}

TEST(BeerObjectives, TargetIsBeerVertex) {
  // arriving, then waiting for the beer at the destination
  BeerConfig at_target({2}, {{8}}, 3);
  EXPECT_EQ(eabp(g2(), 0, whole(), at_target), (Times{kInf, kInf, 8}));
  EXPECT_EQ(fbp(g2(), 0, whole(), at_target), (Times{kInf, kInf, 7}));
  EXPECT_EQ(sbp(g2(), 0, 2, whole(), at_target), 2);
  EXPECT_EQ(ldbp(g2(), 2, whole(), at_target), (Times{1, 3, 8}));
}

TEST(BeerObjectives, MatchOracleOnRandomInstances) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Instance inst = gen_instance(InstanceSpec{.seed = seed});
    const TemporalGraph& g = inst.graph;
    SplitMix64 rng(seed ^ 0xfeed);
    TimeWindow w = random_window(rng, 35);
    Vertex x = static_cast<Vertex>(rng.range(0, g.vertex_count() - 1));
    auto oracle = oracle_one_to_all(g, x, w, inst.beer);
    EXPECT_EQ(eabp(g, x, w, inst.beer), oracle.eabp) << "seed " << seed;
    EXPECT_EQ(fbp(g, x, w, inst.beer), oracle.fbp) << "seed " << seed;
    for (Vertex y = 0; y < g.vertex_count(); ++y)
      EXPECT_EQ(sbp(g, x, y, w, inst.beer), oracle.sbp[y])
          << "seed " << seed << " y " << y;
  }
}

}  // namespace
}  // namespace tbp
