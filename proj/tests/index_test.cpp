#include "tbp/nondom_index.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "tbp/beerpath.hpp"
#include "tbp/generator.hpp"

namespace tbp {
namespace {

using Pairs = std::vector<FrontierPair>;

TEST(IndexBuild, G1Lists) {
  NondomIndex ix = NondomIndex::build(g1(), g1_beer());
  EXPECT_EQ(ix.vertex_count(), 3);
  EXPECT_EQ(ix.beer_count(), 1);
  EXPECT_EQ(ix.horizon(), 8);
  EXPECT_EQ(ix.to_beer(0, 0).pairs(), (Pairs{{1, 3}}));
  EXPECT_EQ(ix.from_beer(0, 2).pairs(), (Pairs{{6, 8}}));
  EXPECT_TRUE(ix.from_beer(0, 0).empty());
  // the beer vertex's own row holds its trivial departure pairs
  EXPECT_EQ(ix.to_beer(1, 0).pairs(), (Pairs{{6, 6}}));
}

TEST(IndexBuild, NoBeerVertices) {
  BeerConfig none({}, {}, 3);
  NondomIndex ix = NondomIndex::build(g1(), none);
  EXPECT_EQ(ix.beer_count(), 0);
  Query q{0, 2, whole(), {}};
  EXPECT_EQ(ix.query_eabp(q), kInf);
  EXPECT_EQ(ix.query_ldbp(q), kNegInf);
}

TEST(IndexQuery, EabpExamples) {
  NondomIndex ix = NondomIndex::build(g1(), g1_beer());
  EXPECT_EQ(ix.query_eabp(Query{0, 2, whole(), {true}}), 8);
  EXPECT_EQ(ix.query_eabp(Query{0, 2, whole(), {false}}), kInf);
  EXPECT_EQ(ix.query_eabp(Query{0, 2, TimeWindow(2, 10), {true}}), kInf);
}

TEST(IndexQuery, LdbpExamples) {
  NondomIndex ix = NondomIndex::build(g1(), g1_beer());
  EXPECT_EQ(ix.query_ldbp(Query{0, 2, whole(), {true}}), 1);
  EXPECT_EQ(ix.query_ldbp(Query{0, 2, TimeWindow(0, 7), {true}}), kNegInf);
  EXPECT_EQ(ix.query_ldbp(Query{0, 2, whole(), {false}}), kNegInf);
}

TEST(IndexQuery, ActivationLengthMismatch) {
  NondomIndex ix = NondomIndex::build(g1(), g1_beer());
  EXPECT_THROW(ix.query_eabp(Query{0, 2, whole(), {}}),
               std::invalid_argument);
  EXPECT_THROW(ix.query_ldbp(Query{0, 2, whole(), {true, true}}),
               std::invalid_argument);
}

TEST(IndexQuery, EndpointAtBeerVertex) {
  NondomIndex ix = NondomIndex::build(g1(), g1_beer());
  // target is the beer vertex: first-leg arrival already includes the stop
  std::vector<Time> window_times;
  for (Time t = 0; t <= 10; ++t) window_times.push_back(t);
  BeerConfig always({1}, {window_times}, 3);
  EXPECT_EQ(ix.query_eabp(Query{0, 1, whole(), {true}}),
            eabp(g1(), 0, whole(), always)[1]);
  EXPECT_EQ(ix.query_ldbp(Query{1, 2, whole(), {true}}),
            ldbp(g1(), 2, whole(), always)[1]);
  EXPECT_EQ(ix.query_eabp(Query{1, 1, whole(), {true}}), 0);
  EXPECT_EQ(ix.query_ldbp(Query{1, 1, whole(), {true}}), 10);
}

TEST(IndexQuery, SearchBudget) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Instance inst = gen_instance(InstanceSpec{.seed = seed});
    NondomIndex ix = NondomIndex::build(inst.graph, inst.beer);
    const int k = inst.beer.count();
    SplitMix64 rng(seed);
    Query q;
    q.source = static_cast<Vertex>(rng.range(0, inst.graph.vertex_count() - 1));
    q.target = static_cast<Vertex>(rng.range(0, inst.graph.vertex_count() - 1));
    q.window = random_window(rng, 35);
    for (int i = 0; i < k; ++i) q.activation.push_back(true);
    QueryStats stats;
    ix.query_eabp(q, &stats);
    EXPECT_LE(stats.to_beer_searches, k);
    EXPECT_LE(stats.from_beer_searches, k);
    stats = {};
    ix.query_ldbp(q, &stats);
    EXPECT_LE(stats.to_beer_searches, k);
    EXPECT_LE(stats.from_beer_searches, k);
  }
}

TEST(IndexPersistence, ByteIdenticalRoundTrip) {
  for (std::uint64_t seed : {1ull, 5ull, 9ull}) {
    Instance inst = gen_instance(InstanceSpec{.seed = seed});
    NondomIndex ix = NondomIndex::build(inst.graph, inst.beer);
    std::ostringstream first;
    ix.save(first);
    std::istringstream in(first.str());
    NondomIndex reloaded = NondomIndex::load(in);
    std::ostringstream second;
    reloaded.save(second);
    EXPECT_EQ(first.str(), second.str());
    Query q{0, inst.graph.vertex_count() - 1, whole(),
            std::vector<bool>(inst.beer.count(), true)};
    EXPECT_EQ(reloaded.query_eabp(q), ix.query_eabp(q));
    EXPECT_EQ(reloaded.query_ldbp(q), ix.query_ldbp(q));
  }
}

TEST(IndexPersistence, RejectsCorruptedInput) {
  std::istringstream bad_version("tbp-index 9\n3 1 8\nbeer 1\nend\n");
  EXPECT_THROW(NondomIndex::load(bad_version), ParseError);
  std::istringstream truncated("tbp-index 1\n3 1 8\nbeer 1\nto 0 0 2 1 3\n");
  EXPECT_THROW(NondomIndex::load(truncated), ParseError);
  std::istringstream dominated(
      "tbp-index 1\n3 1 8\nbeer 1\nto 0 0 2 1 3 2 3\nend\n");
  EXPECT_THROW(NondomIndex::load(dominated), ParseError);
}

}  // namespace
}  // namespace tbp
