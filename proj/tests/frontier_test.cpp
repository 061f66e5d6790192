#include "tbp/frontier.hpp"

#include <gtest/gtest.h>

#include "tbp/generator.hpp"
#include "tbp/oracle.hpp"

namespace tbp {
namespace {

TEST(Frontier, KeepsMutuallyNonDominatedPairs) {
  SaFrontier f;
  EXPECT_TRUE(f.insert(2, 5));
  EXPECT_TRUE(f.insert(4, 8));
  EXPECT_TRUE(f.insert(1, 3));
  EXPECT_EQ(f.size(), 3u);
  EXPECT_TRUE(f.well_formed());
}

TEST(Frontier, RejectsDominatedCandidate) {
  SaFrontier f;
  f.insert(3, 4);
  EXPECT_FALSE(f.insert(2, 7));  // starts earlier, arrives later
  EXPECT_FALSE(f.insert(3, 4));  // exact duplicate
  EXPECT_EQ(f.size(), 1u);
}

TEST(Frontier, EvictsDominatedResidents) {
  SaFrontier f;
  f.insert(1, 6);
  f.insert(2, 7);
  f.insert(3, 8);
  EXPECT_TRUE(f.insert(4, 5));  // dominates all three
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.pairs().front(), (FrontierPair{4, 5}));
}

TEST(Frontier, EqualKeyKeepsBetterValue) {
  SaFrontier f;
  f.insert(2, 9);
  EXPECT_TRUE(f.insert(2, 5));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.pairs().front(), (FrontierPair{2, 5}));
  EXPECT_FALSE(f.insert(2, 6));
}

TEST(Frontier, EarlierKeyDominanceShape) {
  DaFrontier f;  // key = arrival, value = distance; earlier arrivals win ties
  f.insert(5, 3);
  EXPECT_FALSE(f.insert(7, 3));  // same distance, later arrival
  EXPECT_TRUE(f.insert(7, 2));
  EXPECT_TRUE(f.insert(3, 9));
  EXPECT_TRUE(f.well_formed());
  EXPECT_TRUE(f.insert(3, 1));  // evicts (5,3) and (7,2)
  EXPECT_EQ(f.size(), 1u);
}

TEST(Frontier, Lookups) {
  SaFrontier f;
  f.insert(1, 4);
  f.insert(3, 6);
  f.insert(7, 9);
  EXPECT_EQ(f.max_key_at_most(3)->key, 3);
  EXPECT_EQ(f.max_key_at_most(0), std::nullopt);
  EXPECT_EQ(f.min_key_at_least(4)->key, 7);
  EXPECT_EQ(f.min_key_at_least(8), std::nullopt);
  EXPECT_EQ(f.max_value_at_most(6)->value, 6);
  EXPECT_EQ(f.max_value_at_most(5)->value, 4);
  EXPECT_EQ(f.max_value_at_most(3), std::nullopt);
}

// Inserting any pair multiset in any order must leave exactly its
// non-dominated subset, independently recomputed by the batch filter.
template <Dominance D>
void insertion_matches_batch_filter(std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<FrontierPair> pool;
  int count = static_cast<int>(rng.range(0, 40));
  for (int i = 0; i < count; ++i)
    pool.push_back(FrontierPair{rng.range(0, 12), rng.range(0, 12)});
  Frontier<D> f;
  for (const FrontierPair& p : pool) f.insert(p.key, p.value);
  EXPECT_TRUE(f.well_formed());
  EXPECT_EQ(f.pairs(), oracle_detail::filter_dominated(pool, D)) << "seed "
                                                                 << seed;
}

TEST(Frontier, RandomInsertionMatchesBatchFilter) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    insertion_matches_batch_filter<Dominance::LaterKey>(seed);
    insertion_matches_batch_filter<Dominance::EarlierKey>(seed);
  }
}

TEST(Frontier, RandomLookupsMatchLinearScan) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SplitMix64 rng(seed);
    SaFrontier f;
    for (int i = 0; i < 20; ++i) f.insert(rng.range(0, 30), rng.range(0, 30));
    for (Time bound = -1; bound <= 31; ++bound) {
      std::optional<FrontierPair> want;
      for (const FrontierPair& p : f.pairs())
        if (p.key >= bound && !want) want = p;
      EXPECT_EQ(f.min_key_at_least(bound), want);
      want.reset();
      for (const FrontierPair& p : f.pairs())
        if (p.value <= bound) want = p;
      EXPECT_EQ(f.max_value_at_most(bound), want);
    }
  }
}

}  // namespace
}  // namespace tbp
