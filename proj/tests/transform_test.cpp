#include "tbp/transform.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>
#include <tuple>

#include "fixtures.hpp"
#include "tbp/beerpath.hpp"
#include "tbp/generator.hpp"

namespace tbp {
namespace {

using NodeKey = std::tuple<Vertex, Time, bool>;                  // v, t, out?
using ArcKey = std::tuple<NodeKey, NodeKey, Time>;               // + weight

std::set<NodeKey> node_set(const TransformedGraph& tg) {
  std::set<NodeKey> out;
  for (std::size_t id = 0; id < tg.node_count(); ++id) {
    const auto& nd = tg.node(static_cast<int>(id));
    out.insert({nd.orig, nd.time, nd.is_out});
  }
  return out;
}

std::multiset<ArcKey> arc_set(const TransformedGraph& tg) {
  std::multiset<ArcKey> out;
  for (std::size_t id = 0; id < tg.node_count(); ++id) {
    const auto& from = tg.node(static_cast<int>(id));
    for (const auto& arc : tg.arcs_from(static_cast<int>(id))) {
      const auto& to = tg.node(arc.to);
      out.insert({{from.orig, from.time, from.is_out},
                  {to.orig, to.time, to.is_out},
                  arc.weight});
    }
  }
  return out;
}

TEST(Transform, G2Structure) {
  TransformedGraph tg = transform(g2());
  EXPECT_EQ(tg.node_count(), 4u);
  EXPECT_EQ(node_set(tg), (std::set<NodeKey>{{0, 1, true},
                                             {1, 2, false},
                                             {1, 3, true},
                                             {2, 4, false}}));
  EXPECT_EQ(arc_set(tg),
            (std::multiset<ArcKey>{{{0, 1, true}, {1, 2, false}, 1},
                                   {{1, 2, false}, {1, 3, true}, 0},
                                   {{1, 3, true}, {2, 4, false}, 1}}));
  EXPECT_TRUE(validate_transform(g2(), tg).empty());
}

TEST(Transform, G1Structure) {
  TransformedGraph tg = transform(g1());
  EXPECT_EQ(tg.node_count(), 6u);
  EXPECT_EQ(node_set(tg), (std::set<NodeKey>{{0, 1, true},
                                             {0, 2, true},
                                             {1, 3, false},
                                             {1, 6, true},
                                             {2, 3, false},
                                             {2, 8, false}}));
  EXPECT_EQ(arc_set(tg),
            (std::multiset<ArcKey>{{{0, 1, true}, {1, 3, false}, 2},
                                   {{0, 2, true}, {2, 3, false}, 1},
                                   {{1, 6, true}, {2, 8, false}, 2},
                                   {{1, 3, false}, {1, 6, true}, 0},
                                   {{0, 1, true}, {0, 2, true}, 0},
                                   {{2, 3, false}, {2, 8, false}, 0}}));
  EXPECT_TRUE(validate_transform(g1(), tg).empty());
}

TEST(Transform, EmptyGraph) {
  TemporalGraph g(2, {});
  TransformedGraph tg = transform(g);
  EXPECT_EQ(tg.node_count(), 0u);
  EXPECT_EQ(tg.arc_count(), 0u);
  EXPECT_TRUE(validate_transform(g, tg).empty());
}

TEST(Transform, ConnectorDeduplication) {
  // two arrivals mapping to the same departure: only the later one connects
  TemporalGraph g(3, {{0, 1, 1, 1}, {0, 1, 2, 1}, {1, 2, 5, 1}});
  TransformedGraph tg = transform(g);
  EXPECT_TRUE(validate_transform(g, tg).empty());
  int connectors = 0;
  for (std::size_t id = 0; id < tg.node_count(); ++id)
    for (const auto& arc : tg.arcs_from(static_cast<int>(id)))
      if (arc.weight == 0 && !tg.node(static_cast<int>(id)).is_out &&
          tg.node(arc.to).is_out)
        ++connectors;
  EXPECT_EQ(connectors, 1);
  EXPECT_EQ(arc_set(tg).count({{1, 3, false}, {1, 5, true}, 0}), 1u);
}

TEST(FbpOnDag, G1Values) {
  TransformedGraph tg = transform(g1());
  DagRunStats stats;
  Query q{0, 0, whole(), {true}};
  auto durations = fbp_on_dag(tg, g1_beer(), q, &stats);
  EXPECT_EQ(durations, (std::vector<Time>{kInf, 2, 7}));
  EXPECT_LE(stats.max_node_visits, 2u);
  EXPECT_EQ(fbp_on_dag(tg, g1_beer(), Query{0, 0, whole(), {false}}),
            (std::vector<Time>{kInf, kInf, kInf}));
}

TEST(FbpOnDag, NoBeerVertices) {
  TransformedGraph tg = transform(g2());
  BeerConfig none({}, {}, 3);
  EXPECT_EQ(fbp_on_dag(tg, none, Query{0, 0, whole(), {}}),
            (std::vector<Time>{kInf, kInf, kInf}));
}

TEST(SbpOnDag, G1Values) {
  TransformedGraph tg = transform(g1());
  DagRunStats stats;
  Query q{0, 0, whole(), {true}};
  auto dist = sbp_on_dag(tg, g1_beer(), q, &stats);
  EXPECT_EQ(dist, (std::vector<Time>{kInf, 2, 4}));
  EXPECT_LE(stats.max_node_visits, 2u);
  EXPECT_EQ(sbp_on_dag(tg, g1_beer(), Query{0, 0, whole(), {false}}),
            (std::vector<Time>{kInf, kInf, kInf}));
}

TEST(DagQueries, TraversalOrderIrrelevant) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Instance inst = gen_instance(InstanceSpec{.seed = seed});
    TransformedGraph tg = transform(inst.graph);
    SplitMix64 rng(seed);
    Query q;
    q.source = static_cast<Vertex>(rng.range(0, inst.graph.vertex_count() - 1));
    q.window = random_window(rng, 35);
    q.activation.assign(inst.beer.count(), true);
    EXPECT_EQ(fbp_on_dag(tg, inst.beer, q, nullptr, false),
              fbp_on_dag(tg, inst.beer, q, nullptr, true))
        << "seed " << seed;
  }
}

TEST(DagQueries, MatchDirectAlgorithmsUnderFullSchedules) {
  for (std::uint64_t seed = 30; seed <= 55; ++seed) {
    Instance inst = gen_instance(InstanceSpec{.seed = seed});
    const TemporalGraph& g = inst.graph;
    TransformedGraph tg = transform(g);
    EXPECT_TRUE(validate_transform(g, tg).empty()) << "seed " << seed;
    SplitMix64 rng(seed);
    TimeWindow w = random_window(rng, 35);
    Vertex x = static_cast<Vertex>(rng.range(0, g.vertex_count() - 1));
    std::vector<Time> window_times;
    for (Time t = w.alpha; t <= w.omega; ++t) window_times.push_back(t);
    std::vector<Vertex> beer(inst.beer.vertices().begin(),
                             inst.beer.vertices().end());
    BeerConfig full(beer, std::vector<std::vector<Time>>(beer.size(),
                                                         window_times),
                    g.vertex_count());
    Query q{x, 0, w, std::vector<bool>(beer.size(), true)};
    EXPECT_EQ(fbp_on_dag(tg, inst.beer, q), fbp(g, x, w, full))
        << "seed " << seed;
    auto dist = sbp_on_dag(tg, inst.beer, q);
    for (Vertex y = 0; y < g.vertex_count(); ++y)
      EXPECT_EQ(dist[y], sbp(g, x, y, w, full)) << "seed " << seed;
  }
}

TEST(TransformOutput, TextAndDotForms) {
  std::ostringstream text;
  write_transform_text(text, transform(g2()));
  EXPECT_EQ(text.str(),
            "dag 4 3\n"
            "node 0 0 1 out\n"
            "node 1 1 2 in\n"
            "node 2 1 3 out\n"
            "node 3 2 4 in\n"
            "arc 0 1 1\n"
            "arc 1 2 0\n"
            "arc 2 3 1\n");
  std::ostringstream dot;
  write_transform_dot(dot, transform(g2()));
  EXPECT_NE(dot.str().find("digraph"), std::string::npos);
  EXPECT_NE(dot.str().find("\"0@1out\" -> \"1@2in\""), std::string::npos);
}

}  // namespace
}  // namespace tbp
