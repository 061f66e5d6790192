#pragma once

#include <string>

#include "tbp/beer_config.hpp"
#include "tbp/temporal_graph.hpp"

// Three tiny hand-checkable instances used across the suites.
//
// g1: 0 --(t=1,l=2)--> 1 --(t=6,l=2)--> 2, plus 0 --(t=2,l=1)--> 2;
//     vertex 1 sells beer at time 5.
// g2: a 0 -> 1 -> 2 chain.
// g3: two parallel 0 -> 1 edges, the earlier one dominated.

inline tbp::TemporalGraph g1() {
  return tbp::TemporalGraph(
      3, {{0, 1, 1, 2}, {0, 2, 2, 1}, {1, 2, 6, 2}});
}

inline tbp::BeerConfig g1_beer() { return tbp::BeerConfig({1}, {{5}}, 3); }

inline const char* g1_text() {
  return "3 3\n0 1 1 2\n0 2 2 1\n1 2 6 2\n";
}

inline const char* g1_beer_text() { return "1\n1 1 5\n"; }

inline tbp::TemporalGraph g2() {
  return tbp::TemporalGraph(3, {{0, 1, 1, 1}, {1, 2, 3, 1}});
}

inline tbp::TemporalGraph g3() {
  return tbp::TemporalGraph(2, {{0, 1, 2, 5}, {0, 1, 3, 3}});
}

inline tbp::TimeWindow whole() { return tbp::TimeWindow(0, 10); }
