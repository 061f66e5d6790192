#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "tbp/frontier.hpp"
#include "tbp/temporal_graph.hpp"
#include "tbp/types.hpp"

namespace tbp {

namespace detail {

inline void check_vertex(Vertex v, Vertex n, const char* what) {
  if (v < 0 || v >= n)
    throw std::invalid_argument(std::string(what) + " out of range");
}

}  // namespace detail

// Single ascending-stream pass collecting, per vertex, the non-dominated
// (start, arrival) pairs of paths from `source`. Departing the source at
// time t seeds the pair (t, t); the seed lands before the edge's own
// relaxation so an edge out of the source can ride its own departure.
// Exposed over a raw edge span so callers may splice in extra edges.
inline std::vector<SaFrontier> start_arrival_frontiers(
    std::span<const TemporalEdge> ascending, Vertex n, Vertex source,
    TimeWindow w) {
  detail::check_vertex(source, n, "source");
  std::vector<SaFrontier> lists(n);
  for (const TemporalEdge& e : ascending) {
    if (e.depart < w.alpha || e.arrive() > w.omega) continue;
    if (e.from == source) lists[source].insert(e.depart, e.depart);
    auto hit = lists[e.from].max_value_at_most(e.depart);
    if (!hit) continue;
    lists[e.to].insert(hit->key, e.arrive());
  }
  return lists;
}

// As above with (distance, arrival) pairs under distance-wise domination.
// Keys are arrivals; the stored value is the travelled distance.
inline std::vector<DaFrontier> distance_arrival_frontiers(
    std::span<const TemporalEdge> ascending, Vertex n, Vertex source,
    TimeWindow w) {
  detail::check_vertex(source, n, "source");
  std::vector<DaFrontier> lists(n);
  for (const TemporalEdge& e : ascending) {
    if (e.depart < w.alpha || e.arrive() > w.omega) continue;
    if (e.from == source) lists[source].insert(e.depart, 0);
    auto hit = lists[e.from].max_key_at_most(e.depart);
    if (!hit) continue;
    lists[e.to].insert(e.arrive(), hit->value + e.travel);
  }
  return lists;
}

// Descending-stream pass collecting (distance, start) pairs of paths into
// `target` under the inverse criterion: a pair loses to one that starts no
// earlier and is no longer. Keys are starts; values are distances, so the
// earliest feasible start found by binary search is also the cheapest.
inline std::vector<DsFrontier> distance_start_frontiers(
    std::span<const TemporalEdge> descending, Vertex n, Vertex target,
    TimeWindow w) {
  detail::check_vertex(target, n, "target");
  std::vector<DsFrontier> lists(n);
  for (const TemporalEdge& e : descending) {
    if (e.depart < w.alpha || e.arrive() > w.omega) continue;
    if (e.to == target) lists[target].insert(e.arrive(), 0);
    auto hit = lists[e.to].min_key_at_least(e.arrive());
    if (!hit) continue;
    lists[e.from].insert(e.depart, hit->value + e.travel);
  }
  return lists;
}

inline std::vector<SaFrontier> nondom_paths(const TemporalGraph& g, Vertex x,
                                            TimeWindow w) {
  return start_arrival_frontiers(g.ascending(), g.vertex_count(), x, w);
}

inline std::vector<DaFrontier> dist_nondom_paths(const TemporalGraph& g,
                                                 Vertex x, TimeWindow w) {
  return distance_arrival_frontiers(g.ascending(), g.vertex_count(), x, w);
}

inline std::vector<DsFrontier> inv_dist_nondom_paths(const TemporalGraph& g,
                                                     Vertex y, TimeWindow w) {
  return distance_start_frontiers(g.descending(), g.vertex_count(), y, w);
}

enum class FrontierKind { StartArrival, DistanceArrival, DistanceStart };

// Dump format: one line per vertex, `v: (p,q) (p,q) ...` sorted by key.
// Pairs print in their domain order, e.g. (d, a) for distance/arrival lists.
template <Dominance D>
void dump_frontiers(std::ostream& os, const std::vector<Frontier<D>>& lists,
                    FrontierKind kind) {
  for (std::size_t v = 0; v < lists.size(); ++v) {
    os << v << ':';
    for (const FrontierPair& p : lists[v].pairs()) {
      Time first = kind == FrontierKind::StartArrival ? p.key : p.value;
      Time second = kind == FrontierKind::StartArrival ? p.value : p.key;
      os << " (" << first << ',' << second << ')';
    }
    os << '\n';
  }
}

}  // namespace tbp
