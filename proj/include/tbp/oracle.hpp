#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "tbp/beer_config.hpp"
#include "tbp/frontier.hpp"
#include "tbp/nondom.hpp"
#include "tbp/temporal_graph.hpp"
#include "tbp/types.hpp"

namespace tbp {

// Exhaustive reference implementations. Everything here works by expanding
// every temporal walk inside the window, so it is only usable at desk scale;
// lambda >= 1 bounds the recursion depth by the window length. None of this
// shares code with the streaming algorithms it cross-checks.

struct WalkRecord {
  std::vector<TemporalEdge> edges;
  Time start = 0;
  Time end = 0;
  Time distance = 0;
  bool beer_ok = false;
};

// Per-target optima over all beer walks from one source. A walk qualifies
// for position j when some active instant of the vertex falls inside the
// waiting interval there: [alpha, first departure] at the source, [arrival,
// next departure] inside, [arrival, omega] at the end. Endpoint stops adjust
// the reported instant: a final-stop arrival counts once the beer is in hand
// and a source-stop departure counts from the active instant committed to.
struct OracleResults {
  std::vector<Time> eabp;  // min adjusted arrival
  std::vector<Time> ldbp;  // max adjusted start
  std::vector<Time> fbp;   // min adjusted duration
  std::vector<Time> sbp;   // min distance
};

namespace oracle_detail {

// Out-edges per vertex sorted by departure, for ordered expansion.
inline std::vector<std::vector<TemporalEdge>> edges_by_source(
    const TemporalGraph& g) {
  std::vector<std::vector<TemporalEdge>> out(g.vertex_count());
  for (const TemporalEdge& e : g.ascending()) out[e.from].push_back(e);
  return out;
}

constexpr std::size_t kStepLimit = std::size_t{1} << 26;

struct ExpansionBudget {
  std::size_t steps = 0;
  void tick() {
    if (++steps > kStepLimit)
      throw std::runtime_error("oracle: walk expansion exceeded step limit");
  }
};

// Depth-first expansion of every temporal walk from x. The visitor runs on
// every walk with at least one edge and receives (vertex, start, arrival,
// distance, interior_beer, source_beer_instant):
//   interior_beer       - a non-endpoint stop on the walk was active while
//                         the walk waited there
//   source_beer_instant - latest active instant of x in [alpha, start], or
//                         kNegInf
template <typename Visitor>
void expand_walks(const TemporalGraph& g, const BeerConfig& bc, Vertex x,
                  TimeWindow w, Visitor&& visit) {
  auto out = edges_by_source(g);
  ExpansionBudget budget;
  std::function<void(Vertex, Time, Time, Time, bool, Time, bool)> dfs =
      [&](Vertex cur, Time arrived, Time start, Time distance,
          bool interior_beer, Time source_instant, bool rooted) {
        budget.tick();
        if (!rooted)
          visit(cur, start, arrived, distance, interior_beer, source_instant);
        for (const TemporalEdge& e : out[cur]) {
          if (e.depart < arrived || e.arrive() > w.omega) continue;
          bool next_interior = interior_beer;
          Time next_source = source_instant;
          if (rooted) {
            next_source = kNegInf;
            if (bc.is_beer(cur)) {
              Time t = bc.max_active_at_or_before(cur, e.depart);
              if (t >= w.alpha) next_source = t;
            }
          } else if (bc.is_beer(cur) &&
                     bc.min_active_at_or_after(cur, arrived) <= e.depart) {
            next_interior = true;
          }
          dfs(e.to, e.arrive(), rooted ? e.depart : start,
              distance + e.travel, next_interior, next_source, false);
        }
      };
  dfs(x, w.alpha, 0, 0, false, kNegInf, true);
}

// Batch filter: sort, then sweep equal-key groups from the dominating side
// keeping a running best value. Only a group's cheapest member can survive,
// and it does iff it strictly beats everything on the side that wins ties.
inline std::vector<FrontierPair> filter_dominated(
    std::vector<FrontierPair> pairs, Dominance d) {
  std::sort(pairs.begin(), pairs.end(),
            [](const FrontierPair& a, const FrontierPair& b) {
              return a.key != b.key ? a.key < b.key : a.value < b.value;
            });
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::vector<FrontierPair> kept;
  Time best = kInf;
  auto scan_group = [&](std::size_t lo, std::size_t hi) {
    const FrontierPair& cheapest = pairs[lo];
    if (cheapest.value < best) {
      kept.push_back(cheapest);
      best = cheapest.value;
    }
    (void)hi;
  };
  if (d == Dominance::LaterKey) {
    std::size_t i = pairs.size();
    while (i > 0) {
      std::size_t hi = i;
      Time key = pairs[i - 1].key;
      while (i > 0 && pairs[i - 1].key == key) --i;
      scan_group(i, hi);
    }
    std::reverse(kept.begin(), kept.end());
  } else {
    std::size_t i = 0;
    while (i < pairs.size()) {
      std::size_t lo = i;
      Time key = pairs[i].key;
      while (i < pairs.size() && pairs[i].key == key) ++i;
      scan_group(lo, i);
    }
  }
  return kept;
}

}  // namespace oracle_detail

// All temporal walks from x within the window (the zero-edge walk is not
// reported). beer_ok follows the waiting-interval convention above.
inline std::vector<WalkRecord> enumerate_beer_walks(const TemporalGraph& g,
                                                    Vertex x, TimeWindow w,
                                                    const BeerConfig& bc) {
  detail::check_vertex(x, g.vertex_count(), "source");
  auto out = oracle_detail::edges_by_source(g);
  oracle_detail::ExpansionBudget budget;
  std::vector<WalkRecord> walks;
  std::vector<TemporalEdge> trail;
  std::function<void(Vertex, Time, bool, Time)> dfs =
      [&](Vertex cur, Time arrived, bool interior_beer, Time source_instant) {
        budget.tick();
        if (!trail.empty()) {
          WalkRecord rec;
          rec.edges = trail;
          rec.start = trail.front().depart;
          rec.end = arrived;
          rec.distance = 0;
          for (const TemporalEdge& e : trail) rec.distance += e.travel;
          rec.beer_ok = interior_beer || source_instant != kNegInf ||
                        (bc.is_beer(cur) &&
                         bc.min_active_at_or_after(cur, arrived) <= w.omega);
          walks.push_back(std::move(rec));
        }
        for (const TemporalEdge& e : out[cur]) {
          if (e.depart < arrived || e.arrive() > w.omega) continue;
          bool next_interior = interior_beer;
          Time next_source = source_instant;
          if (trail.empty()) {
            next_source = kNegInf;
            if (bc.is_beer(cur)) {
              Time t = bc.max_active_at_or_before(cur, e.depart);
              if (t >= w.alpha) next_source = t;
            }
          } else if (bc.is_beer(cur) &&
                     bc.min_active_at_or_after(cur, arrived) <= e.depart) {
            next_interior = true;
          }
          trail.push_back(e);
          dfs(e.to, e.arrive(), next_interior, next_source);
          trail.pop_back();
        }
      };
  dfs(x, w.alpha, false, kNegInf);
  return walks;
}

inline OracleResults oracle_one_to_all(const TemporalGraph& g, Vertex x,
                                       TimeWindow w, const BeerConfig& bc) {
  detail::check_vertex(x, g.vertex_count(), "source");
  OracleResults r;
  r.eabp.assign(g.vertex_count(), kInf);
  r.ldbp.assign(g.vertex_count(), kNegInf);
  r.fbp.assign(g.vertex_count(), kInf);
  r.sbp.assign(g.vertex_count(), kInf);

  // Zero-edge walk: stay at x and wait the beer out.
  if (bc.is_beer(x)) {
    Time first = bc.min_active_at_or_after(x, w.alpha);
    if (first <= w.omega) {
      r.eabp[x] = first;
      r.ldbp[x] = bc.max_active_at_or_before(x, w.omega);
      r.fbp[x] = 0;
      r.sbp[x] = 0;
    }
  }

  oracle_detail::expand_walks(
      g, bc, x, w,
      [&](Vertex v, Time start, Time end, Time distance, bool interior_beer,
          Time source_instant) {
        if (interior_beer) {
          r.eabp[v] = std::min(r.eabp[v], end);
          r.ldbp[v] = std::max(r.ldbp[v], start);
          r.fbp[v] = std::min(r.fbp[v], end - start);
          r.sbp[v] = std::min(r.sbp[v], distance);
        }
        if (source_instant != kNegInf) {
          r.eabp[v] = std::min(r.eabp[v], end);
          r.ldbp[v] = std::max(r.ldbp[v], source_instant);
          r.fbp[v] = std::min(r.fbp[v], end - source_instant);
          r.sbp[v] = std::min(r.sbp[v], distance);
        }
        if (bc.is_beer(v)) {
          Time adjusted = bc.min_active_at_or_after(v, end);
          if (adjusted <= w.omega) {
            r.eabp[v] = std::min(r.eabp[v], adjusted);
            r.ldbp[v] = std::max(r.ldbp[v], start);
            r.fbp[v] = std::min(r.fbp[v], adjusted - start);
            r.sbp[v] = std::min(r.sbp[v], distance);
          }
        }
      });
  return r;
}

struct ObjectiveValues {
  Time eabp = kInf;
  Time ldbp = kNegInf;
  Time fbp = kInf;
  Time sbp = kInf;
};

inline ObjectiveValues oracle_objectives(const TemporalGraph& g, Vertex x,
                                         Vertex y, TimeWindow w,
                                         const BeerConfig& bc) {
  detail::check_vertex(y, g.vertex_count(), "target");
  OracleResults r = oracle_one_to_all(g, x, w, bc);
  return ObjectiveValues{r.eabp[y], r.ldbp[y], r.fbp[y], r.sbp[y]};
}

// Reference frontiers, built by projecting every enumerated walk to a pair
// and filtering dominated ones quadratically. Pair layout matches the
// corresponding Frontier alias: (key, value).

inline std::vector<std::vector<FrontierPair>> oracle_sa_frontiers(
    const TemporalGraph& g, Vertex x, TimeWindow w) {
  std::vector<std::vector<FrontierPair>> raw(g.vertex_count());
  for (const TemporalEdge& e : g.ascending())
    if (e.from == x && e.depart >= w.alpha && e.arrive() <= w.omega)
      raw[x].push_back(FrontierPair{e.depart, e.depart});
  BeerConfig no_beer({}, {}, g.vertex_count());
  oracle_detail::expand_walks(
      g, no_beer, x, w,
      [&](Vertex v, Time start, Time end, Time, bool, Time) {
        raw[v].push_back(FrontierPair{start, end});
      });
  std::vector<std::vector<FrontierPair>> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    out[v] =
        oracle_detail::filter_dominated(std::move(raw[v]), Dominance::LaterKey);
  return out;
}

inline std::vector<std::vector<FrontierPair>> oracle_da_frontiers(
    const TemporalGraph& g, Vertex x, TimeWindow w) {
  std::vector<std::vector<FrontierPair>> raw(g.vertex_count());
  for (const TemporalEdge& e : g.ascending())
    if (e.from == x && e.depart >= w.alpha && e.arrive() <= w.omega)
      raw[x].push_back(FrontierPair{e.depart, 0});
  BeerConfig no_beer({}, {}, g.vertex_count());
  oracle_detail::expand_walks(
      g, no_beer, x, w,
      [&](Vertex v, Time, Time end, Time distance, bool, Time) {
        raw[v].push_back(FrontierPair{end, distance});
      });
  std::vector<std::vector<FrontierPair>> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    out[v] = oracle_detail::filter_dominated(std::move(raw[v]),
                                             Dominance::EarlierKey);
  return out;
}

inline std::vector<std::vector<FrontierPair>> oracle_ds_frontiers(
    const TemporalGraph& g, Vertex y, TimeWindow w) {
  detail::check_vertex(y, g.vertex_count(), "target");
  std::vector<std::vector<FrontierPair>> raw(g.vertex_count());
  for (const TemporalEdge& e : g.ascending())
    if (e.to == y && e.depart >= w.alpha && e.arrive() <= w.omega)
      raw[y].push_back(FrontierPair{e.arrive(), 0});
  BeerConfig no_beer({}, {}, g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    oracle_detail::expand_walks(
        g, no_beer, v, w,
        [&](Vertex target, Time start, Time, Time distance, bool, Time) {
          if (target == y) raw[v].push_back(FrontierPair{start, distance});
        });
  }
  std::vector<std::vector<FrontierPair>> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    out[v] =
        oracle_detail::filter_dominated(std::move(raw[v]), Dominance::LaterKey);
  return out;
}

}  // namespace tbp
