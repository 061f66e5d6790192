#pragma once

#include <chrono>
#include <deque>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "tbp/beerpath.hpp"
#include "tbp/generator.hpp"
#include "tbp/nondom_index.hpp"
#include "tbp/oracle.hpp"
#include "tbp/transform.hpp"

namespace tbp::selfcheck {

struct CheckResult {
  std::string name;
  long long cases = 0;
  long long violations = 0;
  std::string detail;  // first observed mismatch

  bool passed() const { return violations == 0; }
};

namespace detail {

inline void flag(CheckResult& r, const std::string& what) {
  ++r.violations;
  if (r.detail.empty()) r.detail = what;
}

inline std::string tag(std::uint64_t seed, TimeWindow w) {
  return "seed=" + std::to_string(seed) + " window=[" +
         std::to_string(w.alpha) + "," + std::to_string(w.omega) + "]";
}

inline bool same(const std::vector<Time>& a, const std::vector<Time>& b) {
  return a == b;
}

// Beer config with identical vertices but replaced schedules: active ones
// get every instant of the window, inactive ones none. This is the direct
// counterpart of a Boolean activation mask.
inline BeerConfig masked_full_window(const BeerConfig& bc,
                                     const std::vector<bool>& activation,
                                     TimeWindow w, Vertex n) {
  std::vector<Time> window_times;
  for (Time t = w.alpha; t <= w.omega; ++t) window_times.push_back(t);
  std::vector<Vertex> vertices(bc.vertices().begin(), bc.vertices().end());
  std::vector<std::vector<Time>> times(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (activation[i]) times[i] = window_times;
  return BeerConfig(std::move(vertices), std::move(times), n);
}

// Plain (beer-free) references on the transformed graph, mirroring the
// stream algorithms' conventions: a departure copy counts as a journey start
// only if some edge at that instant fits the window, matching the stream
// passes' seeding of trivial pairs.

inline bool usable_departure(const TransformedGraph& tg, int id,
                             TimeWindow w) {
  for (const auto& arc : tg.arcs_from(id))
    if (arc.weight > 0 && tg.node(arc.to).time <= w.omega) return true;
  return false;
}

inline std::vector<Time> dag_plain_earliest(const TransformedGraph& tg,
                                            Vertex x, TimeWindow w) {
  std::vector<Time> earliest(tg.vertex_count(), kInf);
  earliest[x] = w.alpha;
  std::vector<char> seen(tg.node_count(), 0);
  std::deque<int> queue;
  for (int src : tg.source_copies(x, w)) {
    if (seen[src]) continue;
    seen[src] = 1;
    queue.push_back(src);
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    earliest[tg.node(u).orig] =
        std::min(earliest[tg.node(u).orig], tg.node(u).time);
    for (const auto& arc : tg.arcs_from(u)) {
      if (tg.node(arc.to).time > w.omega || seen[arc.to]) continue;
      seen[arc.to] = 1;
      queue.push_back(arc.to);
    }
  }
  return earliest;
}

inline std::vector<Time> dag_plain_fastest(const TransformedGraph& tg,
                                           Vertex x, TimeWindow w) {
  std::vector<Time> durations(tg.vertex_count(), kInf);
  std::vector<char> seen(tg.node_count(), 0);
  std::deque<int> queue;
  for (int src : tg.source_copies(x, w)) {  // descending departures
    if (!usable_departure(tg, src, w) || seen[src]) continue;
    Time depart = tg.node(src).time;
    seen[src] = 1;
    queue.assign(1, src);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      durations[tg.node(u).orig] =
          std::min(durations[tg.node(u).orig], tg.node(u).time - depart);
      for (const auto& arc : tg.arcs_from(u)) {
        if (tg.node(arc.to).time > w.omega || seen[arc.to]) continue;
        seen[arc.to] = 1;
        queue.push_back(arc.to);
      }
    }
  }
  return durations;
}

inline std::vector<Time> dag_plain_shortest(const TransformedGraph& tg,
                                            Vertex x, TimeWindow w) {
  std::vector<Time> best(tg.vertex_count(), kInf);
  std::vector<Time> dist(tg.node_count(), kInf);
  using State = std::pair<Time, int>;
  std::priority_queue<State, std::vector<State>, std::greater<>> heap;
  for (int src : tg.source_copies(x, w)) {
    if (!usable_departure(tg, src, w)) continue;
    dist[src] = 0;
    heap.emplace(0, src);
  }
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    best[tg.node(u).orig] = std::min(best[tg.node(u).orig], d);
    for (const auto& arc : tg.arcs_from(u)) {
      if (tg.node(arc.to).time > w.omega) continue;
      if (d + arc.weight < dist[arc.to]) {
        dist[arc.to] = d + arc.weight;
        heap.emplace(dist[arc.to], arc.to);
      }
    }
  }
  return best;
}

inline std::vector<Time> stream_plain_fastest(const TemporalGraph& g,
                                              Vertex x, TimeWindow w) {
  auto lists = nondom_paths(g, x, w);
  std::vector<Time> out(g.vertex_count(), kInf);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (const FrontierPair& p : lists[v].pairs())
      out[v] = std::min(out[v], p.value - p.key);
  return out;
}

inline std::vector<Time> stream_plain_shortest(const TemporalGraph& g,
                                               Vertex x, TimeWindow w) {
  auto lists = dist_nondom_paths(g, x, w);
  std::vector<Time> out(g.vertex_count(), kInf);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (const FrontierPair& p : lists[v].pairs())
      out[v] = std::min(out[v], p.value);
  return out;
}

}  // namespace detail

// The four objective values computed by the streaming algorithms against the
// walk-enumeration oracle, one-to-all for earliest/latest/fastest and for a
// handful of source/target pairs for shortest. Also asserts window respect
// and that a beer journey never beats its unconstrained counterpart.
inline CheckResult check_objectives(std::uint64_t first_seed, int instances,
                                    int windows_per_instance, int sbp_pairs,
                                    const InstanceSpec& sizing = {}) {
  CheckResult r;
  r.name = "objectives vs oracle";
  for (int i = 0; i < instances; ++i) {
    InstanceSpec spec = sizing;
    spec.seed = first_seed + static_cast<std::uint64_t>(i);
    Instance inst = gen_instance(spec);
    const TemporalGraph& g = inst.graph;
    SplitMix64 rng(spec.seed ^ 0x77c011a5a5a5ULL);
    for (int wi = 0; wi < windows_per_instance; ++wi) {
      TimeWindow w = random_window(rng, spec.max_time + spec.max_travel);
      Vertex x = static_cast<Vertex>(rng.range(0, g.vertex_count() - 1));
      Vertex y = static_cast<Vertex>(rng.range(0, g.vertex_count() - 1));
      std::vector<OracleResults> oracle;
      oracle.reserve(g.vertex_count());
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        oracle.push_back(oracle_one_to_all(g, v, w, inst.beer));

      ++r.cases;
      auto ea = eabp(g, x, w, inst.beer);
      if (!detail::same(ea, oracle[x].eabp))
        detail::flag(r, "eabp mismatch at " + detail::tag(spec.seed, w));
      auto fast = fbp(g, x, w, inst.beer);
      if (!detail::same(fast, oracle[x].fbp))
        detail::flag(r, "fbp mismatch at " + detail::tag(spec.seed, w));
      auto ld = ldbp(g, y, w, inst.beer);
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (ld[v] != oracle[v].ldbp[y])
          detail::flag(r, "ldbp mismatch at " + detail::tag(spec.seed, w) +
                              " from=" + std::to_string(v));
      for (int p = 0; p < sbp_pairs; ++p) {
        Vertex sx = static_cast<Vertex>(rng.range(0, g.vertex_count() - 1));
        Vertex sy = static_cast<Vertex>(rng.range(0, g.vertex_count() - 1));
        if (sbp(g, sx, sy, w, inst.beer) != oracle[sx].sbp[sy])
          detail::flag(r, "sbp mismatch at " + detail::tag(spec.seed, w));
      }

      // window respect and beer containment
      std::vector<Time> init(g.vertex_count(), kInf);
      init[x] = w.alpha;
      auto plain_ea = mseap_stream(g, w, init);
      auto plain_fast = detail::stream_plain_fastest(g, x, w);
      auto plain_short = detail::stream_plain_shortest(g, x, w);
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (ea[v] != kInf && ea[v] > w.omega)
          detail::flag(r, "eabp beyond window at " + detail::tag(spec.seed, w));
        if (ld[v] != kNegInf && ld[v] < w.alpha)
          detail::flag(r, "ldbp before window at " + detail::tag(spec.seed, w));
        if (ea[v] != kInf && plain_ea[v] != kInf && ea[v] < plain_ea[v])
          detail::flag(r, "eabp beats earliest arrival at " +
                              detail::tag(spec.seed, w));
        if (fast[v] != kInf && fast[v] < plain_fast[v])
          detail::flag(r, "fbp beats fastest path at " +
                              detail::tag(spec.seed, w));
        if (oracle[x].sbp[v] != kInf && oracle[x].sbp[v] < plain_short[v])
          detail::flag(r, "sbp beats shortest path at " +
                              detail::tag(spec.seed, w));
      }
    }
  }
  return r;
}

// Frontier algorithms against brute-force domination filtering, plus the
// structural invariants: strict double monotonicity, degree size bounds for
// non-endpoint vertices, and agreement of the min-start / min-distance pick.
inline CheckResult check_frontiers(std::uint64_t first_seed, int instances,
                                   int windows_per_instance,
                                   const InstanceSpec& sizing = {}) {
  CheckResult r;
  r.name = "frontiers vs oracle";
  for (int i = 0; i < instances; ++i) {
    InstanceSpec spec = sizing;
    spec.seed = first_seed + static_cast<std::uint64_t>(i);
    Instance inst = gen_instance(spec);
    const TemporalGraph& g = inst.graph;
    const auto& st = g.stats();
    SplitMix64 rng(spec.seed ^ 0x5eed0f20745e5ULL);
    for (int wi = 0; wi < windows_per_instance; ++wi) {
      TimeWindow w = random_window(rng, spec.max_time + spec.max_travel);
      Vertex x = static_cast<Vertex>(rng.range(0, g.vertex_count() - 1));
      Vertex y = static_cast<Vertex>(rng.range(0, g.vertex_count() - 1));
      ++r.cases;

      auto sa = nondom_paths(g, x, w);
      auto sa_ref = oracle_sa_frontiers(g, x, w);
      auto da = dist_nondom_paths(g, x, w);
      auto da_ref = oracle_da_frontiers(g, x, w);
      auto ds = inv_dist_nondom_paths(g, y, w);
      auto ds_ref = oracle_ds_frontiers(g, y, w);
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (sa[v].pairs() != sa_ref[v])
          detail::flag(r, "start/arrival frontier mismatch at " +
                              detail::tag(spec.seed, w));
        if (da[v].pairs() != da_ref[v])
          detail::flag(r, "distance/arrival frontier mismatch at " +
                              detail::tag(spec.seed, w));
        if (ds[v].pairs() != ds_ref[v])
          detail::flag(r, "distance/start frontier mismatch at " +
                              detail::tag(spec.seed, w));
        if (!sa[v].well_formed() || !da[v].well_formed() ||
            !ds[v].well_formed())
          detail::flag(r, "frontier monotonicity violated at " +
                              detail::tag(spec.seed, w));
        if (v != x && sa[v].size() > st.frontier_bound)
          detail::flag(r, "start/arrival frontier larger than c at " +
                              detail::tag(spec.seed, w));
        if (v != x && da[v].size() > st.max_in_degree)
          detail::flag(r, "distance/arrival frontier larger than d_in at " +
                              detail::tag(spec.seed, w));
        if (v != y && ds[v].size() > st.max_out_degree)
          detail::flag(r, "distance/start frontier larger than d_out at " +
                              detail::tag(spec.seed, w));
        // earliest feasible start is also the cheapest continuation
        for (int probe = 0; probe < 3; ++probe) {
          Time bound = rng.range(0, spec.max_time + spec.max_travel);
          auto hit = ds[v].min_key_at_least(bound);
          if (!hit) continue;
          Time min_d = kInf;
          for (const FrontierPair& p : ds[v].pairs())
            if (p.key >= bound) min_d = std::min(min_d, p.value);
          if (hit->value != min_d)
            detail::flag(r, "min-start pick is not min-distance at " +
                                detail::tag(spec.seed, w));
        }
      }
    }
  }
  return r;
}

// Stream and adjacency-list passes agree on pruned graphs for arbitrary
// initial/final times, sentinels included.
inline CheckResult check_variants(std::uint64_t first_seed, int instances,
                                  int windows_per_instance,
                                  const InstanceSpec& sizing = {}) {
  CheckResult r;
  r.name = "stream vs adjacency-list variants";
  for (int i = 0; i < instances; ++i) {
    InstanceSpec spec = sizing;
    spec.seed = first_seed + static_cast<std::uint64_t>(i);
    Instance inst = gen_instance(spec, /*pruned=*/true);
    const TemporalGraph& g = inst.graph;
    SplitMix64 rng(spec.seed ^ 0xad7baa1eaf5ULL);
    for (int wi = 0; wi < windows_per_instance; ++wi) {
      TimeWindow w = random_window(rng, spec.max_time + spec.max_travel);
      ++r.cases;
      std::vector<Time> init(g.vertex_count()), fin(g.vertex_count());
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        init[v] = rng.range(0, 2) == 0 ? kInf : rng.range(w.alpha, w.omega);
        fin[v] = rng.range(0, 2) == 0 ? kNegInf : rng.range(w.alpha, w.omega);
      }
      auto ms = mseap_stream(g, w, init);
      auto ma = mseap_adjlist(g, w, init);
      if (!detail::same(ms, ma))
        detail::flag(r, "mseap variants disagree at " +
                            detail::tag(spec.seed, w));
      auto ts = mtldp_stream(g, w, fin);
      auto ta = mtldp_adjlist(g, w, fin);
      if (!detail::same(ts, ta))
        detail::flag(r, "mtldp variants disagree at " +
                            detail::tag(spec.seed, w));
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (ms[v] > init[v])
          detail::flag(r, "mseap raised an init time at " +
                              detail::tag(spec.seed, w));
        if (ts[v] != kNegInf && fin[v] != kNegInf && ts[v] < fin[v])
          detail::flag(r, "mtldp lowered a fin time at " +
                              detail::tag(spec.seed, w));
      }
      // beer variants ride on the same subroutines
      Vertex x = static_cast<Vertex>(rng.range(0, g.vertex_count() - 1));
      if (!detail::same(eabp(g, x, w, inst.beer, Variant::Stream),
                        eabp(g, x, w, inst.beer, Variant::AdjList)))
        detail::flag(r, "eabp variants disagree at " +
                            detail::tag(spec.seed, w));
      if (!detail::same(ldbp(g, x, w, inst.beer, Variant::Stream),
                        ldbp(g, x, w, inst.beer, Variant::AdjList)))
        detail::flag(r, "ldbp variants disagree at " +
                            detail::tag(spec.seed, w));
    }
  }
  return r;
}

// Dominated-edge removal leaves every objective untouched, is idempotent,
// and leaves per-pair hop lists doubly strictly increasing.
inline CheckResult check_pruning(std::uint64_t first_seed, int instances,
                                 int windows_per_instance,
                                 const InstanceSpec& sizing = {}) {
  CheckResult r;
  r.name = "dominated-edge pruning neutrality";
  for (int i = 0; i < instances; ++i) {
    InstanceSpec spec = sizing;
    spec.seed = first_seed + static_cast<std::uint64_t>(i);
    Instance inst = gen_instance(spec);
    const TemporalGraph& g = inst.graph;
    TemporalGraph pruned = remove_dominated_edges(g);
    if (!pruned.dominated_free())
      detail::flag(r, "pruned graph still has dominated edges, seed=" +
                          std::to_string(spec.seed));
    TemporalGraph twice = remove_dominated_edges(pruned);
    if (twice.input_order().size() != pruned.input_order().size() ||
        !std::equal(twice.input_order().begin(), twice.input_order().end(),
                    pruned.input_order().begin()))
      detail::flag(r, "pruning not idempotent, seed=" +
                          std::to_string(spec.seed));
    for (Vertex v = 0; v < pruned.vertex_count(); ++v)
      for (const NeighborHops& nh : pruned.out(v))
        for (std::size_t j = 1; j < nh.hops.size(); ++j)
          if (nh.hops[j - 1].first >= nh.hops[j].first ||
              nh.hops[j - 1].first + nh.hops[j - 1].second >=
                  nh.hops[j].first + nh.hops[j].second)
            detail::flag(r, "pruned hops not doubly increasing, seed=" +
                                std::to_string(spec.seed));
    SplitMix64 rng(spec.seed ^ 0x9fb21c651e98ULL);
    for (int wi = 0; wi < windows_per_instance; ++wi) {
      TimeWindow w = random_window(rng, spec.max_time + spec.max_travel);
      Vertex x = static_cast<Vertex>(rng.range(0, g.vertex_count() - 1));
      Vertex y = static_cast<Vertex>(rng.range(0, g.vertex_count() - 1));
      ++r.cases;
      if (!detail::same(eabp(g, x, w, inst.beer), eabp(pruned, x, w, inst.beer)))
        detail::flag(r, "eabp changed by pruning at " +
                            detail::tag(spec.seed, w));
      if (!detail::same(ldbp(g, y, w, inst.beer), ldbp(pruned, y, w, inst.beer)))
        detail::flag(r, "ldbp changed by pruning at " +
                            detail::tag(spec.seed, w));
      if (!detail::same(fbp(g, x, w, inst.beer), fbp(pruned, x, w, inst.beer)))
        detail::flag(r, "fbp changed by pruning at " +
                            detail::tag(spec.seed, w));
      if (sbp(g, x, y, w, inst.beer) != sbp(pruned, x, y, w, inst.beer))
        detail::flag(r, "sbp changed by pruning at " +
                            detail::tag(spec.seed, w));
    }
  }
  return r;
}

// Index queries against the direct algorithms under the Boolean activation
// model, with the per-query search budget of at most k per leg, plus a
// byte-identical persistence round-trip.
inline CheckResult check_index(std::uint64_t first_seed, int instances,
                               int queries_per_instance,
                               const InstanceSpec& sizing = {}) {
  CheckResult r;
  r.name = "index vs direct queries";
  for (int i = 0; i < instances; ++i) {
    InstanceSpec spec = sizing;
    spec.seed = first_seed + static_cast<std::uint64_t>(i);
    Instance inst = gen_instance(spec);
    const TemporalGraph& g = inst.graph;
    NondomIndex ix = NondomIndex::build(g, inst.beer);

    std::ostringstream first;
    ix.save(first);
    std::istringstream stored(first.str());
    NondomIndex reloaded = NondomIndex::load(stored);
    std::ostringstream second;
    reloaded.save(second);
    if (first.str() != second.str())
      detail::flag(r, "index round-trip not byte-identical, seed=" +
                          std::to_string(spec.seed));

    SplitMix64 rng(spec.seed ^ 0x1db3afc5912ULL);
    const int k = inst.beer.count();
    for (int qi = 0; qi < queries_per_instance; ++qi) {
      ++r.cases;
      Query q;
      q.source = static_cast<Vertex>(rng.range(0, g.vertex_count() - 1));
      q.target = static_cast<Vertex>(rng.range(0, g.vertex_count() - 1));
      q.window = random_window(rng, spec.max_time + spec.max_travel);
      for (int b = 0; b < k; ++b) q.activation.push_back(rng.range(0, 1) == 1);
      BeerConfig masked = detail::masked_full_window(inst.beer, q.activation,
                                                     q.window,
                                                     g.vertex_count());
      QueryStats stats;
      Time via_index = ix.query_eabp(q, &stats);
      Time direct = eabp(g, q.source, q.window, masked)[q.target];
      if (via_index != direct)
        detail::flag(r, "index eabp mismatch at " +
                            detail::tag(spec.seed, q.window));
      if (stats.to_beer_searches > k || stats.from_beer_searches > k)
        detail::flag(r, "eabp query exceeded k searches per leg");
      stats = {};
      via_index = ix.query_ldbp(q, &stats);
      direct = ldbp(g, q.target, q.window, masked)[q.source];
      if (via_index != direct)
        detail::flag(r, "index ldbp mismatch at " +
                            detail::tag(spec.seed, q.window));
      if (stats.to_beer_searches > k || stats.from_beer_searches > k)
        detail::flag(r, "ldbp query exceeded k searches per leg");
      if (reloaded.query_eabp(q) != ix.query_eabp(q))
        detail::flag(r, "reloaded index answers differently");
    }
  }
  return r;
}

// Transformation soundness: structural validator, O(M) size accounting,
// plain path objectives on the DAG against the stream algorithms, flagged
// traversals against fbp/sbp under window-wide schedules, visit budget of
// two per copy, and traversal-order independence.
inline CheckResult check_transform(std::uint64_t first_seed, int instances,
                                   int windows_per_instance,
                                   const InstanceSpec& sizing = {}) {
  CheckResult r;
  r.name = "graph transformation";
  for (int i = 0; i < instances; ++i) {
    InstanceSpec spec = sizing;
    spec.seed = first_seed + static_cast<std::uint64_t>(i);
    Instance inst = gen_instance(spec);
    const TemporalGraph& g = inst.graph;
    TransformedGraph tg = transform(g);
    for (const std::string& v : validate_transform(g, tg))
      detail::flag(r, v + ", seed=" + std::to_string(spec.seed));

    SplitMix64 rng(spec.seed ^ 0x7a6e15ca11ULL);
    const int k = inst.beer.count();
    for (int wi = 0; wi < windows_per_instance; ++wi) {
      TimeWindow w = random_window(rng, spec.max_time + spec.max_travel);
      Vertex x = static_cast<Vertex>(rng.range(0, g.vertex_count() - 1));
      ++r.cases;

      std::vector<Time> init(g.vertex_count(), kInf);
      init[x] = w.alpha;
      if (!detail::same(detail::dag_plain_earliest(tg, x, w),
                        mseap_stream(g, w, init)))
        detail::flag(r, "plain earliest arrival differs on DAG at " +
                            detail::tag(spec.seed, w));
      if (!detail::same(detail::dag_plain_fastest(tg, x, w),
                        detail::stream_plain_fastest(g, x, w)))
        detail::flag(r, "plain fastest differs on DAG at " +
                            detail::tag(spec.seed, w));
      if (!detail::same(detail::dag_plain_shortest(tg, x, w),
                        detail::stream_plain_shortest(g, x, w)))
        detail::flag(r, "plain shortest differs on DAG at " +
                            detail::tag(spec.seed, w));

      for (int mask_round = 0; mask_round < 2; ++mask_round) {
        Query q;
        q.source = x;
        q.target = 0;
        q.window = w;
        for (int b = 0; b < k; ++b)
          q.activation.push_back(mask_round == 0 || rng.range(0, 1) == 1);
        BeerConfig masked = detail::masked_full_window(
            inst.beer, q.activation, w, g.vertex_count());
        DagRunStats stats;
        auto on_dag = fbp_on_dag(tg, inst.beer, q, &stats);
        if (!detail::same(on_dag, fbp(g, x, w, masked)))
          detail::flag(r, "flagged fastest differs from fbp at " +
                              detail::tag(spec.seed, w));
        if (stats.max_node_visits > 2)
          detail::flag(r, "fbp_on_dag visited a copy more than twice");
        if (!detail::same(on_dag,
                          fbp_on_dag(tg, inst.beer, q, nullptr, true)))
          detail::flag(r, "fbp_on_dag depends on traversal order");
        DagRunStats sstats;
        auto sb_dag = sbp_on_dag(tg, inst.beer, q, &sstats);
        for (Vertex y = 0; y < g.vertex_count(); ++y)
          if (sb_dag[y] != sbp(g, x, y, w, masked))
            detail::flag(r, "flagged shortest differs from sbp at " +
                                detail::tag(spec.seed, w));
        if (sstats.max_node_visits > 2)
          detail::flag(r, "sbp_on_dag settled a copy more than twice");
      }
    }
  }
  return r;
}

// Wall-clock scaling of the single-pass multi-source sweep; returns seconds
// per size. Sizes double, so ratios near 2 mean linear behavior.
struct ScalingPoint {
  std::size_t edges;
  double seconds;
};

inline std::vector<ScalingPoint> mseap_scaling(
    const std::vector<std::size_t>& sizes, int repetitions = 25) {
  std::vector<ScalingPoint> out;
  for (std::size_t m : sizes) {
    TemporalGraph g = random_graph(0xbe5f, 1024, m, 1'000'000, 50);
    std::vector<Time> init(g.vertex_count(), kInf);
    init[0] = 0;
    TimeWindow w(0, 2'000'000);
    double best = 1e100;
    for (int rep = 0; rep < repetitions; ++rep) {
      auto t0 = std::chrono::steady_clock::now();
      auto tau = mseap_stream(g, w, init);
      auto t1 = std::chrono::steady_clock::now();
      if (tau[0] != 0) throw std::logic_error("bench self-check failed");
      best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    out.push_back(ScalingPoint{m, best});
  }
  return out;
}

inline std::vector<CheckResult> run_standard_checks(std::uint64_t first_seed,
                                                    int instances,
                                                    int windows = 2,
                                                    int queries = 20) {
  std::vector<CheckResult> out;
  out.push_back(check_objectives(first_seed, instances, windows, 5));
  out.push_back(check_frontiers(first_seed, instances, windows));
  out.push_back(check_variants(first_seed, instances, windows));
  out.push_back(check_pruning(first_seed, instances, windows));
  out.push_back(check_index(first_seed, instances, queries));
  out.push_back(check_transform(first_seed, instances, windows));
  return out;
}

}  // namespace tbp::selfcheck
