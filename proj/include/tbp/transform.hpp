#pragma once

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "tbp/beer_config.hpp"
#include "tbp/nondom_index.hpp"
#include "tbp/temporal_graph.hpp"
#include "tbp/types.hpp"

namespace tbp {

// Static weighted DAG of time-stamped vertex copies: an out-copy (v, t) per
// departure instant and an in-copy (v, t) per arrival instant. Three arc
// kinds encode every temporal walk:
//   - weight lambda from (u, t) out to (v, t+lambda) in, one per edge;
//   - weight 0 from an in-copy to the earliest out-copy of the same vertex
//     at or after it, created only for the latest in-copy mapping there;
//   - weight 0 between time-consecutive copies on the same side (waiting).
class TransformedGraph {
 public:
  struct Node {
    Vertex orig;
    Time time;
    bool is_out;
  };

  struct Arc {
    int to;
    Time weight;
  };

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t arc_count() const { return arc_count_; }
  const Node& node(int id) const { return nodes_[id]; }
  std::span<const Arc> arcs_from(int id) const { return adj_[id]; }

  // Copy ids sorted by descending time.
  std::span<const int> out_copies(Vertex v) const { return out_ids_[v]; }
  std::span<const int> in_copies(Vertex v) const { return in_ids_[v]; }

  Vertex vertex_count() const { return static_cast<Vertex>(out_ids_.size()); }

  // Departure copies of x usable inside the window, descending by time.
  std::vector<int> source_copies(Vertex x, TimeWindow w) const {
    std::vector<int> out;
    for (int id : out_ids_[x])
      if (nodes_[id].time >= w.alpha && nodes_[id].time <= w.omega)
        out.push_back(id);
    return out;
  }

  friend TransformedGraph transform(const TemporalGraph& g);

 private:
  std::vector<Node> nodes_;
  std::vector<std::vector<Arc>> adj_;
  std::vector<std::vector<int>> out_ids_;  // per vertex, time descending
  std::vector<std::vector<int>> in_ids_;
  std::size_t arc_count_ = 0;
};

inline TransformedGraph transform(const TemporalGraph& g) {
  TransformedGraph tg;
  const Vertex n = g.vertex_count();
  std::vector<std::vector<Time>> out_times(n), in_times(n);
  for (const TemporalEdge& e : g.ascending()) {
    out_times[e.from].push_back(e.depart);
    in_times[e.to].push_back(e.arrive());
  }
  auto dedup = [](std::vector<Time>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  tg.out_ids_.resize(n);
  tg.in_ids_.resize(n);
  std::vector<std::vector<int>> out_asc(n), in_asc(n);  // ids, time ascending
  for (Vertex v = 0; v < n; ++v) {
    dedup(out_times[v]);
    dedup(in_times[v]);
    for (Time t : in_times[v]) {
      in_asc[v].push_back(static_cast<int>(tg.nodes_.size()));
      tg.nodes_.push_back(TransformedGraph::Node{v, t, false});
    }
    for (Time t : out_times[v]) {
      out_asc[v].push_back(static_cast<int>(tg.nodes_.size()));
      tg.nodes_.push_back(TransformedGraph::Node{v, t, true});
    }
    tg.in_ids_[v].assign(in_asc[v].rbegin(), in_asc[v].rend());
    tg.out_ids_[v].assign(out_asc[v].rbegin(), out_asc[v].rend());
  }
  tg.adj_.resize(tg.nodes_.size());
  auto add_arc = [&tg](int from, int to, Time weight) {
    tg.adj_[from].push_back(TransformedGraph::Arc{to, weight});
    ++tg.arc_count_;
  };
  for (Vertex v = 0; v < n; ++v) {
    // waiting chains along each side
    for (std::size_t i = 1; i < in_asc[v].size(); ++i)
      add_arc(in_asc[v][i - 1], in_asc[v][i], 0);
    for (std::size_t i = 1; i < out_asc[v].size(); ++i)
      add_arc(out_asc[v][i - 1], out_asc[v][i], 0);
    // connectors: the latest in-copy mapping to each out-copy gets the arc,
    // earlier ones reach it through the in-chain
    std::size_t oi = 0;
    int pending = -1;
    for (std::size_t ii = 0; ii < in_times[v].size(); ++ii) {
      while (oi < out_times[v].size() && out_times[v][oi] < in_times[v][ii]) {
        if (pending >= 0) add_arc(pending, out_asc[v][oi], 0);
        pending = -1;
        ++oi;
      }
      if (oi == out_times[v].size()) break;
      pending = in_asc[v][ii];
    }
    if (pending >= 0) add_arc(pending, out_asc[v][oi], 0);
  }
  for (const TemporalEdge& e : g.ascending()) {
    auto& dep = out_times[e.from];
    auto& arr = in_times[e.to];
    int from = out_asc[e.from][static_cast<std::size_t>(
        std::lower_bound(dep.begin(), dep.end(), e.depart) - dep.begin())];
    int to = in_asc[e.to][static_cast<std::size_t>(
        std::lower_bound(arr.begin(), arr.end(), e.arrive()) - arr.begin())];
    add_arc(from, to, e.travel);
  }
  return tg;
}

// Recomputes the expected structure from the original graph and diffs it
// against the DAG. Returns human-readable violations; empty means valid.
inline std::vector<std::string> validate_transform(const TemporalGraph& g,
                                                   const TransformedGraph& tg) {
  std::vector<std::string> bad;
  const std::size_t m = g.stats().edge_count;
  if (tg.node_count() > 2 * m)
    bad.push_back("node count exceeds 2M");
  if (tg.arc_count() > 4 * m)
    bad.push_back("arc count exceeds 4M");

  std::set<std::tuple<Vertex, Time, bool>> expected_nodes, actual_nodes;
  for (const TemporalEdge& e : g.ascending()) {
    expected_nodes.insert({e.from, e.depart, true});
    expected_nodes.insert({e.to, e.arrive(), false});
  }
  for (std::size_t id = 0; id < tg.node_count(); ++id) {
    const auto& nd = tg.node(static_cast<int>(id));
    if (!actual_nodes.insert({nd.orig, nd.time, nd.is_out}).second)
      bad.push_back("duplicate copy for vertex " + std::to_string(nd.orig));
  }
  if (expected_nodes != actual_nodes)
    bad.push_back("copy set does not match departure/arrival instants");

  std::multiset<std::tuple<Vertex, Time, Vertex, Time, Time>> expected_w,
      actual_w;
  for (const TemporalEdge& e : g.ascending())
    expected_w.insert({e.from, e.depart, e.to, e.arrive(), e.travel});
  std::map<int, int> connector_of_in, connector_into_out;
  for (std::size_t id = 0; id < tg.node_count(); ++id) {
    const auto& from = tg.node(static_cast<int>(id));
    for (const auto& arc : tg.arcs_from(static_cast<int>(id))) {
      const auto& to = tg.node(arc.to);
      if (arc.weight > 0) {
        if (!from.is_out || to.is_out)
          bad.push_back("weighted arc not out-copy to in-copy");
        if (to.time != from.time + arc.weight)
          bad.push_back("weighted arc timestamps inconsistent with weight");
        actual_w.insert({from.orig, from.time, to.orig, to.time, arc.weight});
        continue;
      }
      if (from.orig != to.orig) {
        bad.push_back("zero-weight arc between different vertices");
        continue;
      }
      if (from.is_out == to.is_out) {
        // waiting chain: must link time-consecutive copies on one side
        if (from.time >= to.time) bad.push_back("chain arc not forward in time");
        auto side = from.is_out ? tg.out_copies(from.orig)
                                : tg.in_copies(from.orig);
        // side is descending; the successor of `from` is the previous entry
        auto it = std::find(side.begin(), side.end(), static_cast<int>(id));
        if (it == side.begin() || *std::prev(it) != arc.to)
          bad.push_back("chain arc skips a copy");
      } else {
        if (from.is_out) {
          bad.push_back("connector leaves an out-copy");
          continue;
        }
        if (to.time < from.time) bad.push_back("connector goes back in time");
        if (!connector_of_in.emplace(static_cast<int>(id), arc.to).second)
          bad.push_back("in-copy with two connectors");
        if (!connector_into_out.emplace(arc.to, static_cast<int>(id)).second)
          bad.push_back("out-copy with two incoming connectors");
      }
    }
  }
  if (expected_w != actual_w)
    bad.push_back("weighted arcs are not one-per-edge");

  // Independently derive which in-copy owns the connector to each out-copy.
  for (Vertex v = 0; v < tg.vertex_count(); ++v) {
    auto ins = tg.in_copies(v);    // descending
    auto outs = tg.out_copies(v);  // descending
    for (auto oit = outs.rbegin(); oit != outs.rend(); ++oit) {
      Time out_time = tg.node(*oit).time;
      Time prev_out = oit == outs.rbegin() ? kNegInf
                                           : tg.node(*std::prev(oit)).time;
      int owner = -1;  // latest in-copy with prev_out < time <= out_time
      for (auto iit = ins.begin(); iit != ins.end(); ++iit) {
        Time in_time = tg.node(*iit).time;
        if (in_time <= out_time && in_time > prev_out) {
          owner = *iit;
          break;
        }
      }
      auto found = connector_into_out.find(*oit);
      int actual = found == connector_into_out.end() ? -1 : found->second;
      if (actual != owner)
        bad.push_back("connector ownership mismatch at vertex " +
                      std::to_string(v));
      if (owner >= 0) connector_of_in.erase(owner);
    }
  }
  for (const auto& [in_id, out_id] : connector_of_in)
    bad.push_back("unexpected connector from in-copy " +
                  std::to_string(in_id));
  return bad;
}

struct DagRunStats {
  std::size_t max_node_visits = 0;  // flag raises (BFS) or settles (Dijkstra)
};

namespace detail {

inline std::vector<char> active_by_vertex(Vertex n, const BeerConfig& bc,
                                          const Query& q) {
  if (q.activation.size() != static_cast<std::size_t>(bc.count()))
    throw std::invalid_argument(
        "activation mask length must equal the beer vertex count");
  std::vector<char> active(n, 0);
  for (int i = 0; i < bc.count(); ++i)
    if (q.activation[i]) active[bc.vertex(i)] = 1;
  return active;
}

}  // namespace detail

// One-to-all fastest beer durations on the DAG under Boolean activation.
// Runs a flagged BFS from every usable departure copy of the source in
// descending time order. Flags: 0 unvisited, 1 reached, 2 reached with beer;
// a node is entered only by a strictly larger flag, so it is visited at most
// twice across all rounds. The first flag-2 touch of a copy of v, in the
// round with the latest possible departure, yields the duration.
inline std::vector<Time> fbp_on_dag(const TransformedGraph& tg,
                                    const BeerConfig& bc, const Query& q,
                                    DagRunStats* stats = nullptr,
                                    bool depth_first = false) {
  detail::check_vertex(q.source, tg.vertex_count(), "source");
  auto active = detail::active_by_vertex(tg.vertex_count(), bc, q);
  std::vector<Time> best(tg.vertex_count(), kInf);
  if (active[q.source]) best[q.source] = 0;  // wait out the beer in place
  std::vector<char> flag(tg.node_count(), 0);
  std::vector<std::size_t> visits(tg.node_count(), 0);
  std::deque<int> frontier;
  for (int src : tg.source_copies(q.source, q.window)) {
    assert(flag[src] == 0);  // later departures can never reach earlier ones
    Time depart = tg.node(src).time;
    flag[src] = active[q.source] ? 2 : 1;
    ++visits[src];
    frontier.assign(1, src);
    while (!frontier.empty()) {
      int u;
      if (depth_first) {
        u = frontier.back();
        frontier.pop_back();
      } else {
        u = frontier.front();
        frontier.pop_front();
      }
      char f = flag[u];
      for (const auto& arc : tg.arcs_from(u)) {
        const auto& child = tg.node(arc.to);
        if (child.time > q.window.omega) continue;
        char cf = active[child.orig] ? 2 : f;
        if (flag[arc.to] >= cf) continue;
        flag[arc.to] = cf;
        ++visits[arc.to];
        if (cf == 2)
          best[child.orig] = std::min(best[child.orig], child.time - depart);
        frontier.push_back(arc.to);
      }
    }
  }
  if (stats)
    for (std::size_t c : visits)
      stats->max_node_visits = std::max(stats->max_node_visits, c);
  return best;
}

// One-to-all shortest beer distances on the DAG. Dijkstra from a virtual
// source over the (copy, flag) product: flag-2 states are journeys that
// already passed an active beer copy. Each copy settles at most once per
// flag layer. Answer per original vertex: cheapest flag-2 state among its
// copies inside the window.
inline std::vector<Time> sbp_on_dag(const TransformedGraph& tg,
                                    const BeerConfig& bc, const Query& q,
                                    DagRunStats* stats = nullptr) {
  detail::check_vertex(q.source, tg.vertex_count(), "source");
  auto active = detail::active_by_vertex(tg.vertex_count(), bc, q);
  std::vector<Time> best(tg.vertex_count(), kInf);
  if (active[q.source]) best[q.source] = 0;
  std::vector<Time> dist(tg.node_count() * 2, kInf);
  std::vector<std::size_t> settles(tg.node_count(), 0);
  using State = std::pair<Time, std::size_t>;  // (distance, node*2 + flag-1)
  std::priority_queue<State, std::vector<State>, std::greater<>> heap;
  for (int src : tg.source_copies(q.source, q.window)) {
    std::size_t state = static_cast<std::size_t>(src) * 2 +
                        (active[q.source] ? 1 : 0);
    dist[state] = 0;
    heap.emplace(0, state);
  }
  while (!heap.empty()) {
    auto [d, state] = heap.top();
    heap.pop();
    if (d > dist[state]) continue;
    int u = static_cast<int>(state / 2);
    bool beer_done = state % 2 == 1;
    ++settles[u];
    if (beer_done) best[tg.node(u).orig] = std::min(best[tg.node(u).orig], d);
    for (const auto& arc : tg.arcs_from(u)) {
      const auto& child = tg.node(arc.to);
      if (child.time > q.window.omega) continue;
      bool child_beer = beer_done || active[child.orig];
      std::size_t next = static_cast<std::size_t>(arc.to) * 2 +
                         (child_beer ? 1 : 0);
      if (d + arc.weight < dist[next]) {
        dist[next] = d + arc.weight;
        heap.emplace(dist[next], next);
      }
    }
  }
  if (stats)
    for (std::size_t c : settles)
      stats->max_node_visits = std::max(stats->max_node_visits, c);
  return best;
}

// Documented text form of the DAG, stable across runs: `dag N A`, one
// `node id v t in|out` line per copy, one `arc from to weight` line per arc.
inline void write_transform_text(std::ostream& os,
                                 const TransformedGraph& tg) {
  os << "dag " << tg.node_count() << ' ' << tg.arc_count() << '\n';
  for (std::size_t id = 0; id < tg.node_count(); ++id) {
    const auto& nd = tg.node(static_cast<int>(id));
    os << "node " << id << ' ' << nd.orig << ' ' << nd.time << ' '
       << (nd.is_out ? "out" : "in") << '\n';
  }
  for (std::size_t id = 0; id < tg.node_count(); ++id)
    for (const auto& arc : tg.arcs_from(static_cast<int>(id)))
      os << "arc " << id << ' ' << arc.to << ' ' << arc.weight << '\n';
}

inline void write_transform_dot(std::ostream& os, const TransformedGraph& tg) {
  os << "digraph temporal {\n  rankdir=LR;\n";
  auto name = [&tg](int id) {
    const auto& nd = tg.node(id);
    return "\"" + std::to_string(nd.orig) + "@" + std::to_string(nd.time) +
           (nd.is_out ? "out" : "in") + "\"";
  };
  for (std::size_t id = 0; id < tg.node_count(); ++id)
    for (const auto& arc : tg.arcs_from(static_cast<int>(id)))
      os << "  " << name(static_cast<int>(id)) << " -> " << name(arc.to)
         << " [label=" << arc.weight << "];\n";
  os << "}\n";
}

}  // namespace tbp
