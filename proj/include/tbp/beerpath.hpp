#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <span>
#include <vector>

#include "tbp/beer_config.hpp"
#include "tbp/frontier.hpp"
#include "tbp/nondom.hpp"
#include "tbp/temporal_graph.hpp"
#include "tbp/types.hpp"

namespace tbp {

enum class Variant { Stream, AdjList };

namespace detail {

inline void check_init_times(std::span<const Time> values, Vertex n,
                             TimeWindow w, Time sentinel) {
  if (static_cast<Vertex>(values.size()) != n)
    throw std::invalid_argument("init/fin array must have one entry per vertex");
  for (Time t : values) {
    if (t == sentinel) continue;
    if (t < w.alpha || t > w.omega)
      throw std::invalid_argument(
          "finite init/fin entries must lie inside the time window");
  }
}

// Binary heap over vertex ids with positional tracking, so priority
// improvements are O(log n). Compare(a, b) == true means a pops first.
template <typename Compare>
class VertexHeap {
 public:
  VertexHeap(std::span<const Time> keys, Compare cmp)
      : keys_(keys.begin(), keys.end()), cmp_(cmp) {
    heap_.resize(keys_.size());
    pos_.resize(keys_.size());
    std::iota(heap_.begin(), heap_.end(), 0);
    for (std::size_t i = 0; i < heap_.size(); ++i) pos_[heap_[i]] = i;
    for (std::size_t i = heap_.size() / 2; i-- > 0;) sift_down(i);
  }

  bool empty() const { return heap_.empty(); }

  std::pair<Vertex, Time> pop() {
    Vertex top = heap_.front();
    Time key = keys_[top];
    swap_slots(0, heap_.size() - 1);
    heap_.pop_back();
    pos_[top] = npos;
    if (!heap_.empty()) sift_down(0);
    return {top, key};
  }

  // New key must rank no worse than the old one.
  void improve(Vertex v, Time key) {
    assert(pos_[v] != npos);
    assert(!cmp_(keys_[v], key));
    keys_[v] = key;
    sift_up(pos_[v]);
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bool better(Vertex a, Vertex b) const { return cmp_(keys_[a], keys_[b]); }

  void swap_slots(std::size_t i, std::size_t j) {
    std::swap(heap_[i], heap_[j]);
    pos_[heap_[i]] = i;
    pos_[heap_[j]] = j;
  }

  void sift_up(std::size_t i) {
    while (i > 0) {
      std::size_t parent = (i - 1) / 2;
      if (!better(heap_[i], heap_[parent])) break;
      swap_slots(i, parent);
      i = parent;
    }
  }

  void sift_down(std::size_t i) {
    for (;;) {
      std::size_t best = i, l = 2 * i + 1, r = 2 * i + 2;
      if (l < heap_.size() && better(heap_[l], heap_[best])) best = l;
      if (r < heap_.size() && better(heap_[r], heap_[best])) best = r;
      if (best == i) return;
      swap_slots(i, best);
      i = best;
    }
  }

  std::vector<Time> keys_;
  std::vector<Vertex> heap_;
  std::vector<std::size_t> pos_;
  Compare cmp_;
};

}  // namespace detail

// Multiple-source earliest arrival over the ascending edge stream: init[v]
// is the earliest instant a journey may leave v (kInf = not a source).
// Returns the earliest reachable instant per vertex within the window.
inline std::vector<Time> mseap_stream(const TemporalGraph& g, TimeWindow w,
                                      std::span<const Time> init) {
  detail::check_init_times(init, g.vertex_count(), w, kInf);
  std::vector<Time> tau(init.begin(), init.end());
  for (const TemporalEdge& e : g.ascending()) {
    if (tau[e.from] <= e.depart && e.arrive() <= w.omega) {
      assert(std::min(tau[e.to], e.arrive()) <= tau[e.to]);
      tau[e.to] = std::min(tau[e.to], e.arrive());
    }
  }
  return tau;
}

// Same contract as mseap_stream, driven by a priority queue over the
// adjacency lists with one binary search per neighbor. Requires a graph
// without dominated edges, otherwise the per-pair searches are unsound.
inline std::vector<Time> mseap_adjlist(const TemporalGraph& g, TimeWindow w,
                                       std::span<const Time> init) {
  detail::check_init_times(init, g.vertex_count(), w, kInf);
  if (!g.dominated_free())
    throw std::invalid_argument(
        "mseap_adjlist requires a graph without dominated edges; "
        "run remove_dominated_edges first");
  std::vector<Time> tau(init.begin(), init.end());
  detail::VertexHeap heap(tau, [](Time a, Time b) { return a < b; });
  while (!heap.empty()) {
    auto [u, key] = heap.pop();
    if (key == kInf) break;  // the rest of the queue is unreachable
    for (const NeighborHops& nh : g.out(u)) {
      auto it = std::lower_bound(
          nh.hops.begin(), nh.hops.end(), key,
          [](const std::pair<Time, Time>& h, Time b) { return h.first < b; });
      if (it == nh.hops.end()) continue;
      Time arrive = it->first + it->second;
      if (arrive <= w.omega && arrive < tau[nh.vertex]) {
        tau[nh.vertex] = arrive;
        heap.improve(nh.vertex, arrive);
      }
    }
  }
  return tau;
}

// Multiple-target latest departure over the descending stream: fin[v] is the
// latest instant a journey may still be at v (kNegInf = not a target).
inline std::vector<Time> mtldp_stream(const TemporalGraph& g, TimeWindow w,
                                      std::span<const Time> fin) {
  detail::check_init_times(fin, g.vertex_count(), w, kNegInf);
  std::vector<Time> tau(fin.begin(), fin.end());
  for (const TemporalEdge& e : g.descending()) {
    if (e.depart >= w.alpha && e.arrive() <= tau[e.to]) {
      assert(std::max(tau[e.from], e.depart) >= tau[e.from]);
      tau[e.from] = std::max(tau[e.from], e.depart);
    }
  }
  return tau;
}

inline std::vector<Time> mtldp_adjlist(const TemporalGraph& g, TimeWindow w,
                                       std::span<const Time> fin) {
  detail::check_init_times(fin, g.vertex_count(), w, kNegInf);
  if (!g.dominated_free())
    throw std::invalid_argument(
        "mtldp_adjlist requires a graph without dominated edges; "
        "run remove_dominated_edges first");
  std::vector<Time> tau(fin.begin(), fin.end());
  detail::VertexHeap heap(tau, [](Time a, Time b) { return a > b; });
  while (!heap.empty()) {
    auto [v, key] = heap.pop();
    if (key == kNegInf) break;
    for (const NeighborHops& nh : g.in(v)) {
      // latest hop into v still arriving by tau[v]; arrivals share the
      // departure order on dominated-free hop lists
      auto it = std::upper_bound(nh.hops.begin(), nh.hops.end(), key,
                                 [](Time b, const std::pair<Time, Time>& h) {
                                   return b < h.first + h.second;
                                 });
      if (it == nh.hops.begin()) continue;
      --it;
      Time depart = it->first;
      if (depart >= w.alpha && depart > tau[nh.vertex]) {
        tau[nh.vertex] = depart;
        heap.improve(nh.vertex, depart);
      }
    }
  }
  return tau;
}

// Earliest-arrival beer path times from x: one pass to learn the earliest
// arrival at every beer vertex, a binary search per beer vertex for the next
// active instant, and a second pass seeded with those instants.
inline std::vector<Time> eabp(const TemporalGraph& g, Vertex x, TimeWindow w,
                              const BeerConfig& bc,
                              Variant variant = Variant::Stream) {
  detail::check_vertex(x, g.vertex_count(), "source");
  auto run = [&](const std::vector<Time>& init) {
    return variant == Variant::Stream ? mseap_stream(g, w, init)
                                      : mseap_adjlist(g, w, init);
  };
  std::vector<Time> init(g.vertex_count(), kInf);
  init[x] = w.alpha;
  std::vector<Time> tau = run(init);
  std::vector<Time> seeded(g.vertex_count(), kInf);
  for (int i = 0; i < bc.count(); ++i) {
    Vertex b = bc.vertex(i);
    Time beer_time = bc.min_active_at_or_after(b, tau[b]);
    if (beer_time <= w.omega) seeded[b] = beer_time;
  }
  return run(seeded);
}

// Latest-departure beer path times towards y, the time-reversed mirror.
inline std::vector<Time> ldbp(const TemporalGraph& g, Vertex y, TimeWindow w,
                              const BeerConfig& bc,
                              Variant variant = Variant::Stream) {
  detail::check_vertex(y, g.vertex_count(), "target");
  auto run = [&](const std::vector<Time>& fin) {
    return variant == Variant::Stream ? mtldp_stream(g, w, fin)
                                      : mtldp_adjlist(g, w, fin);
  };
  std::vector<Time> fin(g.vertex_count(), kNegInf);
  fin[y] = w.omega;
  std::vector<Time> tau = run(fin);
  std::vector<Time> seeded(g.vertex_count(), kNegInf);
  for (int i = 0; i < bc.count(); ++i) {
    Vertex b = bc.vertex(i);
    Time beer_time = bc.max_active_at_or_before(b, tau[b]);
    if (beer_time >= w.alpha) seeded[b] = beer_time;
  }
  return run(seeded);
}

// Fastest beer path durations from x. Phase 1 collects non-dominated
// (start, arrival) pairs to every beer vertex; each pair is delayed to the
// vertex's next active instant and re-enters a second frontier pass as an
// edge out of a virtual source, so the final lists already carry beer-valid
// journeys. Duration at v is the smallest arrival-minus-start over its list.
//
// Beer at the source itself is modelled with zero-length virtual edges at
// the source's active instants rather than with departure seeds: a journey
// that grabs the beer before leaving starts its clock at the active instant
// it committed to. This keeps the objective independent of dominated-edge
// removal, which pair seeding is not.
inline std::vector<Time> fbp(const TemporalGraph& g, Vertex x, TimeWindow w,
                             const BeerConfig& bc) {
  detail::check_vertex(x, g.vertex_count(), "source");
  const Vertex n = g.vertex_count();
  const Vertex virtual_source = n;
  auto lists = start_arrival_frontiers(g.ascending(), n, x, w);

  std::vector<TemporalEdge> extra;
  for (int i = 0; i < bc.count(); ++i) {
    Vertex b = bc.vertex(i);
    if (b == x) {
      for (Time t : bc.times(i))
        if (t >= w.alpha && t <= w.omega)
          extra.push_back(TemporalEdge{virtual_source, b, t, 0});
    }
    for (const FrontierPair& p : lists[b].pairs()) {
      if (b == x && p.value == p.key) continue;  // departure seed, see above
      Time adjusted = bc.min_active_at_or_after(b, p.value);
      if (adjusted <= w.omega)
        extra.push_back(
            TemporalEdge{virtual_source, b, p.key, adjusted - p.key});
    }
  }
  std::stable_sort(extra.begin(), extra.end(),
                   [](const TemporalEdge& a, const TemporalEdge& b) {
                     return a.depart < b.depart;
                   });

  // Merge into the ascending stream; virtual edges go first on equal start
  // so a zero-length one can feed a real edge leaving at the same instant.
  std::vector<TemporalEdge> merged;
  merged.reserve(g.ascending().size() + extra.size());
  auto real = g.ascending();
  std::size_t ri = 0, xi = 0;
  while (ri < real.size() || xi < extra.size()) {
    if (ri == real.size() ||
        (xi < extra.size() && extra[xi].depart <= real[ri].depart))
      merged.push_back(extra[xi++]);
    else
      merged.push_back(real[ri++]);
  }

  auto final_lists =
      start_arrival_frontiers(merged, n + 1, virtual_source, w);
  std::vector<Time> durations(n, kInf);
  for (Vertex v = 0; v < n; ++v)
    for (const FrontierPair& p : final_lists[v].pairs())
      durations[v] = std::min(durations[v], p.value - p.key);
  return durations;
}

// Shortest beer path distance from x to y. Forward (distance, arrival)
// frontiers meet backward (distance, start) frontiers at each beer vertex;
// the earliest continuation starting after the adjusted arrival is also the
// cheapest one, so a single binary search per pair suffices. Waiting out the
// beer at the target (or before leaving the source) needs no continuation
// pair at all; see fbp for why the source case avoids departure seeds.
inline Time sbp(const TemporalGraph& g, Vertex x, Vertex y, TimeWindow w,
                const BeerConfig& bc) {
  detail::check_vertex(x, g.vertex_count(), "source");
  detail::check_vertex(y, g.vertex_count(), "target");
  auto forward = dist_nondom_paths(g, x, w);
  auto backward = inv_dist_nondom_paths(g, y, w);
  Time best = kInf;
  for (int i = 0; i < bc.count(); ++i) {
    Vertex b = bc.vertex(i);
    if (b == x) {
      Time first = bc.min_active_at_or_after(b, w.alpha);
      if (first <= w.omega) {
        if (x == y)
          best = std::min(best, Time{0});
        else if (auto hit = backward[x].min_key_at_least(first))
          best = std::min(best, hit->value);
      }
    }
    for (const FrontierPair& p : forward[b].pairs()) {
      if (b == x && p.value == 0) continue;  // departure seed, handled above
      Time adjusted = bc.min_active_at_or_after(b, p.key);
      if (adjusted > w.omega) continue;
      if (b == y) {
        best = std::min(best, p.value);
        continue;
      }
      if (auto hit = backward[b].min_key_at_least(adjusted))
        best = std::min(best, p.value + hit->value);
    }
  }
  return best;
}

}  // namespace tbp
