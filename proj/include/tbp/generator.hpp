#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "tbp/beer_config.hpp"
#include "tbp/temporal_graph.hpp"
#include "tbp/types.hpp"

namespace tbp {

// splitmix64. Chosen over a std engine so instances are reproducible from
// the recurrence alone, in any language:
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   output = z ^ (z >> 31)
// range(lo, hi) maps an output into [lo, hi] by modulo.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  Time range(Time lo, Time hi) {
    return lo + static_cast<Time>(next() %
                                  static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

// Desk-scale random instances; all bounds are hard caps so the enumeration
// oracle stays tractable.
struct InstanceSpec {
  std::uint64_t seed = 0;
  Vertex max_vertices = 8;
  int max_edges = 30;
  Time max_time = 30;    // departures and active times drawn from [0, max_time]
  Time max_travel = 5;   // lambda drawn from [1, max_travel]
  int max_beer = 3;
  int max_beer_times = 4;
};

struct Instance {
  TemporalGraph graph;
  BeerConfig beer;
};

inline Instance gen_instance(const InstanceSpec& spec, bool pruned = false) {
  if (spec.max_vertices < 2 || spec.max_vertices > 8 || spec.max_edges > 30 ||
      spec.max_time > 30 || spec.max_travel < 1 || spec.max_travel > 5 ||
      spec.max_beer > 3 || spec.max_beer_times > 4)
    throw std::invalid_argument("instance spec outside supported bounds");
  SplitMix64 rng(spec.seed);
  Vertex n = static_cast<Vertex>(rng.range(2, spec.max_vertices));
  int m = static_cast<int>(rng.range(0, spec.max_edges));
  std::vector<TemporalEdge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    TemporalEdge e;
    e.from = static_cast<Vertex>(rng.range(0, n - 1));
    e.to = static_cast<Vertex>(rng.range(0, n - 1));
    e.travel = rng.range(1, spec.max_travel);
    e.depart = rng.range(0, spec.max_time);
    edges.push_back(e);
  }
  TemporalGraph graph(n, std::move(edges));

  int k = static_cast<int>(rng.range(0, std::min<Time>(spec.max_beer, n)));
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (Vertex i = n - 1; i > 0; --i)
    std::swap(pool[i], pool[rng.range(0, i)]);
  std::vector<Vertex> beer(pool.begin(), pool.begin() + k);
  std::vector<std::vector<Time>> times(k);
  for (int i = 0; i < k; ++i) {
    int c = static_cast<int>(rng.range(0, spec.max_beer_times));
    std::vector<Time>& list = times[i];
    while (static_cast<int>(list.size()) < c) {
      Time t = rng.range(0, spec.max_time);
      auto it = std::lower_bound(list.begin(), list.end(), t);
      if (it == list.end() || *it != t) list.insert(it, t);
    }
  }
  BeerConfig bc(std::move(beer), std::move(times), n);
  if (pruned) graph = remove_dominated_edges(graph);
  return Instance{std::move(graph), std::move(bc)};
}

// Unconstrained sizes, for benchmarking only.
inline TemporalGraph random_graph(std::uint64_t seed, Vertex n,
                                  std::size_t m, Time max_time,
                                  Time max_travel) {
  SplitMix64 rng(seed);
  std::vector<TemporalEdge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    TemporalEdge e;
    e.from = static_cast<Vertex>(rng.range(0, n - 1));
    e.to = static_cast<Vertex>(rng.range(0, n - 1));
    e.travel = rng.range(1, max_travel);
    e.depart = rng.range(0, max_time);
    edges.push_back(e);
  }
  return TemporalGraph(n, std::move(edges));
}

inline TimeWindow random_window(SplitMix64& rng, Time horizon) {
  Time a = rng.range(0, horizon);
  Time b = rng.range(0, horizon);
  return TimeWindow(std::min(a, b), std::max(a, b));
}

}  // namespace tbp
