#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "tbp/types.hpp"

namespace tbp {

// One temporal edge: traversable only by leaving `from` at exactly `depart`,
// reaching `to` at depart + travel.
struct TemporalEdge {
  Vertex from = 0;
  Vertex to = 0;
  Time depart = 0;
  Time travel = 1;

  Time arrive() const { return depart + travel; }

  friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

// Per-vertex adjacency entry: all hops to (or from) one neighbor, sorted by
// departure time. For graphs without dominated edges the arrival times are
// sorted as well, which is what the binary searches below rely on.
struct NeighborHops {
  Vertex vertex = 0;                              // the other endpoint
  std::vector<std::pair<Time, Time>> hops;        // (depart, travel)
};

enum class EdgeSearch {
  MinDepartAtLeast,  // earliest hop leaving at or after the bound
  MaxArriveAtMost,   // latest hop arriving at or before the bound
};

// Immutable after construction; safe for any number of concurrent readers.
class TemporalGraph {
 public:
  struct Stats {
    std::size_t edge_count = 0;       // M
    std::size_t connected_pairs = 0;  // ordered pairs with at least one edge
    std::size_t max_parallel = 0;     // largest |E(u,v)|
    std::size_t max_in_degree = 0;    // edges, not distinct neighbors
    std::size_t max_out_degree = 0;
    std::size_t max_degree = 0;
    std::size_t frontier_bound = 0;   // min(max_in_degree, max_out_degree)
  };

  TemporalGraph() = default;

  TemporalGraph(Vertex n, std::vector<TemporalEdge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
    for (const TemporalEdge& e : edges) {
      if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
        throw std::invalid_argument("edge endpoint out of range");
      if (e.depart < 0) throw std::invalid_argument("edge depart time < 0");
      if (e.travel < 1) throw std::invalid_argument("edge travel time < 1");
    }
    input_order_ = std::move(edges);
    ascending_ = input_order_;
    std::stable_sort(ascending_.begin(), ascending_.end(),
                     [](const TemporalEdge& a, const TemporalEdge& b) {
                       return a.depart < b.depart;
                     });
    descending_ = input_order_;
    std::stable_sort(descending_.begin(), descending_.end(),
                     [](const TemporalEdge& a, const TemporalEdge& b) {
                       return a.depart > b.depart;
                     });
    build_adjacency();
    compute_stats();
  }

  Vertex vertex_count() const { return n_; }
  std::span<const TemporalEdge> input_order() const { return input_order_; }
  std::span<const TemporalEdge> ascending() const { return ascending_; }
  std::span<const TemporalEdge> descending() const { return descending_; }
  const Stats& stats() const { return stats_; }

  // True when no edge is dominated by a parallel one (Def.: another edge on
  // the same ordered pair departing no earlier and arriving no later, with
  // one inequality strict). Exact duplicates do not dominate each other.
  bool dominated_free() const { return dominated_free_; }

  std::span<const NeighborHops> out(Vertex u) const { return out_[u]; }
  std::span<const NeighborHops> in(Vertex v) const { return in_[v]; }

  const NeighborHops* out_hops(Vertex u, Vertex v) const {
    return find_hops(out_[u], v);
  }
  const NeighborHops* in_hops(Vertex v, Vertex u) const {
    return find_hops(in_[v], u);
  }

 private:
  static const NeighborHops* find_hops(const std::vector<NeighborHops>& list,
                                       Vertex key) {
    auto it = std::lower_bound(
        list.begin(), list.end(), key,
        [](const NeighborHops& h, Vertex v) { return h.vertex < v; });
    if (it == list.end() || it->vertex != key) return nullptr;
    return &*it;
  }

  void build_adjacency() {
    out_.assign(n_, {});
    in_.assign(n_, {});
    std::vector<std::vector<TemporalEdge>> by_from(n_), by_to(n_);
    for (const TemporalEdge& e : ascending_) {
      by_from[e.from].push_back(e);
      by_to[e.to].push_back(e);
    }
    auto fill = [](std::vector<NeighborHops>& slot,
                   std::vector<TemporalEdge>& edges, bool keyed_by_to) {
      std::stable_sort(edges.begin(), edges.end(),
                       [&](const TemporalEdge& a, const TemporalEdge& b) {
                         Vertex ka = keyed_by_to ? a.to : a.from;
                         Vertex kb = keyed_by_to ? b.to : b.from;
                         if (ka != kb) return ka < kb;
                         if (a.depart != b.depart) return a.depart < b.depart;
                         return a.arrive() < b.arrive();
                       });
      for (const TemporalEdge& e : edges) {
        Vertex key = keyed_by_to ? e.to : e.from;
        if (slot.empty() || slot.back().vertex != key)
          slot.push_back(NeighborHops{key, {}});
        slot.back().hops.emplace_back(e.depart, e.travel);
      }
    };
    for (Vertex v = 0; v < n_; ++v) {
      fill(out_[v], by_from[v], /*keyed_by_to=*/true);
      fill(in_[v], by_to[v], /*keyed_by_to=*/false);
    }
  }

  void compute_stats() {
    stats_.edge_count = input_order_.size();
    std::vector<std::size_t> in_deg(n_, 0), out_deg(n_, 0);
    for (const TemporalEdge& e : input_order_) {
      ++out_deg[e.from];
      ++in_deg[e.to];
    }
    for (Vertex v = 0; v < n_; ++v) {
      stats_.max_in_degree = std::max(stats_.max_in_degree, in_deg[v]);
      stats_.max_out_degree = std::max(stats_.max_out_degree, out_deg[v]);
    }
    stats_.max_degree = std::max(stats_.max_in_degree, stats_.max_out_degree);
    stats_.frontier_bound =
        std::min(stats_.max_in_degree, stats_.max_out_degree);
    dominated_free_ = true;
    for (Vertex v = 0; v < n_; ++v) {
      for (const NeighborHops& nh : out_[v]) {
        stats_.connected_pairs += 1;
        stats_.max_parallel = std::max(stats_.max_parallel, nh.hops.size());
        for (std::size_t i = 1; i < nh.hops.size(); ++i) {
          const auto& [d0, t0] = nh.hops[i - 1];
          const auto& [d1, t1] = nh.hops[i];
          bool duplicate = d0 == d1 && t0 == t1;
          bool strictly_later = d0 < d1 && d0 + t0 < d1 + t1;
          if (!duplicate && !strictly_later) dominated_free_ = false;
        }
      }
    }
  }

  Vertex n_ = 0;
  std::vector<TemporalEdge> input_order_;
  std::vector<TemporalEdge> ascending_;
  std::vector<TemporalEdge> descending_;
  std::vector<std::vector<NeighborHops>> out_;
  std::vector<std::vector<NeighborHops>> in_;
  Stats stats_;
  bool dominated_free_ = true;
};

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

inline Time parse_number(const std::string& tok, int line_no,
                         const char* what) {
  std::size_t pos = 0;
  Time value = 0;
  try {
    value = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": bad " + what +
                     " '" + tok + "'");
  return value;
}

// Reads the next line that contains any token; pure whitespace is skipped so
// trailing newlines do not count against the expected record count.
inline bool next_record(std::istream& is, std::vector<std::string>& tokens,
                        int& line_no) {
  std::string line;
  while (std::getline(is, line)) {
    ++line_no;
    tokens = tokenize(line);
    if (!tokens.empty()) return true;
  }
  return false;
}

}  // namespace detail

// Graph file: header `n M`, then M records `u v t lambda`. Edge order in the
// file is arbitrary; the constructor sorts the stream views.
inline TemporalGraph parse_edge_stream(std::istream& is) {
  int line_no = 0;
  std::vector<std::string> tok;
  if (!detail::next_record(is, tok, line_no))
    throw ParseError("line 1: missing graph header");
  if (tok.size() != 2)
    throw ParseError("line " + std::to_string(line_no) +
                     ": header must be 'n M'");
  Time n = detail::parse_number(tok[0], line_no, "vertex count");
  Time m = detail::parse_number(tok[1], line_no, "edge count");
  if (n < 0 || m < 0)
    throw ParseError("line " + std::to_string(line_no) +
                     ": negative header value");
  std::vector<TemporalEdge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (Time i = 0; i < m; ++i) {
    if (!detail::next_record(is, tok, line_no))
      throw ParseError("line " + std::to_string(line_no + 1) +
                       ": expected " + std::to_string(m) +
                       " edges, found " + std::to_string(i));
    if (tok.size() != 4)
      throw ParseError("line " + std::to_string(line_no) +
                       ": edge must be 'u v t lambda'");
    Time u = detail::parse_number(tok[0], line_no, "vertex id");
    Time v = detail::parse_number(tok[1], line_no, "vertex id");
    Time t = detail::parse_number(tok[2], line_no, "start time");
    Time lambda = detail::parse_number(tok[3], line_no, "traversal time");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("line " + std::to_string(line_no) +
                       ": vertex id out of range [0, " + std::to_string(n) +
                       ")");
    if (t < 0)
      throw ParseError("line " + std::to_string(line_no) +
                       ": start time must be >= 0");
    if (lambda < 1)
      throw ParseError("line " + std::to_string(line_no) +
                       ": lambda must be >= 1");
    edges.push_back(TemporalEdge{static_cast<Vertex>(u),
                                 static_cast<Vertex>(v), t, lambda});
  }
  if (detail::next_record(is, tok, line_no))
    throw ParseError("line " + std::to_string(line_no) +
                     ": trailing content after " + std::to_string(m) +
                     " edges");
  return TemporalGraph(static_cast<Vertex>(n), std::move(edges));
}

inline TemporalGraph parse_edge_stream(const std::string& text) {
  std::istringstream ss(text);
  return parse_edge_stream(ss);
}

inline void write_edge_stream(std::ostream& os, const TemporalGraph& g) {
  os << g.vertex_count() << ' ' << g.stats().edge_count << '\n';
  for (const TemporalEdge& e : g.input_order())
    os << e.from << ' ' << e.to << ' ' << e.depart << ' ' << e.travel << '\n';
}

// Keeps, for every ordered pair, only the non-dominated parallel edges; exact
// duplicates collapse to one copy. Surviving edges retain their input order.
inline TemporalGraph remove_dominated_edges(const TemporalGraph& g) {
  struct Entry {
    Time depart;
    Time arrive;
    std::size_t index;
  };
  std::unordered_map<std::int64_t, std::vector<Entry>> groups;
  const auto edges = g.input_order();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::int64_t key = static_cast<std::int64_t>(edges[i].from) *
                           (static_cast<std::int64_t>(g.vertex_count()) + 1) +
                       edges[i].to;
    groups[key].push_back(Entry{edges[i].depart, edges[i].arrive(), i});
  }
  std::vector<std::size_t> keep;
  for (auto& [key, entries] : groups) {
    std::sort(entries.begin(), entries.end(), [](const Entry& a,
                                                 const Entry& b) {
      if (a.depart != b.depart) return a.depart < b.depart;
      if (a.arrive != b.arrive) return a.arrive < b.arrive;
      return a.index < b.index;
    });
    // Scan departure groups from latest to earliest: a group's cheapest edge
    // survives iff it beats every strictly later survivor's arrival.
    Time best_arrive = kInf;
    std::size_t i = entries.size();
    while (i > 0) {
      std::size_t last = i;
      Time depart = entries[i - 1].depart;
      while (i > 0 && entries[i - 1].depart == depart) --i;
      const Entry& candidate = entries[i];  // min arrival in this group
      if (candidate.arrive < best_arrive) {
        keep.push_back(candidate.index);
        best_arrive = candidate.arrive;
      }
      (void)last;
    }
  }
  std::sort(keep.begin(), keep.end());
  std::vector<TemporalEdge> kept;
  kept.reserve(keep.size());
  for (std::size_t idx : keep) kept.push_back(edges[idx]);
  return TemporalGraph(g.vertex_count(), std::move(kept));
}

// Binary search among the parallel edges from u to v. The arrival-keyed mode
// presumes the (u, v) hop list is free of dominated edges, in which case the
// departure order is also the arrival order.
inline std::optional<TemporalEdge> parallel_edge_search(const TemporalGraph& g,
                                                        Vertex u, Vertex v,
                                                        EdgeSearch mode,
                                                        Time bound) {
  const NeighborHops* hops = g.out_hops(u, v);
  if (hops == nullptr) return std::nullopt;
  const auto& list = hops->hops;
  if (mode == EdgeSearch::MinDepartAtLeast) {
    auto it = std::lower_bound(
        list.begin(), list.end(), bound,
        [](const std::pair<Time, Time>& h, Time b) { return h.first < b; });
    if (it == list.end()) return std::nullopt;
    return TemporalEdge{u, v, it->first, it->second};
  }
  auto it = std::upper_bound(list.begin(), list.end(), bound,
                             [](Time b, const std::pair<Time, Time>& h) {
                               return b < h.first + h.second;
                             });
  if (it == list.begin()) return std::nullopt;
  --it;
  return TemporalEdge{u, v, it->first, it->second};
}

}  // namespace tbp
