#pragma once

#include <algorithm>
#include <istream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "tbp/temporal_graph.hpp"
#include "tbp/types.hpp"

namespace tbp {

// The beer vertices b_1..b_k and, per vertex, the sorted instants at which it
// is active. Query-time activation masks index into the same order.
class BeerConfig {
 public:
  BeerConfig() = default;

  BeerConfig(std::vector<Vertex> vertices,
             std::vector<std::vector<Time>> active_times, Vertex n)
      : vertices_(std::move(vertices)), times_(std::move(active_times)) {
    if (vertices_.size() != times_.size())
      throw std::invalid_argument("beer config: one time list per vertex");
    index_.assign(n, -1);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      Vertex b = vertices_[i];
      if (b < 0 || b >= n)
        throw std::invalid_argument("beer vertex out of range");
      if (index_[b] != -1)
        throw std::invalid_argument("duplicate beer vertex");
      index_[b] = static_cast<int>(i);
      for (std::size_t j = 0; j + 1 < times_[i].size(); ++j)
        if (times_[i][j] >= times_[i][j + 1])
          throw std::invalid_argument(
              "beer active times must be strictly increasing");
      for (Time t : times_[i])
        if (t < 0) throw std::invalid_argument("beer active time < 0");
    }
  }

  int count() const { return static_cast<int>(vertices_.size()); }
  std::span<const Vertex> vertices() const { return vertices_; }
  Vertex vertex(int i) const { return vertices_[i]; }
  std::span<const Time> times(int i) const { return times_[i]; }

  // -1 when v is not a beer vertex.
  int index_of(Vertex v) const {
    return v >= 0 && v < static_cast<Vertex>(index_.size()) ? index_[v] : -1;
  }
  bool is_beer(Vertex v) const { return index_of(v) >= 0; }

  // Earliest active instant of b at or after t; kInf when none.
  Time min_active_at_or_after(Vertex b, Time t) const {
    const auto& list = times_.at(checked_index(b));
    auto it = std::lower_bound(list.begin(), list.end(), t);
    return it == list.end() ? kInf : *it;
  }

  // Latest active instant of b at or before t; kNegInf when none.
  Time max_active_at_or_before(Vertex b, Time t) const {
    const auto& list = times_.at(checked_index(b));
    auto it = std::upper_bound(list.begin(), list.end(), t);
    return it == list.begin() ? kNegInf : *std::prev(it);
  }

 private:
  std::size_t checked_index(Vertex b) const {
    int i = index_of(b);
    if (i < 0) throw std::invalid_argument("not a beer vertex");
    return static_cast<std::size_t>(i);
  }

  std::vector<Vertex> vertices_;
  std::vector<std::vector<Time>> times_;
  std::vector<int> index_;
};

// Beer file: first record `k`, then k records `b c t1 t2 ... tc`.
inline BeerConfig parse_beer_config(std::istream& is, Vertex n) {
  int line_no = 0;
  std::vector<std::string> tok;
  if (!detail::next_record(is, tok, line_no))
    throw ParseError("line 1: missing beer vertex count");
  if (tok.size() != 1)
    throw ParseError("line " + std::to_string(line_no) +
                     ": header must be a single count");
  Time k = detail::parse_number(tok[0], line_no, "beer vertex count");
  if (k < 0)
    throw ParseError("line " + std::to_string(line_no) + ": negative count");
  std::vector<Vertex> vertices;
  std::vector<std::vector<Time>> times;
  for (Time i = 0; i < k; ++i) {
    if (!detail::next_record(is, tok, line_no))
      throw ParseError("line " + std::to_string(line_no + 1) +
                       ": expected " + std::to_string(k) + " beer records");
    if (tok.size() < 2)
      throw ParseError("line " + std::to_string(line_no) +
                       ": beer record must be 'b c t1 ... tc'");
    Time b = detail::parse_number(tok[0], line_no, "beer vertex id");
    Time c = detail::parse_number(tok[1], line_no, "active time count");
    if (c < 0 || tok.size() != static_cast<std::size_t>(c) + 2)
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected " + std::to_string(c) + " active times");
    std::vector<Time> list;
    for (Time j = 0; j < c; ++j)
      list.push_back(detail::parse_number(tok[static_cast<std::size_t>(j) + 2],
                                          line_no, "active time"));
    vertices.push_back(static_cast<Vertex>(b));
    times.push_back(std::move(list));
  }
  if (detail::next_record(is, tok, line_no))
    throw ParseError("line " + std::to_string(line_no) +
                     ": trailing content after " + std::to_string(k) +
                     " beer records");
  try {
    return BeerConfig(std::move(vertices), std::move(times), n);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("beer file: ") + e.what());
  }
}

inline BeerConfig parse_beer_config(const std::string& text, Vertex n) {
  std::istringstream ss(text);
  return parse_beer_config(ss, n);
}

inline void write_beer_config(std::ostream& os, const BeerConfig& bc) {
  os << bc.count() << '\n';
  for (int i = 0; i < bc.count(); ++i) {
    os << bc.vertex(i) << ' ' << bc.times(i).size();
    for (Time t : bc.times(i)) os << ' ' << t;
    os << '\n';
  }
}

}  // namespace tbp
