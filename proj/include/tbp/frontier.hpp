#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <vector>

#include "tbp/types.hpp"

namespace tbp {

// A pair on a two-criteria frontier. The key is the sort key of the hosting
// list; the value is the partner criterion. Which domain quantity lands in
// which slot depends on the frontier kind (see aliases below).
struct FrontierPair {
  Time key;
  Time value;

  friend bool operator==(const FrontierPair&, const FrontierPair&) = default;
};

// Which pair wins when both criteria tie on one side:
//   LaterKey:   q dominates p  iff  q.key >= p.key and q.value <= p.value
//   EarlierKey: q dominates p  iff  q.key <= p.key and q.value <= p.value
// (one inequality strict in both cases).
enum class Dominance { LaterKey, EarlierKey };

// Sorted dynamic array of mutually non-dominated pairs. Keys are unique.
// Under LaterKey dominance values are strictly increasing with the key,
// under EarlierKey strictly decreasing. insert() rejects dominated
// candidates and evicts any resident pairs the candidate dominates, so the
// invariant holds after every call. Sizes are degree-bounded in all uses,
// which keeps the array shifts cheap.
template <Dominance D>
class Frontier {
 public:
  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }
  const std::vector<FrontierPair>& pairs() const { return pairs_; }

  friend bool operator==(const Frontier&, const Frontier&) = default;

  // Returns false iff the candidate was dominated (or already present).
  bool insert(Time key, Time value) {
    auto it = std::lower_bound(
        pairs_.begin(), pairs_.end(), key,
        [](const FrontierPair& p, Time k) { return p.key < k; });
    if (it != pairs_.end() && it->key == key) {
      if (it->value <= value) return false;
      it->value = value;
      prune_around(it);
      return true;
    }
    if constexpr (D == Dominance::LaterKey) {
      if (it != pairs_.end() && it->value <= value) return false;
    } else {
      if (it != pairs_.begin() && std::prev(it)->value <= value) return false;
    }
    it = pairs_.insert(it, FrontierPair{key, value});
    prune_around(it);
    return true;
  }

  // Last pair with key <= bound.
  std::optional<FrontierPair> max_key_at_most(Time bound) const {
    auto it = std::upper_bound(
        pairs_.begin(), pairs_.end(), bound,
        [](Time k, const FrontierPair& p) { return k < p.key; });
    if (it == pairs_.begin()) return std::nullopt;
    return *std::prev(it);
  }

  // First pair with key >= bound.
  std::optional<FrontierPair> min_key_at_least(Time bound) const {
    auto it = std::lower_bound(
        pairs_.begin(), pairs_.end(), bound,
        [](const FrontierPair& p, Time k) { return p.key < k; });
    if (it == pairs_.end()) return std::nullopt;
    return *it;
  }

  // Last pair with value <= bound. Only meaningful under LaterKey dominance,
  // where values are sorted ascending like the keys.
  std::optional<FrontierPair> max_value_at_most(Time bound) const
    requires(D == Dominance::LaterKey)
  {
    auto it = std::upper_bound(
        pairs_.begin(), pairs_.end(), bound,
        [](Time v, const FrontierPair& p) { return v < p.value; });
    if (it == pairs_.begin()) return std::nullopt;
    return *std::prev(it);
  }

  // Checks strict monotonicity of keys and values; used by tests and debug
  // builds. Key order is ascending; value order depends on the dominance.
  bool well_formed() const {
    for (std::size_t i = 1; i < pairs_.size(); ++i) {
      if (pairs_[i - 1].key >= pairs_[i].key) return false;
      if constexpr (D == Dominance::LaterKey) {
        if (pairs_[i - 1].value >= pairs_[i].value) return false;
      } else {
        if (pairs_[i - 1].value <= pairs_[i].value) return false;
      }
    }
    return true;
  }

 private:
  // Evicts neighbors dominated by *it. Dominated pairs sit contiguously on
  // the side whose keys lose ties, so a linear sweep from `it` suffices.
  void prune_around(std::vector<FrontierPair>::iterator it) {
    if constexpr (D == Dominance::LaterKey) {
      auto first = it;
      while (first != pairs_.begin() && std::prev(first)->value >= it->value)
        --first;
      if (first != it) it = pairs_.erase(first, it);
    } else {
      auto last = std::next(it);
      while (last != pairs_.end() && last->value >= it->value) ++last;
      pairs_.erase(std::next(it), last);
    }
    assert(well_formed());
  }

  std::vector<FrontierPair> pairs_;
};

// (start, arrival) pairs of paths out of one source; key = start.
// A resident pair means "leave the source at `key`, be at this vertex by
// `value`"; later starts arrive later once dominated pairs are gone.
using SaFrontier = Frontier<Dominance::LaterKey>;

// (distance, arrival) pairs; key = arrival, value = distance travelled.
// Later arrivals only survive with strictly smaller distance.
using DaFrontier = Frontier<Dominance::EarlierKey>;

// (distance, start) pairs of paths into one target; key = start, value =
// distance. Later starts only survive with strictly larger distance, which
// is exactly why the earliest feasible start is also the cheapest.
using DsFrontier = Frontier<Dominance::LaterKey>;

}  // namespace tbp
