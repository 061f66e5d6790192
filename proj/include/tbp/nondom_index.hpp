#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tbp/beer_config.hpp"
#include "tbp/frontier.hpp"
#include "tbp/nondom.hpp"
#include "tbp/temporal_graph.hpp"
#include "tbp/types.hpp"

namespace tbp {

// One activation-mask query against the index (or the transformed graph;
// fbp_on_dag / sbp_on_dag answer one-to-all and ignore `target`).
struct Query {
  Vertex source = 0;
  Vertex target = 0;
  TimeWindow window;
  std::vector<bool> activation;  // aligned with BeerConfig order
};

struct QueryStats {
  int to_beer_searches = 0;
  int from_beer_searches = 0;
};

// Precomputed non-dominated (start, arrival) paths between every vertex and
// every beer vertex, over the whole lifetime of the graph. Queries restrict
// to a window with two binary searches per active beer vertex; activation is
// Boolean per query, so active-time lists play no role here.
class NondomIndex {
 public:
  static NondomIndex build(const TemporalGraph& g, const BeerConfig& bc) {
    NondomIndex ix;
    ix.n_ = g.vertex_count();
    ix.beer_.assign(bc.vertices().begin(), bc.vertices().end());
    ix.horizon_ = 0;
    for (const TemporalEdge& e : g.ascending())
      ix.horizon_ = std::max(ix.horizon_, e.arrive());
    const int k = bc.count();
    ix.to_beer_.assign(static_cast<std::size_t>(ix.n_) * k, {});
    ix.from_beer_.assign(static_cast<std::size_t>(k) * ix.n_, {});
    TimeWindow full(0, ix.horizon_);
    for (Vertex v = 0; v < ix.n_; ++v) {
      auto lists = nondom_paths(g, v, full);
      for (int i = 0; i < k; ++i)
        ix.to_beer_[static_cast<std::size_t>(v) * k + i] =
            lists[bc.vertex(i)];
      int bi = bc.index_of(v);
      if (bi >= 0)
        for (Vertex u = 0; u < ix.n_; ++u)
          ix.from_beer_[static_cast<std::size_t>(bi) * ix.n_ + u] =
              std::move(lists[u]);
    }
    return ix;
  }

  Vertex vertex_count() const { return n_; }
  int beer_count() const { return static_cast<int>(beer_.size()); }
  Time horizon() const { return horizon_; }

  const SaFrontier& to_beer(Vertex v, int i) const {
    return to_beer_[static_cast<std::size_t>(v) * beer_.size() + i];
  }
  const SaFrontier& from_beer(int i, Vertex v) const {
    return from_beer_[static_cast<std::size_t>(i) * n_ + v];
  }

  // Earliest arrival at the target over paths through an active beer vertex:
  // per active b, the earliest in-window departure towards b fixes the
  // earliest arrival there, and the earliest continuation departing no
  // earlier fixes the candidate. Legs that start or end at b itself need no
  // pair at all. O(k log c) searches per query.
  Time query_eabp(const Query& q, QueryStats* stats = nullptr) const {
    check(q);
    QueryStats local;
    QueryStats& st = stats ? *stats : local;
    Time best = kInf;
    for (std::size_t i = 0; i < beer_.size(); ++i) {
      if (!q.activation[i]) continue;
      Vertex b = beer_[i];
      Time at_beer = q.window.alpha;
      if (q.source != b) {
        ++st.to_beer_searches;
        auto hit = to_beer(q.source, static_cast<int>(i))
                       .min_key_at_least(q.window.alpha);
        if (!hit) continue;
        at_beer = hit->value;
      }
      if (at_beer > q.window.omega) continue;
      Time reach = at_beer;
      if (q.target != b) {
        ++st.from_beer_searches;
        auto hit =
            from_beer(static_cast<int>(i), q.target).min_key_at_least(at_beer);
        if (!hit || hit->value > q.window.omega) continue;
        reach = hit->value;
      }
      best = std::min(best, reach);
    }
    return best;
  }

  // Time-reversed mirror: latest departure from the source over paths
  // through an active beer vertex.
  Time query_ldbp(const Query& q, QueryStats* stats = nullptr) const {
    check(q);
    QueryStats local;
    QueryStats& st = stats ? *stats : local;
    Time best = kNegInf;
    for (std::size_t i = 0; i < beer_.size(); ++i) {
      if (!q.activation[i]) continue;
      Vertex b = beer_[i];
      Time at_beer = q.window.omega;
      if (q.target != b) {
        ++st.from_beer_searches;
        auto hit = from_beer(static_cast<int>(i), q.target)
                       .max_value_at_most(q.window.omega);
        if (!hit) continue;
        at_beer = hit->key;
      }
      if (at_beer < q.window.alpha) continue;
      Time leave = at_beer;
      if (q.source != b) {
        ++st.to_beer_searches;
        auto hit = to_beer(q.source, static_cast<int>(i))
                       .max_value_at_most(at_beer);
        if (!hit || hit->key < q.window.alpha) continue;
        leave = hit->key;
      }
      best = std::max(best, leave);
    }
    return best;
  }

  // Line-text persistence. Reloading a saved index and saving it again
  // produces byte-identical output.
  void save(std::ostream& os) const {
    os << "tbp-index 1\n";
    os << n_ << ' ' << beer_.size() << ' ' << horizon_ << '\n';
    os << "beer";
    for (Vertex b : beer_) os << ' ' << b;
    os << '\n';
    auto dump = [&os](const char* tag, std::size_t a, std::size_t b,
                      const SaFrontier& f) {
      if (f.empty()) return;
      os << tag << ' ' << a << ' ' << b << ' ' << f.size();
      for (const FrontierPair& p : f.pairs())
        os << ' ' << p.key << ' ' << p.value;
      os << '\n';
    };
    for (Vertex v = 0; v < n_; ++v)
      for (std::size_t i = 0; i < beer_.size(); ++i)
        dump("to", static_cast<std::size_t>(v), i,
             to_beer(v, static_cast<int>(i)));
    for (std::size_t i = 0; i < beer_.size(); ++i)
      for (Vertex v = 0; v < n_; ++v)
        dump("from", i, static_cast<std::size_t>(v),
             from_beer(static_cast<int>(i), v));
    os << "end\n";
  }

  static NondomIndex load(std::istream& is) {
    int line_no = 0;
    std::vector<std::string> tok;
    auto need = [&](std::size_t n_tokens, const char* what) {
      if (!detail::next_record(is, tok, line_no) || tok.size() < n_tokens)
        throw ParseError("index line " + std::to_string(line_no + 1) +
                         ": expected " + what);
    };
    need(2, "header");
    if (tok[0] != "tbp-index" || tok[1] != "1")
      throw ParseError("index: unsupported format or version");
    need(3, "dimensions");
    NondomIndex ix;
    ix.n_ = static_cast<Vertex>(detail::parse_number(tok[0], line_no, "n"));
    std::size_t k = static_cast<std::size_t>(
        detail::parse_number(tok[1], line_no, "beer count"));
    ix.horizon_ = detail::parse_number(tok[2], line_no, "horizon");
    need(k + 1, "beer vertex list");
    if (tok[0] != "beer" || tok.size() != k + 1)
      throw ParseError("index: malformed beer vertex list");
    for (std::size_t i = 0; i < k; ++i)
      ix.beer_.push_back(static_cast<Vertex>(
          detail::parse_number(tok[i + 1], line_no, "beer vertex")));
    ix.to_beer_.assign(static_cast<std::size_t>(ix.n_) * k, {});
    ix.from_beer_.assign(k * static_cast<std::size_t>(ix.n_), {});
    for (;;) {
      need(1, "record");
      if (tok[0] == "end") break;
      if ((tok[0] != "to" && tok[0] != "from") || tok.size() < 4)
        throw ParseError("index line " + std::to_string(line_no) +
                         ": bad record");
      std::size_t a = static_cast<std::size_t>(
          detail::parse_number(tok[1], line_no, "slot"));
      std::size_t b = static_cast<std::size_t>(
          detail::parse_number(tok[2], line_no, "slot"));
      std::size_t len = static_cast<std::size_t>(
          detail::parse_number(tok[3], line_no, "pair count"));
      if (tok.size() != 4 + 2 * len)
        throw ParseError("index line " + std::to_string(line_no) +
                         ": pair count mismatch");
      SaFrontier f;
      for (std::size_t j = 0; j < len; ++j) {
        Time key = detail::parse_number(tok[4 + 2 * j], line_no, "pair key");
        Time value =
            detail::parse_number(tok[5 + 2 * j], line_no, "pair value");
        if (!f.insert(key, value))
          throw ParseError("index line " + std::to_string(line_no) +
                           ": dominated pair in stored frontier");
      }
      std::size_t slot;
      std::vector<SaFrontier>* dest;
      if (tok[0] == "to") {
        dest = &ix.to_beer_;
        slot = a * k + b;
      } else {
        dest = &ix.from_beer_;
        slot = a * static_cast<std::size_t>(ix.n_) + b;
      }
      if (a >= (tok[0] == "to" ? static_cast<std::size_t>(ix.n_) : k) ||
          b >= (tok[0] == "to" ? k : static_cast<std::size_t>(ix.n_)))
        throw ParseError("index line " + std::to_string(line_no) +
                         ": slot out of range");
      (*dest)[slot] = std::move(f);
    }
    return ix;
  }

 private:
  void check(const Query& q) const {
    if (q.activation.size() != beer_.size())
      throw std::invalid_argument(
          "activation mask length must equal the beer vertex count");
    detail::check_vertex(q.source, n_, "source");
    detail::check_vertex(q.target, n_, "target");
  }

  Vertex n_ = 0;
  Time horizon_ = 0;
  std::vector<Vertex> beer_;
  std::vector<SaFrontier> to_beer_;    // [v * k + i]
  std::vector<SaFrontier> from_beer_;  // [i * n + v]
};

}  // namespace tbp
