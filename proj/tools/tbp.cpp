// Command-line front end: beer-path queries, index lifecycle, graph
// transformation, instance generation, self-checks and micro-benchmarks.
//
// Exit codes: 0 success, 1 failed check or internal invariant violation,
// 2 usage or input-format error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tbp/beerpath.hpp"
#include "tbp/generator.hpp"
#include "tbp/nondom.hpp"
#include "tbp/nondom_index.hpp"
#include "tbp/oracle.hpp"
#include "tbp/selfcheck.hpp"
#include "tbp/transform.hpp"

namespace {

using namespace tbp;

TemporalGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file: " + path);
  return parse_edge_stream(in);
}

BeerConfig load_beer(const std::string& path, Vertex n) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open beer file: " + path);
  return parse_beer_config(in, n);
}

std::vector<bool> parse_activation(const std::string& text) {
  std::vector<bool> mask;
  if (text.empty()) return mask;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "1")
      mask.push_back(true);
    else if (item == "0")
      mask.push_back(false);
    else
      throw std::invalid_argument("--active expects comma-separated 0/1");
  }
  return mask;
}

// Writes to the given path, or to stdout when the path is empty.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output: " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void print_values(std::ostream& os, const std::vector<Time>& values) {
  for (std::size_t v = 0; v < values.size(); ++v)
    os << v << '\t' << format_time(values[v]) << '\n';
}

struct QueryArgs {
  std::string graph, beer, objective, variant = "stream", dump, output;
  Vertex source = -1, target = -1;
  Time alpha = 0, omega = 0;
};

int run_query(const QueryArgs& a) {
  TemporalGraph g = load_graph(a.graph);
  TimeWindow w(a.alpha, a.omega);
  Sink sink(a.output);

  if (!a.dump.empty()) {
    if (a.dump == "sa")
      dump_frontiers(sink.out(), nondom_paths(g, a.source, w),
                     FrontierKind::StartArrival);
    else if (a.dump == "da")
      dump_frontiers(sink.out(), dist_nondom_paths(g, a.source, w),
                     FrontierKind::DistanceArrival);
    else if (a.dump == "ds")
      dump_frontiers(sink.out(), inv_dist_nondom_paths(g, a.target, w),
                     FrontierKind::DistanceStart);
    else
      throw std::invalid_argument("--dump-frontier expects sa, da or ds");
    return 0;
  }

  BeerConfig bc = load_beer(a.beer, g.vertex_count());
  Variant variant;
  if (a.variant == "stream")
    variant = Variant::Stream;
  else if (a.variant == "adjlist")
    variant = Variant::AdjList;
  else
    throw std::invalid_argument("--variant expects stream or adjlist");
  if (variant == Variant::AdjList && !g.dominated_free()) {
    std::cerr << "note: removing dominated edges for the adjacency-list "
                 "variant\n";
    g = remove_dominated_edges(g);
  }

  if (a.objective == "eabp") {
    print_values(sink.out(), eabp(g, a.source, w, bc, variant));
  } else if (a.objective == "ldbp") {
    print_values(sink.out(), ldbp(g, a.target, w, bc, variant));
  } else if (a.objective == "fbp") {
    if (variant == Variant::AdjList)
      throw std::invalid_argument("fbp has no adjacency-list variant");
    print_values(sink.out(), fbp(g, a.source, w, bc));
  } else if (a.objective == "sbp") {
    if (variant == Variant::AdjList)
      throw std::invalid_argument("sbp has no adjacency-list variant");
    sink.out() << a.target << '\t'
               << format_time(sbp(g, a.source, a.target, w, bc)) << '\n';
  } else {
    throw std::invalid_argument("--objective expects eabp, ldbp, fbp or sbp");
  }
  return 0;
}

int run_check(const std::string& seeds, int per_seed, int windows,
              int queries) {
  auto sep = seeds.find("..");
  if (sep == std::string::npos)
    throw std::invalid_argument("--seeds expects a range like 1..50");
  std::uint64_t begin = std::stoull(seeds.substr(0, sep));
  std::uint64_t end = std::stoull(seeds.substr(sep + 2));
  if (end < begin) throw std::invalid_argument("--seeds range is empty");
  int instances =
      static_cast<int>(end - begin + 1) * std::max(per_seed, 1);
  auto results =
      selfcheck::run_standard_checks(begin, instances, windows, queries);
  bool ok = true;
  for (const auto& r : results) {
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " ("
              << r.cases << " cases)";
    if (!r.passed())
      std::cout << " — " << r.violations << " violations; first: " << r.detail;
    std::cout << '\n';
    ok = ok && r.passed();
  }
  return ok ? 0 : 1;
}

int run_bench(const std::vector<std::size_t>& sizes, int reps) {
  std::cout << "single-pass multi-source earliest arrival scaling:\n";
  auto points = selfcheck::mseap_scaling(sizes, reps);
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::cout << "  M=" << points[i].edges << "  " << points[i].seconds * 1e3
              << " ms";
    if (i > 0)
      std::cout << "  x" << points[i].seconds / points[i - 1].seconds;
    std::cout << '\n';
  }

  std::cout << "per-algorithm wall clock (one run per size):\n";
  for (std::size_t m : sizes) {
    TemporalGraph g = random_graph(0xcafe + m, 1024, m, 1'000'000, 50);
    TemporalGraph pruned = remove_dominated_edges(g);
    TimeWindow w(0, 2'000'000);
    std::vector<Time> init(g.vertex_count(), kInf);
    init[0] = 0;
    std::vector<Time> fin(g.vertex_count(), kNegInf);
    fin[0] = 2'000'000;
    std::vector<Vertex> beer{1, 2};
    std::vector<std::vector<Time>> times{{500'000}, {250'000, 750'000}};
    BeerConfig bc(std::move(beer), std::move(times), g.vertex_count());
    auto timed = [&](const char* name, auto&& fn) {
      auto t0 = std::chrono::steady_clock::now();
      fn();
      auto t1 = std::chrono::steady_clock::now();
      std::cout << "  M=" << m << "  " << name << "  "
                << std::chrono::duration<double>(t1 - t0).count() * 1e3
                << " ms\n";
    };
    timed("mseap_stream ", [&] { mseap_stream(g, w, init); });
    timed("mseap_adjlist", [&] { mseap_adjlist(pruned, w, init); });
    timed("mtldp_stream ", [&] { mtldp_stream(g, w, fin); });
    timed("nondom_paths ", [&] { nondom_paths(g, 0, w); });
    timed("eabp         ", [&] { eabp(g, 0, w, bc); });
    timed("ldbp         ", [&] { ldbp(g, 0, w, bc); });
    timed("fbp          ", [&] { fbp(g, 0, w, bc); });
    timed("sbp          ", [&] { sbp(g, 0, 3, w, bc); });
    timed("transform    ", [&] { transform(g); });
    TransformedGraph tg = transform(g);
    Query q{0, 0, w, {true, true}};
    timed("fbp_on_dag   ", [&] { fbp_on_dag(tg, bc, q); });
    timed("sbp_on_dag   ", [&] { sbp_on_dag(tg, bc, q); });
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"temporal beer-path toolkit"};
  app.require_subcommand(1);

  QueryArgs qa;
  auto* query = app.add_subcommand(
      "query", "run one objective (or dump a frontier) on a graph");
  query->add_option("--graph", qa.graph, "graph file (header 'n M', then 'u v t lambda' lines)")->required();
  query->add_option("--beer", qa.beer, "beer file ('k', then 'b c t1 ... tc' lines)");
  query->add_option("--objective", qa.objective, "eabp | ldbp | fbp | sbp");
  query->add_option("--source", qa.source, "source vertex (eabp, fbp, sbp)");
  query->add_option("--target", qa.target, "target vertex (ldbp, sbp)");
  query->add_option("--t-alpha", qa.alpha, "window start")->required();
  query->add_option("--t-omega", qa.omega, "window end")->required();
  query->add_option("--variant", qa.variant, "stream (default) | adjlist");
  query->add_option("--dump-frontier", qa.dump,
                    "sa | da | ds: print the frontier lists instead");
  query->add_option("--output", qa.output, "write here instead of stdout");

  struct {
    std::string graph, beer, out;
  } ib;
  auto* index_build = app.add_subcommand("index-build",
                                         "precompute the beer-path index");
  index_build->add_option("--graph", ib.graph)->required();
  index_build->add_option("--beer", ib.beer)->required();
  index_build->add_option("--out", ib.out, "index output path")->required();

  struct {
    std::string index, active, objective;
    Vertex source = 0, target = 0;
    Time alpha = 0, omega = 0;
  } iq;
  auto* index_query =
      app.add_subcommand("index-query", "answer one query from a saved index");
  index_query->add_option("--index", iq.index)->required();
  index_query->add_option("--source", iq.source)->required();
  index_query->add_option("--target", iq.target)->required();
  index_query->add_option("--t-alpha", iq.alpha)->required();
  index_query->add_option("--t-omega", iq.omega)->required();
  index_query->add_option("--active", iq.active,
                          "comma-separated 0/1 per beer vertex")
      ->required();
  index_query->add_option("--objective", iq.objective, "eabp | ldbp")
      ->required();

  struct {
    std::string graph, beer, out, format = "text", dag_objective, active;
    Vertex source = 0;
    Time alpha = 0, omega = 0;
  } tr;
  auto* transform_cmd = app.add_subcommand(
      "transform", "build the time-expanded DAG (optionally query it)");
  transform_cmd->add_option("--graph", tr.graph)->required();
  transform_cmd->add_option("--out", tr.out, "write here instead of stdout");
  transform_cmd->add_option("--format", tr.format, "text (default) | dot");
  transform_cmd->add_option("--dag-objective", tr.dag_objective,
                            "fbp | sbp: run the flagged traversal instead");
  transform_cmd->add_option("--beer", tr.beer);
  transform_cmd->add_option("--source", tr.source);
  transform_cmd->add_option("--t-alpha", tr.alpha);
  transform_cmd->add_option("--t-omega", tr.omega);
  transform_cmd->add_option("--active", tr.active);

  struct {
    std::uint64_t seed = 1;
    InstanceSpec spec;
    std::string graph_out, beer_out;
    bool pruned = false;
  } gn;
  auto* gen = app.add_subcommand("gen", "emit a seeded random instance");
  gen->add_option("--seed", gn.seed)->required();
  gen->add_option("--max-n", gn.spec.max_vertices);
  gen->add_option("--max-m", gn.spec.max_edges);
  gen->add_option("--max-time", gn.spec.max_time);
  gen->add_option("--max-lambda", gn.spec.max_travel);
  gen->add_option("--max-beer", gn.spec.max_beer);
  gen->add_option("--max-beer-times", gn.spec.max_beer_times);
  gen->add_option("--graph-out", gn.graph_out)->required();
  gen->add_option("--beer-out", gn.beer_out)->required();
  gen->add_flag("--pruned", gn.pruned, "remove dominated edges first");

  struct {
    std::string seeds = "1..20";
    int per_seed = 1, windows = 2, queries = 20;
  } ck;
  auto* check = app.add_subcommand(
      "check", "run the oracle-equivalence properties, PASS/FAIL each");
  check->add_option("--seeds", ck.seeds, "seed range, e.g. 1..50");
  check->add_option("--instances-per-seed", ck.per_seed);
  check->add_option("--windows", ck.windows, "windows per instance");
  check->add_option("--queries", ck.queries, "index queries per instance");

  struct {
    std::vector<std::size_t> sizes{10'000, 20'000, 40'000, 80'000};
    int reps = 25;
  } bn;
  auto* bench =
      app.add_subcommand("bench", "wall-clock timings on growing instances");
  bench->add_option("--sizes", bn.sizes, "edge counts");
  bench->add_option("--reps", bn.reps, "repetitions, fastest kept");

  try {
    app.parse(argc, argv);

    if (*query) {
      if (qa.dump.empty() && qa.objective.empty())
        throw std::invalid_argument(
            "query needs --objective or --dump-frontier");
      if (!qa.dump.empty() && !qa.objective.empty())
        throw std::invalid_argument(
            "--objective and --dump-frontier are mutually exclusive");
      if (qa.dump.empty() && qa.beer.empty())
        throw std::invalid_argument("--beer is required for objectives");
      bool needs_source = qa.dump == "sa" || qa.dump == "da" ||
                          qa.objective == "eabp" || qa.objective == "fbp" ||
                          qa.objective == "sbp";
      bool needs_target = qa.dump == "ds" || qa.objective == "ldbp" ||
                          qa.objective == "sbp";
      if (needs_source && qa.source < 0)
        throw std::invalid_argument("--source is required here");
      if (needs_target && qa.target < 0)
        throw std::invalid_argument("--target is required here");
      return run_query(qa);
    }

    if (*index_build) {
      TemporalGraph g = load_graph(ib.graph);
      BeerConfig bc = load_beer(ib.beer, g.vertex_count());
      NondomIndex ix = NondomIndex::build(g, bc);
      std::ofstream out(ib.out);
      if (!out) throw std::invalid_argument("cannot open output: " + ib.out);
      ix.save(out);
      return 0;
    }

    if (*index_query) {
      std::ifstream in(iq.index);
      if (!in) throw ParseError("cannot open index: " + iq.index);
      NondomIndex ix = NondomIndex::load(in);
      Query q{iq.source, iq.target, TimeWindow(iq.alpha, iq.omega),
              parse_activation(iq.active)};
      Time answer;
      if (iq.objective == "eabp")
        answer = ix.query_eabp(q);
      else if (iq.objective == "ldbp")
        answer = ix.query_ldbp(q);
      else
        throw std::invalid_argument("--objective expects eabp or ldbp");
      std::cout << format_time(answer) << '\n';
      return 0;
    }

    if (*transform_cmd) {
      TemporalGraph g = load_graph(tr.graph);
      TransformedGraph tg = transform(g);
      Sink sink(tr.out);
      if (tr.dag_objective.empty()) {
        if (tr.format == "text")
          write_transform_text(sink.out(), tg);
        else if (tr.format == "dot")
          write_transform_dot(sink.out(), tg);
        else
          throw std::invalid_argument("--format expects text or dot");
        return 0;
      }
      if (tr.beer.empty())
        throw std::invalid_argument("--dag-objective needs --beer");
      BeerConfig bc = load_beer(tr.beer, g.vertex_count());
      Query q{tr.source, 0, TimeWindow(tr.alpha, tr.omega),
              parse_activation(tr.active)};
      if (tr.dag_objective == "fbp")
        print_values(sink.out(), fbp_on_dag(tg, bc, q));
      else if (tr.dag_objective == "sbp")
        print_values(sink.out(), sbp_on_dag(tg, bc, q));
      else
        throw std::invalid_argument("--dag-objective expects fbp or sbp");
      return 0;
    }

    if (*gen) {
      gn.spec.seed = gn.seed;
      Instance inst = gen_instance(gn.spec, gn.pruned);
      std::ofstream gout(gn.graph_out);
      if (!gout)
        throw std::invalid_argument("cannot open output: " + gn.graph_out);
      write_edge_stream(gout, inst.graph);
      std::ofstream bout(gn.beer_out);
      if (!bout)
        throw std::invalid_argument("cannot open output: " + gn.beer_out);
      write_beer_config(bout, inst.beer);
      return 0;
    }

    if (*check)
      return run_check(ck.seeds, ck.per_seed, ck.windows, ck.queries);
    if (*bench) return run_bench(bn.sizes, bn.reps);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
