#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mpm/dot.hpp"
#include "mpm/io.hpp"
#include "mpm/oracle.hpp"
#include "mpm/solver.hpp"

namespace {

using namespace mpm;

// Forwards every hook to each registered sink.
class TeeSink : public TraceSink {
 public:
  void add(TraceSink* s) { sinks_.push_back(s); }
  void search_started(int p, const Graph& g, const Matching& m) override {
    for (auto* s : sinks_) s->search_started(p, g, m);
  }
  void step(const EdgeEvent& ev, const BlossomSearch& bs) override {
    for (auto* s : sinks_) s->step(ev, bs);
  }
  void step(const EdgeEvent& ev, const BipartiteSearch& bs) override {
    for (auto* s : sinks_) s->step(ev, bs);
  }
  void blossom_formed(const Blossom& b, const BlossomSearch& bs) override {
    for (auto* s : sinks_) s->blossom_formed(b, bs);
  }
  void search_finished(const BlossomSearch& bs, const std::optional<AugPath>& p) override {
    for (auto* s : sinks_) s->search_finished(bs, p);
  }
  void search_finished(const BipartiteSearch& bs, const std::optional<AugPath>& p) override {
    for (auto* s : sinks_) s->search_finished(bs, p);
  }
  void augmented(int p, const AugPath& path, const Matching& m) override {
    for (auto* s : sinks_) s->augmented(p, path, m);
  }

 private:
  std::vector<TraceSink*> sinks_;
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  return out;
}

void print_stats(std::ostream& out, const SolveReport& rep) {
  out << "# searches=" << rep.searches << " augmentations=" << rep.augmentations
      << " priorities-probed=" << rep.priorities_probed
      << " blossoms=" << rep.blossoms_formed << '\n';
}

struct SolveOpts {
  std::string file, set_file, trace_out, dot;
  bool trace = false;
};

int run_solve(const SolveOpts& o) {
  Graph g = parse_graph_file(o.file);
  std::ofstream trace_file;
  std::optional<TextTraceSink> sink;
  if (!o.trace_out.empty()) {
    trace_file = open_out(o.trace_out);
    sink.emplace(trace_file);
  } else if (o.trace) {
    sink.emplace(std::cerr);
  }
  TraceSink* sp = sink ? &*sink : nullptr;

  SolveReport rep;
  if (!o.set_file.empty()) {
    VertexSet targets = parse_vertex_set_file(o.set_file, g);
    rep = two_priority_matching(g, targets, sp);
  } else {
    rep = max_priority_matching(g, sp);
  }
  std::cout << render_matching(g, rep.matching);
  print_stats(std::cout, rep);
  std::cerr << "elapsed=" << rep.elapsed.count() << "s\n";
  if (!o.dot.empty()) {
    std::ofstream out = open_out(o.dot);
    write_matching_dot(out, g, rep.matching);
  }
  return 0;
}

int run_oracle(const std::string& file) {
  Graph g = parse_graph_file(file);
  ScoreVector best = best_score(g);
  std::cout << 's';
  for (int d : best.digits()) std::cout << ' ' << d;
  std::cout << '\n';
  return 0;
}

int run_verify(const std::string& graph_file, const std::string& matching_file) {
  Graph g = parse_graph_file(graph_file);
  MatchingDoc doc = parse_matching_file(matching_file);
  if (auto err = verify_matching_doc(g, doc)) {
    std::cerr << "verification failed: " << *err << '\n';
    return 2;
  }
  std::cout << "ok\n";
  return 0;
}

struct GenOpts {
  int n = 0, m = 0;
  std::uint64_t seed = 1;
  std::string priorities = "uniform";
};

int run_gen(const GenOpts& o) {
  Graph g = generate_random(o.n, o.m, o.seed, PrioritySpec::parse(o.priorities));
  std::cout << render_graph(g);
  return 0;
}

int run_bench(const std::vector<int>& sizes, std::uint64_t seed) {
  for (int n : sizes) {
    Graph g = generate_random(n, 5 * n, seed + static_cast<std::uint64_t>(n));
    SolveReport best;
    for (int rep = 0; rep < 3; ++rep) {
      SolveReport r = max_priority_matching(g);
      if (rep == 0 || r.elapsed < best.elapsed) best = std::move(r);
    }
    std::cout << "n=" << n << " m=" << g.edge_count() << " searches=" << best.searches
              << " augmentations=" << best.augmentations
              << " blossoms=" << best.blossoms_formed << " min-time="
              << best.elapsed.count() << "s\n";
  }
  return 0;
}

struct TraceOpts {
  std::string file, dot_prefix, trace_out;
};

int run_trace(const TraceOpts& o) {
  Graph g = parse_graph_file(o.file);
  std::ofstream trace_file;
  std::ostream* out = &std::cout;
  if (!o.trace_out.empty()) {
    trace_file = open_out(o.trace_out);
    out = &trace_file;
  }
  TextTraceSink text(*out);
  std::optional<DotForestSink> dots;
  TeeSink tee;
  tee.add(&text);
  if (!o.dot_prefix.empty()) {
    dots.emplace(o.dot_prefix);
    tee.add(&*dots);
  }
  SolveReport rep = max_priority_matching(g, &tee);
  *out << "final score=" << rep.score.render() << " size=" << rep.matching.size() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximum priority matchings in general graphs"};
  app.require_subcommand(1);

  SolveOpts solve_opts;
  auto* solve = app.add_subcommand("solve", "compute a maximum priority matching");
  solve->add_option("file", solve_opts.file, "graph file")->required();
  solve->add_option("--two-priority", solve_opts.set_file,
                    "vertex set file; solve with priority 1 inside it, 2 outside");
  solve->add_flag("--trace", solve_opts.trace, "write search steps to stderr");
  solve->add_option("--trace-out", solve_opts.trace_out, "write search steps to this file");
  solve->add_option("--dot", solve_opts.dot, "write the matching as Graphviz to this file");

  std::string oracle_file;
  auto* oracle = app.add_subcommand("oracle", "best score by exhaustive enumeration");
  oracle->add_option("file", oracle_file, "graph file")->required();

  std::string verify_graph, verify_matching;
  auto* verify = app.add_subcommand("verify", "check a matching file against its graph");
  verify->add_option("graph", verify_graph, "graph file")->required();
  verify->add_option("matching", verify_matching, "matching file")->required();

  GenOpts gen_opts;
  auto* gen = app.add_subcommand("gen", "generate a random graph");
  gen->add_option("--n", gen_opts.n, "vertex count")->required();
  gen->add_option("--m", gen_opts.m, "edge count")->required();
  gen->add_option("--seed", gen_opts.seed, "random seed");
  gen->add_option("--priorities", gen_opts.priorities,
                  "uniform | uniform:<list> | weights:<p=w,..> | distinct");

  std::vector<int> bench_sizes;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "time solves on random graphs with m = 5n");
  bench->add_option("--sizes", bench_sizes, "vertex counts")->required()->delimiter(',');
  bench->add_option("--seed", bench_seed, "random seed");

  TraceOpts trace_opts;
  auto* trace = app.add_subcommand("trace", "solve while printing every search step");
  trace->add_option("file", trace_opts.file, "graph file")->required();
  trace->add_option("--dot", trace_opts.dot_prefix,
                    "write one Graphviz forest per search to <prefix>-<k>.dot");
  trace->add_option("--trace-out", trace_opts.trace_out, "write steps here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) return run_solve(solve_opts);
    if (oracle->parsed()) return run_oracle(oracle_file);
    if (verify->parsed()) return run_verify(verify_graph, verify_matching);
    if (gen->parsed()) return run_gen(gen_opts);
    if (bench->parsed()) return run_bench(bench_sizes, bench_seed);
    if (trace->parsed()) return run_trace(trace_opts);
  } catch (const mpm::BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const mpm::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const mpm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
