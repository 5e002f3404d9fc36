#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"
#include "tlp/features.hpp"
#include "tlp/persistence.hpp"
#include "tlp/ranking.hpp"

using json = nlohmann::ordered_json;

namespace {

struct CommonArgs {
  std::string input;
  bool directed = false;
  bool weighted = false;
  int k = 2;
  std::optional<double> tau;
  double test_fraction = 0.05;
  std::uint64_t seed = 42;
  std::vector<std::string> methods{"topology"};
  std::vector<int> hits{1, 10, 50};
  std::string pool = "all";
  bool filtered = false;
  int workers = 0;
  std::string output;
};

tlp::Graph load_graph(const CommonArgs& args) {
  std::ifstream in(args.input);
  if (!in) throw std::runtime_error("cannot open input file: " + args.input);
  tlp::EdgeListStats stats;
  tlp::Graph g = tlp::load_edge_list(in, args.directed, args.weighted, &stats);
  if (stats.self_loops_dropped || stats.duplicates_dropped)
    std::cerr << "dropped " << stats.self_loops_dropped << " self-loops, "
              << stats.duplicates_dropped << " duplicate edges\n";
  std::cerr << "loaded graph: " << g.num_nodes() << " nodes, " << g.num_edges()
            << " edges\n";
  return g;
}

void write_output(const CommonArgs& args, const std::string& data) {
  if (args.output.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream out(args.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + args.output);
  out << data;
}

tlp::PdConfig make_cfg(const CommonArgs& args) {
  tlp::PdConfig cfg;
  cfg.tau = args.tau;
  return cfg;
}

tlp::RankOptions make_rank_opts(const CommonArgs& args) {
  tlp::RankOptions opts;
  opts.k = args.k;
  opts.cfg = make_cfg(args);
  if (args.pool == "all")
    opts.pool = tlp::PoolPolicy::kAll;
  else if (args.pool == "2khop")
    opts.pool = tlp::PoolPolicy::kTwoKHop;
  else
    throw std::runtime_error("unknown pool policy: " + args.pool);
  opts.filtered = args.filtered;
  return opts;
}

int cmd_pd(const CommonArgs& args) {
  tlp::Graph g = load_graph(args);
  tlp::PersistenceDiagram pd = tlp::get_pd(g, make_cfg(args));
  write_output(args, tlp::pd_to_lines(pd));
  return 0;
}

int cmd_features(const CommonArgs& args, const std::string& u_label,
                 const std::string& v_label) {
  tlp::Graph g = load_graph(args);
  auto u = g.index_of(u_label);
  auto v = g.index_of(v_label);
  if (!u) throw std::runtime_error("unknown node label: " + u_label);
  if (!v) throw std::runtime_error("unknown node label: " + v_label);
  tlp::LinkFeatureVector f =
      tlp::link_feature_vector(g, *u, *v, args.k, make_cfg(args));
  json rec{{"u", u_label},
           {"v", v_label},
           {"k", args.k},
           {"d", f.d},
           {"sizes",
            {{"ball_u", f.size_ball_u},
             {"ball_v", f.size_ball_v},
             {"combined", f.size_combined}}}};
  write_output(args, rec.dump() + "\n");
  return 0;
}

json report_to_json(const tlp::EvalReport& r) {
  json hits = json::object();
  for (auto [n, h] : r.hits) hits[std::to_string(n)] = h;
  return json{{"method", r.method},
              {"split", {{"fraction", r.test_fraction}, {"seed", r.rng_seed}}},
              {"pool", r.pool},
              {"filtered", r.filtered},
              {"hits", hits},
              {"num_test", r.num_test}};
}

int cmd_evaluate(const CommonArgs& args) {
  std::vector<tlp::Method> methods;
  for (const std::string& name : args.methods)
    methods.push_back(tlp::parse_method(name));  // fail before any computation
  tlp::Graph g = load_graph(args);
  tlp::SplitSpec split = tlp::holdout_split(g, args.test_fraction, args.seed);
  std::cerr << "split: " << split.test_edges.size() << " test / "
            << split.train.num_edges() << " train edges\n";
  tlp::RankOptions opts = make_rank_opts(args);
  std::ostringstream out;
  for (tlp::Method m : methods) {
    tlp::EvalReport report = tlp::evaluate_method(split, m, opts, args.hits);
    out << report_to_json(report).dump() << "\n";
    std::cerr << "method " << report.method << " done\n";
  }
  write_output(args, out.str());
  return 0;
}

int cmd_split(const CommonArgs& args) {
  tlp::Graph g = load_graph(args);
  tlp::SplitSpec split = tlp::holdout_split(g, args.test_fraction, args.seed);
  std::ostringstream out;
  out << "# test edges, fraction=" << split.test_fraction
      << " seed=" << split.rng_seed << "\n";
  for (const tlp::Edge& e : split.test_edges)
    out << split.train.label(e.src) << ' ' << split.train.label(e.dst) << '\n';
  write_output(args, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link prediction by contrasting persistence diagrams of "
               "neighborhood subgraphs"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string u_label, v_label;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--input", args.input, "edge list file")->required();
    cmd->add_flag("--directed", args.directed, "treat edges as directed");
    cmd->add_flag("--weighted", args.weighted, "third column is a weight");
    cmd->add_option("--k", args.k, "neighborhood radius")->check(CLI::PositiveNumber);
    cmd->add_option("--tau", args.tau,
                    "persistence threshold override (default: 1.5*M per subgraph)");
    cmd->add_option("--seed", args.seed, "random seed");
    cmd->add_option("--workers", args.workers, "thread count (0 = default)");
    cmd->add_option("--output", args.output, "output path (default: stdout)");
  };

  CLI::App* pd = app.add_subcommand("pd", "persistence diagram of the whole graph");
  add_common(pd);

  CLI::App* features =
      app.add_subcommand("features", "8-distance feature vector for a node pair");
  add_common(features);
  features->add_option("u", u_label, "source node label")->required();
  features->add_option("v", v_label, "target node label")->required();

  CLI::App* evaluate =
      app.add_subcommand("evaluate", "hold-out split + Hits@N evaluation");
  add_common(evaluate);
  evaluate->add_option("--test-fraction", args.test_fraction, "held-out edge fraction");
  evaluate->add_option("--methods", args.methods, "methods: aa, mw, topology")
      ->delimiter(',');
  evaluate->add_option("--hits", args.hits, "Hits@N cutoffs")->delimiter(',');
  evaluate->add_option("--pool", args.pool, "candidate pool: all or 2khop");
  evaluate->add_flag("--filtered", args.filtered,
                     "drop candidates already linked to the source");

  CLI::App* split = app.add_subcommand("split", "emit the held-out test edges");
  add_common(split);
  split->add_option("--test-fraction", args.test_fraction, "held-out edge fraction");

  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (args.workers > 0) omp_set_num_threads(args.workers);
#endif

  try {
    if (pd->parsed()) return cmd_pd(args);
    if (features->parsed()) return cmd_features(args, u_label, v_label);
    if (evaluate->parsed()) return cmd_evaluate(args);
    if (split->parsed()) return cmd_split(args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
