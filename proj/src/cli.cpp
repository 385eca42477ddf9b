#include "uhs/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "uhs/io.hpp"
#include "uhs/util.hpp"

namespace uhs::cli {

namespace {

using nlohmann::json;

void echo_config(const std::string& verb, const std::vector<std::pair<std::string, std::string>>& kv) {
  std::cerr << "config: verb=" << verb;
  for (const auto& [key, value] : kv) std::cerr << " " << key << "=" << value;
  std::cerr << "\n";
}

std::string unrealized_to_json(const std::vector<UnrealizedProfile>& list) {
  json arr = json::array();
  for (const UnrealizedProfile& u : list) {
    json e;
    e["subspace"] = u.subspace;
    json vals = json::array();
    for (const Rat& v : u.values) vals.push_back(v.str());
    e["values"] = std::move(vals);
    arr.push_back(std::move(e));
  }
  return arr.dump(2) + "\n";
}

struct Options {
  std::string in_path, out_path, csv_path, json_path, fine_path, targets_path, violations_path;
  std::string alphabet, set_values, eps = "0", seeds = "0..0";
  int m = 2, k = 1, rounds = 1, budget = 1, max_tree = 3, steps = 8, cap = kDefaultPointCap;
  std::uint64_t seed = 0;
  bool verify = false;
};

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& s) {
  std::size_t dots = s.find("..");
  if (dots == std::string::npos) {
    std::uint64_t v = std::stoull(s);
    return {v, v};
  }
  return {std::stoull(s.substr(0, dots)), std::stoull(s.substr(dots + 2))};
}

int cmd_classify(const Options& opt) {
  echo_config("classify", {{"m", std::to_string(opt.m)},
                           {"csv", opt.csv_path},
                           {"json", opt.json_path}});
  ClassificationReport report = classify(opt.m);
  if (!opt.csv_path.empty()) io::write_file(opt.csv_path, io::classification_to_csv(report));
  if (!opt.json_path.empty()) io::write_file(opt.json_path, io::classification_to_json(report));
  std::cout << "m=" << report.m << " classes=" << report.classes.size()
            << " four_values=" << report.four_values_count << "\n";
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const ClassInfo& c = report.classes[i];
    std::cout << i << ": {";
    for (std::size_t v = 0; v < c.representative.size(); ++v)
      std::cout << (v ? "," : "") << c.representative[v];
    std::cout << "} four_values=" << (c.four_values ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_fourvalues(const Options& opt) {
  echo_config("fourvalues", {{"set", opt.set_values}});
  DistanceSet s = DistanceSet::parse(opt.set_values);
  FourValuesResult r = check_four_values(s);
  if (r.ok) {
    std::cout << "true\n";
  } else {
    std::cout << "false\n";
    std::cout << "failing quadruple: (" << r.quad[0].str() << "," << r.quad[1].str() << ","
              << r.quad[2].str() << "," << r.quad[3].str() << ") with t=" << r.t.str() << "\n";
  }
  return 0;
}

int cmd_build(const Options& opt) {
  echo_config("build", {{"alphabet", opt.alphabet},
                        {"rounds", std::to_string(opt.rounds)},
                        {"budget", std::to_string(opt.budget)},
                        {"seed", std::to_string(opt.seed)},
                        {"cap", std::to_string(opt.cap)},
                        {"out", opt.out_path}});
  DistanceSet s = DistanceSet::parse(opt.alphabet);
  ApproxSpace built = build_approx(s, opt.rounds, opt.budget, opt.seed, opt.cap);
  io::write_file(opt.out_path, io::approx_space_to_json(built));
  std::cout << "points=" << built.space.size();
  for (std::size_t r = 0; r < built.round_sizes.size(); ++r)
    std::cout << (r ? "," : " round_sizes=") << built.round_sizes[r];
  if (built.capped) std::cout << " capped=true";
  std::cout << "\n";
  if (built.capped) std::cerr << "build stopped at the point cap (" << opt.cap << ")\n";
  return 0;
}

int cmd_check_extension(const Options& opt) {
  echo_config("check-extension", {{"in", opt.in_path},
                                  {"k", std::to_string(opt.k)},
                                  {"violations", opt.violations_path}});
  ApproxSpace space = io::approx_space_from_json(io::read_file(opt.in_path));
  std::vector<UnrealizedProfile> missing = check_extension(space, opt.k);
  std::cout << "unrealized=" << missing.size() << "\n";
  if (missing.empty()) return 0;
  io::write_file(opt.violations_path, unrealized_to_json(missing));
  std::cerr << "unrealized profiles written to " << opt.violations_path << "\n";
  return 1;
}

int cmd_round(const Options& opt, bool collapse) {
  const char* verb = collapse ? "collapse" : "ceil";
  echo_config(verb, {{"in", opt.in_path}, {"m", std::to_string(opt.m)}, {"out", opt.out_path}});
  FiniteMetricSpace x = io::metric_space_from_json(io::read_file(opt.in_path));
  FiniteMetricSpace y = collapse ? collapse_metric(x, opt.m) : ceil_metric(x, opt.m);
  std::string text = io::metric_space_to_json(y);
  if (opt.out_path.empty())
    std::cout << text;
  else
    io::write_file(opt.out_path, text);
  return 0;
}

int cmd_hedgehog(const Options& opt) {
  echo_config("hedgehog", {{"fine", opt.fine_path},
                           {"m", std::to_string(opt.m)},
                           {"max-tree", std::to_string(opt.max_tree)},
                           {"verify", opt.verify ? "true" : "false"},
                           {"out", opt.out_path},
                           {"census", opt.csv_path}});
  FiniteMetricSpace fine = io::metric_space_from_json(io::read_file(opt.fine_path));
  FiniteMetricSpace coarse = ceil_metric(fine, opt.m);
  HedgehogGraph g = build_z(fine, coarse, opt.m, opt.max_tree);
  if (!opt.out_path.empty()) io::write_file(opt.out_path, io::hedgehog_to_json(g));
  std::cout << "points=" << g.point_count() << " nodes=" << g.node_count()
            << " edges=" << g.edges().size() << "\n";
  if (!opt.verify && opt.csv_path.empty()) return 0;

  std::vector<std::vector<Rat>> dz = path_metric(g);
  CycleCensus census = classify_cycles(g);
  if (!opt.csv_path.empty()) io::write_file(opt.csv_path, io::cycle_census_to_csv(g, census));
  if (!opt.verify) return 0;

  json violations = json::array();
  for (const DeltaMismatch& mm : delta_mismatches(g, dz)) {
    violations.push_back(json{{"kind", "delta_mismatch"},
                              {"u", g.vertex_name(mm.u)},
                              {"v", g.vertex_name(mm.v)},
                              {"delta", mm.delta_value.str()},
                              {"dz", mm.dz_value.str()}});
  }
  for (const CycleInfo& c : census.cycles) {
    if (c.metric_ok && c.shape_ok) continue;
    json names = json::array();
    for (int v : c.vertices) names.push_back(g.vertex_name(v));
    violations.push_back(json{{"kind", "cycle"}, {"vertices", names}, {"note", c.note}});
  }
  for (const std::vector<int>& chain : maximal_branches(g)) {
    BranchReport rep = branch_cover_check(g, chain, dz);
    if (rep.isometric && rep.projections_ok) continue;
    violations.push_back(json{{"kind", "branch"}, {"note", rep.note}});
  }
  // d^Z must itself be a metric on all of Z.
  int n = g.vertex_count();
  for (int i = 0; i < n && violations.size() < 1000; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = j + 1; l < n; ++l)
        if (j != i && l != i && dz[j][l] > dz[j][i] + dz[i][l])
          violations.push_back(json{{"kind", "dz_triangle"},
                                    {"i", g.vertex_name(j)},
                                    {"j", g.vertex_name(i)},
                                    {"k", g.vertex_name(l)}});
  std::cout << "violations=" << violations.size() << "\n";
  if (violations.empty()) return 0;
  io::write_file(opt.violations_path, violations.dump(2) + "\n");
  std::cerr << "violations written to " << opt.violations_path << "\n";
  return 1;
}

int cmd_experiment(const Options& opt) {
  echo_config("experiment", {{"in", opt.in_path},
                             {"targets", opt.targets_path},
                             {"eps", opt.eps},
                             {"k", std::to_string(opt.k)},
                             {"seeds", opt.seeds},
                             {"csv", opt.csv_path}});
  FiniteMetricSpace x = io::metric_space_from_json(io::read_file(opt.in_path));
  std::vector<FiniteMetricSpace> targets = io::targets_from_json(io::read_file(opt.targets_path));
  auto [lo, hi] = parse_seed_range(opt.seeds);
  std::vector<ExperimentRow> rows = run_experiment(x, targets, Rat::parse(opt.eps), opt.k, lo, hi);
  std::string csv = io::experiment_to_csv(rows);
  if (opt.csv_path.empty())
    std::cout << csv;
  else
    io::write_file(opt.csv_path, csv);
  int found = 0;
  for (const ExperimentRow& r : rows) found += r.found ? 1 : 0;
  std::cerr << "rows=" << rows.size() << " found=" << found << "\n";
  return 0;
}

int cmd_embed_cm(const Options& opt) {
  echo_config("embed-cm", {{"in", opt.in_path}, {"m", std::to_string(opt.m)}, {"out", opt.out_path}});
  FiniteMetricSpace x = io::metric_space_from_json(io::read_file(opt.in_path));
  StepFunctionSpace s = kuratowski_embed(x, opt.m);
  std::string text = io::step_functions_to_json(s);
  if (opt.out_path.empty())
    std::cout << text;
  else
    io::write_file(opt.out_path, text);
  return 0;
}

int cmd_dense_copy(const Options& opt) {
  echo_config("dense-copy", {{"in", opt.in_path},
                             {"m", std::to_string(opt.m)},
                             {"steps", std::to_string(opt.steps)},
                             {"csv", opt.csv_path}});
  ApproxSpace ambient = io::approx_space_from_json(io::read_file(opt.in_path));
  DenseCopyResult r = dense_discrete_copy(ambient.space, opt.m, opt.steps);
  std::string csv = io::cover_report_to_csv(r);
  if (opt.csv_path.empty())
    std::cout << csv;
  else
    io::write_file(opt.csv_path, csv);
  std::cout << "copy_size=" << r.copy.size() << " processed=" << r.cover.size()
            << (r.diverged ? " diverged=true" : "") << "\n";
  if (r.diverged) std::cerr << "divergence: " << r.trace << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"exact combinatorics of grid-valued ultrahomogeneous metric spaces"};
  app.require_subcommand(1);
  Options opt;
  int threads = 1;
  app.add_option("--threads", threads, "worker threads (0 = auto)");

  CLI::App* classify_cmd = app.add_subcommand("classify", "similarity classes of size-m sets");
  classify_cmd->add_option("--m", opt.m, "set size")->required();
  classify_cmd->add_option("--csv", opt.csv_path, "CSV report path");
  classify_cmd->add_option("--json", opt.json_path, "JSON report path");

  CLI::App* fourvalues_cmd = app.add_subcommand("fourvalues", "4-values condition check");
  fourvalues_cmd->add_option("--set", opt.set_values, "comma-separated distances")->required();

  CLI::App* build_cmd = app.add_subcommand("build", "budgeted approximation build");
  build_cmd->add_option("--alphabet", opt.alphabet, "comma-separated distances")->required();
  build_cmd->add_option("--rounds", opt.rounds, "construction rounds")->required();
  build_cmd->add_option("--budget", opt.budget, "max subspace size per profile")->required();
  build_cmd->add_option("--seed", opt.seed, "0 = no shuffle");
  build_cmd->add_option("--cap", opt.cap, "point cap");
  build_cmd->add_option("--out", opt.out_path, "output space JSON")->required();

  CLI::App* check_cmd = app.add_subcommand("check-extension", "extension-property certificate");
  check_cmd->add_option("--in", opt.in_path, "approx space JSON")->required();
  check_cmd->add_option("--k", opt.k, "subspace size bound")->required();
  check_cmd->add_option("--violations", opt.violations_path, "counterexample output")
      ->default_val("violations.json");

  CLI::App* ceil_cmd = app.add_subcommand("ceil", "grid rounding of a metric");
  ceil_cmd->add_option("--in", opt.in_path)->required();
  ceil_cmd->add_option("--m", opt.m)->required();
  ceil_cmd->add_option("--out", opt.out_path);

  CLI::App* collapse_cmd = app.add_subcommand("collapse", "fine-to-coarse grid collapse");
  collapse_cmd->add_option("--in", opt.in_path)->required();
  collapse_cmd->add_option("--m", opt.m)->required();
  collapse_cmd->add_option("--out", opt.out_path);

  CLI::App* hedgehog_cmd = app.add_subcommand("hedgehog", "build and verify the glued graph");
  hedgehog_cmd->add_option("--fine", opt.fine_path, "fine metric JSON")->required();
  hedgehog_cmd->add_option("--m", opt.m)->required();
  hedgehog_cmd->add_option("--max-tree", opt.max_tree, "max tree-node size");
  hedgehog_cmd->add_flag("--verify", opt.verify, "run all verification checks");
  hedgehog_cmd->add_option("--out", opt.out_path, "graph JSON output");
  hedgehog_cmd->add_option("--census", opt.csv_path, "cycle census CSV");
  hedgehog_cmd->add_option("--violations", opt.violations_path, "counterexample output")
      ->default_val("violations.json");

  CLI::App* experiment_cmd = app.add_subcommand("experiment", "indivisibility experiments");
  experiment_cmd->add_option("--in", opt.in_path)->required();
  experiment_cmd->add_option("--targets", opt.targets_path)->required();
  experiment_cmd->add_option("--eps", opt.eps, "fattening radius p/q");
  experiment_cmd->add_option("--k", opt.k, "color count")->required();
  experiment_cmd->add_option("--seeds", opt.seeds, "seed range a..b");
  experiment_cmd->add_option("--csv", opt.csv_path, "report CSV");

  CLI::App* embed_cmd = app.add_subcommand("embed-cm", "step-function embedding");
  embed_cmd->add_option("--in", opt.in_path)->required();
  embed_cmd->add_option("--m", opt.m)->required();
  embed_cmd->add_option("--out", opt.out_path);

  CLI::App* dense_cmd = app.add_subcommand("dense-copy", "back-and-forth grid copy with cover");
  dense_cmd->add_option("--in", opt.in_path, "approx space JSON")->required();
  dense_cmd->add_option("--m", opt.m)->required();
  dense_cmd->add_option("--steps", opt.steps, "odd/even rounds");
  dense_cmd->add_option("--csv", opt.csv_path, "cover report CSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  set_thread_count(threads);

  try {
    if (app.got_subcommand(classify_cmd)) return cmd_classify(opt);
    if (app.got_subcommand(fourvalues_cmd)) return cmd_fourvalues(opt);
    if (app.got_subcommand(build_cmd)) return cmd_build(opt);
    if (app.got_subcommand(check_cmd)) return cmd_check_extension(opt);
    if (app.got_subcommand(ceil_cmd)) return cmd_round(opt, false);
    if (app.got_subcommand(collapse_cmd)) return cmd_round(opt, true);
    if (app.got_subcommand(hedgehog_cmd)) return cmd_hedgehog(opt);
    if (app.got_subcommand(experiment_cmd)) return cmd_experiment(opt);
    if (app.got_subcommand(embed_cmd)) return cmd_embed_cm(opt);
    if (app.got_subcommand(dense_cmd)) return cmd_dense_copy(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace uhs::cli
