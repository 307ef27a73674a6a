#include "cdsopt/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cdsopt/bench.hpp"
#include "cdsopt/generators.hpp"
#include "cdsopt/instance_io.hpp"
#include "cdsopt/solve.hpp"

namespace cdsopt {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

std::string stem_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = name.find_last_of('.');
  return dot == std::string::npos ? name : name.substr(0, dot);
}

struct SolveArgs {
  std::string instance;
  bool given_ds = false;
  std::string ds_file;
  std::string baseline;
  bool oracle = false;
  int oracle_budget = kDefaultOracleBudget;
  std::string out;
  bool no_timing = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const std::string text = slurp(a.instance);
  const Instance inst = parse_instance(text, stem_of(a.instance));

  SolveOptions options;
  options.connector = a.baseline == "pairwise" ? ConnectorKind::Pairwise : ConnectorKind::Star;
  options.run_oracle = a.oracle;
  options.oracle_budget = a.oracle_budget;
  if (!a.ds_file.empty()) {
    options.given_ds = parse_node_list(slurp(a.ds_file), inst.graph.node_count());
  } else if (a.given_ds) {
    auto ds = extract_given_ds(text);
    if (!ds) {
      err << "error: --given-ds requires a `# given-ds:` line in the instance or --ds-file\n";
      return kExitInputError;
    }
    options.given_ds = normalize_node_set(inst.graph.node_count(), *ds);
  }

  SolveResult result;
  try {
    result = solve(inst, options);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const OracleTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitSolverFailure;
  }

  emit(solve_report_json(inst, result, !a.no_timing).dump(2) + "\n", a.out, out);
  if (!result.verification.is_cds.value_or(false)) {
    err << "internal error: solver output failed verification\n";
    return kExitSolverFailure;
  }
  return kExitOk;
}

int cmd_verify(const std::string& instance_path, const std::string& solution_path, std::ostream& out) {
  const Instance inst = parse_instance(slurp(instance_path), stem_of(instance_path));
  const NodeSet nodes = parse_node_list(slurp(solution_path), inst.graph.node_count());
  const VerifyReport report = verify_cds(inst, nodes);
  out << to_json(report).dump(2) << "\n";
  return report.is_cds.value_or(false) ? kExitOk : kExitRejected;
}

struct BenchArgs {
  std::string spec;
  std::string csv;
  std::string summary;
  int threads = 0;
  bool no_timing = false;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  BatchSpec spec;
  std::vector<Instance> instances;
  try {
    spec = parse_batch_spec(nlohmann::json::parse(slurp(a.spec)));
    instances = expand_batch(spec);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  const int threads = a.threads > 0 ? a.threads : resolve_thread_count(spec.threads);

  const auto start = std::chrono::steady_clock::now();
  const auto rows = run_bench(instances, spec, threads);
  nlohmann::json summary = bench_summary(rows);
  if (!a.no_timing) {
    summary["threads"] = threads;
    summary["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }

  emit(bench_csv(rows), a.csv, out);
  emit(summary.dump(2) + "\n", a.summary, a.csv.empty() && a.summary.empty() ? err : out);
  for (const auto& r : rows) {
    if (!r.violation.empty()) err << "FAILURE " << r.label << ": " << r.violation << "\n";
  }
  return summary["violations"].get<std::size_t>() == 0 ? kExitOk : kExitRejected;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum weight connected m-fold dominating set solver", "cds-opt"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance and print a JSON report");
  solve_cmd->add_option("instance", solve_args.instance, "Instance file")->required();
  solve_cmd->add_flag("--given-ds", solve_args.given_ds, "Connect the `# given-ds:` set from the instance instead of running phase 1");
  solve_cmd->add_option("--ds-file", solve_args.ds_file, "Connect the dominating set listed in this file");
  solve_cmd->add_option("--baseline", solve_args.baseline, "Replace the star connector")->check(CLI::IsMember({"pairwise"}));
  solve_cmd->add_flag("--oracle", solve_args.oracle, "Also run the exact oracles and report ratios");
  solve_cmd->add_option("--oracle-budget", solve_args.oracle_budget, "Largest n accepted by the oracle");
  solve_cmd->add_option("--out", solve_args.out, "Write the report here instead of stdout");
  solve_cmd->add_flag("--no-timing", solve_args.no_timing, "Omit wall-clock timings");

  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->require_subcommand(1);
  std::string gen_out;
  int n = 12, m = 1, d = 3;
  double p = 0.3, side = 2.0, eps = 0.01, cost_lo = 1.0, cost_hi = 1.0;
  std::uint64_t seed = 0;
  auto add_common = [&](CLI::App* c) {
    c->add_option("--n", n, "Node count")->check(CLI::PositiveNumber);
    c->add_option("--m", m, "Fold requirement")->check(CLI::PositiveNumber);
    c->add_option("--cost-lo", cost_lo, "Lowest node cost");
    c->add_option("--cost-hi", cost_hi, "Highest node cost");
    c->add_option("--seed", seed, "RNG seed");
    c->add_option("--out", gen_out, "Output file");
  };
  auto* gen_random = gen_cmd->add_subcommand("random", "Random connected graph (spanning tree + G(n,p))");
  add_common(gen_random);
  gen_random->add_option("--p", p, "Extra edge probability");
  auto* gen_udg_cmd = gen_cmd->add_subcommand("udg", "Connected unit disk graph");
  add_common(gen_udg_cmd);
  gen_udg_cmd->add_option("--side", side, "Square side length");
  auto* gen_fig1_cmd = gen_cmd->add_subcommand("fig1", "Adversarial instance for pairwise connectors");
  gen_fig1_cmd->add_option("--d", d, "Number of branches")->check(CLI::PositiveNumber);
  gen_fig1_cmd->add_option("--eps", eps, "Cost of the middle nodes");
  gen_fig1_cmd->add_option("--out", gen_out, "Output file");

  std::string verify_instance, verify_solution;
  auto* verify_cmd = app.add_subcommand("verify", "Check a node list against an instance");
  verify_cmd->add_option("instance", verify_instance, "Instance file")->required();
  verify_cmd->add_option("solution", verify_solution, "Whitespace-separated node ids")->required();

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Run a batch and emit CSV rows plus a JSON summary");
  bench_cmd->add_option("spec", bench_args.spec, "Batch spec (JSON)")->required();
  bench_cmd->add_option("--csv", bench_args.csv, "CSV output file (default stdout)");
  bench_cmd->add_option("--summary", bench_args.summary, "Summary JSON file (default stderr when CSV goes to stdout)");
  bench_cmd->add_option("--threads", bench_args.threads, "Worker count (overrides CDS_OPT_THREADS)");
  bench_cmd->add_flag("--no-timing", bench_args.no_timing, "Omit timings from the summary");

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve_args, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify_instance, verify_solution, out);
    if (bench_cmd->parsed()) return cmd_bench(bench_args, out, err);
    if (gen_cmd->parsed()) {
      std::string text;
      if (gen_fig1_cmd->parsed()) {
        const Fig1Instance f = gen_fig1(d, eps);
        text = given_ds_directive(f.designated) + serialize_instance(f.instance);
      } else if (gen_random->parsed()) {
        text = serialize_instance(gen_random_connected(n, p, {cost_lo, cost_hi}, seed, m));
      } else {
        text = serialize_instance(gen_udg(n, side, {cost_lo, cost_hi}, seed, m));
      }
      emit(text, gen_out, out);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace cdsopt
