#include "cdsopt/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "cdsopt/instance_io.hpp"

namespace cdsopt {

namespace {

template <typename T>
std::vector<T> list_of(const nlohmann::json& j, const char* key, std::vector<T> fallback = {}) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (v.is_array()) return v.get<std::vector<T>>();
  return {v.get<T>()};
}

std::string opt_num(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

BatchSpec parse_batch_spec(const nlohmann::json& j) {
  BatchSpec spec;
  spec.oracle = j.value("oracle", true);
  spec.node_budget = j.value("node_budget", kDefaultOracleBudget);
  spec.threads = j.value("threads", 0);
  const std::string connector = j.value("connector", std::string("star"));
  if (connector == "star") spec.connector = ConnectorKind::Star;
  else if (connector == "pairwise") spec.connector = ConnectorKind::Pairwise;
  else throw std::invalid_argument("unknown connector `" + connector + "`");

  for (const auto& c : j.value("configs", nlohmann::json::array())) {
    BatchConfig cfg;
    cfg.kind = c.at("kind").get<std::string>();
    cfg.ms = list_of<int>(c, "m", {1});
    if (c.contains("cost")) {
      auto range = c.at("cost").get<std::vector<double>>();
      if (range.size() != 2) throw std::invalid_argument("cost must be [lo, hi]");
      cfg.cost = {range[0], range[1]};
    }
    if (c.contains("seeds")) {
      auto seeds = list_of<std::uint64_t>(c, "seeds");
      if (seeds.empty() || seeds.size() > 2) throw std::invalid_argument("seeds must be [from, to]");
      cfg.seed_from = seeds.front();
      cfg.seed_to = seeds.back();
      if (cfg.seed_to < cfg.seed_from) throw std::invalid_argument("seeds range is empty");
    }
    if (cfg.kind == "random") {
      cfg.ns = list_of<NodeId>(c, "n");
      cfg.edge_probs = list_of<double>(c, "p");
      if (cfg.ns.empty() || cfg.edge_probs.empty()) throw std::invalid_argument("random config needs n and p");
    } else if (cfg.kind == "udg") {
      cfg.ns = list_of<NodeId>(c, "n");
      cfg.sides = list_of<double>(c, "side");
      if (cfg.ns.empty() || cfg.sides.empty()) throw std::invalid_argument("udg config needs n and side");
    } else if (cfg.kind == "fig1") {
      cfg.ds = list_of<int>(c, "d");
      cfg.eps = c.value("eps", 0.01);
      if (cfg.ds.empty()) throw std::invalid_argument("fig1 config needs d");
    } else {
      throw std::invalid_argument("unknown generator kind `" + cfg.kind + "`");
    }
    spec.configs.push_back(std::move(cfg));
  }
  return spec;
}

std::vector<Instance> expand_batch(const BatchSpec& spec) {
  std::vector<Instance> out;
  for (const auto& cfg : spec.configs) {
    if (cfg.kind == "fig1") {
      for (int d : cfg.ds) out.push_back(gen_fig1(d, cfg.eps).instance);
      continue;
    }
    const auto& params = cfg.kind == "random" ? cfg.edge_probs : cfg.sides;
    for (NodeId n : cfg.ns) {
      for (double param : params) {
        for (int m : cfg.ms) {
          for (std::uint64_t seed = cfg.seed_from; seed <= cfg.seed_to; ++seed) {
            out.push_back(cfg.kind == "random" ? gen_random_connected(n, param, cfg.cost, seed, m)
                                               : gen_udg(n, param, cfg.cost, seed, m));
          }
        }
      }
    }
  }
  return out;
}

BenchRow bench_instance(const Instance& inst, const BatchSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  const WeightedGraph& g = inst.graph;
  BenchRow row;
  row.label = inst.label;
  row.n = g.node_count();
  row.edges = g.edge_count();
  row.m = inst.m;
  row.delta = static_cast<int>(g.max_degree());
  row.udg = g.coords().has_value();
  row.bound_total = harmonic(row.delta + inst.m) + 2.0 * harmonic(row.delta - 1);

  try {
    SolveOptions options;
    options.connector = spec.connector;
    options.run_oracle = spec.oracle && g.node_count() <= spec.node_budget;
    options.oracle_budget = spec.node_budget;
    const SolveResult r = solve(inst, options);
    row.cost_d1 = g.cost_of(r.d1);
    row.cost_d2 = g.cost_of(r.d2);
    row.cost_total = row.cost_d1 + row.cost_d2;
    if (!r.verification.is_cds.value_or(false)) row.violation = "invalid";
    if (r.ratios) {
      row.opt = r.ratios->opt;
      row.opt_mds = r.ratios->opt_mds;
      row.ratio_total = r.ratios->ratio_total;
      row.ratio_d1 = r.ratios->ratio_d1;
      row.ratio_d2 = r.ratios->ratio_d2;
      const std::string bad = check_bounds(*r.ratios).describe();
      if (!bad.empty()) row.violation += (row.violation.empty() ? "" : ";") + bad;
    }
  } catch (const std::exception& e) {
    row.violation = std::string("error: ") + e.what();
  }
  row.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

int resolve_thread_count(int requested) {
  if (const char* env = std::getenv("CDS_OPT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  if (requested > 0) return requested;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::vector<BenchRow> run_bench(const std::vector<Instance>& instances, const BatchSpec& spec, int threads) {
  std::vector<BenchRow> rows(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) rows[i] = bench_instance(instances[i], spec);
  };
  const int width = std::clamp<int>(threads, 1, static_cast<int>(std::max<std::size_t>(1, instances.size())));
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < width; ++t) pool.emplace_back(worker);
    worker();
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = kBenchCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += csv_field(r.label) + "," + std::to_string(r.n) + "," + std::to_string(r.edges) + "," +
           std::to_string(r.m) + "," + std::to_string(r.delta) + "," + format_double(r.cost_d1) + "," +
           format_double(r.cost_d2) + "," + format_double(r.cost_total) + "," + opt_num(r.opt) + "," +
           opt_num(r.opt_mds) + "," + opt_num(r.ratio_total) + "," + format_double(r.bound_total) + "," +
           (r.udg ? "1" : "0") + "," + csv_field(r.violation) + "\n";
  }
  return out;
}

nlohmann::json bench_summary(const std::vector<BenchRow>& rows) {
  std::size_t violations = 0, with_oracle = 0;
  double max_total = 0.0, sum_total = 0.0, max_d1 = 0.0, max_d2 = 0.0;
  for (const auto& r : rows) {
    if (!r.violation.empty()) ++violations;
    if (!r.ratio_total) continue;
    ++with_oracle;
    max_total = std::max(max_total, *r.ratio_total);
    sum_total += *r.ratio_total;
    max_d1 = std::max(max_d1, *r.ratio_d1);
    max_d2 = std::max(max_d2, *r.ratio_d2);
  }
  nlohmann::json j = {{"schema", kReportSchema},
                      {"instances", rows.size()},
                      {"with_oracle", with_oracle},
                      {"violations", violations}};
  if (with_oracle > 0) {
    j["max_ratio_total"] = max_total;
    j["mean_ratio_total"] = sum_total / static_cast<double>(with_oracle);
    j["max_ratio_d1"] = max_d1;
    j["max_ratio_d2"] = max_d2;
  }
  return j;
}

}  // namespace cdsopt
