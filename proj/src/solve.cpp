#include "cdsopt/solve.hpp"

#include <algorithm>
#include <chrono>
#include <iterator>

namespace cdsopt {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

}  // namespace

const char* to_string(ConnectorKind kind) {
  switch (kind) {
    case ConnectorKind::Star: return "star";
    case ConnectorKind::Pairwise: return "pairwise";
  }
  return "unknown";
}

SolveResult solve(const Instance& inst, const SolveOptions& options) {
  SolveResult r;
  r.connector = options.connector;

  auto t0 = Clock::now();
  if (options.given_ds) {
    r.given_ds = true;
    r.d1 = normalize_node_set(inst.graph.node_count(), *options.given_ds);
  } else {
    Phase1Result p1 = run_phase1(inst);
    r.d1 = std::move(p1.d1);
    r.phase1 = std::move(p1.trace);
  }
  r.timings.phase1_ms = elapsed_ms(t0);

  t0 = Clock::now();
  r.phase2 = options.connector == ConnectorKind::Star ? run_phase2(inst, r.d1)
                                                       : run_pairwise_baseline(inst, r.d1);
  r.d2 = r.phase2.d2;
  r.timings.phase2_ms = elapsed_ms(t0);

  std::set_union(r.d1.begin(), r.d1.end(), r.d2.begin(), r.d2.end(), std::back_inserter(r.dg));

  t0 = Clock::now();
  r.verification = verify_cds(inst, r.dg);
  r.timings.verify_ms = elapsed_ms(t0);

  if (options.run_oracle) {
    t0 = Clock::now();
    r.opt_cds = exact_opt_cds(inst, options.oracle_budget);
    r.opt_mds = exact_opt_mds(inst, options.oracle_budget);
    r.ratios = ratio_report(inst, r.d1, r.d2, *r.opt_cds, *r.opt_mds);
    r.timings.oracle_ms = elapsed_ms(t0);
  }
  return r;
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations) violations.push_back({{"node", v.node}, {"reason", v.reason}});
  nlohmann::json j = {{"is_m_ds", report.is_m_ds}, {"violations", violations}, {"cost", report.cost}};
  j["is_connected"] = report.is_connected ? nlohmann::json(*report.is_connected) : nlohmann::json(nullptr);
  j["is_cds"] = report.is_cds ? nlohmann::json(*report.is_cds) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const OracleResult& result) {
  return {{"opt_set", result.opt_set},
          {"opt_cost", result.opt_cost},
          {"nodes_explored", result.nodes_explored},
          {"exhausted", result.exhausted}};
}

nlohmann::json to_json(const RatioRecord& r) {
  nlohmann::json j = {{"opt", r.opt},
                      {"opt_mds", r.opt_mds},
                      {"ratio_d1", r.ratio_d1},
                      {"ratio_d2", r.ratio_d2},
                      {"ratio_total", r.ratio_total},
                      {"bound_d1", r.bound_d1},
                      {"bound_d2", r.bound_d2},
                      {"bound_total", r.bound_total}};
  j["bound_udg"] = r.bound_udg ? nlohmann::json(*r.bound_udg) : nlohmann::json(nullptr);
  const BoundCheck check = check_bounds(r);
  j["bounds_ok"] = check.all();
  return j;
}

nlohmann::json solve_report_json(const Instance& inst, const SolveResult& r, bool include_timing) {
  const WeightedGraph& g = inst.graph;
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : r.phase1.steps) {
    steps.push_back({{"node", s.node}, {"gain", s.gain}, {"ratio", s.ratio}, {"running_cost", s.running_cost}});
  }
  nlohmann::json stars = nlohmann::json::array();
  for (const auto& s : r.phase2.stars) {
    stars.push_back({{"center", s.center}, {"leaves", s.leaves}, {"p_prime", s.p_prime}, {"cost", s.total_cost}});
  }

  const double c1 = g.cost_of(r.d1);
  const double c2 = g.cost_of(r.d2);
  nlohmann::json j = {
      {"schema", kReportSchema},
      {"label", inst.label},
      {"n", g.node_count()},
      {"edges", g.edge_count()},
      {"m", inst.m},
      {"delta", g.max_degree()},
      {"d1", r.d1},
      {"d2", r.d2},
      {"dg", r.dg},
      {"cost", {{"d1", c1}, {"d2", c2}, {"total", c1 + c2}}},
      {"phase1", {{"given_ds", r.given_ds}, {"steps", steps}}},
      {"phase2", {{"connector", to_string(r.connector)}, {"stars", stars}, {"components", r.phase2.component_trace}}},
      {"verify", to_json(r.verification)},
  };
  if (r.opt_cds && r.opt_mds) {
    j["oracle"] = {{"cds", to_json(*r.opt_cds)}, {"mds", to_json(*r.opt_mds)}};
    if (r.ratios) j["ratios"] = to_json(*r.ratios);
  }
  if (include_timing) {
    j["timing_ms"] = {{"phase1", r.timings.phase1_ms},
                      {"phase2", r.timings.phase2_ms},
                      {"verify", r.timings.verify_ms},
                      {"oracle", r.timings.oracle_ms}};
  }
  return j;
}

}  // namespace cdsopt
