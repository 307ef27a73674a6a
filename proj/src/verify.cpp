#include "cdsopt/verify.hpp"

#include <algorithm>
#include <limits>

namespace cdsopt {

namespace {

VerifyReport check_domination(const Instance& inst, const NodeSet& nodes) {
  const WeightedGraph& g = inst.graph;
  const auto mask = membership_mask(g.node_count(), nodes);
  VerifyReport report;
  report.cost = g.cost_of(nodes);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (mask[u]) continue;
    int dominators = 0;
    for (NodeId v : g.neighbors(u)) dominators += mask[v] ? 1 : 0;
    if (dominators < inst.m) {
      report.violations.push_back({u, "node " + std::to_string(u) + " has " + std::to_string(dominators) +
                                          " < " + std::to_string(inst.m) + " dominators"});
    }
  }
  report.is_m_ds = report.violations.empty();
  return report;
}

class BranchAndBound {
 public:
  BranchAndBound(const Instance& inst, bool need_connected)
      : g_(inst.graph),
        m_(inst.m),
        need_connected_(need_connected),
        state_(g_.node_count(), Undecided),
        in_count_(g_.node_count(), 0),
        open_count_(g_.node_count(), 0) {
    for (NodeId u = 0; u < g_.node_count(); ++u) open_count_[u] = static_cast<int>(g_.degree(u));
  }

  OracleResult run() {
    recurse(0, 0.0);
    OracleResult out;
    out.opt_set = best_set_;
    out.opt_cost = g_.cost_of(best_set_);
    out.nodes_explored = explored_;
    out.exhausted = found_;
    return out;
  }

 private:
  enum State : char { Undecided, In, Out };

  bool still_coverable(NodeId u) const { return in_count_[u] + open_count_[u] >= m_; }

  void recurse(NodeId next, double cost) {
    ++explored_;
    if (found_ && cost >= best_cost_) return;
    if (next == g_.node_count()) {
      accept(cost);
      return;
    }

    state_[next] = In;
    for (NodeId w : g_.neighbors(next)) {
      ++in_count_[w];
      --open_count_[w];
    }
    recurse(next + 1, cost + g_.cost(next));
    for (NodeId w : g_.neighbors(next)) {
      --in_count_[w];
      ++open_count_[w];
    }

    state_[next] = Out;
    for (NodeId w : g_.neighbors(next)) --open_count_[w];
    bool feasible = still_coverable(next);
    for (NodeId w : g_.neighbors(next)) {
      if (state_[w] == Out && !still_coverable(w)) feasible = false;
    }
    if (feasible) recurse(next + 1, cost);
    for (NodeId w : g_.neighbors(next)) ++open_count_[w];
    state_[next] = Undecided;
  }

  void accept(double cost) {
    NodeSet chosen;
    for (NodeId u = 0; u < g_.node_count(); ++u) {
      if (state_[u] == In) chosen.push_back(u);
      else if (in_count_[u] < m_) return;
    }
    if (chosen.empty()) return;
    if (need_connected_ && count_induced_components(g_, chosen) != 1) return;
    found_ = true;
    best_cost_ = cost;
    best_set_ = std::move(chosen);
  }

  const WeightedGraph& g_;
  int m_;
  bool need_connected_;
  std::vector<State> state_;
  std::vector<int> in_count_;
  std::vector<int> open_count_;
  bool found_ = false;
  double best_cost_ = std::numeric_limits<double>::infinity();
  NodeSet best_set_;
  std::uint64_t explored_ = 0;
};

OracleResult run_oracle(const Instance& inst, NodeId node_budget, bool need_connected) {
  if (inst.graph.node_count() > node_budget) {
    throw OracleTooLarge("instance too large for oracle: n=" + std::to_string(inst.graph.node_count()) +
                         " exceeds budget " + std::to_string(node_budget));
  }
  return BranchAndBound(inst, need_connected).run();
}

}  // namespace

VerifyReport verify_mds(const Instance& inst, const NodeSet& nodes) {
  return check_domination(inst, normalize_node_set(inst.graph.node_count(), nodes));
}

VerifyReport verify_cds(const Instance& inst, const NodeSet& raw) {
  const NodeSet nodes = normalize_node_set(inst.graph.node_count(), raw);
  VerifyReport report = check_domination(inst, nodes);
  if (nodes.empty()) {
    report.is_connected = false;
    report.violations.push_back({-1, "set is empty"});
  } else {
    std::vector<int> labels;
    const int count = label_induced_components(inst.graph, membership_mask(inst.graph.node_count(), nodes), labels);
    report.is_connected = count == 1;
    // Report the smallest node of every component other than the first.
    std::vector<bool> seen(count, false);
    seen[labels[nodes.front()]] = true;
    for (NodeId u : nodes) {
      if (seen[labels[u]]) continue;
      seen[labels[u]] = true;
      report.violations.push_back({u, "node " + std::to_string(u) + " is disconnected from node " +
                                          std::to_string(nodes.front()) + " in G[D]"});
    }
  }
  report.is_cds = report.is_m_ds && *report.is_connected;
  return report;
}

OracleResult exact_opt_cds(const Instance& inst, NodeId node_budget) {
  return run_oracle(inst, node_budget, true);
}

OracleResult exact_opt_mds(const Instance& inst, NodeId node_budget) {
  return run_oracle(inst, node_budget, false);
}

double harmonic(int k) {
  double h = 0.0;
  for (int i = 1; i <= k; ++i) h += 1.0 / i;
  return h;
}

RatioRecord ratio_report(const Instance& inst, const NodeSet& d1, const NodeSet& d2,
                         const OracleResult& cds_oracle, const OracleResult& mds_oracle) {
  if (!cds_oracle.exhausted || !mds_oracle.exhausted) throw std::invalid_argument("oracle incomplete");
  const WeightedGraph& g = inst.graph;
  RatioRecord r;
  r.cost_d1 = g.cost_of(d1);
  r.cost_d2 = g.cost_of(d2);
  r.cost_total = r.cost_d1 + r.cost_d2;
  r.opt = cds_oracle.opt_cost;
  r.opt_mds = mds_oracle.opt_cost;
  r.ratio_d1 = r.cost_d1 / r.opt_mds;
  r.ratio_d2 = r.cost_d2 / r.opt;
  r.ratio_total = r.cost_total / r.opt;
  r.delta = static_cast<int>(g.max_degree());
  r.bound_d1 = harmonic(r.delta + inst.m);
  r.bound_d2 = 2.0 * harmonic(r.delta - 1);
  r.bound_total = r.bound_d1 + r.bound_d2;
  if (g.coords()) r.bound_udg = 2.0 * harmonic(3);
  return r;
}

BoundCheck check_bounds(const RatioRecord& r) {
  auto within = [](double value, double limit) { return value <= limit * (1.0 + kBoundSlack); };
  BoundCheck c;
  c.phase1_ok = within(r.cost_d1, r.bound_d1 * r.opt_mds);
  c.connector_ok = within(r.cost_d2, r.bound_d2 * r.opt);
  c.total_ok = within(r.cost_total, r.bound_total * r.opt);
  c.udg_ok = !r.bound_udg || within(r.cost_d2, *r.bound_udg * r.opt);
  return c;
}

std::string BoundCheck::describe() const {
  std::string out;
  auto add = [&out](bool ok, const char* name) {
    if (ok) return;
    if (!out.empty()) out += ';';
    out += name;
  };
  add(phase1_ok, "phase1");
  add(connector_ok, "connector");
  add(total_ok, "total");
  add(udg_ok, "udg");
  return out;
}

}  // namespace cdsopt
