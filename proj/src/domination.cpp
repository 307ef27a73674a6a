#include "cdsopt/domination.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cdsopt {

DeficitState::DeficitState(const WeightedGraph& graph, int m)
    : graph_(&graph),
      m_(m),
      in_set_(graph.node_count(), false),
      neighbors_in_set_(graph.node_count(), 0),
      deficit_(graph.node_count(), m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
}

std::int64_t DeficitState::marginal_gain(NodeId u) const {
  if (in_set_[u]) throw std::invalid_argument("node " + std::to_string(u) + " already in set");
  std::int64_t gain = deficit_[u];
  for (NodeId v : graph_->neighbors(u)) {
    if (!in_set_[v] && deficit_[v] > 0) ++gain;
  }
  return gain;
}

void DeficitState::add(NodeId u) {
  if (in_set_[u]) throw std::invalid_argument("node " + std::to_string(u) + " already in set");
  in_set_[u] = true;
  q_total_ += deficit_[u];
  deficit_[u] = 0;
  for (NodeId v : graph_->neighbors(u)) {
    ++neighbors_in_set_[v];
    if (!in_set_[v] && deficit_[v] > 0) {
      --deficit_[v];
      ++q_total_;
    }
  }
}

std::int64_t q_value(const Instance& inst, const NodeSet& nodes) {
  const WeightedGraph& g = inst.graph;
  const auto mask = membership_mask(g.node_count(), nodes);
  std::int64_t residual = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (mask[u]) continue;
    int dominators = 0;
    for (NodeId v : g.neighbors(u)) dominators += mask[v] ? 1 : 0;
    residual += std::max(inst.m - dominators, 0);
  }
  return static_cast<std::int64_t>(inst.m) * g.node_count() - residual;
}

Phase1Result run_phase1(const Instance& inst) {
  const WeightedGraph& g = inst.graph;
  DeficitState state(g, inst.m);
  Phase1Result result;
  double running = 0.0;

  while (true) {
    NodeId best = -1;
    std::int64_t best_gain = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
      if (state.in_set(u)) continue;
      const std::int64_t gain = state.marginal_gain(u);
      if (gain <= 0) continue;
      if (best < 0) {
        best = u;
        best_gain = gain;
        continue;
      }
      // gain/c(u) vs best_gain/c(best), cross-multiplied.
      const double lhs = static_cast<double>(gain) * g.cost(best);
      const double rhs = static_cast<double>(best_gain) * g.cost(u);
      if (lhs > rhs || (lhs == rhs && gain > best_gain)) {
        best = u;
        best_gain = gain;
      }
    }
    if (best < 0) break;

    state.add(best);
    running += g.cost(best);
    result.trace.steps.push_back(
        {best, best_gain, static_cast<double>(best_gain) / g.cost(best), running, state.q_total()});
    result.d1.push_back(best);
  }
  std::sort(result.d1.begin(), result.d1.end());
  return result;
}

}  // namespace cdsopt
