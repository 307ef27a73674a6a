#pragma once

#include <cstdint>
#include <vector>

#include "cdsopt/graph.hpp"

namespace cdsopt {

/// Residual m-fold domination requirement of a growing node set C.
///
/// deficit(u) is 0 for u in C and max(m - |N_C(u)|, 0) otherwise; the
/// potential q(C) = m*n - sum of deficits. Adding a node is O(deg).
class DeficitState {
 public:
  DeficitState(const WeightedGraph& graph, int m);

  bool in_set(NodeId u) const { return in_set_[u]; }
  int neighbor_count_in_set(NodeId u) const { return neighbors_in_set_[u]; }
  int deficit(NodeId u) const { return deficit_[u]; }
  std::int64_t q_total() const noexcept { return q_total_; }
  std::int64_t q_max() const noexcept { return static_cast<std::int64_t>(m_) * graph_->node_count(); }
  bool is_m_dominating() const noexcept { return q_total_ == q_max(); }

  /// q(C + u) - q(C). Throws std::invalid_argument if u is already in C.
  std::int64_t marginal_gain(NodeId u) const;

  void add(NodeId u);

 private:
  const WeightedGraph* graph_;
  int m_;
  std::vector<bool> in_set_;
  std::vector<int> neighbors_in_set_;
  std::vector<int> deficit_;
  std::int64_t q_total_ = 0;
};

/// From-scratch evaluation of q(C).
std::int64_t q_value(const Instance& inst, const NodeSet& nodes);

struct GreedyStep {
  NodeId node = -1;
  std::int64_t gain = 0;
  double ratio = 0.0;  // gain / cost(node)
  double running_cost = 0.0;
  std::int64_t q_after = 0;
};

struct GreedyTrace {
  std::vector<GreedyStep> steps;
};

struct Phase1Result {
  NodeSet d1;
  GreedyTrace trace;
};

/// Greedy m-fold dominating set: repeatedly add the node maximizing
/// gain/cost until no node has positive gain. Ties prefer the larger gain,
/// then the smaller id.
Phase1Result run_phase1(const Instance& inst);

}  // namespace cdsopt
