#pragma once

#include <cstdint>
#include <vector>

#include "cdsopt/graph.hpp"

namespace cdsopt {

struct CostRange {
  double lo = 1.0;
  double hi = 1.0;
};

/// Random spanning tree over a shuffled node order, then every remaining pair
/// independently with probability `edge_prob`. Costs uniform in [lo, hi].
Instance gen_random_connected(NodeId n, double edge_prob, CostRange costs,
                              std::uint64_t seed, int m = 1);

inline constexpr int kUdgRetryBudget = 10000;

/// Uniform points in [0, side]^2, resampled until the unit-disk graph is
/// connected. Throws GraphError(GenerationFailed) when the budget runs out.
Instance gen_udg(NodeId n, double side, CostRange costs, std::uint64_t seed, int m = 1,
                 int retry_budget = kUdgRetryBudget);

/// Adversarial family for pairwise connectors: a top node t joined to a
/// cheap hub u and to expensive u_1..u_d; each u_i - v_i - b_i chain hangs
/// below, and every v_i also touches u. {t, b_1..b_d} is a dominating set
/// whose d+1 components a single star {u, v_1..v_d} joins.
struct Fig1Instance {
  Instance instance;
  NodeSet designated;  // {t, b_1..b_d}
  NodeId top = 0;
  NodeId hub = 1;
  std::vector<NodeId> upper;   // u_i, cost 1
  std::vector<NodeId> middle;  // v_i, cost eps
  std::vector<NodeId> bottom;  // b_i, cost 1
};

Fig1Instance gen_fig1(int d, double eps);

}  // namespace cdsopt
