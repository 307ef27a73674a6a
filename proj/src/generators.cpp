#include "cdsopt/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "cdsopt/instance_io.hpp"

namespace cdsopt {

namespace {

void check_common(NodeId n, CostRange costs, int m) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (!(costs.lo > 0.0) || !(costs.lo <= costs.hi)) throw std::invalid_argument("cost range must satisfy 0 < lo <= hi");
  if (m < 1) throw std::invalid_argument("m must be at least 1");
}

std::vector<double> sample_costs(NodeId n, CostRange range, std::mt19937_64& rng) {
  std::vector<double> costs(n, range.lo);
  if (range.lo < range.hi) {
    std::uniform_real_distribution<double> dist(range.lo, range.hi);
    for (auto& c : costs) c = dist(rng);
  }
  return costs;
}

}  // namespace

Instance gen_random_connected(NodeId n, double edge_prob, CostRange costs, std::uint64_t seed, int m) {
  check_common(n, costs, m);
  if (!(edge_prob > 0.0 && edge_prob <= 1.0)) throw std::invalid_argument("edge probability must lie in (0, 1]");

  std::mt19937_64 rng(seed);
  auto node_costs = sample_costs(n, costs, rng);

  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 1; i < n; ++i) {
    std::uniform_int_distribution<NodeId> pick(0, i - 1);
    NodeId a = order[i], b = order[pick(rng)];
    if (a > b) std::swap(a, b);
    present[a][b] = true;
    edges.emplace_back(a, b);
  }
  std::bernoulli_distribution coin(edge_prob);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (!present[u][v] && coin(rng)) edges.emplace_back(u, v);
    }
  }
  std::sort(edges.begin(), edges.end());

  std::string label = "random_n" + std::to_string(n) + "_p" + format_double(edge_prob) + "_s" +
                      std::to_string(seed) + "_m" + std::to_string(m);
  return Instance{WeightedGraph::build(std::move(node_costs), std::move(edges)), m, std::move(label)};
}

Instance gen_udg(NodeId n, double side, CostRange costs, std::uint64_t seed, int m, int retry_budget) {
  check_common(n, costs, m);
  if (!(side > 0.0)) throw std::invalid_argument("side must be positive");

  std::mt19937_64 rng(seed);
  auto node_costs = sample_costs(n, costs, rng);
  std::uniform_real_distribution<double> coord(0.0, side);

  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    std::vector<Point> pts(n);
    for (auto& p : pts) {
      p.x = coord(rng);
      p.y = coord(rng);
    }
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (within_unit_disk(pts[u], pts[v])) edges.emplace_back(u, v);
      }
    }
    try {
      std::string label = "udg_n" + std::to_string(n) + "_side" + format_double(side) + "_s" +
                          std::to_string(seed) + "_m" + std::to_string(m);
      return Instance{WeightedGraph::build(node_costs, std::move(edges), std::move(pts)), m, std::move(label)};
    } catch (const GraphError& e) {
      if (e.kind() != GraphErrorKind::Disconnected) throw;
    }
  }
  throw GraphError(GraphErrorKind::GenerationFailed, "could not generate connected UDG");
}

Fig1Instance gen_fig1(int d, double eps) {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");

  const NodeId n = 3 * d + 2;
  const NodeId top = 0;
  const NodeId hub = 1;
  std::vector<NodeId> upper, middle, bottom;
  std::vector<double> costs(n, 1.0);
  costs[hub] = 1.0 + eps;

  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.emplace_back(top, hub);
  for (int i = 0; i < d; ++i) {
    const NodeId ui = 2 + i;
    const NodeId vi = 2 + d + i;
    const NodeId bi = 2 + 2 * d + i;
    upper.push_back(ui);
    middle.push_back(vi);
    bottom.push_back(bi);
    costs[vi] = eps;
    edges.emplace_back(top, ui);
    edges.emplace_back(hub, vi);
    edges.emplace_back(ui, vi);
    edges.emplace_back(vi, bi);
  }
  std::sort(edges.begin(), edges.end());

  NodeSet designated{top};
  designated.insert(designated.end(), bottom.begin(), bottom.end());
  return Fig1Instance{
      Instance{WeightedGraph::build(std::move(costs), std::move(edges)), 1, "fig1_d" + std::to_string(d)},
      std::move(designated), top, hub, std::move(upper), std::move(middle), std::move(bottom)};
}

}  // namespace cdsopt
