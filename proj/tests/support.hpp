#pragma once

// Test-only oracles. Everything here recomputes from scratch with BFS or
// exhaustive enumeration and shares no code path with the solver beyond
// the graph container itself.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "cdsopt/graph.hpp"

namespace cdsopt::testing {

inline int bfs_components(const WeightedGraph& g, const std::vector<bool>& in) {
  const NodeId n = g.node_count();
  std::vector<bool> seen(n, false);
  int count = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (!in[s] || seen[s]) continue;
    ++count;
    std::deque<NodeId> q{s};
    seen[s] = true;
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop_front();
      for (NodeId v : g.neighbors(u)) {
        if (in[v] && !seen[v]) {
          seen[v] = true;
          q.push_back(v);
        }
      }
    }
  }
  return count;
}

inline std::vector<bool> mask_of(NodeId n, const std::vector<NodeId>& nodes) {
  std::vector<bool> m(n, false);
  for (NodeId u : nodes) m[u] = true;
  return m;
}

inline std::int64_t brute_q(const WeightedGraph& g, int m, const std::vector<bool>& in) {
  std::int64_t total = static_cast<std::int64_t>(m) * g.node_count();
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (in[u]) continue;
    int k = 0;
    for (NodeId v : g.neighbors(u)) k += in[v];
    total -= std::max(m - k, 0);
  }
  return total;
}

inline bool brute_is_mds(const WeightedGraph& g, int m, const std::vector<bool>& in) {
  return brute_q(g, m, in) == static_cast<std::int64_t>(m) * g.node_count();
}

/// Capped merge potential by replaying the star one node at a time and
/// counting components from scratch after every step.
inline int brute_p_prime(const WeightedGraph& g, std::vector<bool> in, NodeId center,
                         const std::vector<NodeId>& leaves) {
  int before = bfs_components(g, in);
  in[center] = true;
  int after = bfs_components(g, in);
  int value = before - after;
  for (NodeId v : leaves) {
    before = after;
    in[v] = true;
    after = bfs_components(g, in);
    value += std::min(1, before - after);
  }
  return value;
}

struct BruteStar {
  NodeId center = -1;
  std::vector<NodeId> leaves;
  int p_prime = 0;
  double cost = 0.0;
  double efficiency() const { return p_prime / cost; }
};

/// Best star at `center` over every subset of its free neighbors, leaves
/// evaluated in (cost, id) order. nullopt when no subset has p' >= 1.
inline std::optional<BruteStar> brute_best_star_at(const WeightedGraph& g, const std::vector<bool>& in,
                                                    NodeId center) {
  std::vector<NodeId> free;
  for (NodeId v : g.neighbors(center)) {
    if (!in[v]) free.push_back(v);
  }
  std::sort(free.begin(), free.end(), [&](NodeId a, NodeId b) {
    return g.cost(a) != g.cost(b) ? g.cost(a) < g.cost(b) : a < b;
  });
  std::optional<BruteStar> best;
  for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
    BruteStar s{center, {}, 0, g.cost(center)};
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (mask & (1u << i)) {
        s.leaves.push_back(free[i]);
        s.cost += g.cost(free[i]);
      }
    }
    s.p_prime = brute_p_prime(g, in, center, s.leaves);
    if (s.p_prime < 1) continue;
    if (!best || s.efficiency() > best->efficiency()) best = s;
  }
  return best;
}

/// Full subset enumeration; returns the min cost over sets that are m-fold
/// dominating (and connected when requested), or nullopt.
inline std::optional<double> brute_opt(const WeightedGraph& g, int m, bool connected) {
  const NodeId n = g.node_count();
  std::optional<double> best;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<bool> in(n);
    double cost = 0.0;
    for (NodeId u = 0; u < n; ++u) {
      in[u] = (mask >> u) & 1u;
      if (in[u]) cost += g.cost(u);
    }
    if (!brute_is_mds(g, m, in)) continue;
    if (connected && bfs_components(g, in) != 1) continue;
    if (!best || cost < *best) best = cost;
  }
  return best;
}

/// Hop distance between the two closest components of G[D] (multi-source BFS
/// from each component in turn); nullopt when G[D] has fewer than two.
inline std::optional<int> nearest_component_gap(const WeightedGraph& g, const std::vector<bool>& in) {
  const NodeId n = g.node_count();
  std::vector<int> label(n, -1);
  int comps = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (!in[s] || label[s] != -1) continue;
    std::deque<NodeId> q{s};
    label[s] = comps;
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop_front();
      for (NodeId v : g.neighbors(u)) {
        if (in[v] && label[v] == -1) {
          label[v] = comps;
          q.push_back(v);
        }
      }
    }
    ++comps;
  }
  if (comps < 2) return std::nullopt;
  int best = std::numeric_limits<int>::max();
  for (int c = 0; c < comps; ++c) {
    std::vector<int> dist(n, -1);
    std::deque<NodeId> q;
    for (NodeId u = 0; u < n; ++u) {
      if (label[u] == c) {
        dist[u] = 0;
        q.push_back(u);
      }
    }
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop_front();
      if (label[u] != -1 && label[u] != c) {
        best = std::min(best, dist[u]);
        continue;
      }
      for (NodeId v : g.neighbors(u)) {
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          q.push_back(v);
        }
      }
    }
  }
  return best;
}

/// Random subset, then random free nodes added until every node is
/// dominated at least once.
inline std::vector<NodeId> random_dominating_set(const WeightedGraph& g, std::mt19937_64& rng, double keep = 0.3) {
  const NodeId n = g.node_count();
  std::bernoulli_distribution coin(keep);
  std::vector<bool> in(n, false);
  for (NodeId u = 0; u < n; ++u) in[u] = coin(rng);
  auto undominated = [&] {
    std::vector<NodeId> out;
    for (NodeId u = 0; u < n; ++u) {
      if (in[u]) continue;
      bool hit = false;
      for (NodeId v : g.neighbors(u)) hit = hit || in[v];
      if (!hit) out.push_back(u);
    }
    return out;
  };
  for (auto open = undominated(); !open.empty(); open = undominated()) {
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    const NodeId u = open[pick(rng)];
    // Either the node itself or one of its neighbors.
    std::uniform_int_distribution<std::size_t> which(0, g.degree(u));
    const std::size_t k = which(rng);
    in[k == g.degree(u) ? u : g.neighbors(u)[k]] = true;
  }
  std::vector<NodeId> out;
  for (NodeId u = 0; u < n; ++u) {
    if (in[u]) out.push_back(u);
  }
  return out;
}

inline bool valid_graph(const WeightedGraph& g) {
  const NodeId n = g.node_count();
  std::size_t degree_sum = 0;
  for (NodeId u = 0; u < n; ++u) {
    const auto& adj = g.neighbors(u);
    degree_sum += adj.size();
    if (!(g.cost(u) > 0.0)) return false;
    for (std::size_t i = 0; i < adj.size(); ++i) {
      if (adj[i] == u || adj[i] < 0 || adj[i] >= n) return false;
      if (i > 0 && adj[i - 1] >= adj[i]) return false;
      const auto& back = g.neighbors(adj[i]);
      if (std::find(back.begin(), back.end(), u) == back.end()) return false;
    }
  }
  if (degree_sum != 2 * g.edge_count()) return false;
  if (bfs_components(g, std::vector<bool>(n, true)) != 1) return false;
  if (g.coords()) {
    const auto& pts = *g.coords();
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        const double dx = pts[u].x - pts[v].x, dy = pts[u].y - pts[v].y;
        const bool near = std::sqrt(dx * dx + dy * dy) <= 1.0;
        const auto& adj = g.neighbors(u);
        if (near != std::binary_search(adj.begin(), adj.end(), v)) return false;
      }
    }
  }
  return true;
}

}  // namespace cdsopt::testing
