#include "cdsopt/connector.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cdsopt {

namespace {

void check_dominating(const Instance& inst, const NodeSet& d1) {
  if (!is_dominating(inst.graph, d1)) throw std::invalid_argument("initial set is not a dominating set");
}

bool contains(const std::vector<NodeId>& sorted, NodeId x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

void insert_sorted(std::vector<NodeId>& sorted, NodeId x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  if (it == sorted.end() || *it != x) sorted.insert(it, x);
}

template <typename Pick>
ConnectReport connect(const Instance& inst, const NodeSet& d1, Pick pick) {
  ComponentIndex idx(inst.graph, normalize_node_set(inst.graph.node_count(), d1));
  ConnectReport report;
  report.component_trace.push_back(idx.component_count());
  while (idx.component_count() > 1) {
    std::optional<StarCandidate> star = pick(idx);
    if (!star) throw std::logic_error("no connector with positive gain although G[D] is disconnected");
    idx.insert(star->center);
    for (NodeId v : star->leaves) idx.insert(v);
    for (NodeId v : star->nodes()) report.d2.push_back(v);
    report.component_trace.push_back(idx.component_count());
    report.stars.push_back(std::move(*star));
  }
  std::sort(report.d2.begin(), report.d2.end());
  return report;
}

}  // namespace

NodeSet StarCandidate::nodes() const {
  NodeSet out = leaves;
  out.push_back(center);
  std::sort(out.begin(), out.end());
  return out;
}

bool preferred(const StarCandidate& a, const StarCandidate& b) {
  const double lhs = static_cast<double>(a.p_prime) * b.total_cost;
  const double rhs = static_cast<double>(b.p_prime) * a.total_cost;
  if (lhs != rhs) return lhs > rhs;
  if (a.p_prime != b.p_prime) return a.p_prime > b.p_prime;
  if (a.center != b.center) return a.center < b.center;
  return a.leaves.size() < b.leaves.size();
}

bool is_dominating(const WeightedGraph& g, const NodeSet& nodes) {
  const auto mask = membership_mask(g.node_count(), nodes);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (mask[u]) continue;
    const auto& adj = g.neighbors(u);
    if (std::none_of(adj.begin(), adj.end(), [&](NodeId v) { return mask[v]; })) return false;
  }
  return true;
}

int p_prime(const ComponentIndex& idx, NodeId center, std::span<const NodeId> leaves) {
  const WeightedGraph& g = idx.graph();
  if (idx.contains(center)) throw std::invalid_argument("star center " + std::to_string(center) + " is in D");
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const NodeId v = leaves[i];
    if (idx.contains(v)) throw std::invalid_argument("star leaf " + std::to_string(v) + " is in D");
    if (!g.adjacent(center, v)) throw std::invalid_argument("leaf " + std::to_string(v) + " not adjacent to center");
    if (i > 0 && g.cost(leaves[i - 1]) > g.cost(v)) throw std::invalid_argument("leaves not in nondecreasing cost order");
  }

  std::vector<NodeId> merged = idx.component_neighbors(center);
  int value = static_cast<int>(merged.size()) - 1;
  for (NodeId v : leaves) {
    bool fresh = false;
    for (NodeId comp : idx.component_neighbors(v)) {
      if (!contains(merged, comp)) {
        fresh = true;
        insert_sorted(merged, comp);
      }
    }
    if (fresh) ++value;
  }
  return value;
}

std::optional<StarCandidate> best_star_at(const ComponentIndex& idx, NodeId u) {
  const WeightedGraph& g = idx.graph();
  std::vector<NodeId> covered = idx.component_neighbors(u);

  struct Eligible {
    NodeId node;
    NodeId component;
  };
  std::vector<Eligible> eligible;
  for (NodeId v : g.neighbors(u)) {
    if (idx.contains(v)) continue;
    auto comps = idx.component_neighbors(v);
    if (comps.size() == 1) eligible.push_back({v, comps.front()});
  }
  std::sort(eligible.begin(), eligible.end(), [&](const Eligible& a, const Eligible& b) {
    if (g.cost(a.node) != g.cost(b.node)) return g.cost(a.node) < g.cost(b.node);
    return a.node < b.node;
  });

  std::vector<NodeId> kept;
  for (const Eligible& e : eligible) {
    if (contains(covered, e.component)) continue;
    insert_sorted(covered, e.component);
    kept.push_back(e.node);
  }

  const int base = static_cast<int>(idx.component_neighbors(u).size()) - 1;
  std::optional<StarCandidate> best;
  StarCandidate current{u, {}, base, g.cost(u)};
  for (std::size_t len = 0;; ++len) {
    if (current.p_prime >= 1 && (!best || preferred(current, *best))) best = current;
    if (len == kept.size()) break;
    current.leaves.push_back(kept[len]);
    current.p_prime += 1;
    current.total_cost += g.cost(kept[len]);
  }
  return best;
}

std::optional<StarCandidate> best_star(const ComponentIndex& idx) {
  std::optional<StarCandidate> best;
  for (NodeId u = 0; u < idx.graph().node_count(); ++u) {
    if (idx.contains(u)) continue;
    auto star = best_star_at(idx, u);
    if (star && (!best || preferred(*star, *best))) best = std::move(star);
  }
  return best;
}

ConnectReport run_phase2(const Instance& inst, const NodeSet& d1) {
  check_dominating(inst, d1);
  return connect(inst, d1, [](const ComponentIndex& idx) { return best_star(idx); });
}

ConnectReport run_pairwise_baseline(const Instance& inst, const NodeSet& d1) {
  check_dominating(inst, d1);
  const WeightedGraph& g = inst.graph;
  return connect(inst, d1, [&g](const ComponentIndex& idx) {
    std::optional<StarCandidate> best;
    auto offer = [&best](StarCandidate cand) {
      if (cand.p_prime >= 1 && (!best || preferred(cand, *best))) best = std::move(cand);
    };
    for (NodeId u = 0; u < g.node_count(); ++u) {
      if (idx.contains(u)) continue;
      const auto nc_u = idx.component_neighbors(u);
      offer({u, {}, static_cast<int>(nc_u.size()) - 1, g.cost(u)});
      for (NodeId v : g.neighbors(u)) {
        if (v < u || idx.contains(v)) continue;
        auto merged = nc_u;
        for (NodeId comp : idx.component_neighbors(v)) insert_sorted(merged, comp);
        offer({u, {v}, static_cast<int>(merged.size()) - 1, g.cost(u) + g.cost(v)});
      }
    }
    return best;
  });
}

}  // namespace cdsopt
