#include "cdsopt/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

namespace cdsopt {

const char* to_string(GraphErrorKind kind) {
  switch (kind) {
    case GraphErrorKind::MalformedHeader: return "malformed header";
    case GraphErrorKind::MalformedBody: return "malformed body";
    case GraphErrorKind::NonPositiveCost: return "non-positive cost";
    case GraphErrorKind::SelfLoop: return "self-loop";
    case GraphErrorKind::DuplicateEdge: return "duplicate edge";
    case GraphErrorKind::NodeOutOfRange: return "node out of range";
    case GraphErrorKind::Disconnected: return "disconnected graph";
    case GraphErrorKind::UdgViolation: return "coords violate unit-disk edge rule";
    case GraphErrorKind::GenerationFailed: return "generation failed";
  }
  return "unknown";
}

namespace {

[[noreturn]] void fail(GraphErrorKind kind, const std::string& detail) {
  std::string msg = to_string(kind);
  if (!detail.empty()) msg += ": " + detail;
  throw GraphError(kind, msg);
}

std::string edge_str(NodeId u, NodeId v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

WeightedGraph WeightedGraph::build(std::vector<double> costs,
                                   std::vector<std::pair<NodeId, NodeId>> edges,
                                   std::optional<std::vector<Point>> coords) {
  const auto n = static_cast<NodeId>(costs.size());
  if (n == 0) fail(GraphErrorKind::MalformedHeader, "graph must have at least one node");

  for (NodeId u = 0; u < n; ++u) {
    // Negated test also rejects NaN.
    if (!(costs[u] > 0.0) || !std::isfinite(costs[u]))
      fail(GraphErrorKind::NonPositiveCost, "node " + std::to_string(u));
  }

  WeightedGraph g;
  g.adjacency_.resize(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(GraphErrorKind::NodeOutOfRange, "edge " + edge_str(u, v));
    if (u == v) fail(GraphErrorKind::SelfLoop, "node " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (NodeId u = 0; u < n; ++u) {
    auto& adj = g.adjacency_[u];
    std::sort(adj.begin(), adj.end());
    auto dup = std::adjacent_find(adj.begin(), adj.end());
    if (dup != adj.end()) fail(GraphErrorKind::DuplicateEdge, "edge " + edge_str(std::min(u, *dup), std::max(u, *dup)));
  }
  g.edge_count_ = edges.size();
  g.cost_ = std::move(costs);

  if (coords) {
    if (static_cast<NodeId>(coords->size()) != n)
      fail(GraphErrorKind::MalformedBody, "coords count does not match node count");
    for (const Point& p : *coords) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y))
        fail(GraphErrorKind::MalformedBody, "non-finite coordinate");
    }
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        const bool close = within_unit_disk((*coords)[u], (*coords)[v]);
        if (close != g.adjacent(u, v)) {
          fail(GraphErrorKind::UdgViolation,
               "pair " + edge_str(u, v) + (close ? " within unit distance but not adjacent"
                                                  : " adjacent but farther than unit distance"));
        }
      }
    }
    g.coords_ = std::move(coords);
  }

  std::vector<int> labels;
  if (label_induced_components(g, std::vector<bool>(n, true), labels) != 1)
    fail(GraphErrorKind::Disconnected, "");
  return g;
}

std::size_t WeightedGraph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, adj.size());
  return best;
}

bool WeightedGraph::adjacent(NodeId u, NodeId v) const {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> WeightedGraph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

double WeightedGraph::cost_of(const NodeSet& nodes) const {
  double total = 0.0;
  for (NodeId u : nodes) total += cost_[u];
  return total;
}

int label_induced_components(const WeightedGraph& g, const std::vector<bool>& members,
                             std::vector<int>& labels) {
  const NodeId n = g.node_count();
  labels.assign(n, -1);
  int count = 0;
  std::deque<NodeId> queue;
  for (NodeId s = 0; s < n; ++s) {
    if (!members[s] || labels[s] != -1) continue;
    labels[s] = count;
    queue.push_back(s);
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      for (NodeId v : g.neighbors(u)) {
        if (members[v] && labels[v] == -1) {
          labels[v] = count;
          queue.push_back(v);
        }
      }
    }
    ++count;
  }
  return count;
}

int count_induced_components(const WeightedGraph& g, const NodeSet& nodes) {
  std::vector<int> labels;
  return label_induced_components(g, membership_mask(g.node_count(), nodes), labels);
}

std::vector<bool> membership_mask(NodeId n, const NodeSet& nodes) {
  std::vector<bool> mask(n, false);
  for (NodeId u : nodes) mask[u] = true;
  return mask;
}

NodeSet normalize_node_set(NodeId n, NodeSet nodes) {
  for (NodeId u : nodes) {
    if (u < 0 || u >= n) throw std::out_of_range("node id " + std::to_string(u) + " out of range [0, " + std::to_string(n) + ")");
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

}  // namespace cdsopt
