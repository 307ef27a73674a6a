#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cdsopt {

using NodeId = std::int32_t;

/// Sorted, duplicate-free list of node ids.
using NodeSet = std::vector<NodeId>;

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

/// Distinct failure kinds raised while building or reading an instance.
enum class GraphErrorKind {
  MalformedHeader,
  MalformedBody,
  NonPositiveCost,
  SelfLoop,
  DuplicateEdge,
  NodeOutOfRange,
  Disconnected,
  UdgViolation,
  GenerationFailed,
};

const char* to_string(GraphErrorKind kind);

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  GraphErrorKind kind() const noexcept { return kind_; }

 private:
  GraphErrorKind kind_;
};

/// Undirected, simple, connected graph with positive node costs.
///
/// Instances are only obtainable through `build`, which enforces every
/// invariant; afterwards the object is immutable. When coordinates are
/// present the edge set must be exactly the unit-disk graph of the points.
class WeightedGraph {
 public:
  static WeightedGraph build(std::vector<double> costs,
                             std::vector<std::pair<NodeId, NodeId>> edges,
                             std::optional<std::vector<Point>> coords = std::nullopt);

  NodeId node_count() const noexcept { return static_cast<NodeId>(cost_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::vector<NodeId>& neighbors(NodeId u) const { return adjacency_[u]; }
  double cost(NodeId u) const { return cost_[u]; }
  const std::vector<double>& costs() const noexcept { return cost_; }
  const std::optional<std::vector<Point>>& coords() const noexcept { return coords_; }

  std::size_t degree(NodeId u) const { return adjacency_[u].size(); }
  std::size_t max_degree() const noexcept;
  bool adjacent(NodeId u, NodeId v) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  /// Sum of costs over `nodes`, accumulated in the given order.
  double cost_of(const NodeSet& nodes) const;

  bool operator==(const WeightedGraph&) const = default;

 private:
  WeightedGraph() = default;

  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<double> cost_;
  std::optional<std::vector<Point>> coords_;
  std::size_t edge_count_ = 0;
};

struct Instance {
  WeightedGraph graph;
  int m = 1;
  std::string label;

  bool operator==(const Instance&) const = default;
};

/// Euclidean distance threshold for unit-disk adjacency.
inline bool within_unit_disk(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy <= 1.0;
}

/// Label every node of G[members] by connected component (BFS); nodes outside
/// the set get -1. Returns the number of components.
int label_induced_components(const WeightedGraph& g, const std::vector<bool>& members,
                             std::vector<int>& labels);

int count_induced_components(const WeightedGraph& g, const NodeSet& nodes);

std::vector<bool> membership_mask(NodeId n, const NodeSet& nodes);

/// Sort and dedupe; throws std::out_of_range on ids outside [0, n).
NodeSet normalize_node_set(NodeId n, NodeSet nodes);

}  // namespace cdsopt
