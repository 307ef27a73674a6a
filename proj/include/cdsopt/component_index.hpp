#pragma once

#include <vector>

#include "cdsopt/graph.hpp"

namespace cdsopt {

/// Connected components of G[D] for an insertion-only node set D.
///
/// Union-find over the members, union by size. Component ids are the
/// current union-find roots and are only stable until the next insertion.
class ComponentIndex {
 public:
  explicit ComponentIndex(const WeightedGraph& graph);
  ComponentIndex(const WeightedGraph& graph, const NodeSet& initial);

  const WeightedGraph& graph() const noexcept { return *graph_; }

  bool contains(NodeId u) const { return member_[u]; }
  std::size_t size() const noexcept { return size_; }
  /// p(D); zero for the empty set.
  int component_count() const noexcept { return components_; }

  /// Throws std::invalid_argument if u is not a member.
  NodeId component_of(NodeId u) const;

  /// NC_D(u): sorted ids of the components of G[D] adjacent to u.
  /// Throws std::invalid_argument if u is a member.
  std::vector<NodeId> component_neighbors(NodeId u) const;

  /// Throws std::invalid_argument if u is already a member.
  void insert(NodeId u);
  void insert(const NodeSet& nodes);

  NodeSet members() const;

 private:
  NodeId find(NodeId u) const;
  NodeId find_compress(NodeId u);

  const WeightedGraph* graph_;
  std::vector<bool> member_;
  std::vector<NodeId> parent_;
  std::vector<int> set_size_;
  std::size_t size_ = 0;
  int components_ = 0;
};

}  // namespace cdsopt
