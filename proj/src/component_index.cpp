#include "cdsopt/component_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cdsopt {

ComponentIndex::ComponentIndex(const WeightedGraph& graph)
    : graph_(&graph),
      member_(graph.node_count(), false),
      parent_(graph.node_count()),
      set_size_(graph.node_count(), 1) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

ComponentIndex::ComponentIndex(const WeightedGraph& graph, const NodeSet& initial) : ComponentIndex(graph) {
  insert(initial);
}

NodeId ComponentIndex::find(NodeId u) const {
  while (parent_[u] != u) u = parent_[u];
  return u;
}

NodeId ComponentIndex::find_compress(NodeId u) {
  NodeId root = find(u);
  while (parent_[u] != root) {
    NodeId next = parent_[u];
    parent_[u] = root;
    u = next;
  }
  return root;
}

NodeId ComponentIndex::component_of(NodeId u) const {
  if (!member_[u]) throw std::invalid_argument("node " + std::to_string(u) + " is not in D");
  return find(u);
}

std::vector<NodeId> ComponentIndex::component_neighbors(NodeId u) const {
  if (member_[u]) throw std::invalid_argument("node " + std::to_string(u) + " is already in D");
  std::vector<NodeId> out;
  for (NodeId v : graph_->neighbors(u)) {
    if (member_[v]) out.push_back(find(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void ComponentIndex::insert(NodeId u) {
  if (member_[u]) throw std::invalid_argument("node " + std::to_string(u) + " is already in D");
  member_[u] = true;
  ++size_;
  ++components_;
  for (NodeId v : graph_->neighbors(u)) {
    if (!member_[v]) continue;
    NodeId a = find_compress(u);
    NodeId b = find_compress(v);
    if (a == b) continue;
    if (set_size_[a] < set_size_[b]) std::swap(a, b);
    parent_[b] = a;
    set_size_[a] += set_size_[b];
    --components_;
  }
}

void ComponentIndex::insert(const NodeSet& nodes) {
  for (NodeId u : nodes) insert(u);
}

NodeSet ComponentIndex::members() const {
  NodeSet out;
  out.reserve(size_);
  for (NodeId u = 0; u < graph_->node_count(); ++u) {
    if (member_[u]) out.push_back(u);
  }
  return out;
}

}  // namespace cdsopt
