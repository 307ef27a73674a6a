#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cdsopt/component_index.hpp"
#include "cdsopt/graph.hpp"

namespace cdsopt {

/// A star outside D: a center plus leaves adjacent to it, leaves in
/// nondecreasing (cost, id) order.
///
/// `p_prime` is the capped merge count of the star against D. Candidates
/// from the pairwise baseline store the exact component reduction instead.
struct StarCandidate {
  NodeId center = -1;
  std::vector<NodeId> leaves;
  int p_prime = 0;
  double total_cost = 0.0;

  double efficiency() const { return static_cast<double>(p_prime) / total_cost; }
  /// center followed by leaves, sorted.
  NodeSet nodes() const;
};

/// Strict "a is preferred over b": higher p'/cost (cross-multiplied), then
/// larger p', then smaller center id, then fewer leaves.
bool preferred(const StarCandidate& a, const StarCandidate& b);

struct ConnectReport {
  std::vector<StarCandidate> stars;
  NodeSet d2;
  /// p(D) before the first star and after every star.
  std::vector<int> component_trace;
};

/// Potential of the star (center, leaves) with respect to D.
///
/// Adding the center merges its component neighbors into one component;
/// then each leaf, in the given order, counts 1 if it touches at least one
/// component not yet merged. Leaves must be adjacent to the center, outside
/// D, and in nondecreasing cost order; violations throw
/// std::invalid_argument. May be negative if the center has no component
/// neighbor (only possible when D is not dominating).
int p_prime(const ComponentIndex& idx, NodeId center, std::span<const NodeId> leaves);

/// Most efficient structured star centered at u.
///
/// Only neighbors with exactly one component neighbor are eligible. They
/// are scanned by (cost, id); a leaf is kept only when its component is not
/// already adjacent to the center or to an earlier kept leaf. The best of
/// the prefixes {u}, {u, l1}, ..., {u, l1..lt} with p' >= 1 is returned.
/// Throws std::invalid_argument if u is in D.
std::optional<StarCandidate> best_star_at(const ComponentIndex& idx, NodeId u);

/// Preferred star over all centers outside D, or nullopt when none has p' >= 1.
std::optional<StarCandidate> best_star(const ComponentIndex& idx);

/// Star-greedy connection of a dominating set. Throws std::invalid_argument
/// if d1 does not dominate the graph.
ConnectReport run_phase2(const Instance& inst, const NodeSet& d1);

/// Greedy over singletons and adjacent pairs by component reduction per
/// unit cost. Comparison baseline only.
ConnectReport run_pairwise_baseline(const Instance& inst, const NodeSet& d1);

/// True iff every node outside `nodes` has a neighbor inside.
bool is_dominating(const WeightedGraph& g, const NodeSet& nodes);

}  // namespace cdsopt
