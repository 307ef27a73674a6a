#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cdsopt/graph.hpp"

namespace cdsopt {

// Text format:
//
//   cds <n> <edge_count> <m>
//   <n costs>
//   [coords
//    <x y> x n]
//   <u v> x edge_count      (0 <= u < v < n)
//
// Lines starting with '#' and blank lines are ignored.

Instance parse_instance(std::string_view text, std::string label = {});

/// Canonical text: sorted edges, every float printed with 17 significant digits.
std::string serialize_instance(const Instance& inst);

Instance read_instance_file(const std::string& path);

/// Comment directive `# given-ds: <ids...>` that carries a pre-seeded
/// dominating set inside an instance file. Absent directive yields nullopt.
std::optional<NodeSet> extract_given_ds(std::string_view text);

std::string given_ds_directive(const NodeSet& nodes);

/// Whitespace-separated node ids, normalized against n.
NodeSet parse_node_list(std::string_view text, NodeId n);

std::string format_double(double value);

}  // namespace cdsopt
