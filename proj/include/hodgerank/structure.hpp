#pragma once

#include <string>
#include <vector>

#include "hodgerank/graph.hpp"

namespace hodgerank {

/// Structural role of an edge in the one-skeleton:
/// - global: a cut edge, removal disconnects its endpoints;
/// - local: endpoints share no common neighbor, yet the edge is not a cut
///   edge (tie range at least 3);
/// - neither: endpoints share a common neighbor (tie range 2).
enum class BridgeClass { global, local, neither };

const char* to_string(BridgeClass c);
BridgeClass parse_bridge_class(const std::string& name);

struct BridgeLabels {
  std::vector<BridgeClass> label;  // per edge
  std::vector<int> tie_range;      // per edge; -1 encodes infinity
};

/// Sorted indices of all cut edges (Tarjan low-link search).
std::vector<int> global_bridges(const Graph& g);

/// Length of the shortest alternative path between the endpoints of
/// `edge_index` when the edge itself is removed; -1 if none exists.
int tie_range(const Graph& g, int edge_index);

/// Classifies every edge and reports its tie range.
BridgeLabels classify_edges(const Graph& g);

}  // namespace hodgerank
