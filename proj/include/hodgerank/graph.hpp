#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace hodgerank {

/// Undirected simple graph with a fixed, lexicographically sorted edge list.
/// Edge indices are positions in `edges` and are shared with the edge set of
/// the simplicial complex the graph was derived from.
struct Graph {
  int n = 0;
  std::vector<std::array<int, 2>> edges;  // each {u, v} with u < v, sorted
  std::vector<std::vector<int>> adj;      // sorted neighbor lists
  std::vector<std::int64_t> labels;       // external node ids; empty = identity

  static Graph from_edges(int node_count, std::vector<std::array<int, 2>> edge_list);

  int edge_count() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }

  /// Index of edge {u, v} in `edges`, or -1 if absent.
  int edge_id(int u, int v) const;
  bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }

  std::int64_t label(int v) const {
    return labels.empty() ? static_cast<std::int64_t>(v) : labels[v];
  }

  /// |N(u) ∩ N(v)| via merge over the sorted adjacency lists.
  int common_neighbors(int u, int v) const;
};

/// Number of connected components, counting isolated vertices.
int connected_components(const Graph& g);

}  // namespace hodgerank
