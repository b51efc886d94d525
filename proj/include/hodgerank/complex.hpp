#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hodgerank/graph.hpp"

namespace hodgerank {

/// Simplicial complex of dimension at most two.
///
/// Nodes carry external integer labels and are numbered internally in order
/// of first appearance in the input. Edges and triangles are stored as
/// internally-indexed simplices, each sorted ascending, with both lists in
/// lexicographic order. The complex is downward closed: every face of every
/// stored simplex is stored as well.
struct SimplicialComplex {
  std::vector<std::int64_t> node_labels;       // internal id -> external label
  std::vector<std::array<int, 2>> edges;       // {u, v}, u < v, sorted
  std::vector<std::array<int, 3>> triangles;   // {u, v, w}, u < v < w, sorted

  int node_count() const { return static_cast<int>(node_labels.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int triangle_count() const { return static_cast<int>(triangles.size()); }

  /// Index of an edge/triangle in its list, or -1 if absent. Arguments are
  /// internal node ids in any order.
  int edge_id(int u, int v) const;
  int triangle_id(int u, int v, int w) const;

  /// Internal id for an external label, or -1 if the label is unknown.
  int node_id(std::int64_t label) const;

  bool operator==(const SimplicialComplex& other) const = default;
};

/// Builds the complex generated by a list of interactions. Every pair inside
/// an interaction becomes an edge; with max_dim == 2, every triple becomes a
/// triangle. Interactions with fewer than two distinct nodes are rejected.
SimplicialComplex build_complex(const std::vector<std::vector<std::int64_t>>& interactions,
                                int max_dim = 2);

/// Copy of `c` whose triangle set is all graph triangles (every triple of
/// pairwise-connected nodes), discarding the original triangle list.
SimplicialComplex fill_triangles(const SimplicialComplex& c);

/// One-skeleton of the complex; edge indices coincide with c.edges.
Graph underlying_graph(const SimplicialComplex& c);

/// Plain-text serialization: a `nodes=<n> edges=<e> triangles=<t>` header
/// followed by one simplex per line (sorted external ids): first nodes in
/// internal order, then edges, then triangles. A written complex reads back
/// equal, and serializing again is byte-identical.
void write_complex(std::ostream& out, const SimplicialComplex& c);
SimplicialComplex read_complex(std::istream& in);

}  // namespace hodgerank
