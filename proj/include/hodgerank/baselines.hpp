#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "hodgerank/complex.hpp"
#include "hodgerank/epr.hpp"
#include "hodgerank/graph.hpp"

namespace hodgerank {

/// Per-edge feature matrix with named columns, rows indexed like the edge
/// list of the complex the table was built from.
struct FeatureTable {
  std::vector<std::string> columns;
  Eigen::MatrixXd values;  // edges x columns

  int column_index(const std::string& name) const;
};

/// Number of common neighbors of the endpoints, per edge.
Eigen::VectorXd embeddedness(const Graph& g);

/// Columns degree_sum, overlap, clustering_sum. Overlap is the Jaccard-style
/// ratio |N(u) cap N(v)| / |N(u) cup N(v) minus {u, v}| with 0/0 = 0;
/// clustering of a degree-<=1 node is 0.
Eigen::MatrixXd local_baseline(const Graph& g);

/// Burt's constraint of the edge, symmetrized over both directions, with
/// uniform investment p_ij = 1/deg(i).
Eigen::VectorXd network_constraint(const Graph& g);

/// Shortest-path edge betweenness (Brandes accumulation over all sources),
/// normalized by n(n-1).
Eigen::VectorXd edge_betweenness(const Graph& g);

/// Line graph: one vertex per edge of g, adjacent when edges share an
/// endpoint. Vertex i of the line graph is edge i of g.
Graph line_graph(const Graph& g);

/// Columns node_pr_mean, line_pr, node_ppr_mean, line_ppr: mean endpoint
/// PageRank, line-graph PageRank of the edge, mean Euclidean norm of the
/// endpoint-personalized PageRank vectors, and the norm of the line-graph
/// PageRank personalized at the edge.
Eigen::MatrixXd node_pagerank_features(const Graph& g, double alpha = 0.85,
                                       int threads = 0);

/// Names accepted by build_feature_table.
const std::vector<std::string>& known_feature_sets();

/// Assembles the named feature sets in the order given. Unknown or repeated
/// names raise std::invalid_argument. Edge-PageRank based sets honor `cfg`.
FeatureTable build_feature_table(const SimplicialComplex& c,
                                 const std::vector<std::string>& sets,
                                 const EprConfig& cfg = {});

}  // namespace hodgerank
