#pragma once

#include <vector>

#include "hodgerank/graph.hpp"
#include "hodgerank/hodge.hpp"
#include "hodgerank/operators.hpp"

namespace hodgerank {

struct EprConfig {
  double beta = 2.5;    // teleport strength; must exceed 2
  double tol = 1e-10;   // absolute residual on (beta I + l1_norm) pi = (beta-2) x
  int max_iterations = 0;  // 0 = automatic (10 * edges + 100)
  DecompMode mode = DecompMode::weighted;
  double decomp_rel_tol = 1e-12;
  int threads = 0;  // 0 = HODGERANK_THREADS env var, else hardware
};

struct EprResult {
  int seed_edge = -1;
  bool reversed = false;
  Eigen::VectorXd pi;
  HodgeComponents components;
  double total = 0.0;  // Euclidean norm of pi
  int iterations = 0;
  double residual = 0.0;
};

/// Solves the edge PageRank system (beta I + l1_norm) pi = (beta - 2) x for
/// the signed indicator seed x = +-e_{seed_edge}, by conjugate gradients on
/// the similarity-transformed symmetric system, then decomposes pi in
/// cfg.mode. The residual bound cfg.tol applies to the original system.
EprResult personalized_epr(const BoundaryOperators& ops, const LaplacianBundle& bundle,
                           int seed_edge, const EprConfig& cfg, bool reversed = false);

/// Runs exactly k steps of the fixed-point iteration
/// pi <- -(1/beta) l1_norm pi + ((beta - 2)/beta) x starting from zero.
Eigen::VectorXd epr_dynamical(const LaplacianBundle& bundle, int seed_edge,
                              const EprConfig& cfg, int k, bool reversed = false);

struct EprSummary {
  int edge = -1;
  double total = 0.0;
  double gradient_norm = 0.0;
  double curl_norm = 0.0;
  double harmonic_norm = 0.0;
};

/// Per-seed solve + decomposition for every edge, partitioned across
/// workers; the result is independent of the thread count. Solver failures
/// are reported with the smallest offending seed.
std::vector<EprSummary> epr_all_edges(const BoundaryOperators& ops,
                                      const LaplacianBundle& bundle,
                                      const EprConfig& cfg);

/// Node PageRank by power iteration on the column-stochastic walk matrix;
/// nodes without neighbors redistribute uniformly. `preference` must sum to
/// one (nullptr = uniform). Damping alpha in (0, 1).
Eigen::VectorXd node_pagerank(const Graph& g, double alpha = 0.85,
                              const Eigen::VectorXd* preference = nullptr,
                              double tol = 1e-12, int max_iter = 100000);

}  // namespace hodgerank
