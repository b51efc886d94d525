#include "hodgerank/epr.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hodgerank/parallel.hpp"
#include "hodgerank/solvers.hpp"

namespace hodgerank {
namespace {

void check_config(const EprConfig& cfg, Eigen::Index e, int seed_edge) {
  if (!(cfg.beta > 2.0))
    throw std::invalid_argument("edge PageRank requires beta > 2, got " +
                                std::to_string(cfg.beta));
  if (!(cfg.tol > 0.0))
    throw std::invalid_argument("edge PageRank requires a positive tolerance");
  if (seed_edge < 0 || seed_edge >= e)
    throw std::invalid_argument("seed edge " + std::to_string(seed_edge) +
                                " out of range (complex has " + std::to_string(e) +
                                " edges)");
}

}  // namespace

EprResult personalized_epr(const BoundaryOperators& ops, const LaplacianBundle& bundle,
                           int seed_edge, const EprConfig& cfg, bool reversed) {
  const Eigen::Index e = bundle.l1_norm.rows();
  check_config(cfg, e, seed_edge);

  const double beta = cfg.beta;
  const double sign = reversed ? -1.0 : 1.0;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(e);
  x[seed_edge] = sign;

  Eigen::VectorXd d2_sqrt(e);
  for (Eigen::Index i = 0; i < e; ++i) d2_sqrt[i] = std::sqrt(bundle.d2[i]);
  const double d2_sqrt_max = d2_sqrt.maxCoeff();

  // Transformed system (beta I + l1_sym) y = (beta - 2) D2^{-1/2} x with
  // pi = D2^{1/2} y; the warm start is the teleport-only solution.
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(e);
  rhs[seed_edge] = sign * (beta - 2.0) / d2_sqrt[seed_edge];
  Eigen::VectorXd y0 = rhs / beta;

  const auto apply = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
    return beta * v + bundle.l1_sym * v;
  };

  const int max_iter =
      cfg.max_iterations > 0 ? cfg.max_iterations : static_cast<int>(10 * e + 100);

  EprResult out;
  out.seed_edge = seed_edge;
  out.reversed = reversed;

  // A residual r on the transformed system maps to D2^{1/2} r on the
  // original one, so solve to cfg.tol / max(sqrt(d2)) and then confirm on
  // the original system, tightening if rounding ate the margin.
  double target = cfg.tol / d2_sqrt_max;
  Eigen::VectorXd y = std::move(y0);
  int used = 0;
  for (int attempt = 0; attempt < 4; ++attempt) {
    CgResult res = conjugate_gradient(apply, rhs, std::move(y), target, max_iter - used);
    y = std::move(res.x);
    used += res.iterations;
    out.pi = d2_sqrt.asDiagonal() * y;
    out.residual = (beta * out.pi + bundle.l1_norm * out.pi - (beta - 2.0) * x).norm();
    out.iterations = used;
    if (out.residual <= cfg.tol) break;
    if (used >= max_iter || !res.converged) {
      throw std::runtime_error("edge PageRank solve for seed " +
                               std::to_string(seed_edge) +
                               " did not reach tolerance (residual=" +
                               std::to_string(out.residual) + " after " +
                               std::to_string(used) + " iterations)");
    }
    target *= 0.1;
  }
  if (out.residual > cfg.tol)
    throw std::runtime_error("edge PageRank solve for seed " + std::to_string(seed_edge) +
                             " did not reach tolerance (residual=" +
                             std::to_string(out.residual) + ")");

  out.components = decompose(out.pi, bundle, ops, cfg.mode, cfg.decomp_rel_tol);
  out.total = out.pi.norm();
  return out;
}

Eigen::VectorXd epr_dynamical(const LaplacianBundle& bundle, int seed_edge,
                              const EprConfig& cfg, int k, bool reversed) {
  const Eigen::Index e = bundle.l1_norm.rows();
  check_config(cfg, e, seed_edge);
  if (k < 0) throw std::invalid_argument("epr_dynamical: negative iteration count");

  const double beta = cfg.beta;
  Eigen::VectorXd teleport = Eigen::VectorXd::Zero(e);
  teleport[seed_edge] = (reversed ? -1.0 : 1.0) * (beta - 2.0) / beta;

  Eigen::VectorXd pi = Eigen::VectorXd::Zero(e);
  for (int step = 0; step < k; ++step)
    pi = (-1.0 / beta) * (bundle.l1_norm * pi).eval() + teleport;
  return pi;
}

std::vector<EprSummary> epr_all_edges(const BoundaryOperators& ops,
                                      const LaplacianBundle& bundle,
                                      const EprConfig& cfg) {
  const int e = static_cast<int>(bundle.l1_norm.rows());
  std::vector<EprSummary> out(static_cast<std::size_t>(e));
  parallel_for(e, cfg.threads, [&](int i) {
    const EprResult res = personalized_epr(ops, bundle, i, cfg);
    out[static_cast<std::size_t>(i)] =
        EprSummary{i, res.total, res.components.gradient_norm,
                   res.components.curl_norm, res.components.harmonic_norm};
  });
  return out;
}

Eigen::VectorXd node_pagerank(const Graph& g, double alpha,
                              const Eigen::VectorXd* preference, double tol,
                              int max_iter) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("node_pagerank: alpha must lie in (0, 1)");
  const int n = g.n;
  if (n == 0) return Eigen::VectorXd();

  Eigen::VectorXd v;
  if (preference) {
    if (preference->size() != n)
      throw std::invalid_argument("node_pagerank: preference length mismatch");
    if (preference->minCoeff() < 0.0)
      throw std::invalid_argument("node_pagerank: preference has negative entries");
    if (std::abs(preference->sum() - 1.0) > 1e-9)
      throw std::invalid_argument("node_pagerank: preference must sum to 1");
    v = *preference;
  } else {
    v = Eigen::VectorXd::Constant(n, 1.0 / n);
  }

  Eigen::VectorXd pi = v;
  Eigen::VectorXd next(n);
  for (int iter = 0; iter < max_iter; ++iter) {
    next.setZero();
    double dangling = 0.0;
    for (int u = 0; u < n; ++u) {
      const int deg = g.degree(u);
      if (deg == 0) {
        dangling += pi[u];
        continue;
      }
      const double share = pi[u] / deg;
      for (const int w : g.adj[u]) next[w] += share;
    }
    next = alpha * (next + Eigen::VectorXd::Constant(n, dangling / n)) + (1.0 - alpha) * v;
    const double delta = (next - pi).lpNorm<1>();
    pi.swap(next);
    if (delta <= tol) return pi;
  }
  throw std::runtime_error("node_pagerank: power iteration did not converge");
}

}  // namespace hodgerank
