#include "hodgerank/hodge.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseQR>
#include <cmath>
#include <stdexcept>

#include "hodgerank/solvers.hpp"

namespace hodgerank {

const char* to_string(DecompMode mode) {
  switch (mode) {
    case DecompMode::unnormalized: return "unnormalized";
    case DecompMode::weighted: return "weighted";
    case DecompMode::symmetric: return "symmetric";
  }
  return "unknown";
}

DecompMode parse_mode(const std::string& name) {
  if (name == "unnormalized") return DecompMode::unnormalized;
  if (name == "weighted") return DecompMode::weighted;
  if (name == "symmetric") return DecompMode::symmetric;
  throw std::invalid_argument("unknown decomposition mode '" + name +
                              "' (expected unnormalized, weighted or symmetric)");
}

namespace {

// Least-squares projection of b onto the column span of A, computed by
// Jacobi-preconditioned conjugate gradients on the normal equations (CGLS).
// `dim` is the number of columns of A and `diag` ~ diag(A^T A); the
// returned vector is A y, an element of the span.
template <class ApplyA, class ApplyAt>
Eigen::VectorXd project(Eigen::Index dim, const ApplyA& A, const ApplyAt& At,
                        const Eigen::VectorXd& b, const Eigen::VectorXd& diag,
                        double rel_tol, int max_iter) {
  if (dim == 0) return Eigen::VectorXd::Zero(b.size());
  CglsResult res = cgls(A, At, b, dim, rel_tol, max_iter, diag);
  if (!res.converged)
    throw std::runtime_error(
        "decompose: projection solve did not converge (residual=" +
        std::to_string(res.residual) + " after " + std::to_string(res.iterations) +
        " iterations)");
  return A(res.y);
}

// diag(A^T A) for A = W B1^T (edge weights w, columns indexed by nodes):
// the w-weighted degree of each node.
Eigen::VectorXd gradient_gram_diag(const SpMat& b1, const Eigen::VectorXd& edge_w) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(b1.rows());
  for (int e = 0; e < b1.outerSize(); ++e)
    for (SpMat::InnerIterator it(b1, e); it; ++it)
      diag[it.row()] += edge_w.size() ? edge_w[e] : 1.0;
  return diag;
}

// diag(A^T A) for A = W B2 (edge weights w, columns indexed by triangles).
Eigen::VectorXd curl_gram_diag(const SpMat& b2, const Eigen::VectorXd& edge_w) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(b2.cols());
  for (int t = 0; t < b2.outerSize(); ++t)
    for (SpMat::InnerIterator it(b2, t); it; ++it)
      diag[t] += edge_w.size() ? edge_w[it.row()] : 1.0;
  return diag;
}

struct Parts {
  Eigen::VectorXd gradient;
  Eigen::VectorXd curl;
};

// Decomposition in the symmetric convention applied to the coordinate
// vector z (the caller picks z = x or z = D2^{-1/2} x).
Parts symmetric_parts(const Eigen::VectorXd& z, const BoundaryOperators& ops,
                      const Eigen::VectorXd& d2_sqrt, const Eigen::VectorXd& d2_inv_sqrt,
                      double rel_tol, int max_iter) {
  Parts parts;
  // Gradient space im(D2^{1/2} B1^T): A maps node potentials to edge flows.
  parts.gradient = project(
      ops.b1.rows(),
      [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
        Eigen::VectorXd g = ops.b1.transpose() * v;
        g.array() *= d2_sqrt.array();
        return g;
      },
      [&](const Eigen::VectorXd& s) -> Eigen::VectorXd {
        Eigen::VectorXd u = s;
        u.array() *= d2_sqrt.array();
        return ops.b1 * u;
      },
      z, gradient_gram_diag(ops.b1, d2_sqrt.cwiseProduct(d2_sqrt)), rel_tol, max_iter);
  // Curl space im(D2^{-1/2} B2): A maps triangle circulations to edge flows.
  parts.curl = project(
      ops.b2.cols(),
      [&](const Eigen::VectorXd& y) -> Eigen::VectorXd {
        Eigen::VectorXd c = ops.b2 * y;
        c.array() *= d2_inv_sqrt.array();
        return c;
      },
      [&](const Eigen::VectorXd& s) -> Eigen::VectorXd {
        Eigen::VectorXd u = s;
        u.array() *= d2_inv_sqrt.array();
        return ops.b2.transpose() * u;
      },
      z, curl_gram_diag(ops.b2, d2_inv_sqrt.cwiseProduct(d2_inv_sqrt)), rel_tol,
      max_iter);
  return parts;
}

}  // namespace

HodgeComponents decompose(const Eigen::VectorXd& flow, const LaplacianBundle& bundle,
                          const BoundaryOperators& ops, DecompMode mode,
                          double rel_tol) {
  const Eigen::Index e = ops.b1.cols();
  if (flow.size() != e)
    throw std::invalid_argument("decompose: flow has length " +
                                std::to_string(flow.size()) + " but the complex has " +
                                std::to_string(e) + " edges");
  if (!flow.allFinite())
    throw std::invalid_argument("decompose: flow contains non-finite entries");

  const int max_iter = static_cast<int>(10 * e);
  HodgeComponents out;
  out.mode = mode;

  if (mode == DecompMode::unnormalized) {
    const Eigen::VectorXd unit;
    out.gradient = project(
        ops.b1.rows(),
        [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
          return ops.b1.transpose() * v;
        },
        [&](const Eigen::VectorXd& s) -> Eigen::VectorXd { return ops.b1 * s; },
        flow, gradient_gram_diag(ops.b1, unit), rel_tol, max_iter);
    out.curl = project(
        ops.b2.cols(),
        [&](const Eigen::VectorXd& y) -> Eigen::VectorXd { return ops.b2 * y; },
        [&](const Eigen::VectorXd& s) -> Eigen::VectorXd {
          return ops.b2.transpose() * s;
        },
        flow, curl_gram_diag(ops.b2, unit), rel_tol, max_iter);
  } else {
    Eigen::VectorXd d2_sqrt(e), d2_inv_sqrt(e);
    for (Eigen::Index i = 0; i < e; ++i) {
      d2_sqrt[i] = std::sqrt(bundle.d2[i]);
      d2_inv_sqrt[i] = 1.0 / d2_sqrt[i];
    }
    if (mode == DecompMode::symmetric) {
      Parts parts = symmetric_parts(flow, ops, d2_sqrt, d2_inv_sqrt, rel_tol, max_iter);
      out.gradient = std::move(parts.gradient);
      out.curl = std::move(parts.curl);
    } else {  // weighted
      Eigen::VectorXd z = flow;
      z.array() *= d2_inv_sqrt.array();
      Parts parts = symmetric_parts(z, ops, d2_sqrt, d2_inv_sqrt, rel_tol, max_iter);
      out.gradient = parts.gradient;
      out.gradient.array() *= d2_sqrt.array();
      out.curl = parts.curl;
      out.curl.array() *= d2_sqrt.array();
    }
  }

  out.harmonic = flow - out.gradient - out.curl;
  out.gradient_norm = out.gradient.norm();
  out.curl_norm = out.curl.norm();
  out.harmonic_norm = out.harmonic.norm();
  return out;
}

std::array<double, 3> component_norms(const HodgeComponents& parts) {
  return {parts.gradient_norm, parts.curl_norm, parts.harmonic_norm};
}

int harmonic_dimension(const BoundaryOperators& ops, const LaplacianBundle& bundle,
                       int dense_cap) {
  const Eigen::Index e = ops.b1.cols();
  if (e == 0) return 0;

  if (e <= dense_cap) {
    Eigen::MatrixXd dense = Eigen::MatrixXd(bundle.l1);
    dense = 0.5 * (dense + dense.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(dense);
    if (eig.info() != Eigen::Success)
      throw std::runtime_error("harmonic_dimension: eigensolver failed");
    int dim = 0;
    for (Eigen::Index i = 0; i < e; ++i)
      if (eig.eigenvalues()[i] < 1e-8) ++dim;
    return dim;
  }

  // rank(B1) = nodes - components of the one-skeleton (isolated nodes count).
  std::vector<std::array<int, 2>> edge_list;
  edge_list.reserve(static_cast<std::size_t>(e));
  for (int j = 0; j < ops.b1.outerSize(); ++j) {
    std::array<int, 2> ends{-1, -1};
    for (SpMat::InnerIterator it(ops.b1, j); it; ++it)
      (it.value() < 0 ? ends[0] : ends[1]) = static_cast<int>(it.row());
    edge_list.push_back(ends);
  }
  const Graph skeleton = Graph::from_edges(static_cast<int>(ops.b1.rows()), edge_list);
  const long rank_b1 = ops.b1.rows() - connected_components(skeleton);

  long rank_b2 = 0;
  if (ops.b2.cols() > 0) {
    SpMat b2 = ops.b2;
    b2.makeCompressed();
    Eigen::SparseQR<SpMat, Eigen::COLAMDOrdering<int>> qr;
    qr.compute(b2);
    if (qr.info() != Eigen::Success)
      throw std::runtime_error("harmonic_dimension: sparse QR failed");
    rank_b2 = qr.rank();
  }
  return static_cast<int>(e - rank_b1 - rank_b2);
}

}  // namespace hodgerank
