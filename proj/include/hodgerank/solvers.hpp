#pragma once

#include <Eigen/Core>
#include <cmath>

namespace hodgerank {

struct CgResult {
  Eigen::VectorXd x;
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

/// Conjugate gradients for a symmetric positive semidefinite operator given
/// as a matvec functor. Stops when the 2-norm of the residual drops to
/// `tol_abs`. The direction is restarted from a freshly computed residual
/// every 100 iterations to control recurrence drift, and additionally
/// whenever the search direction degenerates (p^T A p <= 0, which happens
/// when rounding pushes p into the kernel of a semidefinite operator); a
/// degenerate direction right after a restart means the residual itself sits
/// in the kernel and no further progress is possible. The reported residual
/// is always recomputed from scratch.
template <class MatVec>
CgResult conjugate_gradient(const MatVec& apply, const Eigen::VectorXd& rhs,
                            Eigen::VectorXd x0, double tol_abs, int max_iter) {
  CgResult out;
  out.x = std::move(x0);

  Eigen::VectorXd r = rhs - apply(out.x);
  Eigen::VectorXd p = r;
  double rs = r.squaredNorm();
  const double tol_sq = tol_abs * tol_abs;

  int since_restart = 0;
  while (out.iterations < max_iter && rs > tol_sq) {
    const Eigen::VectorXd ap = apply(p);
    const double p_ap = p.dot(ap);
    if (!(p_ap > 0.0)) {
      if (since_restart == 0) break;
      r = rhs - apply(out.x);
      p = r;
      rs = r.squaredNorm();
      since_restart = 0;
      continue;
    }
    const double alpha = rs / p_ap;
    out.x += alpha * p;
    ++out.iterations;
    ++since_restart;
    if (since_restart >= 100) {
      r = rhs - apply(out.x);
      p = r;
      rs = r.squaredNorm();
      since_restart = 0;
      continue;
    }
    r -= alpha * ap;
    const double rs_new = r.squaredNorm();
    p = r + (rs_new / rs) * p;
    rs = rs_new;
  }

  out.residual = (rhs - apply(out.x)).norm();
  out.converged = out.residual <= tol_abs;
  return out;
}

struct CglsResult {
  Eigen::VectorXd y;
  int iterations = 0;
  double residual = 0.0;  // |A^T (b - A y)|, recomputed from scratch at exit
  bool converged = false;
};

/// Conjugate gradients on the normal equations A^T A y = A^T b for the least
/// squares problem min |A y - b| (CGLS), optionally Jacobi-preconditioned by
/// `diag` ~ diag(A^T A) (empty = identity; the stopping test always uses the
/// unpreconditioned normal residual). The quadratic form p^T A^T A p is
/// evaluated as |A p|^2, which cannot go negative, and the least-squares
/// residual s = b - A y is carried explicitly. Convergence means the normal
/// residual |A^T s| fell to rel_tol * |A^T b|, or to the attainable
/// floating-point floor rel_tol * sigma * |s| where sigma is the largest
/// Rayleigh quotient |A p| / |p| encountered (the LSQR criterion for
/// incompatible systems). A direction with |A p| <= 1e-12 sigma |p| is
/// numerically in the kernel of A: the iteration restarts from the exact
/// residual, and stops when a freshly restarted direction degenerates too.
template <class ApplyA, class ApplyAt>
CglsResult cgls(const ApplyA& A, const ApplyAt& At, const Eigen::VectorXd& b,
                Eigen::Index dim, double rel_tol, int max_iter,
                const Eigen::VectorXd& diag = Eigen::VectorXd()) {
  CglsResult out;
  out.y = Eigen::VectorXd::Zero(dim);

  Eigen::VectorXd inv_diag;
  if (diag.size() == dim) {
    inv_diag = diag.cwiseMax(0.0).cwiseInverse();
    for (Eigen::Index i = 0; i < dim; ++i)
      if (!std::isfinite(inv_diag[i])) inv_diag[i] = 1.0;
  }
  const auto precond = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
    return inv_diag.size() == dim ? v.cwiseProduct(inv_diag).eval() : v;
  };

  Eigen::VectorXd s = b;
  Eigen::VectorXd r = At(s);
  const double tol = rel_tol * r.norm();
  if (!(tol > 0.0)) {  // b is orthogonal to the column span; y = 0 is exact
    out.converged = true;
    return out;
  }
  Eigen::VectorXd z = precond(r);
  Eigen::VectorXd p = z;
  double gamma = r.dot(z);
  double sigma = 0.0;
  bool fresh = true;
  int since_restart = 0;

  while (out.iterations < max_iter) {
    if (r.norm() <= std::max(tol, rel_tol * sigma * s.norm())) break;
    const Eigen::VectorXd q = A(p);
    const double delta = q.squaredNorm();
    const double p_sq = p.squaredNorm();
    if (p_sq > 0.0) sigma = std::max(sigma, std::sqrt(delta / p_sq));
    const bool degenerate = !(delta > 1e-24 * sigma * sigma * p_sq) || !(gamma > 0.0);
    if (degenerate || ++since_restart >= 50) {
      if (degenerate && fresh) break;
      if (!degenerate) {
        // Periodic replacement: take the step, then restart the recurrence.
        const double alpha = gamma / delta;
        out.y += alpha * p;
        ++out.iterations;
      }
      s = b - A(out.y);
      r = At(s);
      z = precond(r);
      p = z;
      gamma = r.dot(z);
      fresh = true;
      since_restart = 0;
      continue;
    }
    const double alpha = gamma / delta;
    out.y += alpha * p;
    ++out.iterations;
    s -= alpha * q;
    r = At(s);
    z = precond(r);
    const double gamma_new = r.dot(z);
    p = z + (gamma_new / gamma) * p;
    gamma = gamma_new;
    fresh = false;
  }

  s = b - A(out.y);
  out.residual = At(s).norm();
  out.converged = out.residual <= std::max(tol, rel_tol * sigma * s.norm());
  return out;
}

}  // namespace hodgerank
