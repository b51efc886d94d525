#pragma once

#include <array>
#include <string>

#include "hodgerank/operators.hpp"

namespace hodgerank {

/// Inner-product convention for the three-part decomposition of an edge flow.
///
/// - unnormalized: orthogonal parts in im(B1^T), im(B2), ker(l1) under the
///   standard inner product.
/// - symmetric: parts lie in im(D2^{1/2} B1^T), im(D2^{-1/2} B2) and
///   ker(l1_sym), orthogonal under the standard inner product; norms satisfy
///   |x|^2 = |g|^2 + |c|^2 + |h|^2.
/// - weighted: parts lie in im(D2 B1^T), im(B2) and ker(l1_norm), orthogonal
///   under <u, v> = u^T D2^{-1} v; obtained by decomposing D2^{-1/2} x in the
///   symmetric convention and scaling back by D2^{1/2}.
enum class DecompMode { unnormalized, weighted, symmetric };

const char* to_string(DecompMode mode);
DecompMode parse_mode(const std::string& name);

struct HodgeComponents {
  DecompMode mode = DecompMode::weighted;
  Eigen::VectorXd gradient;
  Eigen::VectorXd curl;
  Eigen::VectorXd harmonic;
  double gradient_norm = 0.0;  // Euclidean norms of the parts as returned
  double curl_norm = 0.0;
  double harmonic_norm = 0.0;
};

/// Splits `flow` into gradient + curl + harmonic parts via conjugate-gradient
/// least squares on the normal equations (relative tolerance `rel_tol`, at
/// most 10 * edges iterations per projection). The parts sum to `flow`
/// exactly; non-finite input or a length mismatch raises
/// std::invalid_argument.
HodgeComponents decompose(const Eigen::VectorXd& flow, const LaplacianBundle& bundle,
                          const BoundaryOperators& ops, DecompMode mode,
                          double rel_tol = 1e-12);

std::array<double, 3> component_norms(const HodgeComponents& parts);

/// Dimension of the harmonic space, equal in every convention. Uses a dense
/// eigensolver when the edge count is at most `dense_cap`, otherwise the rank
/// identity dim = edges - rank(B1) - rank(B2) with a sparse QR factorization.
int harmonic_dimension(const BoundaryOperators& ops, const LaplacianBundle& bundle,
                       int dense_cap = 512);

}  // namespace hodgerank
