#pragma once

#include <Eigen/Sparse>
#include <iosfwd>

#include "hodgerank/complex.hpp"

namespace hodgerank {

using SpMat = Eigen::SparseMatrix<double>;
using SpMatRow = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// Signed incidence operators for a complex with lexicographically oriented
/// simplices. For edge (u, v) with u < v, column B1[:, uv] is -1 at u and +1
/// at v. For triangle (u, v, w) with u < v < w, column B2[:, uvw] is +1 at
/// edges (u, v) and (v, w) and -1 at edge (u, w). B1 * B2 = 0 exactly.
struct BoundaryOperators {
  SpMat b1;  // nodes x edges
  SpMat b2;  // edges x triangles
};

/// Hodge 1-Laplacian in three forms, with the normalization diagonals.
///
/// l1      = B1^T B1 + B2 B2^T
/// l1_norm = D2 B1^T D1^{-1} B1 + B2 D3 B2^T D2^{-1}
/// l1_sym  = D2^{-1/2} l1_norm D2^{1/2}   (symmetric PSD, eigenvalues in [0, 2])
///
/// d2[e] = max(#triangles containing e, 1); d1[v] = 2 * sum of d2 over edges
/// at v; d3 = 1/3.
struct LaplacianBundle {
  SpMatRow l1;
  SpMatRow l1_norm;
  SpMatRow l1_sym;
  Eigen::VectorXd d1;
  Eigen::VectorXd d2;
  double d3 = 1.0 / 3.0;
};

BoundaryOperators boundary_operators(const SimplicialComplex& c);

/// Assembles all Laplacian forms. Throws std::invalid_argument if the
/// complex has no edges.
LaplacianBundle hodge_laplacian(const BoundaryOperators& ops);

/// Graph Laplacian B1 B1^T on nodes.
SpMatRow node_laplacian(const BoundaryOperators& ops);

/// Coordinate dump, one `row col value` line per stored entry in storage
/// order.
void write_coordinate(std::ostream& out, const SpMat& m);
void write_coordinate(std::ostream& out, const SpMatRow& m);

}  // namespace hodgerank
