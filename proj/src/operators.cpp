#include "hodgerank/operators.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace hodgerank {
namespace {

Eigen::VectorXd inverted(const Eigen::VectorXd& d) {
  Eigen::VectorXd inv(d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) inv[i] = d[i] > 0.0 ? 1.0 / d[i] : 0.0;
  return inv;
}

Eigen::VectorXd sqrt_elem(const Eigen::VectorXd& d) {
  Eigen::VectorXd r(d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) r[i] = std::sqrt(d[i]);
  return r;
}

}  // namespace

BoundaryOperators boundary_operators(const SimplicialComplex& c) {
  BoundaryOperators ops;
  const int n = c.node_count();
  const int e = c.edge_count();
  const int t = c.triangle_count();

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(e) * 2);
  for (int j = 0; j < e; ++j) {
    trip.emplace_back(c.edges[j][0], j, -1.0);
    trip.emplace_back(c.edges[j][1], j, 1.0);
  }
  ops.b1.resize(n, e);
  ops.b1.setFromTriplets(trip.begin(), trip.end());

  trip.clear();
  trip.reserve(static_cast<std::size_t>(t) * 3);
  for (int k = 0; k < t; ++k) {
    const auto& tri = c.triangles[k];
    const int uv = c.edge_id(tri[0], tri[1]);
    const int vw = c.edge_id(tri[1], tri[2]);
    const int uw = c.edge_id(tri[0], tri[2]);
    if (uv < 0 || vw < 0 || uw < 0)
      throw std::invalid_argument("boundary_operators: triangle face missing from edge list");
    trip.emplace_back(uv, k, 1.0);
    trip.emplace_back(vw, k, 1.0);
    trip.emplace_back(uw, k, -1.0);
  }
  ops.b2.resize(e, t);
  ops.b2.setFromTriplets(trip.begin(), trip.end());
  return ops;
}

LaplacianBundle hodge_laplacian(const BoundaryOperators& ops) {
  const Eigen::Index e = ops.b1.cols();
  if (e == 0) throw std::invalid_argument("hodge_laplacian: complex has no edges");

  LaplacianBundle b;
  b.d3 = 1.0 / 3.0;

  // d2[e] = max(row count of |B2|, 1); d1[v] = 2 * (|B1| d2)[v].
  b.d2 = Eigen::VectorXd::Zero(e);
  for (int k = 0; k < ops.b2.outerSize(); ++k)
    for (SpMat::InnerIterator it(ops.b2, k); it; ++it) b.d2[it.row()] += 1.0;
  for (Eigen::Index i = 0; i < e; ++i) b.d2[i] = std::max(b.d2[i], 1.0);

  b.d1 = Eigen::VectorXd::Zero(ops.b1.rows());
  for (int j = 0; j < ops.b1.outerSize(); ++j)
    for (SpMat::InnerIterator it(ops.b1, j); it; ++it) b.d1[it.row()] += 2.0 * b.d2[j];

  const SpMat b1t = ops.b1.transpose();
  const SpMat b2t = ops.b2.transpose();
  const Eigen::VectorXd d1_inv = inverted(b.d1);
  const Eigen::VectorXd d2_inv = inverted(b.d2);
  const Eigen::VectorXd d2_sqrt = sqrt_elem(b.d2);
  const Eigen::VectorXd d2_inv_sqrt = sqrt_elem(d2_inv);
  const Eigen::VectorXd d1_inv_sqrt = sqrt_elem(d1_inv);

  {
    SpMat lower = b1t * ops.b1;
    SpMat upper = ops.b2 * b2t;
    SpMat sum = lower + upper;
    b.l1 = SpMatRow(sum);
  }
  {
    const SpMat scaled_b1 = d1_inv.asDiagonal() * ops.b1;
    const SpMat lower_raw = b1t * scaled_b1;
    const SpMat lower = b.d2.asDiagonal() * lower_raw;
    const SpMat upper_raw = ops.b2 * b2t;
    const SpMat upper = b.d3 * (upper_raw * d2_inv.asDiagonal());
    SpMat sum = lower + upper;
    b.l1_norm = SpMatRow(sum);
  }
  {
    // Gram forms keep the symmetric Laplacian PSD to rounding.
    const SpMat ag_raw = d1_inv_sqrt.asDiagonal() * ops.b1;
    const SpMat ag = ag_raw * d2_sqrt.asDiagonal();
    const SpMat ac_raw = d2_inv_sqrt.asDiagonal() * ops.b2;
    const SpMat ac = std::sqrt(b.d3) * ac_raw;
    const SpMat agt = ag.transpose();
    const SpMat act = ac.transpose();
    const SpMat lower = agt * ag;
    const SpMat upper = ac * act;
    SpMat sum = lower + upper;
    b.l1_sym = SpMatRow(sum);
  }
  return b;
}

SpMatRow node_laplacian(const BoundaryOperators& ops) {
  const SpMat b1t = ops.b1.transpose();
  SpMat l0 = ops.b1 * b1t;
  return SpMatRow(l0);
}

namespace {

void put_value(std::ostream& out, double v) {
  if (v == 0.0) v = 0.0;  // collapse negative zero
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out << buf;
}

template <class Mat>
void dump(std::ostream& out, const Mat& m) {
  for (int k = 0; k < m.outerSize(); ++k) {
    for (typename Mat::InnerIterator it(m, k); it; ++it) {
      out << it.row() << " " << it.col() << " ";
      put_value(out, it.value());
      out << "\n";
    }
  }
}

}  // namespace

void write_coordinate(std::ostream& out, const SpMat& m) { dump(out, m); }
void write_coordinate(std::ostream& out, const SpMatRow& m) { dump(out, m); }

}  // namespace hodgerank
