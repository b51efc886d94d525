// Test-only reference implementations: dense linear-algebra oracles and
// seeded input generators that the library results are checked against.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <vector>

#include "hodgerank/complex.hpp"
#include "hodgerank/graph.hpp"
#include "hodgerank/hodge.hpp"
#include "hodgerank/operators.hpp"
#include "hodgerank/rng.hpp"
#include "hodgerank/synth.hpp"

namespace oracles {

using hodgerank::Graph;
using hodgerank::Rng;
using hodgerank::SimplicialComplex;

// The five-node worked example: interactions {1,2,3}, {3,4,5}, {2,4}.
inline SimplicialComplex worked_example() {
  return hodgerank::build_complex({{1, 2, 3}, {3, 4, 5}, {2, 4}});
}

inline Eigen::VectorXd reference_flow() {
  Eigen::VectorXd x(7);
  x << 3, 1, -1, 1, 2, 3, -2;
  return x;
}

inline Eigen::MatrixXd dense(const hodgerank::SpMat& m) { return Eigen::MatrixXd(m); }
inline Eigen::MatrixXd dense(const hodgerank::SpMatRow& m) { return Eigen::MatrixXd(m); }

inline Eigen::MatrixXd projector(const Eigen::MatrixXd& a) {
  if (a.cols() == 0) return Eigen::MatrixXd::Zero(a.rows(), a.rows());
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a);
  return a * cod.pseudoInverse();
}

// Dense three-part decomposition by pseudo-inverse projectors.
inline std::array<Eigen::VectorXd, 3> dense_decompose(const Eigen::VectorXd& x,
                                                      const Eigen::MatrixXd& b1,
                                                      const Eigen::MatrixXd& b2,
                                                      const Eigen::VectorXd& d2,
                                                      hodgerank::DecompMode mode) {
  const Eigen::VectorXd s = d2.array().sqrt();
  const Eigen::VectorXd si = d2.array().rsqrt();
  Eigen::VectorXd g, c;
  if (mode == hodgerank::DecompMode::unnormalized) {
    g = projector(b1.transpose()) * x;
    c = projector(b2) * x;
  } else if (mode == hodgerank::DecompMode::symmetric) {
    g = projector(s.asDiagonal() * b1.transpose()) * x;
    c = projector(si.asDiagonal() * b2) * x;
  } else {
    const Eigen::VectorXd z = si.asDiagonal() * x;
    g = s.asDiagonal() * (projector(s.asDiagonal() * b1.transpose()) * z).eval();
    c = s.asDiagonal() * (projector(si.asDiagonal() * b2) * z).eval();
  }
  return {g, c, x - g - c};
}

inline Eigen::VectorXd eigenvalues(const hodgerank::SpMatRow& m) {
  Eigen::MatrixXd d = dense(m);
  d = 0.5 * (d + d.transpose()).eval();
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(d).eigenvalues();
}

inline int dense_rank(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0;
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  const double cut = 1e-8 * std::max(1.0, sv.size() > 0 ? sv[0] : 0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > cut) ++rank;
  return rank;
}

// Seeded random complex with up to 30 nodes and random triangle filling.
inline SimplicialComplex random_complex(std::uint64_t seed) {
  Rng r(seed);
  const int n = 4 + static_cast<int>(r.bounded(27));
  const double p = 0.05 + 0.30 * r.uniform();
  const double q = r.uniform();
  return hodgerank::build_complex(hodgerank::synth_random_filled(n, p, q, r.next()));
}

// Random graph with a pendant path (guaranteed cut edges) and an attached
// chordless path between two existing nodes (usually local bridges), with
// occasional triangle filling.
inline SimplicialComplex random_bridge_complex(std::uint64_t seed) {
  Rng r(seed);
  const int n = 6 + static_cast<int>(r.bounded(15));
  const double p = 0.10 + 0.30 * r.uniform();
  const double q = r.uniform() < 0.5 ? 0.0 : r.uniform();
  auto interactions = hodgerank::synth_random_filled(n, p, q, r.next());

  std::int64_t fresh = n;
  const std::int64_t anchor = static_cast<std::int64_t>(r.bounded(n));
  interactions.push_back({anchor, fresh});
  interactions.push_back({fresh, fresh + 1});
  fresh += 2;

  std::int64_t a = static_cast<std::int64_t>(r.bounded(n));
  std::int64_t b = static_cast<std::int64_t>(r.bounded(n));
  if (a == b) b = (b + 1) % n;
  const int detour = 3 + static_cast<int>(r.bounded(3));
  std::int64_t prev = a;
  for (int i = 0; i < detour; ++i) {
    interactions.push_back({prev, fresh});
    prev = fresh++;
  }
  interactions.push_back({prev, b});
  return hodgerank::build_complex(interactions);
}

// Cut-edge oracle: breadth-first connectivity with the edge removed.
inline bool is_cut_edge(const Graph& g, int edge_index) {
  const int u = g.edges[edge_index][0];
  const int v = g.edges[edge_index][1];
  std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
  std::deque<int> queue{u};
  seen[static_cast<std::size_t>(u)] = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    if (x == v) return false;
    for (const int w : g.adj[x]) {
      if ((x == u && w == v) || (x == v && w == u)) continue;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  return true;
}

// Edge betweenness oracle from shortest-path counts sigma, one BFS per node.
inline Eigen::VectorXd edge_betweenness_oracle(const Graph& g) {
  const int n = g.n;
  const int e = g.edge_count();
  std::vector<std::vector<double>> sigma(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    auto& sig = sigma[static_cast<std::size_t>(s)];
    auto& d = dist[static_cast<std::size_t>(s)];
    sig.assign(static_cast<std::size_t>(n), 0.0);
    d.assign(static_cast<std::size_t>(n), -1);
    sig[static_cast<std::size_t>(s)] = 1.0;
    d[static_cast<std::size_t>(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (const int w : g.adj[x]) {
        if (d[static_cast<std::size_t>(w)] < 0) {
          d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(x)] + 1;
          queue.push_back(w);
        }
        if (d[static_cast<std::size_t>(w)] == d[static_cast<std::size_t>(x)] + 1)
          sig[static_cast<std::size_t>(w)] += sig[static_cast<std::size_t>(x)];
      }
    }
  }
  Eigen::VectorXd score = Eigen::VectorXd::Zero(e);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (s == t || dist[s][t] < 0) continue;
      for (int i = 0; i < e; ++i) {
        const int u = g.edges[i][0];
        const int v = g.edges[i][1];
        // Ordered pair (s, t): the edge can be crossed u->v or v->u.
        if (dist[s][u] >= 0 && dist[t][v] >= 0 && dist[s][u] + 1 + dist[t][v] == dist[s][t])
          score[i] += sigma[s][u] * sigma[t][v] / sigma[s][t];
        if (dist[s][v] >= 0 && dist[t][u] >= 0 && dist[s][v] + 1 + dist[t][u] == dist[s][t])
          score[i] += sigma[s][v] * sigma[t][u] / sigma[s][t];
      }
    }
  }
  if (n >= 2) score /= static_cast<double>(n) * (n - 1);
  return score;
}

inline double max_abs_diff(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace oracles
