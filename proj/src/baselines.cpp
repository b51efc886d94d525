#include "hodgerank/baselines.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "hodgerank/parallel.hpp"

namespace hodgerank {

int FeatureTable::column_index(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) return -1;
  return static_cast<int>(it - columns.begin());
}

Eigen::VectorXd embeddedness(const Graph& g) {
  Eigen::VectorXd out(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i)
    out[i] = g.common_neighbors(g.edges[i][0], g.edges[i][1]);
  return out;
}

Eigen::MatrixXd local_baseline(const Graph& g) {
  const int e = g.edge_count();
  Eigen::MatrixXd out(e, 3);

  // Triangle participation per node, each graph triangle counted once.
  std::vector<long> tri(static_cast<std::size_t>(g.n), 0);
  for (const auto& edge : g.edges) {
    const auto& a = g.adj[edge[0]];
    const auto& b = g.adj[edge[1]];
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] < b[j]) {
        ++i;
      } else if (a[i] > b[j]) {
        ++j;
      } else {
        if (a[i] > edge[1]) {
          ++tri[edge[0]];
          ++tri[edge[1]];
          ++tri[a[i]];
        }
        ++i;
        ++j;
      }
    }
  }

  auto clustering = [&](int v) {
    const long d = g.degree(v);
    if (d <= 1) return 0.0;
    return 2.0 * static_cast<double>(tri[v]) / (static_cast<double>(d) * (d - 1));
  };

  for (int i = 0; i < e; ++i) {
    const int u = g.edges[i][0];
    const int v = g.edges[i][1];
    const double du = g.degree(u);
    const double dv = g.degree(v);
    const double common = g.common_neighbors(u, v);
    out(i, 0) = du + dv;
    const double denom = du + dv - common - 2.0;
    out(i, 1) = denom > 0.0 ? common / denom : 0.0;
    out(i, 2) = clustering(u) + clustering(v);
  }
  return out;
}

Eigen::VectorXd network_constraint(const Graph& g) {
  const int e = g.edge_count();
  Eigen::VectorXd out(e);
  auto directed = [&](int i, int j) {
    // c_ij = (p_ij + sum_q p_iq p_qj)^2 over common neighbors q.
    double inner = 1.0 / g.degree(i);
    const auto& a = g.adj[i];
    const auto& b = g.adj[j];
    std::size_t s = 0, t = 0;
    while (s < a.size() && t < b.size()) {
      if (a[s] < b[t]) {
        ++s;
      } else if (a[s] > b[t]) {
        ++t;
      } else {
        const int q = a[s];
        inner += (1.0 / g.degree(i)) * (1.0 / g.degree(q));
        ++s;
        ++t;
      }
    }
    return inner * inner;
  };
  for (int i = 0; i < e; ++i) {
    const int u = g.edges[i][0];
    const int v = g.edges[i][1];
    out[i] = 0.5 * (directed(u, v) + directed(v, u));
  }
  return out;
}

Eigen::VectorXd edge_betweenness(const Graph& g) {
  const int n = g.n;
  const int e = g.edge_count();
  Eigen::VectorXd score = Eigen::VectorXd::Zero(e);
  if (n < 2) return score;

  std::vector<double> sigma(static_cast<std::size_t>(n));
  std::vector<double> delta(static_cast<std::size_t>(n));
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::deque<int> queue;

  for (int s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    order.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (const int w : g.adj[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int w = *it;
      for (const int v : g.adj[w]) {
        if (dist[v] != dist[w] - 1) continue;
        const double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
        score[g.edge_id(v, w)] += c;
        delta[v] += c;
      }
    }
  }
  score /= static_cast<double>(n) * (n - 1);
  return score;
}

Graph line_graph(const Graph& g) {
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.edge_count(); ++i) {
    incident[g.edges[i][0]].push_back(i);
    incident[g.edges[i][1]].push_back(i);
  }
  std::vector<std::array<int, 2>> pairs;
  for (const auto& ids : incident)
    for (std::size_t a = 0; a + 1 < ids.size(); ++a)
      for (std::size_t b = a + 1; b < ids.size(); ++b)
        pairs.push_back({ids[a], ids[b]});
  return Graph::from_edges(g.edge_count(), std::move(pairs));
}

Eigen::MatrixXd node_pagerank_features(const Graph& g, double alpha, int threads) {
  const int n = g.n;
  const int e = g.edge_count();
  Eigen::MatrixXd out(e, 4);

  const Eigen::VectorXd pr = node_pagerank(g, alpha);
  const Graph lg = line_graph(g);
  const Eigen::VectorXd lpr = node_pagerank(lg, alpha);

  Eigen::VectorXd ppr_norm(n);
  parallel_for(n, threads, [&](int v) {
    Eigen::VectorXd seed = Eigen::VectorXd::Zero(n);
    seed[v] = 1.0;
    ppr_norm[v] = node_pagerank(g, alpha, &seed).norm();
  });

  Eigen::VectorXd line_ppr_norm(e);
  parallel_for(e, threads, [&](int i) {
    Eigen::VectorXd seed = Eigen::VectorXd::Zero(e);
    seed[i] = 1.0;
    line_ppr_norm[i] = node_pagerank(lg, alpha, &seed).norm();
  });

  for (int i = 0; i < e; ++i) {
    const int u = g.edges[i][0];
    const int v = g.edges[i][1];
    out(i, 0) = 0.5 * (pr[u] + pr[v]);
    out(i, 1) = lpr[i];
    out(i, 2) = 0.5 * (ppr_norm[u] + ppr_norm[v]);
    out(i, 3) = line_ppr_norm[i];
  }
  return out;
}

const std::vector<std::string>& known_feature_sets() {
  static const std::vector<std::string> names = {
      "epr",        "epr-components", "embeddedness",    "local",
      "node-pr",    "constraint",     "betweenness",     "indicator-hodge"};
  return names;
}

FeatureTable build_feature_table(const SimplicialComplex& c,
                                 const std::vector<std::string>& sets,
                                 const EprConfig& cfg) {
  if (sets.empty())
    throw std::invalid_argument("build_feature_table: no feature sets requested");
  const auto& known = known_feature_sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (std::find(known.begin(), known.end(), sets[i]) == known.end())
      throw std::invalid_argument("unknown feature set '" + sets[i] + "'");
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (sets[i] == sets[j])
        throw std::invalid_argument("feature set '" + sets[i] + "' requested twice");
  }

  const Graph g = underlying_graph(c);
  const int e = c.edge_count();

  const bool wants_epr =
      std::find(sets.begin(), sets.end(), "epr") != sets.end() ||
      std::find(sets.begin(), sets.end(), "epr-components") != sets.end();
  const bool wants_indicator =
      std::find(sets.begin(), sets.end(), "indicator-hodge") != sets.end();

  BoundaryOperators ops;
  LaplacianBundle bundle;
  std::vector<EprSummary> sweep;
  if (wants_epr || wants_indicator) {
    ops = boundary_operators(c);
    bundle = hodge_laplacian(ops);
  }
  if (wants_epr) sweep = epr_all_edges(ops, bundle, cfg);

  Eigen::MatrixXd indicator(e, 3);
  if (wants_indicator) {
    parallel_for(e, cfg.threads, [&](int i) {
      Eigen::VectorXd x = Eigen::VectorXd::Zero(e);
      x[i] = 1.0;
      const HodgeComponents parts = decompose(x, bundle, ops, cfg.mode, cfg.decomp_rel_tol);
      indicator(i, 0) = parts.gradient_norm;
      indicator(i, 1) = parts.curl_norm;
      indicator(i, 2) = parts.harmonic_norm;
    });
  }

  FeatureTable table;
  std::vector<Eigen::MatrixXd> blocks;
  for (const auto& name : sets) {
    if (name == "epr") {
      Eigen::MatrixXd m(e, 1);
      for (int i = 0; i < e; ++i) m(i, 0) = sweep[static_cast<std::size_t>(i)].total;
      blocks.push_back(std::move(m));
      table.columns.push_back("epr_total");
    } else if (name == "epr-components") {
      Eigen::MatrixXd m(e, 3);
      for (int i = 0; i < e; ++i) {
        const auto& s = sweep[static_cast<std::size_t>(i)];
        m(i, 0) = s.gradient_norm;
        m(i, 1) = s.curl_norm;
        m(i, 2) = s.harmonic_norm;
      }
      blocks.push_back(std::move(m));
      table.columns.insert(table.columns.end(), {"epr_grad", "epr_curl", "epr_harm"});
    } else if (name == "embeddedness") {
      blocks.push_back(embeddedness(g));
      table.columns.push_back("embeddedness");
    } else if (name == "local") {
      blocks.push_back(local_baseline(g));
      table.columns.insert(table.columns.end(),
                           {"degree_sum", "overlap", "clustering_sum"});
    } else if (name == "node-pr") {
      blocks.push_back(node_pagerank_features(g, 0.85, cfg.threads));
      table.columns.insert(table.columns.end(),
                           {"node_pr_mean", "line_pr", "node_ppr_mean", "line_ppr"});
    } else if (name == "constraint") {
      blocks.push_back(network_constraint(g));
      table.columns.push_back("constraint");
    } else if (name == "betweenness") {
      blocks.push_back(edge_betweenness(g));
      table.columns.push_back("betweenness");
    } else if (name == "indicator-hodge") {
      blocks.push_back(indicator);
      table.columns.insert(table.columns.end(), {"ind_grad", "ind_curl", "ind_harm"});
    }
  }

  Eigen::Index total_cols = 0;
  for (const auto& b : blocks) total_cols += b.cols();
  table.values.resize(e, total_cols);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    table.values.middleCols(at, b.cols()) = b;
    at += b.cols();
  }
  return table;
}

}  // namespace hodgerank
