#include "hodgerank/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace hodgerank {

Graph Graph::from_edges(int node_count, std::vector<std::array<int, 2>> edge_list) {
  Graph g;
  g.n = node_count;
  for (auto& e : edge_list) {
    if (e[0] > e[1]) std::swap(e[0], e[1]);
    if (e[0] < 0 || e[1] >= node_count || e[0] == e[1])
      throw std::invalid_argument("Graph::from_edges: invalid edge endpoint");
  }
  std::sort(edge_list.begin(), edge_list.end());
  edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
  g.edges = std::move(edge_list);
  g.adj.assign(static_cast<std::size_t>(node_count), {});
  for (const auto& e : g.edges) {
    g.adj[e[0]].push_back(e[1]);
    g.adj[e[1]].push_back(e[0]);
  }
  for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

int Graph::edge_id(int u, int v) const {
  if (u > v) std::swap(u, v);
  const std::array<int, 2> key{u, v};
  const auto it = std::lower_bound(edges.begin(), edges.end(), key);
  if (it != edges.end() && *it == key) return static_cast<int>(it - edges.begin());
  return -1;
}

int Graph::common_neighbors(int u, int v) const {
  const auto& a = adj[u];
  const auto& b = adj[v];
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

int connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.n), -1);
  int count = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    ++count;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const int w : g.adj[v]) {
        if (comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

}  // namespace hodgerank
