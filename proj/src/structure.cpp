#include "hodgerank/structure.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace hodgerank {

const char* to_string(BridgeClass c) {
  switch (c) {
    case BridgeClass::global: return "global";
    case BridgeClass::local: return "local";
    case BridgeClass::neither: return "neither";
  }
  return "unknown";
}

BridgeClass parse_bridge_class(const std::string& name) {
  if (name == "global") return BridgeClass::global;
  if (name == "local") return BridgeClass::local;
  if (name == "neither") return BridgeClass::neither;
  throw std::invalid_argument("unknown bridge class '" + name + "'");
}

std::vector<int> global_bridges(const Graph& g) {
  const int n = g.n;
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<int> bridges;
  int timer = 0;

  struct Frame {
    int v;
    int parent;
    std::size_t next;
  };
  std::vector<Frame> stack;

  for (int s = 0; s < n; ++s) {
    if (disc[s] >= 0) continue;
    disc[s] = low[s] = timer++;
    stack.push_back({s, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < g.adj[f.v].size()) {
        const int w = g.adj[f.v][f.next++];
        if (w == f.parent) continue;  // simple graph: a single parent edge
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (done.parent >= 0) {
          low[done.parent] = std::min(low[done.parent], low[done.v]);
          if (low[done.v] > disc[done.parent])
            bridges.push_back(g.edge_id(done.parent, done.v));
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

int tie_range(const Graph& g, int edge_index) {
  if (edge_index < 0 || edge_index >= g.edge_count())
    throw std::invalid_argument("tie_range: edge index out of range");
  const int u = g.edges[edge_index][0];
  const int v = g.edges[edge_index][1];

  std::vector<int> dist(static_cast<std::size_t>(g.n), -1);
  std::deque<int> queue;
  dist[u] = 0;
  queue.push_back(u);
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    if (a == v) return dist[v];
    for (const int b : g.adj[a]) {
      // Mask the direct edge; every other edge stays available.
      if ((a == u && b == v) || (a == v && b == u)) continue;
      if (dist[b] < 0) {
        dist[b] = dist[a] + 1;
        queue.push_back(b);
      }
    }
  }
  return -1;
}

BridgeLabels classify_edges(const Graph& g) {
  const int e = g.edge_count();
  BridgeLabels out;
  out.label.assign(static_cast<std::size_t>(e), BridgeClass::neither);
  out.tie_range.assign(static_cast<std::size_t>(e), 2);

  std::vector<char> is_cut(static_cast<std::size_t>(e), 0);
  for (const int b : global_bridges(g)) is_cut[static_cast<std::size_t>(b)] = 1;

  for (int i = 0; i < e; ++i) {
    if (is_cut[static_cast<std::size_t>(i)]) {
      // A cut edge admits no alternative path.
      out.label[i] = BridgeClass::global;
      out.tie_range[i] = -1;
    } else if (g.common_neighbors(g.edges[i][0], g.edges[i][1]) == 0) {
      out.label[i] = BridgeClass::local;
      out.tie_range[i] = tie_range(g, i);
    }
    // A shared neighbor forces tie range 2 with no search needed.
  }
  return out;
}

}  // namespace hodgerank
