#include <doctest.h>

#include <vector>

#include "hodgerank/complex.hpp"
#include "hodgerank/structure.hpp"
#include "hodgerank/synth.hpp"
#include "oracles.hpp"

using hodgerank::BridgeClass;
using hodgerank::Graph;
using hodgerank::classify_edges;
using hodgerank::global_bridges;
using hodgerank::tie_range;
using hodgerank::underlying_graph;

namespace {

// Independent tie-range oracle: all-pairs shortest paths (Floyd-Warshall)
// with the probed edge removed.
int tie_range_oracle(const Graph& g, int edge_index) {
  const int n = g.n;
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n), inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i == edge_index) continue;
    d[g.edges[i][0]][g.edges[i][1]] = 1;
    d[g.edges[i][1]][g.edges[i][0]] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  const int r = d[g.edges[edge_index][0]][g.edges[edge_index][1]];
  return r >= inf ? -1 : r;
}

}  // namespace

TEST_SUITE("structure") {

TEST_CASE("worked example: every edge is embedded (class neither, range two)") {
  const Graph g = underlying_graph(oracles::worked_example());
  CHECK(global_bridges(g).empty());
  const auto labels = classify_edges(g);
  REQUIRE(labels.label.size() == 7);
  REQUIRE(labels.tie_range.size() == 7);
  for (int i = 0; i < 7; ++i) {
    CHECK(labels.label[i] == BridgeClass::neither);
    CHECK(labels.tie_range[i] == 2);
  }
}

TEST_CASE("path graph: every edge is a global bridge with infinite range") {
  const Graph g =
      underlying_graph(hodgerank::build_complex(hodgerank::synth_path(6)));
  CHECK(global_bridges(g) == std::vector<int>{0, 1, 2, 3, 4, 5});
  const auto labels = classify_edges(g);
  for (int i = 0; i < g.edge_count(); ++i) {
    CHECK(labels.label[i] == BridgeClass::global);
    CHECK(labels.tie_range[i] == -1);
  }
}

TEST_CASE("six-cycle: every edge is a local bridge with range five") {
  const Graph g =
      underlying_graph(hodgerank::build_complex(hodgerank::synth_cycle(6)));
  CHECK(global_bridges(g).empty());
  const auto labels = classify_edges(g);
  for (int i = 0; i < g.edge_count(); ++i) {
    CHECK(labels.label[i] == BridgeClass::local);
    CHECK(labels.tie_range[i] == 5);
    CHECK(tie_range(g, i) == 5);
  }
}

TEST_CASE("triangle: all edges neither, range two") {
  const Graph g =
      underlying_graph(hodgerank::build_complex(hodgerank::synth_cycle(3)));
  const auto labels = classify_edges(g);
  for (int i = 0; i < g.edge_count(); ++i) {
    CHECK(labels.label[i] == BridgeClass::neither);
    CHECK(labels.tie_range[i] == 2);
  }
}

TEST_CASE("barbell: connecting path is global, clique edges are neither") {
  const Graph g = underlying_graph(
      hodgerank::build_complex(hodgerank::synth_barbell(5, 3)));
  const auto cuts = global_bridges(g);
  CHECK(cuts.size() == 3);
  const auto labels = classify_edges(g);
  int global_count = 0, neither_count = 0;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (labels.label[i] == BridgeClass::global) {
      ++global_count;
      CHECK(labels.tie_range[i] == -1);
    } else {
      CHECK(labels.label[i] == BridgeClass::neither);
      ++neither_count;
    }
  }
  CHECK(global_count == 3);
  CHECK(neither_count == 20);  // two 5-cliques
}

TEST_CASE("tie_range masks exactly one edge") {
  // Two parallel detours of lengths 3 and 5 between nodes 0 and 1, plus the
  // direct edge. Removing the direct edge leaves the length-3 detour.
  const auto k = hodgerank::build_complex(
      {{0, 1}, {0, 2}, {2, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 1}});
  const Graph g = underlying_graph(k);
  const int direct = g.edge_id(0, 1);
  REQUIRE(direct >= 0);
  CHECK(tie_range(g, direct) == 3);
  const auto labels = classify_edges(g);
  CHECK(labels.label[direct] == BridgeClass::local);
}

TEST_CASE("random graphs agree with cut and range oracles") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = underlying_graph(oracles::random_bridge_complex(seed));
    const auto labels = classify_edges(g);
    const auto cuts = global_bridges(g);
    std::vector<char> is_cut(static_cast<std::size_t>(g.edge_count()), 0);
    for (const int i : cuts) is_cut[static_cast<std::size_t>(i)] = 1;
    CAPTURE(seed);
    for (int i = 0; i < g.edge_count(); ++i) {
      CAPTURE(i);
      const bool oracle_cut = oracles::is_cut_edge(g, i);
      CHECK(static_cast<bool>(is_cut[static_cast<std::size_t>(i)]) == oracle_cut);
      const int range = tie_range_oracle(g, i);
      CHECK(labels.tie_range[i] == range);
      if (oracle_cut) {
        CHECK(labels.label[i] == BridgeClass::global);
        CHECK(range == -1);
      } else if (g.common_neighbors(g.edges[i][0], g.edges[i][1]) == 0) {
        CHECK(labels.label[i] == BridgeClass::local);
        CHECK(range >= 3);
      } else {
        CHECK(labels.label[i] == BridgeClass::neither);
        CHECK(range == 2);
      }
    }
  }
}

TEST_CASE("class names round-trip") {
  for (const BridgeClass c :
       {BridgeClass::global, BridgeClass::local, BridgeClass::neither})
    CHECK(hodgerank::parse_bridge_class(hodgerank::to_string(c)) == c);
}

}  // TEST_SUITE
