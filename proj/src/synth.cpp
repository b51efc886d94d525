#include "hodgerank/synth.hpp"

#include <stdexcept>
#include <string>

#include "hodgerank/rng.hpp"

namespace hodgerank {
namespace {

using Interactions = std::vector<std::vector<std::int64_t>>;

void add_pair(Interactions& out, std::int64_t a, std::int64_t b) {
  out.push_back({a, b});
}

}  // namespace

Interactions synth_barbell(int clique_size, int path_length) {
  if (clique_size < 2) throw std::invalid_argument("synth_barbell: clique_size < 2");
  if (path_length < 1) throw std::invalid_argument("synth_barbell: path_length < 1");

  Interactions out;
  std::vector<std::int64_t> left, right;
  for (int i = 0; i < clique_size; ++i) left.push_back(i);
  const std::int64_t right_base = clique_size + path_length - 1;
  for (int i = 0; i < clique_size; ++i) right.push_back(right_base + i);
  out.push_back(left);

  std::int64_t prev = clique_size - 1;  // last node of the left clique
  for (int i = 0; i < path_length; ++i) {
    const std::int64_t next = clique_size + i;  // ends at right_base
    add_pair(out, prev, next);
    prev = next;
  }
  out.push_back(right);
  return out;
}

Interactions synth_cycle(int length) {
  if (length < 3) throw std::invalid_argument("synth_cycle: length < 3");
  Interactions out;
  for (int i = 0; i < length; ++i) add_pair(out, i, (i + 1) % length);
  return out;
}

Interactions synth_path(int length) {
  if (length < 1) throw std::invalid_argument("synth_path: length < 1");
  Interactions out;
  for (int i = 0; i < length; ++i) add_pair(out, i, i + 1);
  return out;
}

Interactions synth_random_filled(int n, double edge_p, double tri_p,
                                 std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("synth_random_filled: n < 2");
  Rng rng(seed);
  Interactions out;
  std::vector<std::vector<char>> has(static_cast<std::size_t>(n),
                                     std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.uniform() < edge_p) {
        has[i][j] = 1;
        add_pair(out, i, j);
      }
    }
  }
  if (out.empty()) {
    has[0][1] = 1;
    add_pair(out, 0, 1);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (has[i][j] && has[i][k] && has[j][k] && rng.uniform() < tri_p)
          out.push_back({i, j, k});
  return out;
}

Interactions synth_planted(const PlantedConfig& cfg) {
  if (cfg.cliques < 1) throw std::invalid_argument("synth_planted: cliques < 1");
  if (cfg.clique_size < 5)
    throw std::invalid_argument("synth_planted: clique_size < 5 leaves no anchors");
  if (cfg.pendant_length < 1)
    throw std::invalid_argument("synth_planted: pendant_length < 1");
  for (const int len : {cfg.short_cycle_a, cfg.short_cycle_b, cfg.long_cycle})
    if (len < 4)
      throw std::invalid_argument("synth_planted: attached cycles need length >= 4");
  if (!(cfg.triple_fill >= 0.0 && cfg.triple_fill <= 1.0))
    throw std::invalid_argument("synth_planted: triple_fill outside [0, 1]");

  Rng rng(cfg.seed);
  Interactions out;
  std::int64_t next_node = static_cast<std::int64_t>(cfg.cliques) * cfg.clique_size;
  std::vector<std::int64_t> clique_base(static_cast<std::size_t>(cfg.cliques));

  // A cycle of `length` attached to the clique edge (a, b): length - 2
  // fresh nodes chained from a to b. Each fresh edge is a local bridge with
  // tie range length - 1.
  auto attach_cycle = [&](std::int64_t a, std::int64_t b, int length) {
    std::int64_t prev = a;
    for (int i = 0; i < length - 2; ++i) {
      const std::int64_t fresh = next_node++;
      add_pair(out, prev, fresh);
      prev = fresh;
    }
    add_pair(out, prev, b);
  };

  for (int q = 0; q < cfg.cliques; ++q) {
    const std::int64_t base = static_cast<std::int64_t>(q) * cfg.clique_size;
    clique_base[static_cast<std::size_t>(q)] = base;

    for (int i = 0; i < cfg.clique_size; ++i)
      for (int j = i + 1; j < cfg.clique_size; ++j) add_pair(out, base + i, base + j);
    for (int i = 0; i < cfg.clique_size; ++i)
      for (int j = i + 1; j < cfg.clique_size; ++j)
        for (int k = j + 1; k < cfg.clique_size; ++k)
          if (rng.uniform() < cfg.triple_fill)
            out.push_back({base + i, base + j, base + k});

    // Pendant path of cut edges anchored at clique node 0.
    std::int64_t prev = base;
    for (int i = 0; i < cfg.pendant_length; ++i) {
      const std::int64_t fresh = next_node++;
      add_pair(out, prev, fresh);
      prev = fresh;
    }

    attach_cycle(base + 1, base + 2, cfg.short_cycle_a);
    attach_cycle(base + 2, base + 3, cfg.short_cycle_b);
    attach_cycle(base + 3, base + 4, cfg.long_cycle);
  }

  // Chain consecutive cliques with single cut edges to keep one component.
  for (int q = 0; q + 1 < cfg.cliques; ++q)
    add_pair(out, clique_base[static_cast<std::size_t>(q)] + cfg.clique_size - 1,
             clique_base[static_cast<std::size_t>(q + 1)] + cfg.clique_size - 1);
  return out;
}

std::vector<double> planted_tie_strength(const SimplicialComplex& c,
                                         const BridgeLabels& labels,
                                         const PlantedConfig& cfg) {
  const int e = c.edge_count();
  if (static_cast<int>(labels.label.size()) != e)
    throw std::invalid_argument("planted_tie_strength: label/edge count mismatch");

  std::vector<int> tri_count(static_cast<std::size_t>(e), 0);
  for (const auto& t : c.triangles) {
    ++tri_count[static_cast<std::size_t>(c.edge_id(t[0], t[1]))];
    ++tri_count[static_cast<std::size_t>(c.edge_id(t[1], t[2]))];
    ++tri_count[static_cast<std::size_t>(c.edge_id(t[0], t[2]))];
  }

  Rng rng(cfg.seed + 0x517cc1b727220a95ULL);
  std::vector<double> s(static_cast<std::size_t>(e), 0.0);
  for (int i = 0; i < e; ++i) {
    double v = cfg.w_triangle * tri_count[static_cast<std::size_t>(i)];
    switch (labels.label[static_cast<std::size_t>(i)]) {
      case BridgeClass::global:
        v += cfg.w_global;
        break;
      case BridgeClass::local:
        v += labels.tie_range[static_cast<std::size_t>(i)] <= cfg.short_range_max
                 ? cfg.w_short_local
                 : cfg.w_long_local;
        break;
      case BridgeClass::neither:
        v += cfg.w_neither;
        break;
    }
    s[static_cast<std::size_t>(i)] = v + cfg.noise_sd * rng.normal();
  }
  return s;
}

}  // namespace hodgerank
