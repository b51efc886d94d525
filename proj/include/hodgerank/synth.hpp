#pragma once

#include <cstdint>
#include <vector>

#include "hodgerank/complex.hpp"
#include "hodgerank/structure.hpp"

namespace hodgerank {

/// Two m-cliques (as full simplicial interactions) joined by a path with
/// `path_length` edges.
std::vector<std::vector<std::int64_t>> synth_barbell(int clique_size, int path_length = 1);

/// Chordless cycle on `length` nodes (one hole).
std::vector<std::vector<std::int64_t>> synth_cycle(int length);

/// Simple path with `length` edges (every edge a cut edge).
std::vector<std::vector<std::int64_t>> synth_path(int length);

/// Erdos-Renyi pair interactions with edge probability `edge_p`; each graph
/// triangle is additionally emitted as a three-node interaction with
/// probability `tri_p`. At least one edge is guaranteed.
std::vector<std::vector<std::int64_t>> synth_random_filled(int n, double edge_p,
                                                           double tri_p,
                                                           std::uint64_t seed);

/// Planted benchmark family: a chain of partially triangle-filled cliques,
/// each carrying a pendant path of cut edges and attached chordless cycles
/// whose edges are local bridges of controlled tie range.
struct PlantedConfig {
  int cliques = 25;
  int clique_size = 6;       // needs at least 5 distinct anchor nodes
  int pendant_length = 12;   // cut edges per clique
  int short_cycle_a = 4;     // attached cycle lengths (cycle includes one
  int short_cycle_b = 5;     // clique edge); tie range = length - 1
  int long_cycle = 8;
  double triple_fill = 0.5;  // probability a clique triple becomes a 2-simplex
  std::uint64_t seed = 7;

  // Tie-strength synthesis weights (see planted_tie_strength). The neither
  // offset centers the clique-edge class so that the triangle term carries
  // its variation without inflating the class mean.
  double w_triangle = 1.6;
  double w_global = 3.0;
  double w_short_local = -2.0;
  double w_long_local = 1.0;
  double w_neither = -1.6;
  int short_range_max = 4;
  double noise_sd = 0.25;
};

std::vector<std::vector<std::int64_t>> synth_planted(const PlantedConfig& cfg);

/// Edge tie strengths for a planted complex: w_triangle per incident
/// 2-simplex, plus a class effect (w_global on cut edges, w_short_local on
/// local bridges with tie range <= short_range_max, w_long_local on longer
/// ones, w_neither on the remaining edges) and Gaussian noise with
/// deviation noise_sd, seeded by cfg.seed.
std::vector<double> planted_tie_strength(const SimplicialComplex& c,
                                         const BridgeLabels& labels,
                                         const PlantedConfig& cfg);

}  // namespace hodgerank
