#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hodgerank/complex.hpp"

namespace hodgerank {

/// One interaction: the distinct participants in input order, plus an
/// optional multiplicity and timestamp (pair-list format only).
struct InteractionRecord {
  std::vector<std::int64_t> nodes;
  long count = 1;
  double timestamp = 0.0;
  bool has_timestamp = false;
};

struct InteractionLog {
  std::vector<InteractionRecord> records;
  /// Total multiplicity per unordered node pair (keys ordered by label).
  std::map<std::pair<std::int64_t, std::int64_t>, long> pair_counts;
};

/// Input layouts: `simplex` has one interaction per line as node ids;
/// `pairs` has lines `u v [count [timestamp]]`.
enum class InputFormat { simplex, pairs };

InputFormat parse_format(const std::string& name);

/// Parses interaction data. Lines starting with `#` and blank lines are
/// skipped; malformed lines, self-pairs and interactions with fewer than two
/// distinct nodes raise std::runtime_error naming `source` and the line.
InteractionLog parse_interactions(std::istream& in, InputFormat format,
                                  const std::string& source = "<stream>");
InteractionLog parse_interactions_file(const std::string& path, InputFormat format);

/// Complex generated by the records of the log.
SimplicialComplex build_from_log(const InteractionLog& log, int max_dim = 2);

/// Same one-skeleton, but every graph triangle filled: the complex built
/// with max_dim = 1 passed through fill_triangles.
SimplicialComplex filled_variant(const InteractionLog& log);

enum class LabelScheme { log_frequency, explicit_column };

/// Tie strength per edge of `c`. log_frequency uses ln(pair count) from the
/// log; explicit_column reads `u v value` lines from `label_path` and
/// requires exactly the edge set of the complex to be covered.
std::vector<double> tie_strength_labels(const InteractionLog& log,
                                        const SimplicialComplex& c, LabelScheme scheme,
                                        const std::string& label_path = "");

/// Regroups timestamped records into one record per maximal clique of each
/// time window of width `window` (windows anchored at the earliest
/// timestamp). Records must all carry timestamps.
InteractionLog window_group(const InteractionLog& log, double window);

}  // namespace hodgerank
