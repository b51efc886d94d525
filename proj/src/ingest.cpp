#include "hodgerank/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hodgerank {
namespace {

[[noreturn]] void fail(const std::string& source, long line_no, const std::string& what) {
  throw std::runtime_error(source + ":" + std::to_string(line_no) + ": " + what);
}

std::int64_t parse_int(const std::string& tok, const std::string& source, long line_no,
                       const char* what) {
  try {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(tok, &used);
    if (used == tok.size()) return v;
  } catch (const std::exception&) {
  }
  fail(source, line_no, std::string("expected ") + what + ", got '" + tok + "'");
}

double parse_double(const std::string& tok, const std::string& source, long line_no,
                    const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used == tok.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  fail(source, line_no, std::string("expected ") + what + ", got '" + tok + "'");
}

std::vector<std::int64_t> dedup_keep_order(std::vector<std::int64_t> ids) {
  std::vector<std::int64_t> out;
  for (const std::int64_t v : ids) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

void add_pair_counts(InteractionLog& log, const InteractionRecord& rec) {
  for (std::size_t i = 0; i + 1 < rec.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < rec.nodes.size(); ++j) {
      const std::int64_t a = std::min(rec.nodes[i], rec.nodes[j]);
      const std::int64_t b = std::max(rec.nodes[i], rec.nodes[j]);
      log.pair_counts[{a, b}] += rec.count;
    }
  }
}

}  // namespace

InputFormat parse_format(const std::string& name) {
  if (name == "simplex") return InputFormat::simplex;
  if (name == "pairs") return InputFormat::pairs;
  throw std::invalid_argument("unknown input format '" + name +
                              "' (expected simplex or pairs)");
}

InteractionLog parse_interactions(std::istream& in, InputFormat format,
                                  const std::string& source) {
  InteractionLog log;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ss >> tok) toks.push_back(tok);
    if (toks.empty() || toks[0][0] == '#') continue;

    InteractionRecord rec;
    if (format == InputFormat::simplex) {
      for (const auto& t : toks)
        rec.nodes.push_back(parse_int(t, source, line_no, "a node id"));
      rec.nodes = dedup_keep_order(std::move(rec.nodes));
      if (rec.nodes.size() < 2)
        fail(source, line_no, "interaction has fewer than two distinct nodes");
    } else {
      if (toks.size() < 2 || toks.size() > 4)
        fail(source, line_no, "expected `u v [count [timestamp]]`");
      const std::int64_t u = parse_int(toks[0], source, line_no, "a node id");
      const std::int64_t v = parse_int(toks[1], source, line_no, "a node id");
      if (u == v) fail(source, line_no, "self-pair (fewer than two distinct nodes)");
      rec.nodes = {u, v};
      if (toks.size() >= 3) {
        const std::int64_t c = parse_int(toks[2], source, line_no, "a positive count");
        if (c < 1) fail(source, line_no, "count must be at least 1");
        rec.count = static_cast<long>(c);
      }
      if (toks.size() == 4) {
        rec.timestamp = parse_double(toks[3], source, line_no, "a timestamp");
        rec.has_timestamp = true;
      }
    }
    add_pair_counts(log, rec);
    log.records.push_back(std::move(rec));
  }
  if (log.records.empty())
    throw std::runtime_error(source + ": no interaction records found");
  return log;
}

InteractionLog parse_interactions_file(const std::string& path, InputFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open interaction file '" + path + "'");
  return parse_interactions(in, format, path);
}

SimplicialComplex build_from_log(const InteractionLog& log, int max_dim) {
  std::vector<std::vector<std::int64_t>> interactions;
  interactions.reserve(log.records.size());
  for (const auto& rec : log.records) interactions.push_back(rec.nodes);
  return build_complex(interactions, max_dim);
}

SimplicialComplex filled_variant(const InteractionLog& log) {
  return fill_triangles(build_from_log(log, 1));
}

std::vector<double> tie_strength_labels(const InteractionLog& log,
                                        const SimplicialComplex& c, LabelScheme scheme,
                                        const std::string& label_path) {
  const int e = c.edge_count();
  std::vector<double> labels(static_cast<std::size_t>(e), 0.0);

  if (scheme == LabelScheme::log_frequency) {
    for (int i = 0; i < e; ++i) {
      std::int64_t a = c.node_labels[c.edges[i][0]];
      std::int64_t b = c.node_labels[c.edges[i][1]];
      if (a > b) std::swap(a, b);
      const auto it = log.pair_counts.find({a, b});
      if (it == log.pair_counts.end() || it->second < 1)
        throw std::runtime_error("tie_strength_labels: edge (" + std::to_string(a) +
                                 ", " + std::to_string(b) +
                                 ") never appears in the interaction log");
      labels[static_cast<std::size_t>(i)] = std::log(static_cast<double>(it->second));
    }
    return labels;
  }

  std::ifstream in(label_path);
  if (!in) throw std::runtime_error("cannot open label file '" + label_path + "'");
  std::map<std::pair<std::int64_t, std::int64_t>, double> given;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ss >> tok) toks.push_back(tok);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks.size() != 3) fail(label_path, line_no, "expected `u v label`");
    std::int64_t a = parse_int(toks[0], label_path, line_no, "a node id");
    std::int64_t b = parse_int(toks[1], label_path, line_no, "a node id");
    if (a == b) fail(label_path, line_no, "label line repeats a node id");
    if (a > b) std::swap(a, b);
    const double value = parse_double(toks[2], label_path, line_no, "a label value");
    if (c.node_id(a) < 0 || c.node_id(b) < 0 ||
        c.edge_id(c.node_id(a), c.node_id(b)) < 0)
      fail(label_path, line_no,
           "pair (" + std::to_string(a) + ", " + std::to_string(b) +
               ") is not an edge of the complex");
    if (!given.emplace(std::make_pair(a, b), value).second)
      fail(label_path, line_no,
           "duplicate label for pair (" + std::to_string(a) + ", " + std::to_string(b) +
               ")");
  }

  std::vector<std::string> missing;
  for (int i = 0; i < e; ++i) {
    std::int64_t a = c.node_labels[c.edges[i][0]];
    std::int64_t b = c.node_labels[c.edges[i][1]];
    if (a > b) std::swap(a, b);
    const auto it = given.find({a, b});
    if (it == given.end()) {
      if (missing.size() < 5)
        missing.push_back("(" + std::to_string(a) + ", " + std::to_string(b) + ")");
      continue;
    }
    labels[static_cast<std::size_t>(i)] = it->second;
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw std::runtime_error("label file '" + label_path + "' misses " +
                             std::to_string(missing.size()) +
                             (missing.size() == 5 ? "+" : "") + " edges, e.g. " + list);
  }
  return labels;
}

namespace {

// Maximal cliques of a small graph, reported as sorted vertex lists in
// lexicographic order (plain Bron-Kerbosch).
void bron_kerbosch(const std::vector<std::vector<int>>& adj, std::vector<int>& r,
                   std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    if (r.size() >= 2) out.push_back(r);
    return;
  }
  while (!p.empty()) {
    const int v = p.front();
    std::vector<int> pv, xv;
    for (const int w : p)
      if (std::binary_search(adj[v].begin(), adj[v].end(), w)) pv.push_back(w);
    for (const int w : x)
      if (std::binary_search(adj[v].begin(), adj[v].end(), w)) xv.push_back(w);
    r.push_back(v);
    bron_kerbosch(adj, r, std::move(pv), std::move(xv), out);
    r.pop_back();
    p.erase(p.begin());
    x.insert(std::lower_bound(x.begin(), x.end(), v), v);
  }
}

}  // namespace

InteractionLog window_group(const InteractionLog& log, double window) {
  if (!(window > 0.0)) throw std::invalid_argument("window_group: width must be positive");
  for (const auto& rec : log.records)
    if (!rec.has_timestamp)
      throw std::invalid_argument("window_group: every record needs a timestamp");

  double t0 = log.records.front().timestamp;
  for (const auto& rec : log.records) t0 = std::min(t0, rec.timestamp);

  std::map<long, std::set<std::pair<std::int64_t, std::int64_t>>> window_pairs;
  for (const auto& rec : log.records) {
    const long k = static_cast<long>(std::floor((rec.timestamp - t0) / window));
    auto& pairs = window_pairs[k];
    for (std::size_t i = 0; i + 1 < rec.nodes.size(); ++i)
      for (std::size_t j = i + 1; j < rec.nodes.size(); ++j)
        pairs.insert({std::min(rec.nodes[i], rec.nodes[j]),
                      std::max(rec.nodes[i], rec.nodes[j])});
  }

  InteractionLog grouped;
  for (const auto& [k, pairs] : window_pairs) {
    // Local ids in ascending label order for a deterministic clique search.
    std::vector<std::int64_t> labels;
    for (const auto& pr : pairs) {
      labels.push_back(pr.first);
      labels.push_back(pr.second);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::unordered_map<std::int64_t, int> local;
    for (std::size_t i = 0; i < labels.size(); ++i)
      local[labels[i]] = static_cast<int>(i);

    std::vector<std::vector<int>> adj(labels.size());
    for (const auto& pr : pairs) {
      const int a = local[pr.first];
      const int b = local[pr.second];
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());

    std::vector<int> all(labels.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    std::vector<std::vector<int>> cliques;
    std::vector<int> r;
    bron_kerbosch(adj, r, all, {}, cliques);
    std::sort(cliques.begin(), cliques.end());

    for (const auto& clique : cliques) {
      InteractionRecord rec;
      for (const int v : clique) rec.nodes.push_back(labels[static_cast<std::size_t>(v)]);
      rec.timestamp = t0 + static_cast<double>(k) * window;
      rec.has_timestamp = true;
      add_pair_counts(grouped, rec);
      grouped.records.push_back(std::move(rec));
    }
  }
  if (grouped.records.empty())
    throw std::runtime_error("window_group: no records after grouping");
  return grouped;
}

}  // namespace hodgerank
