#include "hodgerank/complex.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace hodgerank {
namespace {

template <class Simplex>
int find_sorted(const std::vector<Simplex>& list, const Simplex& key) {
  const auto it = std::lower_bound(list.begin(), list.end(), key);
  if (it != list.end() && *it == key) return static_cast<int>(it - list.begin());
  return -1;
}

}  // namespace

int SimplicialComplex::edge_id(int u, int v) const {
  if (u > v) std::swap(u, v);
  return find_sorted(edges, std::array<int, 2>{u, v});
}

int SimplicialComplex::triangle_id(int u, int v, int w) const {
  std::array<int, 3> key{u, v, w};
  std::sort(key.begin(), key.end());
  return find_sorted(triangles, key);
}

int SimplicialComplex::node_id(std::int64_t label) const {
  for (std::size_t i = 0; i < node_labels.size(); ++i)
    if (node_labels[i] == label) return static_cast<int>(i);
  return -1;
}

SimplicialComplex build_complex(const std::vector<std::vector<std::int64_t>>& interactions,
                                int max_dim) {
  if (max_dim < 1 || max_dim > 2)
    throw std::invalid_argument("build_complex: max_dim must be 1 or 2");

  SimplicialComplex c;
  std::unordered_map<std::int64_t, int> id_of;
  id_of.reserve(interactions.size() * 2);

  std::vector<int> members;
  for (std::size_t k = 0; k < interactions.size(); ++k) {
    members.clear();
    for (const std::int64_t label : interactions[k]) {
      auto [it, inserted] = id_of.try_emplace(label, static_cast<int>(c.node_labels.size()));
      if (inserted) c.node_labels.push_back(label);
      members.push_back(it->second);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.size() < 2)
      throw std::invalid_argument("build_complex: interaction " + std::to_string(k) +
                                  " has fewer than two distinct nodes");
    for (std::size_t i = 0; i + 1 < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        c.edges.push_back({members[i], members[j]});
    if (max_dim >= 2 && members.size() >= 3) {
      for (std::size_t i = 0; i + 2 < members.size(); ++i)
        for (std::size_t j = i + 1; j + 1 < members.size(); ++j)
          for (std::size_t l = j + 1; l < members.size(); ++l)
            c.triangles.push_back({members[i], members[j], members[l]});
    }
  }

  std::sort(c.edges.begin(), c.edges.end());
  c.edges.erase(std::unique(c.edges.begin(), c.edges.end()), c.edges.end());
  std::sort(c.triangles.begin(), c.triangles.end());
  c.triangles.erase(std::unique(c.triangles.begin(), c.triangles.end()), c.triangles.end());
  return c;
}

SimplicialComplex fill_triangles(const SimplicialComplex& c) {
  SimplicialComplex filled;
  filled.node_labels = c.node_labels;
  filled.edges = c.edges;
  filled.triangles.clear();

  const Graph g = underlying_graph(c);
  for (const auto& e : c.edges) {
    const int u = e[0], v = e[1];
    // Common neighbors w with v < w give each triangle once (u < v < w).
    const auto& a = g.adj[u];
    const auto& b = g.adj[v];
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] < b[j]) {
        ++i;
      } else if (a[i] > b[j]) {
        ++j;
      } else {
        if (a[i] > v) filled.triangles.push_back({u, v, a[i]});
        ++i;
        ++j;
      }
    }
  }
  std::sort(filled.triangles.begin(), filled.triangles.end());
  return filled;
}

Graph underlying_graph(const SimplicialComplex& c) {
  Graph g = Graph::from_edges(c.node_count(), c.edges);
  g.labels = c.node_labels;
  return g;
}

void write_complex(std::ostream& out, const SimplicialComplex& c) {
  out << "nodes=" << c.node_count() << " edges=" << c.edge_count()
      << " triangles=" << c.triangle_count() << "\n";
  for (const std::int64_t label : c.node_labels) out << label << "\n";
  for (const auto& e : c.edges) {
    std::int64_t a = c.node_labels[e[0]], b = c.node_labels[e[1]];
    if (a > b) std::swap(a, b);
    out << a << " " << b << "\n";
  }
  for (const auto& t : c.triangles) {
    std::array<std::int64_t, 3> lab{c.node_labels[t[0]], c.node_labels[t[1]],
                                    c.node_labels[t[2]]};
    std::sort(lab.begin(), lab.end());
    out << lab[0] << " " << lab[1] << " " << lab[2] << "\n";
  }
}

namespace {

// Next content line (comments and blank lines skipped); false at EOF.
bool next_line(std::istream& in, std::string& line, long& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto pos = line.find_first_not_of(" \t");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

std::vector<std::int64_t> parse_ids(const std::string& line, long line_no) {
  std::istringstream ss(line);
  std::vector<std::int64_t> ids;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size())
      throw std::runtime_error("read_complex: line " + std::to_string(line_no) +
                               ": expected integer node id, got '" + tok + "'");
    ids.push_back(v);
  }
  return ids;
}

}  // namespace

SimplicialComplex read_complex(std::istream& in) {
  std::string line;
  long line_no = 0;
  if (!next_line(in, line, line_no))
    throw std::runtime_error("read_complex: empty input");

  long n = -1, e = -1, t = -1;
  {
    std::istringstream ss(line);
    std::string field;
    while (ss >> field) {
      const auto eq = field.find('=');
      if (eq == std::string::npos)
        throw std::runtime_error("read_complex: malformed header '" + line + "'");
      const std::string key = field.substr(0, eq);
      long value = 0;
      try {
        std::size_t used = 0;
        value = std::stol(field.substr(eq + 1), &used);
        if (used != field.size() - eq - 1) throw std::runtime_error("trailing");
      } catch (const std::exception&) {
        throw std::runtime_error("read_complex: malformed header '" + line + "'");
      }
      if (key == "nodes") {
        n = value;
      } else if (key == "edges") {
        e = value;
      } else if (key == "triangles") {
        t = value;
      } else {
        throw std::runtime_error("read_complex: unknown header field '" + key + "'");
      }
    }
  }
  if (n < 0 || e < 0 || t < 0)
    throw std::runtime_error("read_complex: header must set nodes=, edges=, triangles=");

  SimplicialComplex c;
  std::unordered_map<std::int64_t, int> id_of;
  id_of.reserve(static_cast<std::size_t>(n) * 2);

  for (long i = 0; i < n; ++i) {
    if (!next_line(in, line, line_no))
      throw std::runtime_error("read_complex: expected " + std::to_string(n) +
                               " node lines, input ended after " + std::to_string(i));
    const auto ids = parse_ids(line, line_no);
    if (ids.size() != 1)
      throw std::runtime_error("read_complex: line " + std::to_string(line_no) +
                               ": expected a single node id");
    auto [it, inserted] = id_of.try_emplace(ids[0], static_cast<int>(c.node_labels.size()));
    if (!inserted)
      throw std::runtime_error("read_complex: line " + std::to_string(line_no) +
                               ": duplicate node id " + std::to_string(ids[0]));
    c.node_labels.push_back(ids[0]);
  }

  auto internal = [&](std::int64_t label, long where) {
    const auto it = id_of.find(label);
    if (it == id_of.end())
      throw std::runtime_error("read_complex: line " + std::to_string(where) +
                               ": unknown node id " + std::to_string(label));
    return it->second;
  };

  for (long i = 0; i < e; ++i) {
    if (!next_line(in, line, line_no))
      throw std::runtime_error("read_complex: expected " + std::to_string(e) +
                               " edge lines, input ended after " + std::to_string(i));
    const auto ids = parse_ids(line, line_no);
    if (ids.size() != 2 || ids[0] == ids[1])
      throw std::runtime_error("read_complex: line " + std::to_string(line_no) +
                               ": expected two distinct node ids");
    std::array<int, 2> edge{internal(ids[0], line_no), internal(ids[1], line_no)};
    if (edge[0] > edge[1]) std::swap(edge[0], edge[1]);
    c.edges.push_back(edge);
  }

  for (long i = 0; i < t; ++i) {
    if (!next_line(in, line, line_no))
      throw std::runtime_error("read_complex: expected " + std::to_string(t) +
                               " triangle lines, input ended after " + std::to_string(i));
    const auto ids = parse_ids(line, line_no);
    if (ids.size() != 3 || ids[0] == ids[1] || ids[0] == ids[2] || ids[1] == ids[2])
      throw std::runtime_error("read_complex: line " + std::to_string(line_no) +
                               ": expected three distinct node ids");
    std::array<int, 3> tri{internal(ids[0], line_no), internal(ids[1], line_no),
                           internal(ids[2], line_no)};
    std::sort(tri.begin(), tri.end());
    c.triangles.push_back(tri);
  }

  if (next_line(in, line, line_no))
    throw std::runtime_error("read_complex: unexpected extra content at line " +
                             std::to_string(line_no));

  std::sort(c.edges.begin(), c.edges.end());
  if (std::adjacent_find(c.edges.begin(), c.edges.end()) != c.edges.end())
    throw std::runtime_error("read_complex: duplicate edge");
  std::sort(c.triangles.begin(), c.triangles.end());
  if (std::adjacent_find(c.triangles.begin(), c.triangles.end()) != c.triangles.end())
    throw std::runtime_error("read_complex: duplicate triangle");

  for (const auto& tri : c.triangles) {
    if (c.edge_id(tri[0], tri[1]) < 0 || c.edge_id(tri[0], tri[2]) < 0 ||
        c.edge_id(tri[1], tri[2]) < 0)
      throw std::runtime_error("read_complex: triangle face missing from edge list");
  }
  return c;
}

}  // namespace hodgerank
