// hodgerank: simplicial complexes, Hodge decompositions and edge PageRank
// for social interaction data, plus the experiment harness built on them.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hodgerank/baselines.hpp"
#include "hodgerank/complex.hpp"
#include "hodgerank/epr.hpp"
#include "hodgerank/harness.hpp"
#include "hodgerank/hodge.hpp"
#include "hodgerank/ingest.hpp"
#include "hodgerank/operators.hpp"
#include "hodgerank/structure.hpp"
#include "hodgerank/synth.hpp"

namespace hr = hodgerank;
using nlohmann::ordered_json;

namespace {

std::string fmt(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct InputOptions {
  std::string path;
  std::string format = "simplex";
  int max_dim = 2;
  bool fill = false;
  double window = 0.0;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.path, "interaction or complex file ('-' for stdin)")
      ->required();
  cmd->add_option("--format", in.format, "input layout: simplex, pairs or complex")
      ->check(CLI::IsMember({"simplex", "pairs", "complex"}))
      ->capture_default_str();
  cmd->add_option("--max-dim", in.max_dim, "highest simplex dimension to keep")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  cmd->add_flag("--fill", in.fill, "replace triangles by all graph triangles");
  cmd->add_option("--window", in.window,
                  "regroup timestamped pair records into per-window maximal cliques "
                  "(window width in timestamp units)");
}

struct LoadedInput {
  hr::SimplicialComplex complex;
  hr::InteractionLog log;
  bool has_log = false;
};

LoadedInput load_input(const InputOptions& in) {
  LoadedInput loaded;
  std::ifstream file;
  std::istream* stream = &std::cin;
  if (in.path != "-") {
    file.open(in.path);
    if (!file) throw std::runtime_error("cannot open input file '" + in.path + "'");
    stream = &file;
  }
  const std::string name = in.path == "-" ? "<stdin>" : in.path;

  if (in.format == "complex") {
    if (in.window > 0.0)
      throw std::invalid_argument("--window needs interaction input, not a complex file");
    loaded.complex = hr::read_complex(*stream);
  } else {
    loaded.log = hr::parse_interactions(*stream, hr::parse_format(in.format), name);
    loaded.has_log = true;
    if (in.window > 0.0) loaded.log = hr::window_group(loaded.log, in.window);
    loaded.complex = hr::build_from_log(loaded.log, in.max_dim);
  }
  if (in.fill) loaded.complex = hr::fill_triangles(loaded.complex);
  return loaded;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  return out;
}

// Stream to `--out` when given, else stdout.
struct OutTarget {
  std::ofstream file;
  std::ostream* stream = &std::cout;
  bool to_file = false;

  explicit OutTarget(const std::string& path) {
    if (!path.empty()) {
      file = open_out(path);
      stream = &file;
      to_file = true;
    }
  }
};

void external_edge(const hr::SimplicialComplex& c, int i, std::int64_t& a,
                   std::int64_t& b) {
  a = c.node_labels[c.edges[i][0]];
  b = c.node_labels[c.edges[i][1]];
  if (a > b) std::swap(a, b);
}

std::string summary_line(const hr::SimplicialComplex& c) {
  const double n = c.node_count();
  const double possible = n * (n - 1.0) / 2.0;
  const double density = possible > 0.0 ? c.edge_count() / possible : 0.0;
  return "nodes=" + std::to_string(c.node_count()) +
         " edges=" + std::to_string(c.edge_count()) +
         " triangles=" + std::to_string(c.triangle_count()) + " density=" + fmt(density);
}

// ---------------------------------------------------------------- build ----

struct BuildArgs {
  InputOptions in;
  std::string out;
  std::string dump;
};

void run_build(const BuildArgs& args) {
  const LoadedInput loaded = load_input(args.in);
  const hr::SimplicialComplex& c = loaded.complex;
  OutTarget out(args.out);

  if (args.dump.empty()) {
    hr::write_complex(*out.stream, c);
  } else {
    const hr::BoundaryOperators ops = hr::boundary_operators(c);
    if (args.dump == "b1") {
      hr::write_coordinate(*out.stream, ops.b1);
    } else if (args.dump == "b2") {
      hr::write_coordinate(*out.stream, ops.b2);
    } else if (args.dump == "l0") {
      hr::write_coordinate(*out.stream, hr::node_laplacian(ops));
    } else {
      const hr::LaplacianBundle bundle = hr::hodge_laplacian(ops);
      if (args.dump == "l1") {
        hr::write_coordinate(*out.stream, bundle.l1);
      } else if (args.dump == "l1-norm") {
        hr::write_coordinate(*out.stream, bundle.l1_norm);
      } else {
        hr::write_coordinate(*out.stream, bundle.l1_sym);
      }
    }
  }
  // Keep the serialized output clean when it goes to stdout.
  (out.to_file ? std::cout : std::cerr) << summary_line(c) << "\n";
}

// ------------------------------------------------------------------ epr ----

struct EprArgs {
  InputOptions in;
  std::string out;
  double beta = 2.5;
  double tol = 1e-10;
  std::string mode = "weighted";
  std::string edge;
  bool reversed = false;
  int threads = 0;
  bool json = false;
};

int find_edge_by_labels(const hr::SimplicialComplex& c, const std::string& text) {
  std::string cleaned = text;
  for (char& ch : cleaned)
    if (ch == ',') ch = ' ';
  std::istringstream ss(cleaned);
  std::int64_t a = 0, b = 0;
  if (!(ss >> a >> b))
    throw std::invalid_argument("--edge expects two node ids, got '" + text + "'");
  std::string rest;
  if (ss >> rest)
    throw std::invalid_argument("--edge expects two node ids, got '" + text + "'");
  const int u = c.node_id(a);
  const int v = c.node_id(b);
  if (u < 0 || v < 0 || c.edge_id(u, v) < 0)
    throw std::invalid_argument("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                ") is not in the complex");
  return c.edge_id(u, v);
}

void run_epr(const EprArgs& args) {
  const LoadedInput loaded = load_input(args.in);
  const hr::SimplicialComplex& c = loaded.complex;
  const hr::BoundaryOperators ops = hr::boundary_operators(c);
  const hr::LaplacianBundle bundle = hr::hodge_laplacian(ops);

  hr::EprConfig cfg;
  cfg.beta = args.beta;
  cfg.tol = args.tol;
  cfg.mode = hr::parse_mode(args.mode);
  cfg.threads = args.threads;

  OutTarget out(args.out);

  if (!args.edge.empty()) {
    const int seed = find_edge_by_labels(c, args.edge);
    const hr::EprResult res = hr::personalized_epr(ops, bundle, seed, cfg, args.reversed);
    if (args.json) {
      ordered_json doc;
      std::int64_t a, b;
      external_edge(c, seed, a, b);
      doc["seed"] = {a, b};
      doc["reversed"] = args.reversed;
      doc["beta"] = args.beta;
      doc["mode"] = args.mode;
      doc["total"] = res.total;
      doc["gradient_norm"] = res.components.gradient_norm;
      doc["curl_norm"] = res.components.curl_norm;
      doc["harmonic_norm"] = res.components.harmonic_norm;
      doc["iterations"] = res.iterations;
      doc["residual"] = res.residual;
      ordered_json rows = ordered_json::array();
      for (int i = 0; i < c.edge_count(); ++i) {
        std::int64_t ea, eb;
        external_edge(c, i, ea, eb);
        rows.push_back({{"u", ea},
                        {"v", eb},
                        {"pi", res.pi[i]},
                        {"grad", res.components.gradient[i]},
                        {"curl", res.components.curl[i]},
                        {"harm", res.components.harmonic[i]}});
      }
      doc["edges"] = std::move(rows);
      *out.stream << doc.dump(2) << "\n";
    } else {
      *out.stream << "u,v,pi,grad,curl,harm\n";
      for (int i = 0; i < c.edge_count(); ++i) {
        std::int64_t ea, eb;
        external_edge(c, i, ea, eb);
        *out.stream << ea << "," << eb << "," << fmt(res.pi[i]) << ","
                    << fmt(res.components.gradient[i]) << ","
                    << fmt(res.components.curl[i]) << ","
                    << fmt(res.components.harmonic[i]) << "\n";
      }
    }
    return;
  }

  const std::vector<hr::EprSummary> sweep = hr::epr_all_edges(ops, bundle, cfg);
  if (args.json) {
    ordered_json doc;
    doc["beta"] = args.beta;
    doc["mode"] = args.mode;
    ordered_json rows = ordered_json::array();
    for (const auto& s : sweep) {
      std::int64_t a, b;
      external_edge(c, s.edge, a, b);
      rows.push_back({{"u", a},
                      {"v", b},
                      {"total", s.total},
                      {"grad", s.gradient_norm},
                      {"curl", s.curl_norm},
                      {"harm", s.harmonic_norm}});
    }
    doc["edges"] = std::move(rows);
    *out.stream << doc.dump(2) << "\n";
  } else {
    *out.stream << "u,v,total,grad,curl,harm\n";
    for (const auto& s : sweep) {
      std::int64_t a, b;
      external_edge(c, s.edge, a, b);
      *out.stream << a << "," << b << "," << fmt(s.total) << "," << fmt(s.gradient_norm)
                  << "," << fmt(s.curl_norm) << "," << fmt(s.harmonic_norm) << "\n";
    }
  }
}

// ------------------------------------------------------------ decompose ----

struct DecomposeArgs {
  InputOptions in;
  std::string out;
  std::string flow_path;
  std::string mode = "weighted";
};

Eigen::VectorXd read_flow(const std::string& path, const hr::SimplicialComplex& c) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open flow file '" + path + "'");
  Eigen::VectorXd flow = Eigen::VectorXd::Zero(c.edge_count());
  std::vector<char> seen(static_cast<std::size_t>(c.edge_count()), 0);
  std::string line;
  long line_no = 0;
  long filled = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    for (char& ch : line)
      if (ch == ',') ch = ' ';
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;
    if (first[0] == '#') continue;
    std::int64_t a = 0;
    std::int64_t b = 0;
    double value = 0.0;
    try {
      a = std::stoll(first);
    } catch (const std::exception&) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": bad node id");
    }
    if (!(ss >> b >> value))
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": expected `u v value`");
    const int u = c.node_id(a);
    const int v = c.node_id(b);
    const int idx = (u >= 0 && v >= 0) ? c.edge_id(u, v) : -1;
    if (idx < 0)
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": pair (" +
                               std::to_string(a) + ", " + std::to_string(b) +
                               ") is not an edge of the complex");
    if (seen[static_cast<std::size_t>(idx)])
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": duplicate flow value for this edge");
    seen[static_cast<std::size_t>(idx)] = 1;
    flow[idx] = value;
    ++filled;
  }
  if (filled != c.edge_count())
    throw std::runtime_error("flow file '" + path + "' covers " + std::to_string(filled) +
                             " of " + std::to_string(c.edge_count()) + " edges");
  return flow;
}

void run_decompose(const DecomposeArgs& args) {
  const LoadedInput loaded = load_input(args.in);
  const hr::SimplicialComplex& c = loaded.complex;
  const hr::BoundaryOperators ops = hr::boundary_operators(c);
  const hr::LaplacianBundle bundle = hr::hodge_laplacian(ops);
  const Eigen::VectorXd flow = read_flow(args.flow_path, c);
  const hr::HodgeComponents parts =
      hr::decompose(flow, bundle, ops, hr::parse_mode(args.mode));

  OutTarget out(args.out);
  *out.stream << "u,v,flow,grad,curl,harm\n";
  for (int i = 0; i < c.edge_count(); ++i) {
    std::int64_t a, b;
    external_edge(c, i, a, b);
    *out.stream << a << "," << b << "," << fmt(flow[i]) << "," << fmt(parts.gradient[i])
                << "," << fmt(parts.curl[i]) << "," << fmt(parts.harmonic[i]) << "\n";
  }
  *out.stream << "# norms grad=" << fmt(parts.gradient_norm)
              << " curl=" << fmt(parts.curl_norm) << " harm=" << fmt(parts.harmonic_norm)
              << " flow=" << fmt(flow.norm()) << "\n";
}

// -------------------------------------------------------------- bridges ----

struct BridgesArgs {
  InputOptions in;
  std::string out;
};

void run_bridges(const BridgesArgs& args) {
  const LoadedInput loaded = load_input(args.in);
  const hr::SimplicialComplex& c = loaded.complex;
  const hr::BridgeLabels labels = hr::classify_edges(hr::underlying_graph(c));

  OutTarget out(args.out);
  *out.stream << "u,v,label,tie_range\n";
  for (int i = 0; i < c.edge_count(); ++i) {
    std::int64_t a, b;
    external_edge(c, i, a, b);
    *out.stream << a << "," << b << "," << hr::to_string(labels.label[i]) << ","
                << labels.tie_range[i] << "\n";
  }
}

// ------------------------------------------------------------- features ----

struct FeaturesArgs {
  InputOptions in;
  std::string out;
  std::string features;
  double beta = 2.5;
  double tol = 1e-10;
  std::string mode = "weighted";
  int threads = 0;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void run_features(const FeaturesArgs& args) {
  const LoadedInput loaded = load_input(args.in);
  const hr::SimplicialComplex& c = loaded.complex;

  hr::EprConfig cfg;
  cfg.beta = args.beta;
  cfg.tol = args.tol;
  cfg.mode = hr::parse_mode(args.mode);
  cfg.threads = args.threads;

  const hr::FeatureTable table =
      hr::build_feature_table(c, split_list(args.features), cfg);

  OutTarget out(args.out);
  *out.stream << "u,v";
  for (const auto& col : table.columns) *out.stream << "," << col;
  *out.stream << "\n";
  for (int i = 0; i < c.edge_count(); ++i) {
    std::int64_t a, b;
    external_edge(c, i, a, b);
    *out.stream << a << "," << b;
    for (Eigen::Index j = 0; j < table.values.cols(); ++j)
      *out.stream << "," << fmt(table.values(i, j));
    *out.stream << "\n";
  }
}

// ----------------------------------------------------------- experiment ----

struct ExperimentArgs {
  InputOptions in;
  std::string out;
  std::string task;
  std::string features;
  std::string labels = "log";
  std::string curve;
  int folds = 5;
  std::uint64_t seed = 42;
  bool no_balance = false;
  double beta = 2.5;
  double tol = 1e-10;
  std::string mode = "weighted";
  int threads = 0;
};

ordered_json coefficients_json(const std::vector<hr::CoefficientEstimate>& coeffs) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : coeffs) {
    arr.push_back({{"column", c.column},
                   {"value", c.value},
                   {"ci_low", c.ci_low},
                   {"ci_high", c.ci_high},
                   {"degenerate", c.degenerate}});
  }
  return arr;
}

void run_experiment(const ExperimentArgs& args) {
  const LoadedInput loaded = load_input(args.in);
  const hr::SimplicialComplex& c = loaded.complex;

  hr::EprConfig cfg;
  cfg.beta = args.beta;
  cfg.tol = args.tol;
  cfg.mode = hr::parse_mode(args.mode);
  cfg.threads = args.threads;

  const std::vector<std::string> sets = split_list(args.features);
  const hr::FeatureTable table = hr::build_feature_table(c, sets, cfg);

  hr::ExperimentSpec spec;
  spec.folds = args.folds;
  spec.seed = args.seed;
  spec.balance = !args.no_balance;

  ordered_json doc;
  doc["task"] = args.task;
  doc["feature_sets"] = sets;
  doc["beta"] = args.beta;
  doc["mode"] = args.mode;
  doc["folds"] = args.folds;
  doc["seed"] = args.seed;

  hr::ExperimentResult result;
  if (args.task == "tie-strength") {
    std::vector<double> labels;
    if (args.labels == "log") {
      if (!loaded.has_log)
        throw std::invalid_argument(
            "tie-strength labels from pair frequency need interaction input, "
            "not a complex file (or pass --labels FILE)");
      labels = hr::tie_strength_labels(loaded.log, c, hr::LabelScheme::log_frequency);
    } else {
      labels = hr::tie_strength_labels(loaded.log, c, hr::LabelScheme::explicit_column,
                                       args.labels);
    }
    result = hr::run_tie_strength(table, labels, spec);

    if (!args.curve.empty()) {
      const hr::BridgeLabels bridges = hr::classify_edges(hr::underlying_graph(c));
      std::vector<double> pred(result.rows_used.size());
      std::vector<double> truth(result.rows_used.size());
      std::vector<int> ranges(result.rows_used.size());
      for (std::size_t i = 0; i < result.rows_used.size(); ++i) {
        pred[i] = result.oof_prediction[i];
        truth[i] = labels[static_cast<std::size_t>(result.rows_used[i])];
        ranges[i] = bridges.tie_range[static_cast<std::size_t>(result.rows_used[i])];
      }
      const auto curve = hr::tie_range_curve(pred, truth, ranges);
      std::ofstream curve_out = open_out(args.curve);
      curve_out << "tie_range,count,mean_predicted,mean_true\n";
      for (const auto& row : curve)
        curve_out << row.tie_range << "," << row.count << "," << fmt(row.mean_predicted)
                  << "," << fmt(row.mean_true) << "\n";
    }
  } else {  // bridge-class
    if (!args.curve.empty())
      throw std::invalid_argument("--curve applies to the tie-strength task only");
    const hr::BridgeLabels bridges = hr::classify_edges(hr::underlying_graph(c));
    result = hr::run_bridge_classification(table, bridges, spec);
    doc["classes"] = result.class_names;
    doc["balance"] = spec.balance;
  }

  doc["columns"] = result.columns;
  ordered_json fold_acc = ordered_json::array();
  for (const auto& fr : result.fold_reports) fold_acc.push_back(fr.accuracy);
  doc["fold_accuracy"] = std::move(fold_acc);
  doc["mean_accuracy"] = result.mean_accuracy;
  doc["sd_accuracy"] = result.sd_accuracy;

  ordered_json folds_detail = ordered_json::array();
  for (const auto& fr : result.fold_reports) {
    ordered_json fold;
    fold["accuracy"] = fr.accuracy;
    if (!fr.coefficients.empty()) fold["coefficients"] = coefficients_json(fr.coefficients);
    if (fr.weights.size() > 0) {
      ordered_json w = ordered_json::array();
      for (Eigen::Index r = 0; r < fr.weights.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index q = 0; q < fr.weights.cols(); ++q)
          row.push_back(fr.weights(r, q));
        w.push_back(std::move(row));
      }
      fold["weights"] = std::move(w);
    }
    folds_detail.push_back(std::move(fold));
  }
  doc["folds_detail"] = std::move(folds_detail);
  doc["rows_used"] = result.rows_used.size();
  doc["warnings"] = result.warnings;

  OutTarget out(args.out);
  *out.stream << doc.dump(2) << "\n";
}

// ---------------------------------------------------------------- synth ----

struct SynthArgs {
  std::string family;
  std::string out;
  std::string labels_out;
  int clique_size = 6;
  int path_length = 1;
  int length = 5;
  int n = 20;
  double edge_p = 0.3;
  double tri_p = 0.5;
  int cliques = 25;
  int pendant_length = 12;
  double triple_fill = 0.5;
  double noise_sd = 0.25;
  std::uint64_t seed = 7;
};

void run_synth(const SynthArgs& args) {
  std::vector<std::vector<std::int64_t>> interactions;
  hr::PlantedConfig planted;
  if (args.family == "barbell") {
    interactions = hr::synth_barbell(args.clique_size, args.path_length);
  } else if (args.family == "cycle") {
    interactions = hr::synth_cycle(args.length);
  } else if (args.family == "path") {
    interactions = hr::synth_path(args.length);
  } else if (args.family == "random") {
    interactions = hr::synth_random_filled(args.n, args.edge_p, args.tri_p, args.seed);
  } else {  // planted
    planted.cliques = args.cliques;
    planted.clique_size = args.clique_size;
    planted.pendant_length = args.pendant_length;
    planted.triple_fill = args.triple_fill;
    planted.noise_sd = args.noise_sd;
    planted.seed = args.seed;
    interactions = hr::synth_planted(planted);
  }

  OutTarget out(args.out);
  for (const auto& rec : interactions) {
    for (std::size_t i = 0; i < rec.size(); ++i)
      *out.stream << (i ? " " : "") << rec[i];
    *out.stream << "\n";
  }

  const hr::SimplicialComplex c = hr::build_complex(interactions);
  if (!args.labels_out.empty()) {
    if (args.family != "planted")
      throw std::invalid_argument("--labels-out applies to the planted family only");
    const hr::BridgeLabels bridges = hr::classify_edges(hr::underlying_graph(c));
    const std::vector<double> strength = hr::planted_tie_strength(c, bridges, planted);
    std::ofstream labels = open_out(args.labels_out);
    for (int i = 0; i < c.edge_count(); ++i) {
      std::int64_t a, b;
      external_edge(c, i, a, b);
      labels << a << " " << b << " " << fmt(strength[static_cast<std::size_t>(i)])
             << "\n";
    }
  }
  (out.to_file ? std::cout : std::cerr) << summary_line(c) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simplicial Hodge decompositions and edge PageRank for interaction data"};
  app.require_subcommand(1);

  BuildArgs build_args;
  CLI::App* build = app.add_subcommand("build", "build and serialize a complex");
  add_input_options(build, build_args.in);
  build->add_option("--out", build_args.out, "output file (default stdout)");
  build->add_option("--dump", build_args.dump,
                    "write an operator instead of the complex")
      ->check(CLI::IsMember({"b1", "b2", "l0", "l1", "l1-norm", "l1-sym"}));

  EprArgs epr_args;
  CLI::App* epr = app.add_subcommand("epr", "edge PageRank sweep or single seed");
  add_input_options(epr, epr_args.in);
  epr->add_option("--out", epr_args.out, "output file (default stdout)");
  epr->add_option("--beta", epr_args.beta, "teleport strength (> 2)")
      ->capture_default_str();
  epr->add_option("--tol", epr_args.tol, "absolute solver residual bound")
      ->capture_default_str();
  epr->add_option("--mode", epr_args.mode, "decomposition convention")
      ->check(CLI::IsMember({"unnormalized", "weighted", "symmetric"}))
      ->capture_default_str();
  epr->add_option("--edge", epr_args.edge, "single seed edge as `u,v` (default: sweep)");
  epr->add_flag("--reversed", epr_args.reversed, "flip the seed orientation");
  epr->add_option("--threads", epr_args.threads, "worker threads (0 = auto)");
  epr->add_flag("--json", epr_args.json, "emit JSON instead of CSV");

  DecomposeArgs dec_args;
  CLI::App* dec = app.add_subcommand("decompose", "Hodge-decompose an edge flow");
  add_input_options(dec, dec_args.in);
  dec->add_option("--out", dec_args.out, "output file (default stdout)");
  dec->add_option("--flow", dec_args.flow_path, "flow file with `u v value` lines")
      ->required();
  dec->add_option("--mode", dec_args.mode, "decomposition convention")
      ->check(CLI::IsMember({"unnormalized", "weighted", "symmetric"}))
      ->capture_default_str();

  BridgesArgs bridges_args;
  CLI::App* bridges = app.add_subcommand("bridges", "classify edges and tie ranges");
  add_input_options(bridges, bridges_args.in);
  bridges->add_option("--out", bridges_args.out, "output file (default stdout)");

  FeaturesArgs feat_args;
  CLI::App* feat = app.add_subcommand("features", "per-edge feature table");
  add_input_options(feat, feat_args.in);
  feat->add_option("--out", feat_args.out, "output file (default stdout)");
  feat->add_option("--features", feat_args.features, "comma-separated feature sets")
      ->required();
  feat->add_option("--beta", feat_args.beta, "teleport strength (> 2)")
      ->capture_default_str();
  feat->add_option("--tol", feat_args.tol, "absolute solver residual bound")
      ->capture_default_str();
  feat->add_option("--mode", feat_args.mode, "decomposition convention")
      ->check(CLI::IsMember({"unnormalized", "weighted", "symmetric"}))
      ->capture_default_str();
  feat->add_option("--threads", feat_args.threads, "worker threads (0 = auto)");

  ExperimentArgs exp_args;
  CLI::App* exp = app.add_subcommand("experiment", "cross-validated prediction tasks");
  add_input_options(exp, exp_args.in);
  exp->add_option("--out", exp_args.out, "output file (default stdout)");
  exp->add_option("--task", exp_args.task, "tie-strength or bridge-class")
      ->check(CLI::IsMember({"tie-strength", "bridge-class"}))
      ->required();
  exp->add_option("--features", exp_args.features, "comma-separated feature sets")
      ->required();
  exp->add_option("--labels", exp_args.labels,
                  "`log` for ln pair frequency, or a label file path")
      ->capture_default_str();
  exp->add_option("--curve", exp_args.curve,
                  "also write the tie-range curve CSV to this file");
  exp->add_option("--folds", exp_args.folds, "cross-validation folds")
      ->capture_default_str();
  exp->add_option("--seed", exp_args.seed, "fold/balance shuffle seed")
      ->capture_default_str();
  exp->add_flag("--no-balance", exp_args.no_balance,
                "skip class balancing in bridge classification");
  exp->add_option("--beta", exp_args.beta, "teleport strength (> 2)")
      ->capture_default_str();
  exp->add_option("--tol", exp_args.tol, "absolute solver residual bound")
      ->capture_default_str();
  exp->add_option("--mode", exp_args.mode, "decomposition convention")
      ->check(CLI::IsMember({"unnormalized", "weighted", "symmetric"}))
      ->capture_default_str();
  exp->add_option("--threads", exp_args.threads, "worker threads (0 = auto)");

  SynthArgs synth_args;
  CLI::App* synth = app.add_subcommand("synth", "generate benchmark interaction data");
  synth->add_option("--family", synth_args.family,
                    "barbell, cycle, path, random or planted")
      ->check(CLI::IsMember({"barbell", "cycle", "path", "random", "planted"}))
      ->required();
  synth->add_option("--out", synth_args.out, "output file (default stdout)");
  synth->add_option("--labels-out", synth_args.labels_out,
                    "also write planted tie-strength labels (`u v value`)");
  synth->add_option("--clique-size", synth_args.clique_size, "clique size")
      ->capture_default_str();
  synth->add_option("--path-length", synth_args.path_length, "barbell path length")
      ->capture_default_str();
  synth->add_option("--length", synth_args.length, "cycle/path length")
      ->capture_default_str();
  synth->add_option("--n", synth_args.n, "random family node count")
      ->capture_default_str();
  synth->add_option("--edge-p", synth_args.edge_p, "random family edge probability")
      ->capture_default_str();
  synth->add_option("--tri-p", synth_args.tri_p, "random family triangle fill probability")
      ->capture_default_str();
  synth->add_option("--cliques", synth_args.cliques, "planted clique count")
      ->capture_default_str();
  synth->add_option("--pendant-length", synth_args.pendant_length,
                    "planted pendant path length")
      ->capture_default_str();
  synth->add_option("--triple-fill", synth_args.triple_fill,
                    "planted triple fill probability")
      ->capture_default_str();
  synth->add_option("--noise-sd", synth_args.noise_sd, "planted label noise")
      ->capture_default_str();
  synth->add_option("--seed", synth_args.seed, "generator seed")->capture_default_str();

  std::string active = "";
  try {
    app.parse(argc, argv);
    if (build->parsed()) {
      active = "build";
      run_build(build_args);
    } else if (epr->parsed()) {
      active = "epr";
      run_epr(epr_args);
    } else if (dec->parsed()) {
      active = "decompose";
      run_decompose(dec_args);
    } else if (bridges->parsed()) {
      active = "bridges";
      run_bridges(bridges_args);
    } else if (feat->parsed()) {
      active = "features";
      run_features(feat_args);
    } else if (exp->parsed()) {
      active = "experiment";
      run_experiment(exp_args);
    } else if (synth->parsed()) {
      active = "synth";
      run_synth(synth_args);
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    ordered_json err;
    err["error"] = {{"message", e.what()}, {"command", "argument parsing"}};
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    ordered_json err;
    err["error"] = {{"message", e.what()},
                    {"command", active.empty() ? "startup" : active}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 0;
}
