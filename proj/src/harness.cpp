#include "hodgerank/harness.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "hodgerank/rng.hpp"

namespace hodgerank {
namespace {

constexpr double kZeroVariance = 1e-12;
constexpr double kNormal95 = 1.959963984540054;  // 97.5% standard normal quantile

struct Standardizer {
  Eigen::VectorXd mean;
  Eigen::VectorXd scale;  // population standard deviation; 1 when degenerate
  std::vector<bool> degenerate;
};

Standardizer fit_standardizer(const Eigen::MatrixXd& x, const std::vector<int>& rows) {
  const Eigen::Index k = x.cols();
  Standardizer s;
  s.mean = Eigen::VectorXd::Zero(k);
  s.scale = Eigen::VectorXd::Ones(k);
  s.degenerate.assign(static_cast<std::size_t>(k), false);
  const double m = static_cast<double>(rows.size());
  for (Eigen::Index j = 0; j < k; ++j) {
    double sum = 0.0;
    for (const int r : rows) sum += x(r, j);
    const double mu = sum / m;
    double ss = 0.0;
    for (const int r : rows) {
      const double d = x(r, j) - mu;
      ss += d * d;
    }
    const double sd = std::sqrt(ss / m);
    s.mean[j] = mu;
    if (sd < kZeroVariance) {
      s.degenerate[static_cast<std::size_t>(j)] = true;
    } else {
      s.scale[j] = sd;
    }
  }
  return s;
}

// Design matrix [1 | standardized features] over the given rows.
Eigen::MatrixXd design(const Eigen::MatrixXd& x, const std::vector<int>& rows,
                       const Standardizer& s) {
  Eigen::MatrixXd d(static_cast<Eigen::Index>(rows.size()), x.cols() + 1);
  d.col(0).setOnes();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      d(static_cast<Eigen::Index>(i), j + 1) = (x(rows[i], j) - s.mean[j]) / s.scale[j];
  return d;
}

struct MeanScale {
  double mean = 0.0;
  double scale = 1.0;
  bool degenerate = false;
};

MeanScale fit_target(const std::vector<double>& y, const std::vector<int>& rows) {
  MeanScale t;
  const double m = static_cast<double>(rows.size());
  double sum = 0.0;
  for (const int r : rows) sum += y[static_cast<std::size_t>(r)];
  t.mean = sum / m;
  double ss = 0.0;
  for (const int r : rows) {
    const double d = y[static_cast<std::size_t>(r)] - t.mean;
    ss += d * d;
  }
  const double sd = std::sqrt(ss / m);
  if (sd < kZeroVariance) {
    t.degenerate = true;
  } else {
    t.scale = sd;
  }
  return t;
}

struct OlsFit {
  Eigen::VectorXd beta;
  Eigen::VectorXd se;
  bool ridge_used = false;
  Eigen::Index rank = 0;
};

OlsFit fit_ols(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, double ridge) {
  OlsFit fit;
  const Eigen::Index p = x.cols();
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x);
  fit.rank = qr.rank();

  Eigen::MatrixXd xtx = x.transpose() * x;
  if (fit.rank == p && x.rows() >= p) {
    fit.beta = qr.solve(y);
  } else {
    fit.ridge_used = true;
    for (Eigen::Index j = 1; j < p; ++j) xtx(j, j) += ridge;  // intercept unpenalized
    fit.beta = xtx.ldlt().solve(x.transpose() * y);
  }

  const double rss = (y - x * fit.beta).squaredNorm();
  const double dof = std::max<double>(static_cast<double>(x.rows()) -
                                          static_cast<double>(fit.rank),
                                      1.0);
  const double sigma2 = rss / dof;
  const Eigen::MatrixXd cov = sigma2 * xtx.ldlt().solve(Eigen::MatrixXd::Identity(p, p));
  fit.se.resize(p);
  for (Eigen::Index j = 0; j < p; ++j)
    fit.se[j] = std::sqrt(std::max(cov(j, j), 0.0));
  return fit;
}

std::vector<int> seeded_folds(int m, int folds, std::uint64_t seed) {
  std::vector<int> order(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) order[static_cast<std::size_t>(i)] = i;
  Rng rng(seed);
  rng.shuffle(order);
  std::vector<int> fold_of(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) fold_of[static_cast<std::size_t>(order[i])] = i % folds;
  return fold_of;
}

void validate_common(const FeatureTable& features, std::size_t m,
                     const ExperimentSpec& spec) {
  if (static_cast<std::size_t>(features.values.rows()) != m)
    throw std::invalid_argument("experiment: feature table has " +
                                std::to_string(features.values.rows()) +
                                " rows but there are " + std::to_string(m) + " labels");
  if (!features.values.allFinite())
    throw std::invalid_argument("experiment: feature table has non-finite entries");
  if (spec.folds < 2) throw std::invalid_argument("experiment: need at least 2 folds");
  if (m < static_cast<std::size_t>(spec.folds))
    throw std::invalid_argument("experiment: fewer rows than folds");
  if (!spec.fold_override.empty()) {
    if (spec.fold_override.size() != m)
      throw std::invalid_argument("experiment: fold_override length mismatch");
    for (const int f : spec.fold_override)
      if (f < -1 || f >= spec.folds)
        throw std::invalid_argument("experiment: fold_override entry out of range");
  }
}

void check_folds_populated(const std::vector<int>& fold_of, int folds) {
  std::vector<int> count(static_cast<std::size_t>(folds), 0);
  int used = 0;
  for (const int f : fold_of)
    if (f >= 0) {
      ++count[static_cast<std::size_t>(f)];
      ++used;
    }
  for (int f = 0; f < folds; ++f) {
    if (count[static_cast<std::size_t>(f)] == 0)
      throw std::invalid_argument("experiment: fold " + std::to_string(f) + " is empty");
    if (count[static_cast<std::size_t>(f)] == used)
      throw std::invalid_argument("experiment: fold " + std::to_string(f) +
                                  " holds every row, train split is empty");
  }
}

double population_sd(const std::vector<double>& v, double mean) {
  double ss = 0.0;
  for (const double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(v.size()));
}

}  // namespace

ExperimentResult run_tie_strength(const FeatureTable& features,
                                  const std::vector<double>& labels,
                                  const ExperimentSpec& spec) {
  const std::size_t m = labels.size();
  validate_common(features, m, spec);
  for (const double y : labels)
    if (!std::isfinite(y))
      throw std::invalid_argument("experiment: labels contain non-finite entries");

  ExperimentResult result;
  result.task = "tie-strength";
  result.columns = features.columns;
  result.folds = spec.folds;
  result.seed = spec.seed;

  const std::vector<int> fold_of = spec.fold_override.empty()
                                       ? seeded_folds(static_cast<int>(m), spec.folds,
                                                      spec.seed)
                                       : spec.fold_override;
  check_folds_populated(fold_of, spec.folds);

  for (int i = 0; i < static_cast<int>(m); ++i) {
    if (fold_of[static_cast<std::size_t>(i)] >= 0) {
      result.rows_used.push_back(i);
      result.fold_of.push_back(fold_of[static_cast<std::size_t>(i)]);
    }
  }
  result.oof_prediction.assign(result.rows_used.size(), 0.0);

  std::vector<double> accuracies;
  for (int f = 0; f < spec.folds; ++f) {
    std::vector<int> train, test;
    for (std::size_t i = 0; i < result.rows_used.size(); ++i)
      (result.fold_of[i] == f ? test : train).push_back(result.rows_used[i]);

    const Standardizer sx = fit_standardizer(features.values, train);
    const MeanScale sy = fit_target(labels, train);
    if (sy.degenerate)
      result.warnings.push_back("fold " + std::to_string(f) +
                                ": target is constant on the training split");

    const Eigen::MatrixXd xtr = design(features.values, train, sx);
    Eigen::VectorXd ytr(static_cast<Eigen::Index>(train.size()));
    for (std::size_t i = 0; i < train.size(); ++i)
      ytr[static_cast<Eigen::Index>(i)] =
          (labels[static_cast<std::size_t>(train[i])] - sy.mean) / sy.scale;

    const OlsFit fit = fit_ols(xtr, ytr, spec.ridge);
    if (fit.ridge_used)
      result.warnings.push_back(
          "fold " + std::to_string(f) + ": rank-deficient design (rank " +
          std::to_string(fit.rank) + " of " + std::to_string(xtr.cols()) +
          "), ridge fallback applied");

    FoldReport report;
    report.coefficients.reserve(static_cast<std::size_t>(xtr.cols()));
    for (Eigen::Index j = 0; j < xtr.cols(); ++j) {
      CoefficientEstimate c;
      c.column = j == 0 ? "intercept" : features.columns[static_cast<std::size_t>(j - 1)];
      c.degenerate = j > 0 && sx.degenerate[static_cast<std::size_t>(j - 1)];
      if (c.degenerate) {
        c.value = c.ci_low = c.ci_high = 0.0;
      } else {
        c.value = fit.beta[j];
        c.ci_low = fit.beta[j] - kNormal95 * fit.se[j];
        c.ci_high = fit.beta[j] + kNormal95 * fit.se[j];
      }
      report.coefficients.push_back(std::move(c));
    }

    const Eigen::MatrixXd xte = design(features.values, test, sx);
    const Eigen::VectorXd pred = xte * fit.beta;
    double mse = 0.0;
    for (std::size_t i = 0; i < test.size(); ++i) {
      const double truth =
          (labels[static_cast<std::size_t>(test[i])] - sy.mean) / sy.scale;
      const double d = pred[static_cast<Eigen::Index>(i)] - truth;
      mse += d * d;
    }
    mse /= static_cast<double>(test.size());
    report.accuracy = 1.0 - mse;
    accuracies.push_back(report.accuracy);

    for (std::size_t i = 0; i < test.size(); ++i) {
      const auto at = std::lower_bound(result.rows_used.begin(), result.rows_used.end(),
                                       test[i]) -
                      result.rows_used.begin();
      result.oof_prediction[static_cast<std::size_t>(at)] =
          pred[static_cast<Eigen::Index>(i)] * sy.scale + sy.mean;
    }
    result.fold_reports.push_back(std::move(report));
  }

  double sum = 0.0;
  for (const double a : accuracies) sum += a;
  result.mean_accuracy = sum / static_cast<double>(accuracies.size());
  result.sd_accuracy = population_sd(accuracies, result.mean_accuracy);
  return result;
}

namespace {

struct LogisticFit {
  Eigen::MatrixXd weights;  // classes x p
  int iterations = 0;
  double grad_norm = 0.0;
  bool converged = false;
};

double logistic_loss(const Eigen::MatrixXd& x, const std::vector<int>& y,
                     const Eigen::MatrixXd& w, double l2, Eigen::MatrixXd* probs) {
  const Eigen::Index m = x.rows();
  Eigen::MatrixXd scores = x * w.transpose();  // m x C
  double nll = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    const double mx = scores.row(i).maxCoeff();
    const Eigen::ArrayXd ex = (scores.row(i).array() - mx).exp();
    const double z = ex.sum();
    nll -= std::log(ex[y[static_cast<std::size_t>(i)]] / z);
    if (probs) probs->row(i) = (ex / z).matrix().transpose();
  }
  nll /= static_cast<double>(m);
  const double penalty =
      0.5 * l2 * w.rightCols(w.cols() - 1).squaredNorm();
  return nll + penalty;
}

LogisticFit fit_logistic(const Eigen::MatrixXd& x, const std::vector<int>& y,
                         int classes, double l2, double tol, int max_iter) {
  const Eigen::Index m = x.rows();
  const Eigen::Index p = x.cols();
  LogisticFit fit;
  fit.weights = Eigen::MatrixXd::Zero(classes, p);

  Eigen::MatrixXd probs(m, classes);
  double loss = logistic_loss(x, y, fit.weights, l2, &probs);

  for (int iter = 0; iter < max_iter; ++iter) {
    // grad = (1/m) (P - Y)^T X + l2 * [0 | W_features]
    Eigen::MatrixXd resid = probs;
    for (Eigen::Index i = 0; i < m; ++i) resid(i, y[static_cast<std::size_t>(i)]) -= 1.0;
    Eigen::MatrixXd grad = (resid.transpose() * x) / static_cast<double>(m);
    grad.rightCols(p - 1) += l2 * fit.weights.rightCols(p - 1);

    fit.grad_norm = grad.cwiseAbs().maxCoeff();
    fit.iterations = iter;
    if (fit.grad_norm <= tol) {
      fit.converged = true;
      return fit;
    }

    const double g2 = grad.squaredNorm();
    double step = 1.0;
    for (;;) {
      const Eigen::MatrixXd trial = fit.weights - step * grad;
      Eigen::MatrixXd trial_probs(m, classes);
      const double trial_loss = logistic_loss(x, y, trial, l2, &trial_probs);
      if (trial_loss <= loss - 0.5 * step * g2 || step < 1e-14) {
        fit.weights = trial;
        probs = std::move(trial_probs);
        loss = trial_loss;
        break;
      }
      step *= 0.5;
    }
  }
  fit.iterations = max_iter;
  return fit;
}

}  // namespace

ExperimentResult run_bridge_classification(const FeatureTable& features,
                                           const BridgeLabels& labels,
                                           const ExperimentSpec& spec) {
  const std::size_t m = labels.label.size();
  validate_common(features, m, spec);

  ExperimentResult result;
  result.task = "bridge-class";
  result.columns = features.columns;
  result.folds = spec.folds;
  result.seed = spec.seed;

  // Classes present, in the fixed order global, local, neither.
  const BridgeClass all_classes[] = {BridgeClass::global, BridgeClass::local,
                                     BridgeClass::neither};
  std::vector<BridgeClass> present;
  std::vector<std::vector<int>> members;
  for (const BridgeClass c : all_classes) {
    std::vector<int> rows;
    for (std::size_t i = 0; i < m; ++i)
      if (labels.label[i] == c) rows.push_back(static_cast<int>(i));
    if (!rows.empty()) {
      present.push_back(c);
      members.push_back(std::move(rows));
    }
  }
  if (present.size() < 2)
    throw std::invalid_argument(
        "experiment: bridge classification needs at least two classes, found " +
        std::to_string(present.size()));
  for (const BridgeClass c : present) result.class_names.push_back(to_string(c));

  std::vector<int> fold_of(m, -1);
  if (!spec.fold_override.empty()) {
    fold_of = spec.fold_override;
  } else {
    Rng rng(spec.seed);
    std::size_t minority = m;
    for (const auto& rows : members) minority = std::min(minority, rows.size());
    if (minority < static_cast<std::size_t>(spec.folds))
      throw std::invalid_argument(
          "experiment: insufficient class support (smallest class has " +
          std::to_string(minority) + " rows for " + std::to_string(spec.folds) +
          " folds)");
    for (auto& rows : members) {
      rng.shuffle(rows);
      const std::size_t take = spec.balance ? minority : rows.size();
      for (std::size_t i = 0; i < take; ++i)
        fold_of[static_cast<std::size_t>(rows[i])] =
            static_cast<int>(i % static_cast<std::size_t>(spec.folds));
    }
  }
  check_folds_populated(fold_of, spec.folds);

  std::vector<int> class_of(m, -1);
  for (std::size_t c = 0; c < present.size(); ++c)
    for (std::size_t i = 0; i < m; ++i)
      if (labels.label[i] == present[c]) class_of[i] = static_cast<int>(c);

  for (int i = 0; i < static_cast<int>(m); ++i) {
    if (fold_of[static_cast<std::size_t>(i)] >= 0) {
      result.rows_used.push_back(i);
      result.fold_of.push_back(fold_of[static_cast<std::size_t>(i)]);
    }
  }

  std::vector<double> accuracies;
  for (int f = 0; f < spec.folds; ++f) {
    std::vector<int> train, test;
    for (std::size_t i = 0; i < result.rows_used.size(); ++i)
      (result.fold_of[i] == f ? test : train).push_back(result.rows_used[i]);

    const Standardizer sx = fit_standardizer(features.values, train);
    const Eigen::MatrixXd xtr = design(features.values, train, sx);
    std::vector<int> ytr;
    ytr.reserve(train.size());
    for (const int r : train) ytr.push_back(class_of[static_cast<std::size_t>(r)]);

    const LogisticFit fit =
        fit_logistic(xtr, ytr, static_cast<int>(present.size()), spec.logit_l2,
                     spec.logit_tol, spec.logit_max_iter);
    if (!fit.converged)
      result.warnings.push_back("fold " + std::to_string(f) +
                                ": logistic solver hit the iteration cap (|grad|=" +
                                std::to_string(fit.grad_norm) + ")");

    const Eigen::MatrixXd xte = design(features.values, test, sx);
    const Eigen::MatrixXd scores = xte * fit.weights.transpose();
    int correct = 0;
    for (std::size_t i = 0; i < test.size(); ++i) {
      Eigen::Index arg = 0;
      scores.row(static_cast<Eigen::Index>(i)).maxCoeff(&arg);
      if (static_cast<int>(arg) == class_of[static_cast<std::size_t>(test[i])])
        ++correct;
    }

    FoldReport report;
    report.accuracy = static_cast<double>(correct) / static_cast<double>(test.size());
    report.weights = fit.weights;
    accuracies.push_back(report.accuracy);
    result.fold_reports.push_back(std::move(report));
  }

  double sum = 0.0;
  for (const double a : accuracies) sum += a;
  result.mean_accuracy = sum / static_cast<double>(accuracies.size());
  result.sd_accuracy = population_sd(accuracies, result.mean_accuracy);
  return result;
}

std::vector<CoefficientEstimate> component_regressions(
    const FeatureTable& features, const std::vector<double>& labels,
    const std::vector<std::string>& columns) {
  const std::size_t m = labels.size();
  if (static_cast<std::size_t>(features.values.rows()) != m)
    throw std::invalid_argument("component_regressions: row count mismatch");
  if (m < 3) throw std::invalid_argument("component_regressions: too few rows");

  std::vector<int> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = static_cast<int>(i);
  const MeanScale sy = fit_target(labels, all);

  std::vector<CoefficientEstimate> out;
  for (const auto& name : columns) {
    const int j = features.column_index(name);
    if (j < 0)
      throw std::invalid_argument("component_regressions: unknown column '" + name + "'");

    CoefficientEstimate c;
    c.column = name;

    double mu = 0.0;
    for (std::size_t i = 0; i < m; ++i) mu += features.values(static_cast<int>(i), j);
    mu /= static_cast<double>(m);
    double ss = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double d = features.values(static_cast<int>(i), j) - mu;
      ss += d * d;
    }
    const double sd = std::sqrt(ss / static_cast<double>(m));
    if (sd < kZeroVariance || sy.degenerate) {
      c.degenerate = true;
      out.push_back(std::move(c));
      continue;
    }

    // Slope of standardized-on-standardized OLS = Pearson correlation.
    double b = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      b += ((features.values(static_cast<int>(i), j) - mu) / sd) *
           ((labels[i] - sy.mean) / sy.scale);
    b /= static_cast<double>(m);

    const double dof = std::max<double>(static_cast<double>(m) - 2.0, 1.0);
    const double sigma2 = std::max(0.0, static_cast<double>(m) * (1.0 - b * b)) / dof;
    const double se = std::sqrt(sigma2 / static_cast<double>(m));
    c.value = b;
    c.ci_low = b - kNormal95 * se;
    c.ci_high = b + kNormal95 * se;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<TieRangeCurveRow> tie_range_curve(const std::vector<double>& predictions,
                                              const std::vector<double>& truths,
                                              const std::vector<int>& tie_ranges) {
  if (predictions.size() != truths.size() || predictions.size() != tie_ranges.size())
    throw std::invalid_argument("tie_range_curve: input lengths differ");

  std::map<long, TieRangeCurveRow> groups;  // infinity (-1) keyed last
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const int r = tie_ranges[i];
    const long key = r < 0 ? std::numeric_limits<long>::max() : r;
    TieRangeCurveRow& row = groups[key];
    row.tie_range = r;
    row.count += 1;
    row.mean_predicted += predictions[i];
    row.mean_true += truths[i];
  }
  std::vector<TieRangeCurveRow> out;
  for (auto& [key, row] : groups) {
    row.mean_predicted /= static_cast<double>(row.count);
    row.mean_true /= static_cast<double>(row.count);
    out.push_back(row);
  }
  return out;
}

}  // namespace hodgerank
