#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "hodgerank/baselines.hpp"
#include "hodgerank/structure.hpp"

namespace hodgerank {

struct ExperimentSpec {
  int folds = 5;
  std::uint64_t seed = 42;
  bool balance = true;       // classification: downsample classes to the minority
  double ridge = 1e-6;       // fallback strength for rank-deficient OLS
  double logit_l2 = 1e-4;    // L2 penalty on non-intercept logistic weights
  double logit_tol = 1e-8;   // gradient infinity-norm stopping threshold
  int logit_max_iter = 2000;
  /// Testing hook: explicit fold id per row (same length as the label
  /// vector, entries in [0, folds) or -1 to drop a row). Empty = seeded
  /// shuffle; using it disables balancing.
  std::vector<int> fold_override;
};

struct CoefficientEstimate {
  std::string column;  // "intercept" or a feature column name
  double value = 0.0;
  double ci_low = 0.0;   // 95% interval bounds
  double ci_high = 0.0;
  bool degenerate = false;  // the column had zero variance on the train split
};

struct FoldReport {
  double accuracy = 0.0;
  std::vector<CoefficientEstimate> coefficients;  // regression folds
  Eigen::MatrixXd weights;                        // logistic folds: class x (1+k)
};

struct ExperimentResult {
  std::string task;
  std::vector<std::string> columns;
  int folds = 0;
  std::uint64_t seed = 0;
  std::vector<FoldReport> fold_reports;
  double mean_accuracy = 0.0;
  double sd_accuracy = 0.0;  // population standard deviation over folds
  std::vector<int> rows_used;         // row ids that participated
  std::vector<int> fold_of;           // fold id, parallel to rows_used
  std::vector<double> oof_prediction; // regression: raw-scale out-of-fold
                                      // predictions, parallel to rows_used
  std::vector<std::string> class_names;  // classification only
  std::vector<std::string> warnings;
};

/// K-fold ridge-guarded linear regression of tie strength on the feature
/// table. Features and target are standardized per fold on the training
/// rows only; fold accuracy is 1 - MSE on the standardized target scale.
ExperimentResult run_tie_strength(const FeatureTable& features,
                                  const std::vector<double>& labels,
                                  const ExperimentSpec& spec);

/// K-fold multinomial logistic classification of the bridge label, balanced
/// by seeded downsampling to the minority class and dealt round-robin per
/// class. Fold accuracy is the fraction of correctly classified test rows.
ExperimentResult run_bridge_classification(const FeatureTable& features,
                                           const BridgeLabels& labels,
                                           const ExperimentSpec& spec);

/// Full-sample univariate regression of the standardized label on each
/// standardized column separately; a zero-variance column reports a
/// degenerate zero coefficient.
std::vector<CoefficientEstimate> component_regressions(
    const FeatureTable& features, const std::vector<double>& labels,
    const std::vector<std::string>& columns);

struct TieRangeCurveRow {
  int tie_range = 0;  // -1 encodes infinity; rows sorted ascending, -1 last
  int count = 0;
  double mean_predicted = 0.0;
  double mean_true = 0.0;
};

/// Groups aligned prediction/truth pairs by tie range.
std::vector<TieRangeCurveRow> tie_range_curve(const std::vector<double>& predictions,
                                              const std::vector<double>& truths,
                                              const std::vector<int>& tie_ranges);

}  // namespace hodgerank
