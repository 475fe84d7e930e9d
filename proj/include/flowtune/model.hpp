// model.hpp
//
// CART decision trees and random forests (classification + regression) with
// inner cross-validated grid search over the maximum tree depth, plus the
// perf metrics (macro-F1, RMSE).

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "flowtune/common.hpp"
#include "flowtune/flow.hpp"

namespace flowtune {

enum class ModelKind : uint8_t { DecisionTree, RandomForest };

// Per-split feature subsampling policy.
enum class FeatureSampling : uint8_t {
    Default,  // all for DT; sqrt(d) classification / d/3 regression for RF
    All,      // pure bagging (used by the BO surrogate)
};

struct ModelConfig {
    ModelKind kind = ModelKind::DecisionTree;
    Task task = Task::Classification;
    std::vector<int> depth_grid = {3, 5, 10, 15, 20};  // 0 entry = unlimited
    int n_estimators = 100;  // forest only
    int cv_folds = 5;
    FeatureSampling feature_sampling = FeatureSampling::Default;
    bool bootstrap = true;  // forest only
    uint64_t seed = 0;
};

struct TreeNode {
    int32_t feature = -1;  // -1 for leaves
    double threshold = 0.0;
    int32_t left = -1;
    int32_t right = -1;
    double value = 0.0;    // regression leaf mean / majority class index
    int32_t dist = -1;     // offset into leaf class distributions
};

class Tree {
public:
    void fit(const Matrix& x, const std::vector<double>& y, std::span<const size_t> idx,
             Task task, int n_classes, int max_depth, int features_per_split, Rng& rng);

    double predict_row(std::span<const double> row) const;
    // Classification: per-class probability at the leaf for `row`.
    std::span<const double> leaf_distribution(std::span<const double> row) const;

    void add_importances(std::vector<double>& acc) const;

    const std::vector<TreeNode>& nodes() const { return nodes_; }
    std::vector<TreeNode>& nodes() { return nodes_; }
    std::vector<double>& distributions() { return dists_; }
    const std::vector<double>& distributions() const { return dists_; }
    int n_classes() const { return n_classes_; }
    void set_meta(Task task, int n_classes) { task_ = task, n_classes_ = n_classes; }

private:
    int build(const Matrix& x, const std::vector<double>& y, std::vector<size_t>& idx,
              size_t begin, size_t end, int depth, Rng& rng);
    int make_leaf(const std::vector<double>& y, std::span<const size_t> idx);

    Task task_ = Task::Classification;
    int n_classes_ = 0;
    int max_depth_ = 0;
    int features_per_split_ = 0;
    std::vector<TreeNode> nodes_;
    std::vector<double> dists_;  // n_classes_ per leaf
    std::vector<double> split_importance_;
};

// Trained tree/forest plus the hyperparameters grid search settled on.
class TrainedModel {
public:
    double predict_row(std::span<const double> row) const;
    std::vector<double> predict(const Matrix& x) const;
    // Per-tree raw predictions (regression surrogates).
    void tree_predictions(std::span<const double> row, std::vector<double>& out) const;

    // Impurity-decrease importances, normalized to sum 1.
    std::vector<double> importances() const;

    ModelKind kind() const { return cfg_.kind; }
    Task task() const { return cfg_.task; }
    int chosen_depth() const { return chosen_depth_; }
    int n_classes() const { return n_classes_; }
    size_t n_features() const { return n_features_; }
    double fit_seconds() const { return fit_seconds_; }
    const std::vector<Tree>& trees() const { return trees_; }

    std::string to_json() const;
    static TrainedModel from_json(const std::string& text);

private:
    friend TrainedModel train(const Matrix&, const std::vector<double>&, const ModelConfig&);
    friend TrainedModel fit_forest(const Matrix&, const std::vector<double>&, const ModelConfig&,
                                   int max_depth);
    ModelConfig cfg_;
    int chosen_depth_ = 0;
    int n_classes_ = 0;
    size_t n_features_ = 0;
    double fit_seconds_ = 0.0;
    std::vector<Tree> trees_;
};

// Grid-searches max depth by inner k-fold CV (macro-F1 / negative RMSE),
// ties toward the smaller depth, then refits on all rows. Classification
// labels in `y` are class indices 0..k-1. Deterministic given cfg.seed.
TrainedModel train(const Matrix& x, const std::vector<double>& y, const ModelConfig& cfg);

// Single fit at a fixed depth, no grid search.
TrainedModel fit_forest(const Matrix& x, const std::vector<double>& y, const ModelConfig& cfg,
                        int max_depth);

// Unweighted mean of per-class F1; classes absent from both pred and truth
// are excluded. Throws std::invalid_argument on empty input.
double macro_f1(const std::vector<int>& pred, const std::vector<int>& truth);

double rmse(const std::vector<double>& pred, const std::vector<double>& truth);

}  // namespace flowtune
