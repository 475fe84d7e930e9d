// priors.hpp
//
// Preprocessing for the optimizer: mutual-information scores, dimensionality
// reduction, the MI-derived feature priors, and the decaying connection-depth
// prior. None of this evaluates the objective functions.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "flowtune/common.hpp"
#include "flowtune/features.hpp"

namespace flowtune {

struct FeatureStats {
    std::map<int, double> mi;  // feature id -> I(f), nats
    double i_max = 0.0;        // max over retained candidates

    static FeatureStats from_mi(std::map<int, double> mi);
};

struct PriorConfig {
    double delta = 0.4;        // damping coefficient, [0,1]
    double depth_alpha = 1.0;
    double depth_beta = 2.0;
    double mi_epsilon = 1e-3;  // reduction threshold, nats
};

// Mutual information in nats between a feature column and the labels.
// Continuous columns are discretized by rank-based equal-frequency binning
// into 10 bins (or one bin per distinct value when there are fewer), which
// makes the estimate invariant under strictly monotone transforms.
double mutual_info(const std::vector<double>& column, const std::vector<int>& labels);

// Regression targets are themselves binned before the estimate.
double mutual_info(const std::vector<double>& column, const std::vector<double>& targets);

// MI per candidate feature, computed from a feature table whose columns are
// `feature_ids` in order (training split only).
FeatureStats compute_feature_stats(const Matrix& x, const std::vector<double>& y, Task task,
                                   const std::vector<int>& feature_ids);

// Keeps features with I(f) > epsilon; never returns an empty set (the argmax
// feature survives when everything falls below the threshold).
std::vector<int> reduce_dimensions(const FeatureStats& stats, double epsilon);

// P(f in F | x Pareto-optimal) = (1 - delta) * I_f / I_max + delta / 2.
// Falls back to 0.5 when I_max is 0.
double feature_prior(double i_f, double i_max, double delta);

// pmf over depths 1..N proportional to the Beta(alpha,beta) density at bin
// midpoints (n - 0.5)/N; Beta(1,2) gives the linear decay.
std::vector<double> depth_prior_pmf(uint32_t max_depth, double alpha, double beta);

// Factorized joint prior over representations: independent Bernoulli per
// retained feature times the depth pmf.
struct PriorModel {
    std::vector<int> feature_ids;       // sorted
    std::vector<double> feature_probs;  // aligned with feature_ids
    std::vector<double> depth_pmf;      // depths 1..N

    static PriorModel build(const FeatureStats& stats, const std::vector<int>& retained,
                            uint32_t max_depth, const PriorConfig& cfg);
    static PriorModel uniform(const std::vector<int>& feature_ids, uint32_t max_depth);

    uint32_t max_depth() const { return static_cast<uint32_t>(depth_pmf.size()); }
    // log of the joint prior mass of `rep` (features outside feature_ids
    // must be absent from the mask).
    double log_density(const Representation& rep) const;
};

// Draws a mask by independent inclusion and a depth from the pmf; empty
// masks are rejected and redrawn.
Representation sample_representation(const PriorModel& prior, Rng& rng);

// CSV dump (feature,name,mi,prior_prob) for inspection.
std::string priors_csv(const FeatureStats& stats, const PriorModel& prior);

}  // namespace flowtune
