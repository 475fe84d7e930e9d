// optimizer.hpp
//
// Multi-objective Bayesian optimization over the representation space:
// random-forest surrogates per objective, prior-weighted random-scalarization
// expected improvement, and the sequential evaluate-observe loop.

#pragma once

#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

#include "flowtune/features.hpp"
#include "flowtune/pareto.hpp"
#include "flowtune/priors.hpp"
#include "flowtune/profiler.hpp"

namespace flowtune {

struct OptimizerConfig {
    int budget = 50;              // total evaluations T
    int init_samples = 3;         // prior-sampled warmup points
    int candidates_per_iter = 5000;
    double beta_pi = -1.0;        // prior decay constant; < 0 means budget/10
    double ei_jitter = 0.01;      // xi
    uint64_t seed = 0;

    double effective_beta_pi() const { return beta_pi < 0 ? budget / 10.0 : beta_pi; }
};

// Minimization EI. With z = (best - xi - mu) / sigma,
// EI = sigma * (z * Phi(z) + phi(z)); at sigma = 0 it degenerates to
// max(0, best - xi - mu).
double expected_improvement(double mu, double sigma, double best, double xi = 0.0);

// Prior weight exponent beta/t, strictly decreasing in t.
double prior_exponent(double beta_pi, int iteration);

// EI * pi^(beta/t), evaluated in log space for the prior part.
double acquisition_score(double ei, double log_prior, double beta_pi, int iteration);

// Binary feature indicators plus the depth in the last coordinate.
std::vector<double> encode_representation(const Representation& rep, const SearchSpace& space);
Representation decode_representation(std::span<const double> x, const SearchSpace& space);

// Observations and the per-objective forest surrogates. Objectives are
// internally minimized: (log cost, -perf), min-max normalized over the
// current observations at every refit.
class SurrogateState {
public:
    explicit SurrogateState(const SearchSpace& space, uint64_t seed, int n_trees = 50,
                            bool bootstrap = true);

    void observe(const Representation& rep, double cost, double perf);
    size_t n_observations() const { return reps_.size(); }

    // Refits both forests from scratch if observations changed.
    void ensure_fitted();

    struct Prediction {
        double cost_mu = 0, cost_sigma = 0;
        double negperf_mu = 0, negperf_sigma = 0;
    };
    // Forest mean and per-tree stddev (floored at 1e-6) in normalized space.
    Prediction predict(const Representation& rep) const;

    // Best observed scalarization w*cost_norm + (1-w)*negperf_norm.
    double best_scalarized(double weight) const;

    const SearchSpace& space() const { return space_; }

private:
    double norm_cost(double log_cost) const;
    double norm_negperf(double negperf) const;

    SearchSpace space_;
    uint64_t seed_;
    int n_trees_;
    bool bootstrap_;
    std::vector<Representation> reps_;
    std::vector<double> log_costs_;
    std::vector<double> negperfs_;
    bool dirty_ = true;
    double cost_lo_ = 0, cost_hi_ = 1, negperf_lo_ = 0, negperf_hi_ = 1;
    TrainedModel cost_forest_;
    TrainedModel negperf_forest_;
};

// Picks the next point: M candidates (half prior-sampled, half uniform), one
// random scalarization weight, argmax of EI * pi^(beta/t) among candidates
// not yet evaluated. Falls back to a fresh prior sample when every candidate
// was already measured.
Representation propose(SurrogateState& state, const PriorModel& prior,
                       const std::unordered_set<Representation, RepresentationHash>& evaluated,
                       const OptimizerConfig& cfg, int iteration, Rng& rng);

// Uniform representation over the space (non-empty mask, uniform depth).
Representation uniform_representation(const SearchSpace& space, Rng& rng);

struct RunOutput {
    std::vector<EvalResult> trace;  // length = budget, in evaluation order
    ParetoFront front;
};

using ResultCallback = std::function<void(const EvalResult&)>;

// The full BO loop: init_samples prior draws, then propose/evaluate until the
// budget is spent. Duplicate proposals are served from the evaluator's cache
// rather than re-measured. `on_result` fires after every evaluation so
// partial traces survive an aborted run.
RunOutput run_optimizer(const SearchSpace& space, const PriorModel& prior, Evaluator& evaluator,
                        const OptimizerConfig& cfg, const ResultCallback& on_result = {});

}  // namespace flowtune
