// profiler.hpp
//
// End-to-end evaluation of a representation: train a fresh model, score it on
// the holdout split, and time the specialized pipeline over replayed flows.
// Also provides the heuristic cost/perf variants used for ablations and the
// exhaustive ground-truth enumerator for small spaces.

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "flowtune/features.hpp"
#include "flowtune/flow.hpp"
#include "flowtune/model.hpp"
#include "flowtune/pareto.hpp"
#include "flowtune/priors.hpp"

namespace flowtune {

enum class CostKind : uint8_t {
    ExecTime,          // ns/flow, pipeline + inference, waiting excluded
    InferenceLatency,  // s/flow, includes packet inter-arrival waiting
    NaiveCost,         // sum of isolated per-feature exec times
    ModelInfCost,      // inference-only ns/flow
    PktDepthCost,      // the packet depth itself
};

std::string cost_kind_name(CostKind kind);
std::string cost_units(CostKind kind);

struct CostMetric {
    CostKind kind = CostKind::ExecTime;
    int repetitions = 5;  // odd, so the median needs no interpolation
    int warmup_passes = 1;
};

struct StageBreakdown {
    double extraction_ns = 0.0;
    double inference_ns = 0.0;
    double waiting_s = 0.0;
};

struct EvalResult {
    Representation rep;
    double perf = 0.0;   // macro-F1, or -RMSE for regression (higher better)
    double cost = 0.0;
    std::string units;
    StageBreakdown per_stage;
    int iteration = 0;
    bool cache_hit = false;
    int chosen_model_depth = 0;
    double fit_seconds = 0.0;
    std::shared_ptr<const TrainedModel> model;  // fresh per representation
};

// Anything the searchers can query for cost(x)/perf(x).
class Evaluator {
public:
    virtual ~Evaluator() = default;
    virtual EvalResult evaluate(const Representation& rep, int iteration) = 0;
};

struct ProfilerOptions {
    ModelConfig model;
    CostMetric metric;
    // Replaces measured perf with the sum of the mask's MI scores (requires
    // feature stats).
    bool naive_perf = false;
    uint64_t seed = 0;
};

struct ExecTiming {
    double extraction_ns = 0.0;  // median over repetitions of per-flow means
    double inference_ns = 0.0;
    double total_ns = 0.0;
};

struct LatencyTiming {
    double seconds = 0.0;    // dataset mean of exec + inference + waiting
    double waiting_s = 0.0;  // dataset mean of the waiting component
    double extraction_ns = 0.0;
    double inference_ns = 0.0;
};

struct StabilityReport {
    double cv = 0.0;  // coefficient of variation of the trial medians
    std::vector<double> trial_medians_ns;
    bool warning = false;  // cv at or above the fidelity threshold
};

class Profiler : public Evaluator {
public:
    Profiler(std::shared_ptr<const Dataset> train, std::shared_ptr<const Dataset> test,
             ProfilerOptions opts, const FeatureStats* stats = nullptr);

    // Composition of measure_perf and the configured cost metric, cached by
    // (mask, depth); re-sampled points are free and flagged cache_hit.
    EvalResult evaluate(const Representation& rep, int iteration) override;

    struct PerfOutcome {
        double perf = 0.0;
        std::shared_ptr<const TrainedModel> model;
    };
    PerfOutcome measure_perf(const Representation& rep) const;

    // Median over `metric.repetitions` passes of the per-flow mean time spent
    // in per-packet steps, finalizers, and model inference. Inter-packet
    // waiting is not part of the timed region.
    ExecTiming measure_exec_time(const ExtractionPlan& plan, const TrainedModel& model,
                                 const Dataset& dataset) const;

    // Appendix-style offline latency: exec + inference + the sum of packet
    // inter-arrival times up to the depth; dataset mean.
    LatencyTiming measure_latency(const ExtractionPlan& plan, const TrainedModel& model,
                                  const Dataset& dataset) const;

    // Inference-only timing with extraction outside the timed region.
    double measure_inference_ns(const ExtractionPlan& plan, const TrainedModel& model,
                                const Dataset& dataset) const;

    // Heuristic cost variants (§ ablations). naive = sum of isolated
    // single-feature costs at the same depth; model_inf = inference only;
    // pkt_depth = n.
    double ablation_cost(const Representation& rep, CostKind kind);

    // Sum of the mask's mutual-information scores.
    double ablation_perf(const Representation& rep) const;

    // Exec-time cost of the singleton mask {feature_id} at `depth`, cached.
    double isolated_feature_cost(int feature_id, uint32_t depth);

    // Repeats the exec-time measurement `trials` times and reports the
    // coefficient of variation of the medians; sets `warning` when the
    // spread makes cost comparisons unsafe.
    StabilityReport stability_check(const Representation& rep, int trials = 10,
                                    double cv_threshold = 0.20);

    bool fidelity_warning() const { return fidelity_warning_; }
    const Dataset& train_set() const { return *train_; }
    const Dataset& test_set() const { return *test_; }
    const ProfilerOptions& options() const { return opts_; }
    size_t distinct_evaluations() const { return cache_.size(); }

    // Measured resolution of the timing clock, ns. Throws FidelityError from
    // the constructor when coarser than 100 ns.
    static double timer_resolution_ns();

private:
    EvalResult evaluate_uncached(const Representation& rep, int iteration);
    uint64_t rep_seed(const Representation& rep) const;

    std::shared_ptr<const Dataset> train_;
    std::shared_ptr<const Dataset> test_;
    ProfilerOptions opts_;
    std::optional<FeatureStats> stats_;
    std::unordered_map<Representation, EvalResult, RepresentationHash> cache_;
    std::unordered_map<uint64_t, double> isolated_cost_;  // (feature,depth) key
    bool fidelity_warning_ = false;
};

// Every representation of the space evaluated once (mask outer loop, depth
// inner), plus the true front. Refuses spaces above `max_points`.
struct GroundTruth {
    std::vector<EvalResult> results;
    ParetoFront front;
};
GroundTruth exhaustive_ground_truth(const SearchSpace& space, Evaluator& evaluator,
                                    double max_points = 1e5);

ObjectivePoint to_objective(const EvalResult& result, int payload = -1);

}  // namespace flowtune
