// pareto.hpp
//
// Dominance tests, Pareto-front extraction, objective normalization, exact
// 2-D hypervolume, and the hypervolume indicator against a reference front.
// Cost is minimized, perf is maximized throughout.

#pragma once

#include <vector>

#include "flowtune/common.hpp"

namespace flowtune {

struct ObjectivePoint {
    double cost = 0.0;   // minimize
    double perf = 0.0;   // maximize
    int payload = -1;    // index of the originating evaluation, if any
};

// Non-dominated subset, sorted by ascending cost (hence strictly ascending perf).
struct ParetoFront {
    std::vector<ObjectivePoint> points;

    bool empty() const { return points.empty(); }
    size_t size() const { return points.size(); }
};

// True iff a is no worse in both objectives and strictly better in one.
bool dominates(const ObjectivePoint& a, const ObjectivePoint& b);

// Exactly the maximal points under dominates; duplicate objective values
// collapse to the earliest point in input order.
ParetoFront pareto_filter(const std::vector<ObjectivePoint>& points);

struct ObjectiveBounds {
    double cost_min = 0.0, cost_max = 1.0;
    double perf_min = 0.0, perf_max = 1.0;

    static ObjectiveBounds from_points(const std::vector<ObjectivePoint>& points);
};

// Min-max scaling per objective into [0,1]^2; orientation is unchanged
// (cost 0 = cheapest). A degenerate bound maps that coordinate to 0.
std::vector<ObjectivePoint> normalize(const std::vector<ObjectivePoint>& points,
                                      const ObjectiveBounds& bounds);
ObjectivePoint normalize(const ObjectivePoint& p, const ObjectiveBounds& bounds);

// Area dominated by the front inside the box bounded by `ref` (worst-case
// reference: cost 1, perf 0, in normalized space). Points must lie inside
// the box. Computed by the sorted sweep.
double hypervolume_2d(const std::vector<ObjectivePoint>& front,
                      const ObjectivePoint& ref = {1.0, 0.0});

// HVI = HV(est) / HV(true); both fronts must be normalized with shared
// bounds. Throws std::invalid_argument when HV(true) is zero.
double hvi(const std::vector<ObjectivePoint>& est_front,
           const std::vector<ObjectivePoint>& true_front,
           const ObjectivePoint& ref = {1.0, 0.0});

}  // namespace flowtune
