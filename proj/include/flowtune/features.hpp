// features.hpp
//
// The 67-feature candidate registry and the specialized extraction plans.
// A plan is the deduplicated DAG of per-packet steps required by one
// (feature mask, depth) representation; packets beyond the depth are never
// inspected, and steps not needed by the mask are never executed.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "flowtune/flow.hpp"

namespace flowtune {

constexpr int kFeatureCount = 67;
constexpr uint32_t kUnboundedDepth = UINT32_MAX;

// Per-packet computation steps. Enum order is a valid topological order of
// the step DAG (parsers first, then derived accumulators), so a plan's step
// list is simply its sorted, deduplicated dependency set.
enum class Step : uint8_t {
    ParseEth,
    ParseIp,         // needs ParseEth
    ParseTransport,  // needs ParseIp
    TrackDur,
    CountPktsS,
    CountPktsD,
    SumBytesS,
    SumBytesD,
    MinBytesS,
    MinBytesD,
    MaxBytesS,
    MaxBytesD,
    BufBytesS,
    BufBytesD,
    IatDeltaS,
    IatDeltaD,
    IatSumS,  // needs IatDeltaS
    IatSumD,
    IatMinS,
    IatMinD,
    IatMaxS,
    IatMaxD,
    IatBufS,
    IatBufD,
    WinSumS,  // window/ttl/flag steps need the parser chain
    WinSumD,
    WinMinS,
    WinMinD,
    WinMaxS,
    WinMaxD,
    WinBufS,
    WinBufD,
    TtlSumS,
    TtlSumD,
    TtlMinS,
    TtlMinD,
    TtlMaxS,
    TtlMaxD,
    TtlBufS,
    TtlBufD,
    RecordProto,
    RecordPorts,
    TrackHandshake,
    CountCwr,
    CountEce,
    CountUrg,
    CountAck,
    CountPsh,
    CountRst,
    CountSyn,
    CountFin,
    kCount_,
};
constexpr size_t kStepCount = static_cast<size_t>(Step::kCount_);

enum class FeatureDirection : uint8_t { Orig, Resp, Both };

struct FeatureSpec {
    int id = 0;                // stable index 0..66, Table order
    std::string name;          // e.g. "s_iat_mean"
    std::string description;
    FeatureDirection direction = FeatureDirection::Both;
    std::vector<Step> step_deps;
    bool in_mini_set = false;  // member of the 6-feature mini candidate set
};

// The full candidate registry, built once. Ids are a bijection onto 0..66.
const std::vector<FeatureSpec>& registry();

// Feature id lookup by name; throws ConfigError for unknown names.
int feature_id(const std::string& name);

// Ids of the 6-feature mini candidate set.
std::vector<int> mini_set_ids();

// Writes the catalogue as CSV (id,name,description).
std::string registry_csv();

// 67-wide bit vector, one bit per feature id.
struct FeatureMask {
    uint64_t w0 = 0;  // ids 0..63
    uint64_t w1 = 0;  // ids 64..66

    static FeatureMask all();
    static FeatureMask of(const std::vector<int>& ids);
    static FeatureMask of_names(const std::vector<std::string>& names);

    void set(int id);
    void clear(int id);
    bool test(int id) const;
    int popcount() const;
    std::vector<int> ids() const;
    std::vector<std::string> names() const;

    bool is_subset_of(const FeatureMask& other) const {
        return (w0 & ~other.w0) == 0 && (w1 & ~other.w1) == 0;
    }
    bool operator==(const FeatureMask& o) const = default;
};

struct FeatureMaskHash {
    size_t operator()(const FeatureMask& m) const {
        return std::hash<uint64_t>{}(m.w0 * 0x9e3779b97f4a7c15ULL ^ m.w1);
    }
};

// A point x = (F, n) in the search space.
struct Representation {
    FeatureMask mask;
    uint32_t depth = 1;  // packets, or kUnboundedDepth

    bool operator==(const Representation& o) const = default;
};

struct RepresentationHash {
    size_t operator()(const Representation& r) const {
        return FeatureMaskHash{}(r.mask) * 31 ^ std::hash<uint32_t>{}(r.depth);
    }
};

// Candidate feature ids plus the depth bound; BO encodes this as
// |retained| + 1 dimensions.
struct SearchSpace {
    std::vector<int> feature_ids;  // sorted ascending
    uint32_t max_depth = 50;
    bool allow_unbounded = false;

    size_t dimension() const { return feature_ids.size() + 1; }
    // Number of representations, empty mask excluded.
    double size() const {
        return (std::pow(2.0, static_cast<double>(feature_ids.size())) - 1.0) * max_depth;
    }
    FeatureMask full_mask() const { return FeatureMask::of(feature_ids); }
};

// Mutable per-flow extraction scratch. Reusable across flows via reset();
// buffers keep their capacity so steady-state extraction does not allocate.
struct ExtractState {
    // per-packet parse scratch
    bool l3_ok = false;
    bool l4_ok = false;
    uint16_t l4_off = 0;
    uint8_t ttl = 0;
    uint8_t ip_proto = 0;
    uint16_t sport = 0;
    uint16_t dport = 0;
    uint8_t flags = 0;
    uint16_t window = 0;
    // accumulators, indexed by direction
    int64_t first_ts = 0;
    int64_t last_ts = 0;
    bool ts_seen = false;
    uint64_t pkt_cnt[2] = {0, 0};
    double bytes_sum[2] = {0, 0};
    double bytes_min[2];
    double bytes_max[2];
    int64_t iat_last_ts[2];
    bool iat_ready[2] = {false, false};  // current packet produced a delta
    double iat_cur[2] = {0, 0};          // seconds
    uint64_t iat_cnt[2] = {0, 0};
    double iat_sum[2] = {0, 0};
    double iat_min[2];
    double iat_max[2];
    double win_sum[2] = {0, 0};
    double win_min[2];
    double win_max[2];
    double ttl_sum[2] = {0, 0};
    double ttl_min[2];
    double ttl_max[2];
    std::vector<double> buf_bytes[2];
    std::vector<double> buf_iat[2];
    std::vector<double> buf_win[2];
    std::vector<double> buf_ttl[2];
    int64_t syn_ts = -1;
    int64_t synack_ts = -1;
    int64_t ack_ts = -1;
    double proto_value = 0;
    bool proto_seen = false;
    double sport_value = 0;
    double dport_value = 0;
    bool ports_seen = false;
    uint64_t flag_cnt[8] = {0};
    uint64_t packets_seen = 0;

    ExtractState() { reset(); }
    void reset();
};

using StepFn = void (*)(const PacketRecord&, ExtractState&);
using FinalizeFn = double (*)(ExtractState&);

// Compiled pipeline for one Representation. Immutable after compile_plan and
// safe to share across threads; per-flow state lives in ExtractState.
class ExtractionPlan {
public:
    const std::vector<Step>& steps() const { return steps_; }
    const std::vector<int>& feature_ids() const { return feature_ids_; }
    uint32_t depth() const { return depth_; }
    const Representation& representation() const { return rep_; }

    // Runs the per-packet steps over the first min(depth, |flow|) packets and
    // the finalizers; `out` is resized to popcount(mask), in feature-id order.
    void extract(const FlowRecord& flow, ExtractState& state, std::vector<double>& out) const;

    std::vector<double> extract(const FlowRecord& flow) const;

private:
    friend ExtractionPlan compile_plan(const Representation& rep);
    Representation rep_;
    uint32_t depth_ = 1;
    std::vector<Step> steps_;
    std::vector<StepFn> step_fns_;
    std::vector<int> feature_ids_;
    std::vector<FinalizeFn> finalizers_;
};

// Builds the deduplicated step plan for `rep`. Throws std::invalid_argument
// on an empty mask.
ExtractionPlan compile_plan(const Representation& rep);

// Row i of the matrix is extract(plan, dataset.flows[i]). Labels are class
// indices (classification) or targets (regression).
struct FeatureTable {
    Matrix x;
    std::vector<double> y;  // class index or regression target
    int n_classes = 0;
};
FeatureTable extract_dataset(const ExtractionPlan& plan, const Dataset& dataset);

}  // namespace flowtune
