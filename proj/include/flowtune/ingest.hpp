// ingest.hpp
//
// Dataset loaders: libpcap capture files, packet-record CSV, synthetic
// generation, and the stratified holdout split.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flowtune/flow.hpp"

namespace flowtune {

struct PcapLoadOptions {
    // A flow with no traffic for this long is considered terminated; a later
    // packet on the same 5-tuple starts a new flow instance.
    int64_t inactivity_timeout_us = 300'000'000;
};

struct PcapLoadResult {
    Dataset dataset;              // unlabeled flows
    size_t truncated_packets = 0;  // capture ended mid-packet
    size_t skipped_packets = 0;    // non-ethernet/IPv4/TCP/UDP frames
};

// Reads a classic libpcap capture (all four magic variants). Flows are keyed
// by the canonical unordered 5-tuple; the originator is the sender of the
// first observed packet of each flow instance.
PcapLoadResult load_pcap(const std::string& path, const PcapLoadOptions& opts = {});

// CSV columns, exactly:
//   flow_id,ts_us,dir,frame_len,proto,src_port,dst_port,ip_ttl,tcp_flags,tcp_window,label
// `dir` is 0/orig or 1/resp. Rows are sorted by (flow_id, ts_us) on load.
Dataset load_packet_csv(const std::string& path, Task task = Task::Classification);

void write_packet_csv(const Dataset& dataset, const std::string& path);

// Sidecar CSV with columns flow_id,label. Every flow must appear unless
// drop_unlabeled is set, in which case unmatched flows are removed.
void attach_labels(Dataset& dataset, const std::string& sidecar_path, bool drop_unlabeled = false);

// Per-class traffic profile for the synthetic generator. Classes must differ
// in at least one per-packet statistic; the default profiles guarantee it.
struct SynthClassProfile {
    double size_mean = 300.0;
    double size_std = 30.0;
    double resp_size_scale = 1.5;
    double iat_mean_us = 1000.0;
    uint8_t ttl = 64;
    uint16_t win_base = 16384;
    double resp_prob = 0.3;
    double psh_prob = 0.2;
    int len_min = 18;
    int len_max = 64;
};

struct SynthSpec {
    int classes = 2;
    int flows_per_class = 10;
    std::vector<SynthClassProfile> profiles;  // empty -> default per-class profiles
    // Number of data packets over which per-packet statistics blend from a
    // shared generic profile into the class profile. Larger values push the
    // depth needed for accurate classification higher.
    int blend_packets = 8;
    bool tcp_handshake = true;

    static SynthClassProfile default_profile(int cls);
};

// Deterministic in (spec, seed), byte for byte.
Dataset synth_generate(const SynthSpec& spec, uint64_t seed);

// Splits by whole flows, stratified by class label for classification.
// `test_fraction` in (0,1); each class keeps at least one flow on both sides.
struct HoldoutSplit {
    Dataset train;
    Dataset test;
};
HoldoutSplit split_holdout(const Dataset& dataset, double test_fraction, uint64_t seed);

}  // namespace flowtune
