// flow.hpp
//
// Core traffic records: per-packet fields, per-connection flows, and labeled
// datasets. Every packet also carries a synthesized wire-format header blob
// so extraction plans can run genuine header parsing per packet.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "flowtune/common.hpp"

namespace flowtune {

enum class Direction : uint8_t {
    Orig = 0,  // originator -> responder
    Resp = 1,  // responder -> originator
};

enum class Task : uint8_t { Classification, Regression };

// TCP flag bits, matching the on-wire layout of the TCP flags octet.
namespace tcpflag {
constexpr uint8_t kFin = 0x01;
constexpr uint8_t kSyn = 0x02;
constexpr uint8_t kRst = 0x04;
constexpr uint8_t kPsh = 0x08;
constexpr uint8_t kAck = 0x10;
constexpr uint8_t kUrg = 0x20;
constexpr uint8_t kEce = 0x40;
constexpr uint8_t kCwr = 0x80;
}  // namespace tcpflag

constexpr uint8_t kProtoTcp = 6;
constexpr uint8_t kProtoUdp = 17;

// One observed packet. `ts_us` is microseconds since the start of the trace;
// timestamps are non-decreasing within a flow. The first packet of a flow is
// always Direction::Orig by construction of the loaders.
struct PacketRecord {
    int64_t ts_us = 0;
    Direction dir = Direction::Orig;
    uint32_t frame_len = 0;
    uint8_t proto = kProtoTcp;
    uint16_t src_port = 0;
    uint16_t dst_port = 0;
    uint8_t ip_ttl = 64;
    uint8_t tcp_flags = 0;
    uint16_t tcp_window = 0;  // 0 for non-TCP

    // Ethernet + IPv4 + TCP/UDP headers rebuilt from the fields above.
    std::array<uint8_t, 54> wire{};
    uint8_t wire_len = 0;

    void rebuild_wire();
};

struct FlowRecord {
    std::string flow_id;
    std::vector<PacketRecord> packets;  // non-empty, time-ordered
    std::string label;                  // classification
    double target = 0.0;                // regression
};

struct Dataset {
    Task task = Task::Classification;
    std::vector<FlowRecord> flows;
    std::vector<std::string> label_domain;  // sorted unique labels (classification)

    // Index of a flow's label in label_domain.
    int label_index(const FlowRecord& flow) const;
    void rebuild_label_domain();
};

}  // namespace flowtune
