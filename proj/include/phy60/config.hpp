#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "phy60/channel.hpp"
#include "phy60/framing.hpp"
#include "phy60/linecoding.hpp"
#include "phy60/sync.hpp"

namespace phy60 {

// Everything a run needs. The canonical defaults are all derived, not
// hard-coded: the preamble comes from the 31-bit m-sequence (x^5 + x^2 + 1,
// seed 10000b, pad 0), the scrambler is the phase of the same family with
// the lowest worst-case agreement against that preamble, and the dummy byte
// is the minimax search winner for that preamble.
struct PhyConfig {
    PnSequence pn;
    FrameConfig frame;
    SyncConfig sync;
    ChannelConfig channel;
    ClockPlan clocks;
    std::int64_t fifo_capacity = 2048;
    std::int64_t fifo_start = 1024;  // half-full

    static const PhyConfig& canonical();
};

std::uint32_t preamble_word(const FrameConfig& frame);

// Flat key = value file, '#' comments, later keys win. Unknown keys are
// rejected. See the README for the schema.
std::map<std::string, std::string> read_config_file(const std::string& path);

// Applies file keys on top of a config (missing keys keep their values).
PhyConfig apply_config(const PhyConfig& base, const std::map<std::string, std::string>& kv);

}  // namespace phy60
