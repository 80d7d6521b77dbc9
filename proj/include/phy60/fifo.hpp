#pragma once

#include <cstdint>
#include <vector>

#include "phy60/framing.hpp"
#include "phy60/rational.hpp"

namespace phy60 {

// Cyclic activity gate on a byte clock: within each period of `period`
// ticks, ticks [active_start, active_start + active_len) move a byte.
// The transmit encoding control is {260, 4, 239}: 4 idle ticks while the
// preamble is emitted, 239 reads, then 17 idle ticks while check bytes and
// the dummy byte go out.
struct ClockSchedule {
    std::int64_t period = 1;
    std::int64_t active_start = 0;
    std::int64_t active_len = 1;

    bool active(std::int64_t tick) const {
        std::int64_t m = tick % period;
        return m >= active_start && m < active_start + active_len;
    }
    static ClockSchedule continuous() { return {1, 0, 1}; }
    static ClockSchedule tx_frame() { return {kFrameBytes, kPreambleBytes, kPayloadBytes}; }
};

struct FifoParams {
    Rational write_period;        // seconds between write-clock ticks
    Rational read_period;         // seconds between read-clock ticks
    ClockSchedule write_schedule = ClockSchedule::continuous();
    ClockSchedule read_schedule = ClockSchedule::continuous();
    std::int64_t capacity = 2048;
    std::int64_t start_occupancy = 1024;
    std::int64_t read_ticks = 0;  // simulation length, counted on the read clock
    std::size_t trace_limit = 0;  // occupancy checkpoints to retain
};

struct FifoTracePoint {
    std::int64_t read_tick;
    std::int64_t occupancy;
    std::int64_t writes_done;
    std::int64_t reads_done;
};

struct FifoResult {
    std::int64_t min_occupancy = 0;
    std::int64_t max_occupancy = 0;
    std::int64_t end_occupancy = 0;
    std::int64_t writes_done = 0;  // bytes accepted
    std::int64_t reads_done = 0;   // bytes delivered
    bool overflow = false;         // a write found the FIFO full (byte dropped)
    bool underflow = false;        // a read found the FIFO empty (read skipped)
    std::vector<FifoTracePoint> trace;
};

// Event-driven two-clock simulation with exact integer event times (the two
// periods are reduced to an integer ratio once, so 1e7-tick runs cannot
// drift). Simultaneous write and read ticks form one instant: the write
// lands first, then the read, and the occupancy envelope is sampled at
// instant boundaries.
FifoResult fifo_simulate(const FifoParams& params);

// Convenience wrappers for the two sides of the link. Tx: continuous writes
// at f1, reads at f2 gated 4/239/17. Rx: writes at f2 gated by the same
// pattern, continuous reads at f1.
FifoParams fifo_tx_params(const ClockPlan& plan, std::int64_t capacity,
                          std::int64_t start_occupancy, std::int64_t read_ticks);
FifoParams fifo_rx_params(const ClockPlan& plan, std::int64_t capacity,
                          std::int64_t start_occupancy, std::int64_t read_ticks);

}  // namespace phy60
