#include "phy60/fifo.hpp"

#include <algorithm>
#include <stdexcept>

namespace phy60 {

FifoResult fifo_simulate(const FifoParams& params) {
    if (params.capacity <= 0) throw std::invalid_argument("fifo_simulate: capacity must be positive");
    if (params.start_occupancy < 0 || params.start_occupancy > params.capacity)
        throw std::invalid_argument("fifo_simulate: start occupancy out of range");

    // Reduce the two periods to an exact integer ratio: write ticks land at
    // n * Pw, read ticks at m * Pr on a common integer timeline.
    Rational ratio = params.write_period / params.read_period;
    const std::int64_t pw = ratio.num();
    const std::int64_t pr = ratio.den();
    if (pw <= 0 || pr <= 0) throw std::invalid_argument("fifo_simulate: periods must be positive");

    FifoResult res;
    std::int64_t occ = params.start_occupancy;
    res.min_occupancy = res.max_occupancy = occ;

    std::int64_t wtick = 0;  // next write-clock tick index
    std::int64_t rtick = 0;  // next read-clock tick index

    auto record = [&](std::int64_t at_read_tick) {
        res.min_occupancy = std::min(res.min_occupancy, occ);
        res.max_occupancy = std::max(res.max_occupancy, occ);
        if (res.trace.size() < params.trace_limit)
            res.trace.push_back({at_read_tick, occ, res.writes_done, res.reads_done});
    };

    while (rtick < params.read_ticks) {
        const std::int64_t tw = wtick * pw;
        const std::int64_t tr = rtick * pr;
        const std::int64_t now = std::min(tw, tr);

        if (tw == now) {
            if (params.write_schedule.active(wtick)) {
                if (occ >= params.capacity) {
                    res.overflow = true;  // byte dropped
                } else {
                    ++occ;
                    ++res.writes_done;
                }
            }
            ++wtick;
        }
        if (tr == now) {
            if (params.read_schedule.active(rtick)) {
                if (occ <= 0) {
                    res.underflow = true;  // read skipped
                } else {
                    --occ;
                    ++res.reads_done;
                }
            }
            ++rtick;
        }
        record(rtick - 1);
    }

    res.end_occupancy = occ;
    return res;
}

FifoParams fifo_tx_params(const ClockPlan& plan, std::int64_t capacity,
                          std::int64_t start_occupancy, std::int64_t read_ticks) {
    FifoParams p;
    p.write_period = Rational(1) / plan.f1();
    p.read_period = Rational(1) / plan.f2();
    p.write_schedule = ClockSchedule::continuous();
    p.read_schedule = ClockSchedule::tx_frame();
    p.capacity = capacity;
    p.start_occupancy = start_occupancy;
    p.read_ticks = read_ticks;
    return p;
}

FifoParams fifo_rx_params(const ClockPlan& plan, std::int64_t capacity,
                          std::int64_t start_occupancy, std::int64_t read_ticks) {
    FifoParams p;
    p.write_period = Rational(1) / plan.f2();
    p.read_period = Rational(1) / plan.f1();
    p.write_schedule = ClockSchedule::tx_frame();
    p.read_schedule = ClockSchedule::continuous();
    p.capacity = capacity;
    p.start_occupancy = start_occupancy;
    p.read_ticks = read_ticks;
    return p;
}

}  // namespace phy60
