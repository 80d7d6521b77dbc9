#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "phy60/config.hpp"

namespace phy60 {

// Measurement harness. Trials are keyed by (operating point, frame index)
// so every random stream is independent of the worker count: a campaign
// with the same master seed emits byte-identical CSV at any --threads.

struct RunConfig {
    PhyConfig phy;
    std::vector<double> sweep;  // BSC: p values; AWGN / FIR+AWGN: Eb/N0 in dB
    std::int64_t frames = 1000;
    bool coding = true;
    std::uint64_t seed = 1;
    int threads = 0;  // 0 = hardware concurrency
};

struct BerPoint {
    double point = 0.0;
    std::int64_t bits_tx = 0;              // payload bits of frames synced at the true position
    std::int64_t pre_fec_bit_errors = 0;   // payload-region errors before RS correction
    std::int64_t post_fec_bit_errors = 0;  // errors in the delivered payload
    std::int64_t frames_tx = 0;
    std::int64_t frame_errors = 0;         // delivered payload mismatch or lost sync
    std::int64_t sync_misses = 0;
    std::int64_t false_alarms = 0;         // detection fired at a wrong position
    std::int64_t corrected_bytes = 0;
    double wall_seconds = 0.0;             // console only, never in CSV

    double pre_fec_ber() const { return bits_tx ? double(pre_fec_bit_errors) / double(bits_tx) : 0.0; }
    double post_fec_ber() const { return bits_tx ? double(post_fec_bit_errors) / double(bits_tx) : 0.0; }
    double fer() const { return frames_tx ? double(frame_errors) / double(frames_tx) : 0.0; }
};

struct BerReport {
    ChannelConfig::Kind kind = ChannelConfig::Kind::Bsc;
    bool coding = true;
    std::uint64_t seed = 1;
    std::vector<BerPoint> points;
};

// Per-frame observation hook for reference comparators: receives the frame
// index, the transmitted payload bits and the raw demodulated payload bits
// (pre-FEC). Only called for frames synced at the true position; may be
// invoked from worker threads.
using FrameObserver =
    std::function<void(std::int64_t, const BitVector&, const BitVector&)>;

// Full chain per frame: random payload -> build_frame -> serialize ->
// differential encode -> BPSK -> channel -> delay-product demod ->
// detect_frame -> byte-align -> parse_frame. Each trial transmits the frame
// under test followed by one more frame so the second correlator bank sees
// the periodic preamble, with a random 0..7 bit offset in front.
BerReport run_link(const RunConfig& config, const FrameObserver& observer = nullptr);

struct SyncCampaignConfig {
    std::vector<int> gammas{26, 28, 30, 32};
    std::vector<double> ps{0.005, 0.01, 0.02};
    int banks = 2;
    std::int64_t miss_trials = 100000;
    std::int64_t fa_windows = 10000000;  // 0 skips the false-alarm section
    std::uint64_t seed = 1;
    int threads = 0;
    std::uint32_t preamble = 0;  // 0 = canonical
};

struct SyncStatsRow {
    std::string metric;  // "miss" | "false_alarm"
    int gamma = 0;
    double p = 0.0;      // ignored for false_alarm rows (emitted empty)
    int banks = 2;
    double analytic = 0.0;
    double montecarlo = 0.0;
    std::int64_t trials = 0;
    double stderr_analytic = 0.0;  // binomial se at the analytic rate
};

// Seeded Monte Carlo vs the analytic kernels over the gamma/p sweep.
std::vector<SyncStatsRow> run_sync_campaign(const SyncCampaignConfig& config);

// RFC-4180-style CSV, header row, one row per operating point. Numbers are
// shortest-round-trip decimal, so re-parsing reproduces every field exactly.
std::string to_csv(const BerReport& report);
std::string to_csv(const std::vector<SyncStatsRow>& rows);

// destination "-" means stdout; anything else is a file path. Unwritable
// destinations raise std::runtime_error naming the path.
void emit_csv(const std::string& csv, const std::string& destination);

std::string format_double(double v);

// Runs fn(begin, end) over [0, total) split into contiguous chunks.
void parallel_chunks(std::int64_t total, int threads,
                     const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace phy60
