#include "phy60/harness.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "phy60/gf256_rs.hpp"

namespace phy60 {

namespace {

enum StreamDomain : std::uint64_t { kLink = 1, kMiss = 2, kFalseAlarm = 3 };

std::uint64_t stream_id(std::uint64_t domain, std::uint64_t row, std::uint64_t index) {
    return (domain << 56) ^ (row << 40) ^ index;
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::uint8_t byte_at(const BitVector& bits, std::size_t pos) {
    std::uint8_t b = 0;
    for (int i = 0; i < 8; ++i) b = std::uint8_t((b << 1) | (bits.get(pos + i) ? 1 : 0));
    return b;
}

std::vector<std::uint8_t> bytes_at(const BitVector& bits, std::size_t pos, std::size_t n) {
    std::vector<std::uint8_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = byte_at(bits, pos + 8 * i);
    return out;
}

int hamming_bytes(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d += std::popcount(unsigned(a[i] ^ b[i]));
    return d;
}

struct TrialCounters {
    std::int64_t bits_tx = 0, pre_err = 0, post_err = 0;
    std::int64_t frames = 0, frame_err = 0, miss = 0, falarm = 0, corrected = 0;

    void operator+=(const TrialCounters& o) {
        bits_tx += o.bits_tx; pre_err += o.pre_err; post_err += o.post_err;
        frames += o.frames; frame_err += o.frame_err; miss += o.miss;
        falarm += o.falarm; corrected += o.corrected;
    }
};

// One frame through the whole chain. The stream carries the frame under
// test, one follow-up frame for the periodic preamble check, and 0..7
// random lead-in bits standing in for the tail of earlier traffic.
TrialCounters run_one_frame(const RunConfig& cfg, double point, std::size_t point_idx,
                            std::int64_t frame_idx, const FrameObserver& observer) {
    const FrameConfig& fc = cfg.phy.frame;
    Rng rng(cfg.seed, stream_id(kLink, point_idx, std::uint64_t(frame_idx)));

    std::array<std::uint8_t, kPayloadBytes> payload_a;
    std::array<std::uint8_t, kPayloadBytes> payload_b;
    for (auto& b : payload_a) b = rng.byte();
    for (auto& b : payload_b) b = rng.byte();
    const int offset = int(rng.below(8));

    auto frame_a = build_frame(payload_a, fc);
    auto frame_b = build_frame(payload_b, fc);

    BitVector tx;
    for (int i = 0; i < offset; ++i) tx.push_back(rng.bit());
    tx.append(serialize_bytes(frame_a));
    tx.append(serialize_bytes(frame_b));

    BitVector rx;
    switch (cfg.phy.channel.kind) {
        case ChannelConfig::Kind::Bsc:
            rx = bsc(tx, point, rng);
            break;
        case ChannelConfig::Kind::Awgn: {
            auto sym = awgn(bpsk_map(diff_encode(tx, false)), point, rng);
            rx = diff_demod(sym, +1.0);
            break;
        }
        case ChannelConfig::Kind::FirAwgn: {
            auto sym = fir(bpsk_map(diff_encode(tx, false)), cfg.phy.channel.taps);
            sym = awgn(sym, point, rng);
            rx = diff_demod(sym, +1.0);
            break;
        }
    }

    TrialCounters c;
    c.frames = 1;

    auto det = detect_frame(rx, preamble_word(fc), cfg.phy.sync);
    if (!det) {
        c.miss = 1;
        c.frame_err = 1;
        return c;
    }
    if (det->frame_start != std::size_t(offset)) {
        c.falarm = 1;
        c.frame_err = 1;
        return c;
    }

    auto frame_bytes = bytes_at(rx, det->frame_start, kFrameBytes);
    auto descrambled = scramble(std::span<const std::uint8_t>(frame_bytes).subspan(kPreambleBytes),
                                std::span<const std::uint8_t, 4>(fc.scrambler));

    c.bits_tx = kPayloadBytes * 8;
    const int raw_errors = hamming_bytes(std::span(payload_a),
                                         std::span(descrambled).first(kPayloadBytes));
    c.pre_err = raw_errors;

    if (cfg.coding) {
        auto parsed = parse_frame(frame_bytes, fc);
        if (parsed) {
            const int post = hamming_bytes(std::span(payload_a), std::span(parsed->payload));
            c.post_err = post;
            c.corrected = parsed->corrected;
            if (post > 0) c.frame_err = 1;
        } else {
            // uncorrectable: the raw payload is delivered as-is
            c.post_err = raw_errors;
            c.frame_err = 1;
        }
    } else {
        c.post_err = raw_errors;
        if (raw_errors > 0) c.frame_err = 1;
    }

    if (observer) {
        BitVector tx_payload = serialize_bytes(std::span(payload_a));
        BitVector rx_payload = serialize_bytes(std::span(descrambled).first(kPayloadBytes));
        observer(frame_idx, tx_payload, rx_payload);
    }
    return c;
}

}  // namespace

void parallel_chunks(std::int64_t total, int threads,
                     const std::function<void(std::int64_t, std::int64_t)>& fn) {
    threads = resolve_threads(threads);
    if (threads <= 1 || total < 2) {
        if (total > 0) fn(0, total);
        return;
    }
    std::vector<std::thread> pool;
    std::int64_t chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        std::int64_t begin = t * chunk;
        std::int64_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& th : pool) th.join();
}

BerReport run_link(const RunConfig& config, const FrameObserver& observer) {
    if (config.frames < 1) throw std::invalid_argument("run_link: frames must be >= 1");
    if (config.sweep.empty()) throw std::invalid_argument("run_link: sweep must be nonempty");
    if (config.phy.channel.kind == ChannelConfig::Kind::Bsc)
        for (double p : config.sweep)
            if (p < 0.0 || p > 1.0) throw std::invalid_argument("run_link: BSC p out of [0,1]");

    BerReport report;
    report.kind = config.phy.channel.kind;
    report.coding = config.coding;
    report.seed = config.seed;

    for (std::size_t pi = 0; pi < config.sweep.size(); ++pi) {
        const double point = config.sweep[pi];
        auto t0 = std::chrono::steady_clock::now();

        std::mutex mu;
        TrialCounters total;
        parallel_chunks(config.frames, config.threads,
                        [&](std::int64_t begin, std::int64_t end) {
                            TrialCounters local;
                            for (std::int64_t f = begin; f < end; ++f)
                                local += run_one_frame(config, point, pi, f, observer);
                            std::lock_guard<std::mutex> lock(mu);
                            total += local;
                        });

        BerPoint bp;
        bp.point = point;
        bp.bits_tx = total.bits_tx;
        bp.pre_fec_bit_errors = total.pre_err;
        bp.post_fec_bit_errors = total.post_err;
        bp.frames_tx = total.frames;
        bp.frame_errors = total.frame_err;
        bp.sync_misses = total.miss;
        bp.false_alarms = total.falarm;
        bp.corrected_bytes = total.corrected;
        bp.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report.points.push_back(bp);
    }
    return report;
}

std::vector<SyncStatsRow> run_sync_campaign(const SyncCampaignConfig& config) {
    if (config.banks != 1 && config.banks != 2)
        throw std::invalid_argument("run_sync_campaign: banks must be 1 or 2");
    for (double p : config.ps)
        if (p < 0.0 || p > 1.0)
            throw std::invalid_argument("run_sync_campaign: p out of [0,1]");

    const std::uint32_t preamble =
        config.preamble ? config.preamble : preamble_word(PhyConfig::canonical().frame);

    std::vector<SyncStatsRow> rows;
    std::uint64_t row_idx = 0;

    for (int gamma : config.gammas) {
        for (double p : config.ps) {
            std::mutex mu;
            std::int64_t misses = 0;
            parallel_chunks(config.miss_trials, config.threads,
                            [&](std::int64_t begin, std::int64_t end) {
                                std::int64_t local = 0;
                                for (std::int64_t t = begin; t < end; ++t) {
                                    Rng rng(config.seed, stream_id(kMiss, row_idx, std::uint64_t(t)));
                                    bool pass = true;
                                    for (int bank = 0; bank < config.banks; ++bank) {
                                        int flips = 0;
                                        for (int b = 0; b < 32; ++b) flips += rng.bernoulli(p);
                                        if (32 - flips < gamma) pass = false;
                                    }
                                    local += !pass;
                                }
                                std::lock_guard<std::mutex> lock(mu);
                                misses += local;
                            });
            SyncStatsRow row;
            row.metric = "miss";
            row.gamma = gamma;
            row.p = p;
            row.banks = config.banks;
            row.analytic = p_miss_analytic(p, gamma, config.banks);
            row.montecarlo = double(misses) / double(config.miss_trials);
            row.trials = config.miss_trials;
            row.stderr_analytic =
                std::sqrt(row.analytic * (1.0 - row.analytic) / double(config.miss_trials));
            rows.push_back(row);
            ++row_idx;
        }
    }

    if (config.fa_windows > 0) {
        // windows are drawn in fixed-size blocks so the stream ids, and hence
        // the counts, do not depend on the thread count
        constexpr std::int64_t kBlock = 1 << 16;
        for (int gamma : config.gammas) {
            const std::int64_t nblocks = (config.fa_windows + kBlock - 1) / kBlock;
            std::mutex mu;
            std::int64_t hits = 0;
            parallel_chunks(nblocks, config.threads,
                            [&](std::int64_t begin, std::int64_t end) {
                                std::int64_t local = 0;
                                for (std::int64_t blk = begin; blk < end; ++blk) {
                                    Rng rng(config.seed, stream_id(kFalseAlarm, row_idx, std::uint64_t(blk)));
                                    std::int64_t lo = blk * kBlock;
                                    std::int64_t hi = std::min(config.fa_windows, lo + kBlock);
                                    for (std::int64_t w = lo; w < hi; ++w) {
                                        bool all = true;
                                        for (int bank = 0; bank < config.banks; ++bank)
                                            if (correlate32(rng.next_u32(), preamble) < gamma) all = false;
                                        local += all;
                                    }
                                }
                                std::lock_guard<std::mutex> lock(mu);
                                hits += local;
                            });
            SyncStatsRow row;
            row.metric = "false_alarm";
            row.gamma = gamma;
            row.p = 0.0;
            row.banks = config.banks;
            row.analytic = p_false_alarm_analytic(gamma, config.banks);
            row.montecarlo = double(hits) / double(config.fa_windows);
            row.trials = config.fa_windows;
            row.stderr_analytic =
                std::sqrt(row.analytic * (1.0 - row.analytic) / double(config.fa_windows));
            rows.push_back(row);
            ++row_idx;
        }
    }
    return rows;
}

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw std::runtime_error("format_double: to_chars failed");
    return std::string(buf, end);
}

std::string to_csv(const BerReport& report) {
    std::string out =
        "point,bits_tx,pre_fec_bit_errors,pre_fec_ber,post_fec_bit_errors,post_fec_ber,"
        "frames_tx,frame_errors,fer,sync_misses,false_alarms,corrected_bytes\n";
    for (const auto& p : report.points) {
        out += format_double(p.point) + ',' + std::to_string(p.bits_tx) + ',' +
               std::to_string(p.pre_fec_bit_errors) + ',' + format_double(p.pre_fec_ber()) + ',' +
               std::to_string(p.post_fec_bit_errors) + ',' + format_double(p.post_fec_ber()) + ',' +
               std::to_string(p.frames_tx) + ',' + std::to_string(p.frame_errors) + ',' +
               format_double(p.fer()) + ',' + std::to_string(p.sync_misses) + ',' +
               std::to_string(p.false_alarms) + ',' + std::to_string(p.corrected_bytes) + '\n';
    }
    return out;
}

std::string to_csv(const std::vector<SyncStatsRow>& rows) {
    std::string out = "metric,gamma,p,banks,analytic,montecarlo,trials,stderr\n";
    for (const auto& r : rows) {
        out += r.metric + ',' + std::to_string(r.gamma) + ',';
        if (r.metric != "false_alarm") out += format_double(r.p);
        out += ',' + std::to_string(r.banks) + ',' + format_double(r.analytic) + ',' +
               format_double(r.montecarlo) + ',' + std::to_string(r.trials) + ',' +
               format_double(r.stderr_analytic) + '\n';
    }
    return out;
}

void emit_csv(const std::string& csv, const std::string& destination) {
    if (destination == "-" || destination.empty()) {
        std::cout << csv;
        return;
    }
    std::ofstream f(destination, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write CSV to: " + destination);
    f << csv;
    if (!f.good()) throw std::runtime_error("write failed for CSV destination: " + destination);
}

}  // namespace phy60
