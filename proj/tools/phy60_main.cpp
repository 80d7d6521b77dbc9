// phy60 command line: BER sweeps, synchronization statistics, dummy-byte
// search, FIFO rate-matching simulation and link-budget arithmetic.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "phy60/fifo.hpp"
#include "phy60/harness.hpp"

using namespace phy60;

namespace {

PhyConfig load_phy(const std::string& config_path) {
    PhyConfig cfg = PhyConfig::canonical();
    if (!config_path.empty()) cfg = apply_config(cfg, read_config_file(config_path));
    return cfg;
}

std::string hex32(const std::array<std::uint8_t, 4>& b) {
    char buf[11];
    std::snprintf(buf, sizeof buf, "0x%02X%02X%02X%02X", b[0], b[1], b[2], b[3]);
    return buf;
}

int cmd_ber(const std::string& config_path, const std::string& channel,
            std::vector<double> sweep, std::int64_t frames, bool no_coding,
            std::uint64_t seed, int threads, const std::string& out) {
    RunConfig rc;
    rc.phy = load_phy(config_path);
    if (!channel.empty()) {
        std::map<std::string, std::string> kv{{"channel", channel}};
        rc.phy = apply_config(rc.phy, kv);
    }
    rc.sweep = std::move(sweep);
    rc.frames = frames;
    rc.coding = !no_coding;
    rc.seed = seed;
    rc.threads = threads;

    BerReport report = run_link(rc);
    emit_csv(to_csv(report), out);
    for (const auto& p : report.points) {
        std::cerr << "point " << format_double(p.point)
                  << ": pre-FEC BER " << format_double(p.pre_fec_ber())
                  << ", post-FEC BER " << format_double(p.post_fec_ber())
                  << ", FER " << format_double(p.fer())
                  << ", misses " << p.sync_misses
                  << ", false alarms " << p.false_alarms
                  << " (" << format_double(p.wall_seconds) << " s)\n";
    }
    return 0;
}

int cmd_sync_stats(const std::string& config_path, std::vector<int> gammas,
                   std::vector<double> ps, int banks, std::int64_t trials,
                   std::int64_t fa_windows, std::uint64_t seed, int threads,
                   const std::string& out) {
    SyncCampaignConfig sc;
    sc.gammas = std::move(gammas);
    sc.ps = std::move(ps);
    sc.banks = banks;
    sc.miss_trials = trials;
    sc.fa_windows = fa_windows;
    sc.seed = seed;
    sc.threads = threads;
    sc.preamble = preamble_word(load_phy(config_path).frame);
    emit_csv(to_csv(run_sync_campaign(sc)), out);
    return 0;
}

int cmd_dummy_search(const std::string& config_path, const std::string& out) {
    PhyConfig cfg = load_phy(config_path);
    DummySearch res = search_dummy_byte(cfg.frame.preamble);

    std::string csv = "k,on_air_byte,mcor,agree_i1,agree_i2,agree_i3,agree_i4,"
                      "agree_i5,agree_i6,agree_i7,agree_i8\n";
    for (int k = 0; k < 256; ++k) {
        std::uint8_t v = 0;
        for (int j = 1; j <= 8; ++j)
            if ((k >> (j - 1)) & 1) v |= std::uint8_t(1u << (8 - j));
        csv += std::to_string(k) + ',' + std::to_string(int(v)) + ',' +
               std::to_string(res.mcor_table[k]);
        for (int i = 0; i < 8; ++i) csv += ',' + std::to_string(res.profiles[k][i]);
        csv += '\n';
    }
    emit_csv(csv, out);

    char dummy_hex[5];
    std::snprintf(dummy_hex, sizeof dummy_hex, "0x%02X", res.on_air_byte);
    std::cerr << "preamble " << hex32(cfg.frame.preamble)
              << ": best k = " << res.k << ", on-air dummy byte " << dummy_hex
              << ", max cross-correlation " << res.mcor << "\n";
    return 0;
}

int cmd_fifo_sim(const std::string& config_path, const std::string& direction,
                 std::int64_t capacity, std::int64_t start, std::int64_t ticks) {
    PhyConfig cfg = load_phy(config_path);
    if (capacity > 0) cfg.fifo_capacity = capacity;
    if (start >= 0) cfg.fifo_start = start;

    FifoParams params;
    if (direction == "tx")
        params = fifo_tx_params(cfg.clocks, cfg.fifo_capacity, cfg.fifo_start, ticks);
    else if (direction == "rx")
        params = fifo_rx_params(cfg.clocks, cfg.fifo_capacity, cfg.fifo_start, ticks);
    else
        throw std::invalid_argument("fifo-sim: direction must be tx or rx");

    FifoResult res = fifo_simulate(params);
    std::cout << "direction:      " << direction << "\n"
              << "capacity:       " << params.capacity << " bytes\n"
              << "start:          " << params.start_occupancy << " bytes\n"
              << "read ticks:     " << params.read_ticks << "\n"
              << "writes done:    " << res.writes_done << "\n"
              << "reads done:     " << res.reads_done << "\n"
              << "occupancy min:  " << res.min_occupancy << "\n"
              << "occupancy max:  " << res.max_occupancy << "\n"
              << "occupancy end:  " << res.end_occupancy << "\n"
              << "overflow:       " << (res.overflow ? "YES" : "no") << "\n"
              << "underflow:      " << (res.underflow ? "YES" : "no") << "\n";
    return 0;
}

int cmd_link_budget(double ptx_dbm, double gtx_dbi, double grx_dbi,
                    double freq_hz, double distance_m) {
    LinkBudgetParams p{ptx_dbm, gtx_dbi, grx_dbi, freq_hz, distance_m};
    LinkBudgetResult r = link_budget(p);
    std::printf("tx power:          %+8.2f dBm\n", p.ptx_dbm);
    std::printf("tx antenna gain:   %+8.2f dBi\n", p.gtx_dbi);
    std::printf("rx antenna gain:   %+8.2f dBi\n", p.grx_dbi);
    std::printf("frequency:         %11.3f GHz\n", p.freq_hz / 1e9);
    std::printf("distance:          %11.3f m\n", p.distance_m);
    std::printf("free-space loss:   %+8.2f dB\n", -r.fspl_db);
    std::printf("rx power:          %+8.2f dBm\n", r.prx_dbm);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"phy60: near-gigabit single-carrier baseband PHY simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out = "-";
    std::uint64_t seed = 1;
    int threads = 0;

    // ber
    auto* ber = app.add_subcommand("ber", "end-to-end BER/FER sweep over a channel");
    std::string ber_channel;
    std::vector<double> ber_sweep;
    std::int64_t ber_frames = 10000;
    bool ber_no_coding = false;
    ber->add_option("--config", config_path, "key = value config file");
    ber->add_option("--channel", ber_channel, "bsc | awgn | fir-awgn");
    ber->add_option("--sweep", ber_sweep, "operating points (BSC: p, AWGN: Eb/N0 dB)")
        ->required()->expected(-1);
    ber->add_option("--frames", ber_frames, "frames per operating point");
    ber->add_flag("--no-coding", ber_no_coding, "score raw bits, skip RS correction");
    ber->add_option("--seed", seed, "master seed");
    ber->add_option("--threads", threads, "worker threads (0 = auto)");
    ber->add_option("--out", out, "CSV destination (- for stdout)");

    // sync-stats
    auto* ss = app.add_subcommand("sync-stats", "miss/false-alarm statistics vs analytic");
    std::vector<int> ss_gammas{26, 28, 30, 32};
    std::vector<double> ss_ps{0.005, 0.01, 0.02};
    int ss_banks = 2;
    std::int64_t ss_trials = 100000;
    std::int64_t ss_fa_windows = 10000000;
    ss->add_option("--config", config_path, "key = value config file");
    ss->add_option("--gammas", ss_gammas, "thresholds to sweep")->expected(-1);
    ss->add_option("--ps", ss_ps, "channel bit error probabilities")->expected(-1);
    ss->add_option("--banks", ss_banks, "correlator banks (1 or 2)");
    ss->add_option("--trials", ss_trials, "miss-detection trials per point");
    ss->add_option("--fa-windows", ss_fa_windows, "false-alarm windows per gamma (0 = skip)");
    ss->add_option("--seed", seed, "master seed");
    ss->add_option("--threads", threads, "worker threads (0 = auto)");
    ss->add_option("--out", out, "CSV destination (- for stdout)");

    // dummy-search
    auto* ds = app.add_subcommand("dummy-search", "minimax dummy-byte search profile");
    ds->add_option("--config", config_path, "key = value config file");
    ds->add_option("--out", out, "CSV destination (- for stdout)");

    // fifo-sim
    auto* fs = app.add_subcommand("fifo-sim", "dual-clock FIFO rate-matching run");
    std::string fs_direction = "tx";
    std::int64_t fs_capacity = 0, fs_start = -1, fs_ticks = 10000000;
    fs->add_option("--config", config_path, "key = value config file");
    fs->add_option("--direction", fs_direction, "tx or rx");
    fs->add_option("--capacity", fs_capacity, "FIFO capacity in bytes");
    fs->add_option("--start", fs_start, "starting occupancy in bytes");
    fs->add_option("--ticks", fs_ticks, "read-clock ticks to simulate");

    // link-budget
    auto* lb = app.add_subcommand("link-budget", "Friis received-power table");
    double lb_ptx = 0.0, lb_gtx = 22.4, lb_grx = 22.4, lb_freq = 60e9, lb_dist = 10.0;
    lb->add_option("--ptx-dbm", lb_ptx, "transmit power in dBm");
    lb->add_option("--gtx-dbi", lb_gtx, "transmit antenna gain in dBi");
    lb->add_option("--grx-dbi", lb_grx, "receive antenna gain in dBi");
    lb->add_option("--freq-hz", lb_freq, "carrier frequency in Hz");
    lb->add_option("--distance-m", lb_dist, "link distance in meters");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ber->parsed())
            return cmd_ber(config_path, ber_channel, ber_sweep, ber_frames,
                           ber_no_coding, seed, threads, out);
        if (ss->parsed())
            return cmd_sync_stats(config_path, ss_gammas, ss_ps, ss_banks,
                                  ss_trials, ss_fa_windows, seed, threads, out);
        if (ds->parsed()) return cmd_dummy_search(config_path, out);
        if (fs->parsed())
            return cmd_fifo_sim(config_path, fs_direction, fs_capacity, fs_start, fs_ticks);
        if (lb->parsed())
            return cmd_link_budget(lb_ptx, lb_gtx, lb_grx, lb_freq, lb_dist);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
