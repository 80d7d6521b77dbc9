#include "phy60/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace phy60 {

namespace {

std::array<std::uint8_t, 4> parse_hex32(const std::string& s, const std::string& key) {
    std::string body = s;
    if (body.rfind("0x", 0) == 0 || body.rfind("0X", 0) == 0) body = body.substr(2);
    if (body.size() != 8)
        throw std::invalid_argument(key + ": expected 8 hex digits, got '" + s + "'");
    std::uint32_t v = static_cast<std::uint32_t>(std::stoul(body, nullptr, 16));
    return {std::uint8_t(v >> 24), std::uint8_t(v >> 16), std::uint8_t(v >> 8), std::uint8_t(v)};
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

const PhyConfig& PhyConfig::canonical() {
    static const PhyConfig cfg = [] {
        PhyConfig c;
        c.frame.preamble = c.pn.packed_bytes(0);
        c.frame.scrambler = select_scrambler(c.pn, c.frame.preamble).bytes;
        c.frame.dummy_on_air = search_dummy_byte(c.frame.preamble).on_air_byte;
        return c;
    }();
    return cfg;
}

std::uint32_t preamble_word(const FrameConfig& frame) {
    return (std::uint32_t(frame.preamble[0]) << 24) | (std::uint32_t(frame.preamble[1]) << 16) |
           (std::uint32_t(frame.preamble[2]) << 8) | frame.preamble[3];
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": empty key or value");
        kv[key] = value;
    }
    return kv;
}

PhyConfig apply_config(const PhyConfig& base, const std::map<std::string, std::string>& kv) {
    PhyConfig c = base;
    bool rederive_preamble = false;
    bool rederive_scrambler = false;
    bool rederive_dummy = false;

    for (const auto& [key, value] : kv) {
        if (key == "preamble") {
            if (value == "auto") rederive_preamble = true;
            else c.frame.preamble = parse_hex32(value, key);
        } else if (key == "scrambler") {
            if (value == "auto") rederive_scrambler = true;
            else c.frame.scrambler = parse_hex32(value, key);
        } else if (key == "dummy") {
            if (value == "auto") rederive_dummy = true;
            else c.frame.dummy_on_air = std::uint8_t(std::stoul(value, nullptr, 0));
        } else if (key == "pn.taps") {
            c.pn.taps.clear();
            for (double d : parse_double_list(value)) c.pn.taps.push_back(int(d));
            rederive_preamble = rederive_scrambler = rederive_dummy = true;
        } else if (key == "pn.seed") {
            c.pn.seed = std::uint32_t(std::stoul(value, nullptr, 0));
            rederive_preamble = rederive_scrambler = rederive_dummy = true;
        } else if (key == "pn.pad_bit") {
            c.pn.pad_bit = int(std::stol(value));
            rederive_preamble = rederive_scrambler = rederive_dummy = true;
        } else if (key == "gamma") {
            c.sync.gamma = int(std::stol(value));
            if (c.sync.gamma < 0 || c.sync.gamma > 32)
                throw std::invalid_argument("gamma must be in 0..32");
        } else if (key == "banks") {
            c.sync.banks = int(std::stol(value));
            if (c.sync.banks != 1 && c.sync.banks != 2)
                throw std::invalid_argument("banks must be 1 or 2");
        } else if (key == "channel") {
            if (value == "bsc") c.channel.kind = ChannelConfig::Kind::Bsc;
            else if (value == "awgn") c.channel.kind = ChannelConfig::Kind::Awgn;
            else if (value == "fir-awgn") c.channel.kind = ChannelConfig::Kind::FirAwgn;
            else throw std::invalid_argument("channel must be bsc, awgn or fir-awgn");
        } else if (key == "channel.p") {
            c.channel.p = std::stod(value);
            if (c.channel.p < 0.0 || c.channel.p > 1.0)
                throw std::invalid_argument("channel.p must be in [0,1]");
        } else if (key == "channel.ebn0_db") {
            c.channel.ebn0_db = std::stod(value);
        } else if (key == "channel.taps") {
            c.channel.taps = parse_double_list(value);
            if (c.channel.taps.empty() || c.channel.taps[0] == 0.0)
                throw std::invalid_argument("channel.taps must be nonempty with taps[0] != 0");
        } else if (key == "fifo.capacity") {
            c.fifo_capacity = std::stoll(value);
            if (c.fifo_capacity <= 0) throw std::invalid_argument("fifo.capacity must be > 0");
        } else if (key == "fifo.start") {
            c.fifo_start = (value == "half") ? -1 : std::stoll(value);
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }

    if (rederive_preamble) c.frame.preamble = c.pn.packed_bytes(0);
    if (rederive_scrambler) c.frame.scrambler = select_scrambler(c.pn, c.frame.preamble).bytes;
    if (rederive_dummy) c.frame.dummy_on_air = search_dummy_byte(c.frame.preamble).on_air_byte;
    if (c.fifo_start < 0) c.fifo_start = c.fifo_capacity / 2;
    return c;
}

}  // namespace phy60
