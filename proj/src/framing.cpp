#include "phy60/framing.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "phy60/gf256_rs.hpp"
#include "phy60/linecoding.hpp"

namespace phy60 {

std::array<std::uint8_t, kFrameBytes> build_frame(std::span<const std::uint8_t> payload,
                                                  const FrameConfig& config) {
    if (payload.size() != static_cast<std::size_t>(kPayloadBytes))
        throw std::invalid_argument("build_frame: payload must be 239 bytes");

    auto codeword = rs::encode(payload);

    // dummy sits at offset 255 of the scrambled region (255 mod 4 == 3), so
    // pre-compensating with scrambler[3] pins its on-air value
    std::array<std::uint8_t, kScrambledBytes> region{};
    std::copy(codeword.begin(), codeword.end(), region.begin());
    region[kScrambledBytes - 1] =
        static_cast<std::uint8_t>(config.dummy_on_air ^ config.scrambler[3]);

    auto scrambled = scramble(region, std::span<const std::uint8_t, 4>(config.scrambler));

    std::array<std::uint8_t, kFrameBytes> frame{};
    std::copy(config.preamble.begin(), config.preamble.end(), frame.begin());
    std::copy(scrambled.begin(), scrambled.end(), frame.begin() + kPreambleBytes);
    return frame;
}

std::optional<ParsedFrame> parse_frame(std::span<const std::uint8_t> frame,
                                       const FrameConfig& config) {
    if (frame.size() != static_cast<std::size_t>(kFrameBytes))
        throw std::invalid_argument("parse_frame: frame must be 260 bytes");

    auto descrambled = scramble(frame.subspan(kPreambleBytes, kScrambledBytes),
                                std::span<const std::uint8_t, 4>(config.scrambler));

    auto decoded = rs::decode(std::span<const std::uint8_t>(descrambled.data(), rs::kN));
    if (!decoded) return std::nullopt;

    ParsedFrame out;
    out.payload = decoded->payload;
    out.corrected = decoded->corrected;
    return out;
}

DummySearch search_dummy_byte(std::span<const std::uint8_t, 4> preamble) {
    const std::uint32_t p = (std::uint32_t(preamble[0]) << 24) | (std::uint32_t(preamble[1]) << 16) |
                            (std::uint32_t(preamble[2]) << 8) | preamble[3];

    DummySearch result;
    std::array<std::array<int, 8>, 256> sorted_profiles{};

    for (int k = 0; k < 256; ++k) {
        // d(j) = bit j-1 of k; on the wire d(1) is sent first, so the byte
        // value is k bit-reversed and its low i bits are [d(9-i)..d(8)]
        std::uint8_t v = 0;
        for (int j = 1; j <= 8; ++j)
            if ((k >> (j - 1)) & 1) v |= std::uint8_t(1u << (8 - j));

        int worst = 0;
        for (int i = 1; i <= 8; ++i) {
            std::uint32_t t = (std::uint32_t(v & ((1u << i) - 1)) << (32 - i)) | (p >> i);
            int agree = 32 - std::popcount(p ^ t);
            result.profiles[k][i - 1] = agree;
            worst = std::max(worst, agree);
        }
        result.mcor_table[k] = worst;
        sorted_profiles[k] = result.profiles[k];
        std::sort(sorted_profiles[k].begin(), sorted_profiles[k].end(), std::greater<>());
    }

    int best = 0;
    for (int k = 1; k < 256; ++k) {
        if (result.mcor_table[k] < result.mcor_table[best] ||
            (result.mcor_table[k] == result.mcor_table[best] &&
             sorted_profiles[k] < sorted_profiles[best]))
            best = k;
    }

    result.k = best;
    result.mcor = result.mcor_table[best];
    result.winner_profile = result.profiles[best];
    std::uint8_t v = 0;
    for (int j = 1; j <= 8; ++j)
        if ((best >> (j - 1)) & 1) v |= std::uint8_t(1u << (8 - j));
    result.on_air_byte = v;
    return result;
}

Rational throughput(const ClockPlan& plan) {
    return plan.line_rate_bps * plan.payload_ratio;
}

std::string format_mhz(const Rational& hz) {
    return (hz / Rational(1000000)).to_decimal_half_down(2);
}

std::string format_mbps(const Rational& bps) {
    return (bps / Rational(1000000)).to_decimal_half_down(2);
}

}  // namespace phy60
