#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "phy60/rational.hpp"

namespace phy60 {

// On-air frame: preamble(4) | payload(239) | check(16) | dummy(1), 260 bytes.
// The trailing 256 bytes are scrambled; the preamble never is. Bit order on
// the wire is MSB-first within each byte.
inline constexpr int kPreambleBytes = 4;
inline constexpr int kPayloadBytes = 239;
inline constexpr int kCheckBytes = 16;
inline constexpr int kDummyBytes = 1;
inline constexpr int kFrameBytes = 260;
inline constexpr int kFrameBits = kFrameBytes * 8;
inline constexpr int kScrambledBytes = 256;

struct FrameConfig {
    std::array<std::uint8_t, 4> preamble;
    std::array<std::uint8_t, 4> scrambler;
    std::uint8_t dummy_on_air;  // last on-air byte of every frame
};

struct ParsedFrame {
    std::array<std::uint8_t, kPayloadBytes> payload;
    int corrected = 0;
};

// payload.size() must be 239. The dummy byte is XOR-precompensated before
// scrambling so the frame's last on-air byte always equals
// config.dummy_on_air regardless of payload.
std::array<std::uint8_t, kFrameBytes> build_frame(std::span<const std::uint8_t> payload,
                                                  const FrameConfig& config);

// frame.size() must be 260 and byte-aligned at the preamble. Descrambles,
// strips the dummy byte and RS-decodes; nullopt when the codeword is
// uncorrectable.
std::optional<ParsedFrame> parse_frame(std::span<const std::uint8_t> frame,
                                       const FrameConfig& config);

// Minimax search for the dummy byte d = [d(1)..d(8)] transmitted just before
// the next frame's preamble P. For every candidate index k (d(j) = bit j-1
// of k) the eight boundary-straddling windows
//   T_i = [d(9-i)..d(8)  P(1)..P(32-i)],  i = 1..8
// are correlated against P by agreement count; Mcor(k) is the worst of the
// eight. The winner minimizes Mcor, ties broken by the lexicographically
// smallest descending-sorted profile, then by smallest k. Note the on-air
// byte value is the bit-reversal of k, because d(1) is transmitted first
// (MSB) while k weights d(1) as the LSB.
struct DummySearch {
    int k = 0;                       // winning index, paper-style weighting
    std::uint8_t on_air_byte = 0;    // MSB-first packing of [d(1)..d(8)]
    int mcor = 0;                    // minimax agreement count
    std::array<int, 8> winner_profile{};          // agreements for i = 1..8
    std::array<int, 256> mcor_table{};            // Mcor(k) for every k
    std::array<std::array<int, 8>, 256> profiles{};
};
DummySearch search_dummy_byte(std::span<const std::uint8_t, 4> preamble);

// Dual-clock plan tying the 875 Mbps line rate to the 239/260 payload
// fraction. All arithmetic is exact; 260 * f1 == 239 * f2.
struct ClockPlan {
    Rational line_rate_bps{875000000};       // F2
    Rational payload_ratio{239, 260};        // F1 / F2

    Rational F2() const { return line_rate_bps; }
    Rational F1() const { return line_rate_bps * payload_ratio; }
    Rational f2() const { return F2() / Rational(8); }  // byte clock, line side
    Rational f1() const { return F1() / Rational(8); }  // byte clock, payload side
};

// Net payload rate F2 * 239/260, exact.
Rational throughput(const ClockPlan& plan);

// Clock figures as printed strings, two decimals, ties toward zero
// (875/8 = 109.375 MHz prints as "109.37").
std::string format_mhz(const Rational& hz);
std::string format_mbps(const Rational& bps);

}  // namespace phy60
