#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "phy60/bitvector.hpp"

namespace phy60 {

// Byte/frame synchronization: a bank of 8 32-bit correlators covers the 8
// possible bit offsets of a misaligned preamble inside a 39-bit window; a
// second bank 260 bytes downstream checks the periodic repetition, and a
// detection requires the same correlator to clear the threshold in both.

struct SyncConfig {
    int gamma = 28;               // agreement threshold, 0..32
    int banks = 2;                // 1 or 2
    int bank_spacing_bytes = 260; // one frame period
    int correlators = 8;          // one per bit offset

    int window_bits() const { return 32 + correlators - 1; }          // 39
    int decision_span_bytes() const { return bank_spacing_bytes + 4; } // 264
};

struct Detection {
    int shift = 0;                 // bit offset within the byte (correlator index)
    std::size_t frame_start = 0;   // absolute bit position of the preamble
    int score_bank1 = 0;
    int score_bank2 = 0;           // -1 when banks == 1
};

// Agreement count between two 32-bit windows: 32 - Hamming distance.
int correlate32(std::uint32_t window, std::uint32_t preamble);

// scores[k] = correlate32(window[k .. k+31], preamble) for k = 0..7;
// window must hold exactly 39 bits.
std::array<int, 8> bank_scan(const BitVector& window, std::uint32_t preamble);

// Slides byte-by-byte and returns the first position where some correlator k
// clears gamma in every bank (bank 2 looks 260 bytes further on). Ties at
// one byte position resolve to the smallest k. Returns nullopt when nothing
// qualifies.
std::optional<Detection> detect_frame(const BitVector& stream, std::uint32_t preamble,
                                      const SyncConfig& config);

// Probability the preamble test fails: a bank passes when at most 32-gamma
// of its 32 bits are flipped (each independently with probability p), and
// every bank must pass. Returns 1 - B^banks.
double p_miss_analytic(double p, int gamma, int banks);

// Probability random equiprobable data clears gamma in one window:
// q = 2^-32 * sum_{j>=gamma} C(32,j); returns q^banks. gamma above 32 gives
// 0, gamma <= 0 gives 1.
double p_false_alarm_analytic(int gamma, int banks);

// Exact C(n, k) for n <= 64.
std::uint64_t binomial_coefficient(int n, int k);

}  // namespace phy60
