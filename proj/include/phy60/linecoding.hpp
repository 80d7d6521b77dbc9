#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "phy60/bitvector.hpp"

namespace phy60 {

// Symbol duration on the 875 Mbps line; metadata only, the simulator works
// at symbol rate and never resamples.
inline constexpr double kSymbolDurationSec = 1.14e-9;

// Real-valued amplitudes, one per symbol, nominal +/-1.
using SymbolStream = std::vector<double>;

// Fibonacci LFSR spec for the 31-bit m-sequences behind the preamble and
// scrambler. Output is taken from stage 1 (the register LSB); feedback is
// the XOR of the stages named by the polynomial exponents. One pad bit is
// appended to round the 31-bit sequence up to 4 bytes.
struct PnSequence {
    std::vector<int> taps{5, 2};  // x^5 + x^2 + 1
    std::uint32_t seed = 0b10000;
    int length = 31;
    int pad_bit = 0;

    int order() const;
    // `length` output bits starting from `phase` steps into the sequence
    BitVector bits(int phase = 0) const;
    // length + 1 bits (pad appended), packed MSB-first
    std::array<std::uint8_t, 4> packed_bytes(int phase = 0) const;
};

// out[i] = block[i] XOR key[i mod 4]; involution; block length must be a
// multiple of 4.
std::vector<std::uint8_t> scramble(std::span<const std::uint8_t> block,
                                   std::span<const std::uint8_t, 4> key);

// e_0 = b_0 ^ initial, e_k = b_k ^ e_{k-1}
BitVector diff_encode(const BitVector& bits, bool initial);

// bit 0 -> +1.0, bit 1 -> -1.0
SymbolStream bpsk_map(const BitVector& bits);

// Delay-product detector: bit k is 1 iff r_k * r_{k-1} < 0, with `reference`
// standing in for r_{-1}. A zero product decodes as 0. Inverse of
// bpsk_map(diff_encode(.)) on noiseless streams when reference = +1 and
// initial = 0.
BitVector diff_demod(const SymbolStream& symbols, double reference);

BitVector serialize_bytes(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> deserialize_bits(const BitVector& bits);

// Best scrambler phase of the m-sequence family against a given preamble:
// minimizes, over the 31 phases, the maximum agreement count between the
// 32-bit preamble and every cyclic rotation of the candidate's packed
// 32-bit sequence. Used when building the default configuration.
struct ScramblerChoice {
    std::array<std::uint8_t, 4> bytes;
    int phase;
    int max_agreement;  // worst-case agreement across all 32 rotations
};
ScramblerChoice select_scrambler(const PnSequence& pn,
                                 std::span<const std::uint8_t, 4> preamble);

}  // namespace phy60
