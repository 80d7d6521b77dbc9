#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

namespace phy60 {

// GF(2^8) arithmetic under the conventional byte-code field polynomial
// x^8 + x^4 + x^3 + x^2 + 1 (0x11D), primitive element alpha = 0x02.
// Tables are built once at static-init time and never mutated.
namespace gf {

inline constexpr unsigned kFieldPoly = 0x11D;
inline constexpr std::uint8_t kAlpha = 0x02;

std::uint8_t mul(std::uint8_t a, std::uint8_t b);
std::uint8_t inv(std::uint8_t a);  // a != 0
std::uint8_t pow_alpha(int e);     // alpha^e, any integer e
int log_alpha(std::uint8_t a);     // a != 0, result in 0..254

}  // namespace gf

// Systematic RS(255,239) over GF(256): 239 payload bytes followed by 16
// check bytes, generator roots alpha^0 .. alpha^15, corrects up to 8
// erroneous bytes per codeword.
namespace rs {

inline constexpr int kN = 255;
inline constexpr int kK = 239;
inline constexpr int kCheck = 16;
inline constexpr int kMaxCorrectable = 8;

struct Decoded {
    std::array<std::uint8_t, kK> payload;
    int corrected = 0;
};

// payload.size() must be 239; returns the 255-byte codeword.
std::array<std::uint8_t, kN> encode(std::span<const std::uint8_t> payload);

// received.size() must be 255. Returns the corrected payload and the number
// of corrected bytes if the word lies within distance 8 of a valid codeword;
// nullopt when the error pattern is uncorrectable (locator degree and root
// count disagree, or the patched word fails the syndrome re-check).
std::optional<Decoded> decode(std::span<const std::uint8_t> received);

// The 16 syndromes of a word; all zero iff it is a valid codeword.
std::array<std::uint8_t, kCheck> syndromes(std::span<const std::uint8_t> word);

}  // namespace rs

}  // namespace phy60
