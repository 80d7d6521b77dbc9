#include "phy60/linecoding.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace phy60 {

int PnSequence::order() const {
    int n = 0;
    for (int t : taps) n = std::max(n, t);
    return n;
}

BitVector PnSequence::bits(int phase) const {
    const int n = order();
    if (n < 2 || n > 31) throw std::invalid_argument("PnSequence: bad polynomial order");
    if (seed == 0 || (seed >> n) != 0)
        throw std::invalid_argument("PnSequence: seed must be a nonzero n-bit state");

    std::uint32_t state = seed;
    auto step = [&]() {
        std::uint32_t fb = 0;
        for (int t : taps) fb ^= (state >> (t - 1)) & 1u;
        bool out = state & 1u;
        state = (state >> 1) | (fb << (n - 1));
        return out;
    };
    for (int i = 0; i < phase; ++i) step();
    BitVector out;
    for (int i = 0; i < length; ++i) out.push_back(step());
    return out;
}

std::array<std::uint8_t, 4> PnSequence::packed_bytes(int phase) const {
    if (length + 1 != 32)
        throw std::invalid_argument("PnSequence: packed form requires 31+1 bits");
    BitVector seq = bits(phase);
    seq.push_back(pad_bit != 0);
    auto bytes = seq.to_bytes();
    return {bytes[0], bytes[1], bytes[2], bytes[3]};
}

std::vector<std::uint8_t> scramble(std::span<const std::uint8_t> block,
                                   std::span<const std::uint8_t, 4> key) {
    if (block.size() % 4 != 0)
        throw std::invalid_argument("scramble: block length must be a multiple of 4");
    std::vector<std::uint8_t> out(block.size());
    for (std::size_t i = 0; i < block.size(); ++i)
        out[i] = static_cast<std::uint8_t>(block[i] ^ key[i % 4]);
    return out;
}

BitVector diff_encode(const BitVector& bits, bool initial) {
    BitVector out(bits.size());
    bool prev = initial;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        prev = bits.get(i) ^ prev;
        out.set(i, prev);
    }
    return out;
}

SymbolStream bpsk_map(const BitVector& bits) {
    SymbolStream s(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        s[i] = bits.get(i) ? -1.0 : 1.0;
    return s;
}

BitVector diff_demod(const SymbolStream& symbols, double reference) {
    BitVector out(symbols.size());
    double prev = reference;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        out.set(i, symbols[i] * prev < 0.0);
        prev = symbols[i];
    }
    return out;
}

BitVector serialize_bytes(std::span<const std::uint8_t> bytes) {
    return BitVector::from_bytes(bytes);
}

std::vector<std::uint8_t> deserialize_bits(const BitVector& bits) {
    return bits.to_bytes();
}

ScramblerChoice select_scrambler(const PnSequence& pn,
                                 std::span<const std::uint8_t, 4> preamble) {
    const std::uint32_t p = (std::uint32_t(preamble[0]) << 24) | (std::uint32_t(preamble[1]) << 16) |
                            (std::uint32_t(preamble[2]) << 8) | preamble[3];
    ScramblerChoice best{{}, -1, 33};
    for (int phase = 0; phase < pn.length; ++phase) {
        auto bytes = pn.packed_bytes(phase);
        std::uint32_t s = (std::uint32_t(bytes[0]) << 24) | (std::uint32_t(bytes[1]) << 16) |
                          (std::uint32_t(bytes[2]) << 8) | bytes[3];
        int worst = 0;
        for (int rot = 0; rot < 32; ++rot) {
            std::uint32_t r = std::rotl(s, rot);
            worst = std::max(worst, 32 - std::popcount(p ^ r));
        }
        if (worst < best.max_agreement) best = {bytes, phase, worst};
    }
    return best;
}

}  // namespace phy60
