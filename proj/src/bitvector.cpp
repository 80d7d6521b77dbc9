#include "phy60/bitvector.hpp"

#include <stdexcept>

namespace phy60 {

BitVector BitVector::from_bytes(std::span<const std::uint8_t> bytes) {
    BitVector bv;
    bv.size_ = bytes.size() * 8;
    bv.words_.assign((bv.size_ + 63) / 64, 0);
    for (std::size_t j = 0; j < bytes.size(); ++j) {
        bv.words_[j >> 3] |= static_cast<std::uint64_t>(bytes[j]) << (56 - 8 * (j & 7));
    }
    return bv;
}

std::vector<std::uint8_t> BitVector::to_bytes() const {
    if (size_ % 8 != 0)
        throw std::invalid_argument("BitVector::to_bytes: bit count not a multiple of 8");
    std::vector<std::uint8_t> out(size_ / 8);
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = static_cast<std::uint8_t>(words_[j >> 3] >> (56 - 8 * (j & 7)));
    }
    return out;
}

}  // namespace phy60
