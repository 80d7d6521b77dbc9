#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace phy60 {

// Ordered bit sequence, the currency between the codecs. Byte packing is
// MSB-first: bit 0 of the vector is the most significant bit of byte 0.
// Storage is word-packed so the sync correlators can pull 32-bit windows
// at arbitrary bit offsets cheaply.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t nbits) { resize(nbits); }

    static BitVector from_bytes(std::span<const std::uint8_t> bytes);
    // Inverse of from_bytes; size() must be a multiple of 8.
    std::vector<std::uint8_t> to_bytes() const;

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (63 - (i & 63))) & 1u;
    }
    void set(std::size_t i, bool v) {
        std::uint64_t mask = 1ULL << (63 - (i & 63));
        if (v) words_[i >> 6] |= mask;
        else   words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= 1ULL << (63 - (i & 63)); }

    void push_back(bool v) {
        if ((size_ & 63) == 0) words_.push_back(0);
        ++size_;
        set(size_ - 1, v);
    }

    void append(const BitVector& other) {
        for (std::size_t i = 0; i < other.size_; ++i) push_back(other.get(i));
    }

    void resize(std::size_t nbits) {
        words_.assign((nbits + 63) / 64, 0);
        size_ = nbits;
    }

    // 32 consecutive bits starting at `pos` as a big-endian word
    // (bit pos maps to the MSB). Requires pos + 32 <= size().
    std::uint32_t window32(std::size_t pos) const {
        std::size_t w = pos >> 6;
        unsigned off = pos & 63;
        std::uint64_t hi = words_[w] << off;
        if (off != 0 && w + 1 < words_.size()) hi |= words_[w + 1] >> (64 - off);
        return static_cast<std::uint32_t>(hi >> 32);
    }

    friend bool operator==(const BitVector& a, const BitVector& b) {
        if (a.size_ != b.size_) return false;
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            std::uint64_t mask = ~0ULL;
            if (i == a.words_.size() - 1 && (a.size_ & 63) != 0)
                mask = ~0ULL << (64 - (a.size_ & 63));
            if ((a.words_[i] & mask) != (b.words_[i] & mask)) return false;
        }
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

}  // namespace phy60
