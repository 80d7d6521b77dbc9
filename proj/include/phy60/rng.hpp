#pragma once

#include <cmath>
#include <cstdint>

namespace phy60 {

// xoshiro256++ seeded through SplitMix64. Substreams are derived from a
// master seed and a 64-bit stream id, so Monte Carlo work items can be
// keyed by item index and reproduce bit-identically at any thread count.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : Rng(seed, 0) {}

    Rng(std::uint64_t master_seed, std::uint64_t stream_id) {
        // golden-gamma stream separation, then SplitMix64 fills the state
        std::uint64_t x = master_seed + stream_id * 0x9E3779B97F4A7C15ULL;
        for (auto& s : state_) s = splitmix64(x);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    std::uint32_t next_u32() { return static_cast<std::uint32_t>(next_u64() >> 32); }

    bool bit() { return (next_u64() >> 63) != 0; }

    std::uint8_t byte() { return static_cast<std::uint8_t>(next_u64() >> 56); }

    // uniform in [0, 1), 53-bit resolution
    double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    // index uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    // standard normal, Box-Muller; second value of each pair is cached
    double gaussian() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1;
        do { u1 = uniform(); } while (u1 == 0.0);
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_[4];
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace phy60
