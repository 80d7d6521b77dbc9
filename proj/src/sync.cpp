#include "phy60/sync.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace phy60 {

int correlate32(std::uint32_t window, std::uint32_t preamble) {
    return 32 - std::popcount(window ^ preamble);
}

std::array<int, 8> bank_scan(const BitVector& window, std::uint32_t preamble) {
    if (window.size() != 39)
        throw std::invalid_argument("bank_scan: window must be 39 bits");
    std::array<int, 8> scores{};
    for (int k = 0; k < 8; ++k)
        scores[k] = correlate32(window.window32(k), preamble);
    return scores;
}

std::optional<Detection> detect_frame(const BitVector& stream, std::uint32_t preamble,
                                      const SyncConfig& config) {
    if (config.banks != 1 && config.banks != 2)
        throw std::invalid_argument("detect_frame: banks must be 1 or 2");
    const std::size_t spacing = static_cast<std::size_t>(config.bank_spacing_bytes) * 8;
    const std::size_t n = stream.size();

    for (std::size_t pos = 0; pos + 32 <= n; pos += 8) {
        for (int k = 0; k < config.correlators; ++k) {
            const std::size_t bit = pos + static_cast<std::size_t>(k);
            if (bit + 32 > n) break;
            int s1 = correlate32(stream.window32(bit), preamble);
            if (s1 < config.gamma) continue;
            if (config.banks == 1)
                return Detection{k, bit, s1, -1};
            if (bit + spacing + 32 > n) continue;  // second bank out of range
            int s2 = correlate32(stream.window32(bit + spacing), preamble);
            if (s2 >= config.gamma)
                return Detection{k, bit, s1, s2};
        }
    }
    return std::nullopt;
}

double p_miss_analytic(double p, int gamma, int banks) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p_miss_analytic: p out of [0,1]");
    if (gamma <= 0) return 0.0;
    if (gamma > 32) return 1.0;
    const int max_errors = 32 - gamma;
    double pass = 0.0;
    for (int e = 0; e <= max_errors; ++e) {
        pass += static_cast<double>(binomial_coefficient(32, e)) *
                std::pow(p, e) * std::pow(1.0 - p, 32 - e);
    }
    if (pass > 1.0) pass = 1.0;
    double all_pass = 1.0;
    for (int i = 0; i < banks; ++i) all_pass *= pass;
    return 1.0 - all_pass;
}

double p_false_alarm_analytic(int gamma, int banks) {
    if (gamma > 32) return 0.0;
    if (gamma <= 0) return 1.0;
    std::uint64_t tail = 0;
    for (int j = gamma; j <= 32; ++j) tail += binomial_coefficient(32, j);
    double q = static_cast<double>(tail) / 4294967296.0;
    double out = 1.0;
    for (int i = 0; i < banks; ++i) out *= q;
    return out;
}

std::uint64_t binomial_coefficient(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return c;
}

}  // namespace phy60
