#include "phy60/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace phy60 {

BitVector bsc(const BitVector& bits, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("bsc: p out of [0,1]");
    BitVector out = bits;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (rng.bernoulli(p)) out.flip(i);
    return out;
}

double awgn_sigma(double ebn0_db) {
    return std::sqrt(1.0 / (2.0 * std::pow(10.0, ebn0_db / 10.0)));
}

SymbolStream awgn(const SymbolStream& symbols, double ebn0_db, Rng& rng) {
    const double sigma = awgn_sigma(ebn0_db);
    SymbolStream out(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i)
        out[i] = symbols[i] + sigma * rng.gaussian();
    return out;
}

SymbolStream fir(const SymbolStream& symbols, std::span<const double> taps) {
    if (taps.empty() || taps[0] == 0.0)
        throw std::invalid_argument("fir: taps must be nonempty with taps[0] != 0");
    SymbolStream out(symbols.size(), 0.0);
    for (std::size_t n = 0; n < symbols.size(); ++n) {
        double acc = 0.0;
        const std::size_t kmax = std::min(taps.size() - 1, n);
        for (std::size_t k = 0; k <= kmax; ++k)
            acc += taps[k] * symbols[n - k];
        out[n] = acc;
    }
    return out;
}

LinkBudgetResult link_budget(const LinkBudgetParams& params) {
    if (params.distance_m <= 0.0) throw std::invalid_argument("link_budget: distance must be > 0");
    if (params.freq_hz <= 0.0) throw std::invalid_argument("link_budget: frequency must be > 0");
    constexpr double kC = 299792458.0;
    LinkBudgetResult r;
    r.fspl_db = 20.0 * std::log10(4.0 * M_PI * params.distance_m * params.freq_hz / kC);
    r.prx_dbm = params.ptx_dbm + params.gtx_dbi + params.grx_dbi - r.fspl_db;
    return r;
}

}  // namespace phy60
