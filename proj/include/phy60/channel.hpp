#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "phy60/bitvector.hpp"
#include "phy60/linecoding.hpp"
#include "phy60/rng.hpp"

namespace phy60 {

// Channel models. BSC operates on the demodulated bit stream (p is the
// received-bit error probability); AWGN and FIR operate on symbol
// amplitudes. Real one-dimensional signaling throughout: unit symbol
// energy, one bit per symbol, noise variance 1 / (2 Eb/N0).

struct ChannelConfig {
    enum class Kind { Bsc, Awgn, FirAwgn };
    Kind kind = Kind::Bsc;
    double p = 0.0;          // BSC flip probability
    double ebn0_db = 10.0;   // AWGN operating point
    std::vector<double> taps{1.0, 0.18, 0.08};  // illustrative multipath, non-normative
};

// Each bit flipped independently with probability p.
BitVector bsc(const BitVector& bits, double p, Rng& rng);

// Adds N(0, sigma^2) per symbol with sigma^2 = 1 / (2 * 10^(ebn0_db/10)).
SymbolStream awgn(const SymbolStream& symbols, double ebn0_db, Rng& rng);
double awgn_sigma(double ebn0_db);

// Discrete convolution at symbol rate, output truncated to the input length.
// taps must be nonempty with taps[0] != 0.
SymbolStream fir(const SymbolStream& symbols, std::span<const double> taps);

struct LinkBudgetParams {
    double ptx_dbm = 0.0;
    double gtx_dbi = 22.4;   // horn
    double grx_dbi = 22.4;
    double freq_hz = 60e9;
    double distance_m = 10.0;
};

struct LinkBudgetResult {
    double fspl_db = 0.0;
    double prx_dbm = 0.0;
};

// Friis: fspl = 20 log10(4 pi d f / c); prx = ptx + gtx + grx - fspl.
LinkBudgetResult link_budget(const LinkBudgetParams& params);

}  // namespace phy60
