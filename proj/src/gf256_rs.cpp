#include "phy60/gf256_rs.hpp"

#include <stdexcept>

namespace phy60 {

namespace gf {
namespace {

struct Tables {
    std::array<std::uint8_t, 512> exp;  // doubled so mul can skip one mod 255
    std::array<int, 256> log;

    constexpr Tables() : exp{}, log{} {
        unsigned x = 1;
        for (int i = 0; i < 255; ++i) {
            exp[i] = static_cast<std::uint8_t>(x);
            log[x] = i;
            x <<= 1;
            if (x & 0x100) x ^= kFieldPoly;
        }
        for (int i = 255; i < 512; ++i) exp[i] = exp[i - 255];
        log[0] = -1;
    }
};

constexpr Tables tbl{};

}  // namespace

std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
    if (a == 0 || b == 0) return 0;
    return tbl.exp[tbl.log[a] + tbl.log[b]];
}

std::uint8_t inv(std::uint8_t a) {
    if (a == 0) throw std::invalid_argument("gf::inv: zero has no inverse");
    return tbl.exp[255 - tbl.log[a]];
}

std::uint8_t pow_alpha(int e) {
    e %= 255;
    if (e < 0) e += 255;
    return tbl.exp[e];
}

int log_alpha(std::uint8_t a) {
    if (a == 0) throw std::invalid_argument("gf::log_alpha: log of zero");
    return tbl.log[a];
}

}  // namespace gf

namespace rs {
namespace {

// g(x) = prod_{i=0}^{15} (x - alpha^i), coefficients g[0..16], g[16] = 1
// for the x^16 term; index = power of x.
std::array<std::uint8_t, kCheck + 1> make_generator() {
    std::array<std::uint8_t, kCheck + 1> g{};
    g[0] = 1;
    int deg = 0;
    for (int i = 0; i < kCheck; ++i) {
        std::uint8_t root = gf::pow_alpha(i);
        // multiply g by (x + root)
        ++deg;
        for (int j = deg; j >= 1; --j)
            g[j] = static_cast<std::uint8_t>(g[j - 1] ^ gf::mul(g[j], root));
        g[0] = gf::mul(g[0], root);
    }
    return g;
}

const std::array<std::uint8_t, kCheck + 1> kGenerator = make_generator();

// Polynomials below are stored lowest power first; degree is tracked by
// scanning for the top nonzero coefficient.
using Poly = std::array<std::uint8_t, kCheck + 1>;

int poly_degree(const Poly& p) {
    for (int d = kCheck; d >= 0; --d)
        if (p[d] != 0) return d;
    return 0;
}

std::uint8_t poly_eval(const Poly& p, int deg, std::uint8_t x) {
    std::uint8_t acc = 0;
    for (int i = deg; i >= 0; --i) acc = static_cast<std::uint8_t>(gf::mul(acc, x) ^ p[i]);
    return acc;
}

}  // namespace

std::array<std::uint8_t, kN> encode(std::span<const std::uint8_t> payload) {
    if (payload.size() != static_cast<std::size_t>(kK))
        throw std::invalid_argument("rs::encode: payload must be 239 bytes");

    std::array<std::uint8_t, kN> cw{};
    for (int i = 0; i < kK; ++i) cw[i] = payload[i];

    // remainder of m(x) * x^16 modulo g(x), LFSR-style long division;
    // reg[j] holds the coefficient of x^j
    std::array<std::uint8_t, kCheck> reg{};
    for (int i = 0; i < kK; ++i) {
        std::uint8_t feedback = static_cast<std::uint8_t>(payload[i] ^ reg[kCheck - 1]);
        for (int j = kCheck - 1; j >= 1; --j)
            reg[j] = static_cast<std::uint8_t>(reg[j - 1] ^ gf::mul(feedback, kGenerator[j]));
        reg[0] = gf::mul(feedback, kGenerator[0]);
    }
    // check bytes follow the payload, highest power of x first
    for (int j = 0; j < kCheck; ++j) cw[kK + j] = reg[kCheck - 1 - j];
    return cw;
}

std::array<std::uint8_t, kCheck> syndromes(std::span<const std::uint8_t> word) {
    if (word.size() != static_cast<std::size_t>(kN))
        throw std::invalid_argument("rs::syndromes: word must be 255 bytes");
    // byte j is the coefficient of x^(254-j); S_i = r(alpha^i) via Horner
    std::array<std::uint8_t, kCheck> s{};
    for (int i = 0; i < kCheck; ++i) {
        std::uint8_t x = gf::pow_alpha(i);
        std::uint8_t acc = 0;
        for (int j = 0; j < kN; ++j) acc = static_cast<std::uint8_t>(gf::mul(acc, x) ^ word[j]);
        s[i] = acc;
    }
    return s;
}

std::optional<Decoded> decode(std::span<const std::uint8_t> received) {
    if (received.size() != static_cast<std::size_t>(kN))
        throw std::invalid_argument("rs::decode: word must be 255 bytes");

    auto syn = syndromes(received);
    bool clean = true;
    for (auto s : syn) clean &= (s == 0);
    if (clean) {
        Decoded out;
        for (int i = 0; i < kK; ++i) out.payload[i] = received[i];
        out.corrected = 0;
        return out;
    }

    // Berlekamp-Massey: shortest LFSR generating the syndrome sequence
    Poly lambda{};
    Poly prev{};
    lambda[0] = 1;
    prev[0] = 1;
    int L = 0;
    int m = 1;
    std::uint8_t b = 1;
    for (int n = 0; n < kCheck; ++n) {
        std::uint8_t delta = syn[n];
        for (int i = 1; i <= L; ++i)
            delta ^= gf::mul(lambda[i], syn[n - i]);
        if (delta == 0) {
            ++m;
        } else if (2 * L <= n) {
            Poly t = lambda;
            std::uint8_t coef = gf::mul(delta, gf::inv(b));
            for (int i = 0; i + m <= kCheck; ++i)
                lambda[i + m] ^= gf::mul(coef, prev[i]);
            L = n + 1 - L;
            prev = t;
            b = delta;
            m = 1;
        } else {
            std::uint8_t coef = gf::mul(delta, gf::inv(b));
            for (int i = 0; i + m <= kCheck; ++i)
                lambda[i + m] ^= gf::mul(coef, prev[i]);
            ++m;
        }
    }

    int deg = poly_degree(lambda);
    if (deg != L || L > kMaxCorrectable) return std::nullopt;

    // Chien search: byte j corresponds to position power l = 254 - j;
    // an error there makes alpha^{-l} a root of lambda.
    std::array<int, kMaxCorrectable> err_pos{};  // byte indices
    int nroots = 0;
    for (int l = 0; l < kN; ++l) {
        if (poly_eval(lambda, deg, gf::pow_alpha(-l)) == 0) {
            if (nroots == deg) return std::nullopt;  // more roots than degree
            err_pos[nroots++] = kN - 1 - l;
        }
    }
    if (nroots != deg) return std::nullopt;

    // Forney: Omega(x) = S(x) * Lambda(x) mod x^16, then
    // e_l = X_l * Omega(X_l^{-1}) / Lambda'(X_l^{-1})
    Poly omega{};
    for (int i = 0; i < kCheck; ++i) {
        std::uint8_t acc = 0;
        for (int j = 0; j <= i && j <= deg; ++j)
            acc ^= gf::mul(lambda[j], syn[i - j]);
        omega[i] = acc;
    }
    int omega_deg = poly_degree(omega);

    std::array<std::uint8_t, kN> fixed{};
    for (int i = 0; i < kN; ++i) fixed[i] = received[i];

    for (int r = 0; r < nroots; ++r) {
        int l = kN - 1 - err_pos[r];
        std::uint8_t x_inv = gf::pow_alpha(-l);
        // formal derivative keeps odd-power terms only
        std::uint8_t denom = 0;
        std::uint8_t xpow = 1;  // x_inv^(i-1) for i = 1
        for (int i = 1; i <= deg; i += 2) {
            denom ^= gf::mul(lambda[i], xpow);
            xpow = gf::mul(xpow, gf::mul(x_inv, x_inv));
        }
        if (denom == 0) return std::nullopt;
        std::uint8_t num = gf::mul(poly_eval(omega, omega_deg, x_inv), gf::pow_alpha(l));
        std::uint8_t magnitude = gf::mul(num, gf::inv(denom));
        if (magnitude == 0) return std::nullopt;  // locator root with no error
        fixed[err_pos[r]] ^= magnitude;
    }

    // the patched word must be a valid codeword, otherwise refuse to guess
    auto check = syndromes(fixed);
    for (auto s : check)
        if (s != 0) return std::nullopt;

    Decoded out;
    for (int i = 0; i < kK; ++i) out.payload[i] = fixed[i];
    out.corrected = nroots;
    return out;
}

}  // namespace rs

}  // namespace phy60
