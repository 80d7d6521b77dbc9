#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace phy60 {

// Exact rational arithmetic on 64-bit terms. Clock ratios and FIFO event
// times must stay drift-free over long runs, so every operation reduces by
// gcd and goes through 128-bit intermediates; a result that cannot be
// narrowed back to 64 bits throws instead of wrapping.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t numerator, std::int64_t denominator = 1)
        : num_(numerator), den_(denominator) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return from_i128(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return from_i128(n, d);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        return from_i128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Decimal string with `dp` digits, ties rounded toward zero. This is the
    // display rule used for all human-facing clock figures; 109.375 prints
    // as 109.37, 804.3269... prints as 804.33.
    std::string to_decimal_half_down(int dp) const {
        bool neg = num_ < 0;
        __int128 n = neg ? -(__int128)num_ : (__int128)num_;
        __int128 scale = 1;
        for (int i = 0; i < dp; ++i) scale *= 10;
        __int128 scaled = n * scale;
        __int128 q = scaled / den_;
        __int128 r = scaled % den_;
        if (2 * r > den_) ++q;  // strictly above half: round away from zero
        std::string digits;
        if (q == 0) digits = "0";
        while (q > 0) { digits.insert(digits.begin(), char('0' + int(q % 10))); q /= 10; }
        while ((int)digits.size() <= dp) digits.insert(digits.begin(), '0');
        std::string out = (neg ? "-" : "") + digits.substr(0, digits.size() - dp);
        if (dp > 0) out += "." + digits.substr(digits.size() - dp);
        return out;
    }

private:
    static Rational from_i128(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rational: 64-bit overflow");
        Rational r;
        r.num_ = (std::int64_t)n;
        r.den_ = (std::int64_t)d;
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }
    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (den_ == 1 && num_ == 0) den_ = 1;
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace phy60
