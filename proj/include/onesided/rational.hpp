// rational.hpp — exact arithmetic for the torsion part of angles and for
// coefficient conservation checks. int64 numerator/denominator with
// __int128 intermediates; overflow throws instead of wrapping.

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

#include "onesided/dd.hpp"

namespace onesided {

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num) : num_(num), den_(1) {}
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    DD to_dd() const { return dd_from_int(num_) / dd_from_int(den_); }

    Rational operator-() const { return raw(-num_, den_); }

    friend Rational operator+(Rational a, Rational b) {
        __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
        __int128 d = i128(a.den_) * b.den_;
        return from_i128(n, d);
    }
    friend Rational operator-(Rational a, Rational b) { return a + (-b); }
    friend Rational operator*(Rational a, Rational b) {
        return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(Rational a, Rational b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational& operator+=(Rational b) { *this = *this + b; return *this; }

    friend bool operator==(Rational a, Rational b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(Rational a, Rational b) { return !(a == b); }
    friend bool operator<(Rational a, Rational b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(Rational a, Rational b) { return b < a; }
    friend bool operator<=(Rational a, Rational b) { return !(b < a); }
    friend bool operator>=(Rational a, Rational b) { return !(a < b); }

    // representative in [0, 1)
    Rational mod1() const {
        std::int64_t r = num_ % den_;
        if (r < 0) r += den_;
        return raw(r, den_);
    }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // accepts "p/q", "p", and plain decimals such as "-2.5" or "0.125"
    static Rational parse(std::string_view s) {
        auto fail = [&] { throw std::invalid_argument("Rational::parse: malformed '" + std::string(s) + "'"); };
        if (s.empty()) fail();
        auto slash = s.find('/');
        if (slash != std::string_view::npos) {
            std::int64_t p = parse_int(s.substr(0, slash));
            std::int64_t q = parse_int(s.substr(slash + 1));
            if (q == 0) fail();
            return Rational(p, q);
        }
        auto dot = s.find('.');
        if (dot == std::string_view::npos) return Rational(parse_int(s));
        std::string digits(s.substr(0, dot));
        std::string_view frac = s.substr(dot + 1);
        if (frac.size() > 17) throw std::invalid_argument(
            "Rational::parse: too many decimal digits for exact arithmetic: '" + std::string(s) + "'");
        bool neg = !digits.empty() && digits[0] == '-';
        digits += frac;
        std::int64_t p = parse_int(digits);
        __int128 q = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) q *= 10;
        return from_i128(i128(p), neg && p == 0 ? -q : q);
    }

private:
    static __int128 i128(std::int64_t v) { return static_cast<__int128>(v); }

    static Rational raw(std::int64_t n, std::int64_t d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }

    static Rational from_i128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
        if (n > lim || n < -lim || d > lim)
            throw std::overflow_error("Rational: overflow beyond 64-bit after reduction");
        return raw(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    }

    static std::int64_t parse_int(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("Rational: empty integer field");
        bool neg = false;
        std::size_t i = 0;
        if (s[0] == '+' || s[0] == '-') { neg = s[0] == '-'; i = 1; }
        if (i == s.size()) throw std::invalid_argument("Rational: bare sign");
        __int128 v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("Rational: non-digit in integer field");
            v = v * 10 + (s[i] - '0');
            if (v > static_cast<__int128>(INT64_MAX))
                throw std::overflow_error("Rational: integer field overflows 64 bits");
        }
        return static_cast<std::int64_t>(neg ? -v : v);
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;

    void normalize() {
        Rational r = from_i128(i128(num_), i128(den_));
        num_ = r.num_;
        den_ = r.den_;
    }
};

inline std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    std::int64_t g = std::gcd(a, b);
    __int128 l = static_cast<__int128>(a / g) * b;
    if (l > static_cast<__int128>(INT64_MAX))
        throw std::overflow_error("lcm overflows 64 bits");
    return static_cast<std::int64_t>(l);
}

// Best rational approximation p/q to x with q <= max_den, by the
// continued-fraction convergent/semiconvergent walk.
struct RationalApprox {
    std::int64_t p = 0;
    std::int64_t q = 1;
    double error = 0.0; // x - p/q, at double-double accuracy
};

inline RationalApprox best_rational(DD x, std::int64_t max_den) {
    if (max_den < 1) throw std::invalid_argument("best_rational: max_den < 1");
    DD y = x;
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int iter = 0; iter < 64; ++iter) {
        DD fl = dd_floor(y);
        if (std::fabs(fl.hi) > 9e17) break;
        std::int64_t a = static_cast<std::int64_t>(fl.hi) + static_cast<std::int64_t>(fl.lo);
        __int128 p2 = static_cast<__int128>(a) * p1 + p0;
        __int128 q2 = static_cast<__int128>(a) * q1 + q0;
        if (q2 > max_den) {
            // best semiconvergent still within the denominator bound
            std::int64_t t = q1 == 0 ? 0 : static_cast<std::int64_t>((max_den - q0) / q1);
            if (2 * t >= a && t > 0) {
                __int128 ps = static_cast<__int128>(t) * p1 + p0;
                __int128 qs = static_cast<__int128>(t) * q1 + q0;
                DD e_semi = dd_abs(x - dd_from_int(static_cast<std::int64_t>(ps)) / dd_from_int(static_cast<std::int64_t>(qs)));
                DD e_conv = dd_abs(x - dd_from_int(p1) / dd_from_int(q1));
                if (e_semi < e_conv) { p1 = static_cast<std::int64_t>(ps); q1 = static_cast<std::int64_t>(qs); }
            }
            break;
        }
        p0 = p1; q0 = q1;
        p1 = static_cast<std::int64_t>(p2);
        q1 = static_cast<std::int64_t>(q2);
        DD rem = y - fl;
        if (rem.hi < 1e-30) break;
        y = DD(1.0) / rem;
    }
    if (q1 == 0) { p1 = 0; q1 = 1; }
    RationalApprox r;
    r.p = p1;
    r.q = q1;
    r.error = (x - dd_from_int(p1) / dd_from_int(q1)).to_double();
    return r;
}

} // namespace onesided
