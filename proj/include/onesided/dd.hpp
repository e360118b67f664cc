// dd.hpp — double-double arithmetic (~106-bit significand).
//
// Angle arithmetic is the precision bottleneck of every scan in this
// library: k*alpha mod 1 for k up to 1e9 must keep >= 10 significant
// digits, which plain doubles cannot do. A Dekker/Knuth double-double
// covers that with a wide margin and needs no external dependency.
//
// Provides: field operations, floor/mod1, decimal-string parsing (basis
// values arrive as decimal strings and must not round through a double),
// and sin/cos of 2*pi*x for the high-precision evaluation path.

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace onesided {

struct DD {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DD() = default;
    constexpr DD(double h) : hi(h), lo(0.0) {}
    constexpr DD(double h, double l) : hi(h), lo(l) {}

    double to_double() const { return hi + lo; }
    bool is_zero() const { return hi == 0.0 && lo == 0.0; }
};

namespace detail {

inline double two_sum(double a, double b, double& err) {
    double s = a + b;
    double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
    return s;
}

// requires |a| >= |b|
inline double quick_two_sum(double a, double b, double& err) {
    double s = a + b;
    err = b - (s - a);
    return s;
}

inline double two_prod(double a, double b, double& err) {
    double p = a * b;
    err = std::fma(a, b, -p);
    return p;
}

} // namespace detail

inline DD operator+(DD a, DD b) {
    double s1, s2, t1, t2;
    s1 = detail::two_sum(a.hi, b.hi, s2);
    t1 = detail::two_sum(a.lo, b.lo, t2);
    s2 += t1;
    s1 = detail::quick_two_sum(s1, s2, s2);
    s2 += t2;
    s1 = detail::quick_two_sum(s1, s2, s2);
    return {s1, s2};
}

inline DD operator-(DD a) { return {-a.hi, -a.lo}; }
inline DD operator-(DD a, DD b) { return a + (-b); }

inline DD operator*(DD a, DD b) {
    double p1, p2;
    p1 = detail::two_prod(a.hi, b.hi, p2);
    p2 += a.hi * b.lo + a.lo * b.hi;
    p1 = detail::quick_two_sum(p1, p2, p2);
    return {p1, p2};
}

inline DD operator/(DD a, DD b) {
    double q1 = a.hi / b.hi;
    DD r = a - b * DD(q1);
    double q2 = r.hi / b.hi;
    r = r - b * DD(q2);
    double q3 = r.hi / b.hi;
    double s, e;
    s = detail::quick_two_sum(q1, q2, e);
    return DD(s, e) + DD(q3);
}

inline DD& operator+=(DD& a, DD b) { a = a + b; return a; }
inline DD& operator-=(DD& a, DD b) { a = a - b; return a; }
inline DD& operator*=(DD& a, DD b) { a = a * b; return a; }

inline bool operator==(DD a, DD b) { return a.hi == b.hi && a.lo == b.lo; }
inline bool operator!=(DD a, DD b) { return !(a == b); }
inline bool operator<(DD a, DD b) {
    return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(DD a, DD b) { return b < a; }
inline bool operator<=(DD a, DD b) { return !(b < a); }
inline bool operator>=(DD a, DD b) { return !(a < b); }

inline DD dd_abs(DD a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }

inline DD dd_from_int(std::int64_t k) {
    double h = static_cast<double>(k);
    double l = static_cast<double>(k - static_cast<std::int64_t>(h));
    return {h, l};
}

inline DD dd_floor(DD a) {
    double fh = std::floor(a.hi);
    if (fh == a.hi) {
        double fl = std::floor(a.lo);
        double s, e;
        s = detail::quick_two_sum(fh, fl, e);
        return {s, e};
    }
    return {fh, 0.0};
}

// reduce into [0, 1)
inline DD dd_mod1(DD a) {
    DD r = a - dd_floor(a);
    if (r.hi < 0.0) r += DD(1.0);
    if (r.hi >= 1.0) r -= DD(1.0);
    return r;
}

// distance to the nearest integer, in [0, 1/2]
inline DD dd_dist_to_int(DD a) {
    DD f = dd_mod1(a);
    DD g = DD(1.0) - f;
    return f < g ? f : g;
}

inline constexpr DD DD_PI{3.141592653589793116e+00, 1.224646799147353207e-16};
inline constexpr DD DD_2PI{6.283185307179586232e+00, 2.449293598294706414e-16};

namespace detail {

// Taylor sin/cos on |x| <= pi/4, accurate to ~1e-32.
inline void sincos_taylor(DD x, DD& s, DD& c) {
    DD x2 = x * x;
    DD term = x;
    DD sum = x;
    for (int k = 1; k <= 16; ++k) {
        term = term * x2;
        term = term / DD(-static_cast<double>(2 * k) * (2 * k + 1));
        sum += term;
        if (std::fabs(term.hi) < 1e-35) break;
    }
    s = sum;
    term = DD(1.0);
    sum = DD(1.0);
    for (int k = 1; k <= 16; ++k) {
        term = term * x2;
        term = term / DD(-static_cast<double>(2 * k - 1) * (2 * k));
        sum += term;
        if (std::fabs(term.hi) < 1e-35) break;
    }
    c = sum;
}

} // namespace detail

// cos(2*pi*x) and sin(2*pi*x) at double-double precision.
// Reduces x mod 1 first, so the argument may be any magnitude the DD
// itself represents accurately.
inline void dd_sincos2pi(DD x, DD& s, DD& c) {
    DD r = dd_mod1(x);
    int q = static_cast<int>(std::floor(4.0 * r.hi + 0.5));
    DD theta = (r - DD(0.25) * DD(static_cast<double>(q))) * DD_2PI;
    DD st, ct;
    detail::sincos_taylor(theta, st, ct);
    switch (((q % 4) + 4) % 4) {
        case 0: s = st; c = ct; break;
        case 1: s = ct; c = -st; break;
        case 2: s = -st; c = -ct; break;
        default: s = -ct; c = st; break;
    }
}

inline DD dd_cos2pi(DD x) {
    DD s, c;
    dd_sincos2pi(x, s, c);
    return c;
}

inline DD dd_sin2pi(DD x) {
    DD s, c;
    dd_sincos2pi(x, s, c);
    return s;
}

inline DD dd_pow10(int p) {
    // 10^22 is the largest power of ten exact in a double
    DD r(1.0);
    bool neg = p < 0;
    int e = neg ? -p : p;
    while (e >= 22) {
        r = r * DD(1e22);
        e -= 22;
    }
    if (e > 0) r = r * DD(std::pow(10.0, e));
    return neg ? DD(1.0) / r : r;
}

// Parse a decimal string ("-0.414213562373095048801688...", "1e-3", "2/1"
// is NOT accepted here) into a DD. Throws std::invalid_argument on
// malformed input. Digits beyond ~32 still sharpen the low word.
inline DD dd_from_string(std::string_view str) {
    std::size_t i = 0;
    auto fail = [&] { throw std::invalid_argument("dd_from_string: malformed decimal '" + std::string(str) + "'"); };
    if (str.empty()) fail();
    bool neg = false;
    if (str[i] == '+' || str[i] == '-') {
        neg = str[i] == '-';
        ++i;
    }
    DD value(0.0);
    int frac_digits = 0;
    bool seen_digit = false, seen_dot = false;
    for (; i < str.size(); ++i) {
        char ch = str[i];
        if (ch >= '0' && ch <= '9') {
            value = value * DD(10.0) + DD(static_cast<double>(ch - '0'));
            if (seen_dot) ++frac_digits;
            seen_digit = true;
        } else if (ch == '.') {
            if (seen_dot) fail();
            seen_dot = true;
        } else if (ch == 'e' || ch == 'E') {
            break;
        } else {
            fail();
        }
    }
    if (!seen_digit) fail();
    int exp = 0;
    if (i < str.size()) { // at 'e'
        ++i;
        bool eneg = false;
        if (i < str.size() && (str[i] == '+' || str[i] == '-')) {
            eneg = str[i] == '-';
            ++i;
        }
        if (i >= str.size()) fail();
        for (; i < str.size(); ++i) {
            if (str[i] < '0' || str[i] > '9') fail();
            exp = exp * 10 + (str[i] - '0');
            if (exp > 4000) fail();
        }
        if (eneg) exp = -exp;
    }
    value = value * dd_pow10(exp - frac_digits);
    return neg ? -value : value;
}

// Fixed-notation rendering with `digits` significant digits; used for
// diagnostics and witness audit output, not for JSON (JSON uses the
// shortest-round-trip double form).
inline std::string dd_to_string(DD a, int digits = 32) {
    if (a.is_zero()) return "0";
    std::string out;
    if (a.hi < 0) {
        out += '-';
        a = -a;
    }
    int e10 = static_cast<int>(std::floor(std::log10(a.hi)));
    DD scaled = a / dd_pow10(e10);
    if (scaled.hi >= 10.0) { scaled = scaled / DD(10.0); ++e10; }
    if (scaled.hi < 1.0) { scaled = scaled * DD(10.0); --e10; }
    std::string mant;
    for (int d = 0; d < digits; ++d) {
        int dig = static_cast<int>(std::floor(scaled.hi));
        if (dig < 0) dig = 0;
        if (dig > 9) dig = 9;
        mant += static_cast<char>('0' + dig);
        scaled = (scaled - DD(static_cast<double>(dig))) * DD(10.0);
    }
    out += mant.substr(0, 1);
    out += '.';
    out += mant.substr(1);
    out += 'e';
    out += std::to_string(e10);
    return out;
}

// Working-precision override: ONESIDED_PRECISION_BITS trims or keeps the
// default 128-bit thresholds used by the relation scanner and witness
// rechecks. Values are clamped to what double-double can honour.
inline int runtime_precision_bits() {
    static const int bits = [] {
        const char* env = std::getenv("ONESIDED_PRECISION_BITS");
        if (!env) return 128;
        long v = std::strtol(env, nullptr, 10);
        if (v < 53) v = 53;
        if (v > 200) v = 200;
        return static_cast<int>(v);
    }();
    return bits;
}

} // namespace onesided
