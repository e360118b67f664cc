// bigint.hpp — minimal signed big integer for exact lattice bases.
// Only what LLL needs: add/sub/mul, small-multiplier updates, shifts,
// comparisons, and conversion to long double for the Gram-Schmidt pass.

#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace onesided {

class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v) {
        if (v != 0) {
            sign_ = v < 0 ? -1 : 1;
            std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
            limbs_.push_back(mag);
        }
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        if (a.sign_ == b.sign_) {
            BigInt r;
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
            return r;
        }
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) return BigInt();
        BigInt r;
        if (c > 0) {
            r.limbs_ = sub_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            r.limbs_ = sub_mag(b.limbs_, a.limbs_);
            r.sign_ = b.sign_;
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            unsigned __int128 carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                unsigned __int128 cur = static_cast<unsigned __int128>(a.limbs_[i]) * b.limbs_[j] +
                                        r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<std::uint64_t>(cur);
                carry = cur >> 64;
            }
            std::size_t pos = i + b.limbs_.size();
            while (carry) {
                unsigned __int128 cur = static_cast<unsigned __int128>(r.limbs_[pos]) + carry;
                r.limbs_[pos] = static_cast<std::uint64_t>(cur);
                carry = cur >> 64;
                ++pos;
            }
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
    BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }

    BigInt shifted_left(unsigned bits) const {
        if (sign_ == 0 || bits == 0) return *this;
        BigInt r;
        unsigned words = bits / 64, rem = bits % 64;
        r.limbs_.assign(limbs_.size() + words + 1, 0);
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            r.limbs_[i + words] |= rem ? (limbs_[i] << rem) : limbs_[i];
            if (rem) r.limbs_[i + words + 1] |= limbs_[i] >> (64 - rem);
        }
        r.trim();
        r.sign_ = sign_;
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }

    long double to_long_double() const {
        long double v = 0.0L;
        for (std::size_t i = limbs_.size(); i-- > 0;)
            v = v * 18446744073709551616.0L + static_cast<long double>(limbs_[i]);
        return sign_ < 0 ? -v : v;
    }

    bool fits_int64() const {
        if (limbs_.size() > 1) return false;
        if (limbs_.empty()) return true;
        if (sign_ > 0) return limbs_[0] <= static_cast<std::uint64_t>(INT64_MAX);
        return limbs_[0] <= static_cast<std::uint64_t>(INT64_MAX) + 1;
    }

    std::int64_t to_int64() const {
        if (limbs_.empty()) return 0;
        return sign_ > 0 ? static_cast<std::int64_t>(limbs_[0])
                         : -static_cast<std::int64_t>(limbs_[0]);
    }

    // floor division by a positive divisor: a = q*b + r with 0 <= r < b
    static void divmod_floor(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ <= 0) throw std::invalid_argument("BigInt::divmod_floor: divisor must be > 0");
        if (a.sign_ == 0) { q = BigInt(); r = BigInt(); return; }
        std::vector<std::uint64_t> qm, rm;
        divmod_mag(a.limbs_, b.limbs_, qm, rm);
        q.limbs_ = std::move(qm);
        q.sign_ = q.limbs_.empty() ? 0 : 1;
        r.limbs_ = std::move(rm);
        r.sign_ = r.limbs_.empty() ? 0 : 1;
        if (a.sign_ < 0) {
            q.sign_ = -q.sign_;
            if (!r.is_zero()) { // floor: shift toward -infinity
                q -= BigInt(1);
                r = b - r;
            }
        }
    }

    // exact quotient; the callers' algebra guarantees divisibility
    static BigInt exact_div(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        BigInt bb = b;
        bool negate = false;
        if (bb.sign_ < 0) { bb = -bb; negate = true; }
        divmod_floor(a, bb, q, r);
        if (!r.is_zero()) throw std::logic_error("BigInt::exact_div: inexact division");
        return negate ? -q : q;
    }

    // nearest integer to a/b for b > 0 (half rounds up)
    static BigInt div_round_nearest(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod_floor(a, b, q, r);
        BigInt twice_r = r + r;
        if (!(twice_r < b)) q += BigInt(1);
        return q;
    }

    // round(d * 2^scale_bits) for finite d; truncation toward zero in the
    // sub-ulp tail, which is far below the scanner's noise floor.
    static BigInt from_scaled_double(double d, int scale_bits) {
        if (d == 0.0 || !std::isfinite(d)) return BigInt();
        int e = 0;
        double m = std::frexp(std::fabs(d), &e); // m in [0.5, 1)
        std::int64_t mant = static_cast<std::int64_t>(std::ldexp(m, 53));
        int shift = e - 53 + scale_bits;
        BigInt r(mant);
        if (shift >= 0) {
            r = r.shifted_left(static_cast<unsigned>(shift));
        } else {
            if (-shift >= 63) return BigInt();
            std::int64_t half = static_cast<std::int64_t>(1) << (-shift - 1);
            r = BigInt((mant + half) >> (-shift));
        }
        return d < 0 ? -r : r;
    }

    std::string to_string_approx() const {
        if (sign_ == 0) return "0";
        long double v = to_long_double();
        return std::to_string(static_cast<double>(v));
    }

private:
    int sign_ = 0;
    std::vector<std::uint64_t> limbs_; // little-endian magnitude

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) sign_ = 0;
    }

    static int cmp_mag(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint64_t> add_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint64_t> r = big;
        unsigned __int128 carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            unsigned __int128 cur = static_cast<unsigned __int128>(r[i]) + carry +
                                    (i < small.size() ? small[i] : 0);
            r[i] = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
            if (!carry && i >= small.size()) break;
        }
        if (carry) r.push_back(static_cast<std::uint64_t>(carry));
        return r;
    }

    // Knuth algorithm D on base-2^64 limbs
    static void divmod_mag(const std::vector<std::uint64_t>& u_in,
                           const std::vector<std::uint64_t>& v_in,
                           std::vector<std::uint64_t>& q, std::vector<std::uint64_t>& r) {
        q.clear();
        r.clear();
        if (v_in.empty()) throw std::domain_error("BigInt: division by zero");
        if (cmp_mag(u_in, v_in) < 0) {
            r = u_in;
            return;
        }
        if (v_in.size() == 1) {
            std::uint64_t d = v_in[0];
            q.assign(u_in.size(), 0);
            unsigned __int128 rem = 0;
            for (std::size_t i = u_in.size(); i-- > 0;) {
                unsigned __int128 cur = (rem << 64) | u_in[i];
                q[i] = static_cast<std::uint64_t>(cur / d);
                rem = cur % d;
            }
            while (!q.empty() && q.back() == 0) q.pop_back();
            if (rem) r.push_back(static_cast<std::uint64_t>(rem));
            return;
        }

        int shift = std::countl_zero(v_in.back());
        std::size_t n = v_in.size(), m = u_in.size() - n;
        std::vector<std::uint64_t> v(n), u(u_in.size() + 1, 0);
        for (std::size_t i = n; i-- > 0;) {
            v[i] = v_in[i] << shift;
            if (shift && i > 0) v[i] |= v_in[i - 1] >> (64 - shift);
        }
        for (std::size_t i = u_in.size(); i-- > 0;) {
            if (shift) {
                u[i + 1] |= u_in[i] >> (64 - shift);
                u[i] = u_in[i] << shift;
            } else {
                u[i] = u_in[i];
            }
        }

        q.assign(m + 1, 0);
        const unsigned __int128 B = static_cast<unsigned __int128>(1) << 64;
        for (std::size_t j = m + 1; j-- > 0;) {
            unsigned __int128 num = (static_cast<unsigned __int128>(u[j + n]) << 64) | u[j + n - 1];
            unsigned __int128 qhat = num / v[n - 1];
            unsigned __int128 rhat = num % v[n - 1];
            while (qhat >= B ||
                   qhat * v[n - 2] > ((rhat << 64) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= B) break;
            }
            // multiply-subtract qhat * v from u[j .. j+n]
            unsigned __int128 borrow = 0, carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                unsigned __int128 prod = qhat * v[i] + carry;
                carry = prod >> 64;
                std::uint64_t plo = static_cast<std::uint64_t>(prod);
                unsigned __int128 sub = static_cast<unsigned __int128>(plo) + borrow;
                if (static_cast<unsigned __int128>(u[j + i]) >= sub) {
                    u[j + i] = static_cast<std::uint64_t>(u[j + i] - sub);
                    borrow = 0;
                } else {
                    u[j + i] = static_cast<std::uint64_t>(B + u[j + i] - sub);
                    borrow = 1;
                }
            }
            unsigned __int128 top_sub = carry + borrow;
            bool negative = static_cast<unsigned __int128>(u[j + n]) < top_sub;
            u[j + n] = static_cast<std::uint64_t>(u[j + n] - top_sub);
            if (negative) {
                // qhat was one too large: add v back
                --qhat;
                unsigned __int128 c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    unsigned __int128 sum = static_cast<unsigned __int128>(u[j + i]) + v[i] + c2;
                    u[j + i] = static_cast<std::uint64_t>(sum);
                    c2 = sum >> 64;
                }
                u[j + n] = static_cast<std::uint64_t>(u[j + n] + c2);
            }
            q[j] = static_cast<std::uint64_t>(qhat);
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        r.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            r[i] = u[i] >> shift;
            if (shift && i + 1 < u.size()) r[i] |= u[i + 1] << (64 - shift);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
    }

    // requires |a| >= |b|
    static std::vector<std::uint64_t> sub_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b) {
        std::vector<std::uint64_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            unsigned __int128 sub = (i < b.size() ? b[i] : 0) + static_cast<unsigned __int128>(borrow);
            if (static_cast<unsigned __int128>(r[i]) >= sub) {
                r[i] = static_cast<std::uint64_t>(r[i] - sub);
                borrow = 0;
            } else {
                r[i] = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) + r[i] - sub);
                borrow = 1;
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

inline BigInt mul_small(const BigInt& a, std::int64_t m) { return a * BigInt(m); }

} // namespace onesided
