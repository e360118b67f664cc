// angle.hpp — angles alpha with z = exp(2*pi*i*alpha).
//
// An angle is either Exact — a reduced rational plus an integer vector
// over a declared basis of irrationals — or a raw Float. Everything the
// structure analysis decides (root-of-unity ratios, group decomposition)
// is decidable only on the Exact form; Float angles ride along for
// evaluation and get heuristic verdicts.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "onesided/dd.hpp"
#include "onesided/rational.hpp"

namespace onesided {

struct BasisDecl {
    std::vector<std::string> labels;
    std::vector<DD> values; // each in (0,1), irrational by user assertion
    bool independence_asserted = true;

    std::size_t size() const { return labels.size(); }

    void check() const {
        if (labels.size() != values.size())
            throw std::invalid_argument("BasisDecl: labels/values size mismatch");
        for (std::size_t i = 0; i < labels.size(); ++i) {
            for (std::size_t j = i + 1; j < labels.size(); ++j)
                if (labels[i] == labels[j])
                    throw std::invalid_argument("BasisDecl: duplicate label '" + labels[i] + "'");
            if (!(values[i] > DD(0.0) && values[i] < DD(1.0)))
                throw std::invalid_argument("BasisDecl: value for '" + labels[i] + "' not in (0,1)");
        }
    }
};

class Angle {
public:
    enum class Kind { Exact, Float };

    static Angle exact(Rational rational, std::vector<std::int64_t> coeffs = {}) {
        Angle a;
        a.kind_ = Kind::Exact;
        a.rational_ = rational.mod1();
        a.coeffs_ = std::move(coeffs);
        return a;
    }

    static Angle floating(DD value, int precision_bits = 53) {
        Angle a;
        a.kind_ = Kind::Float;
        a.float_value_ = dd_mod1(value);
        a.precision_bits_ = precision_bits;
        return a;
    }

    Kind kind() const { return kind_; }
    bool is_exact() const { return kind_ == Kind::Exact; }

    const Rational& rational() const { return rational_; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    DD float_value() const { return float_value_; }
    int precision_bits() const { return precision_bits_; }

    bool coeffs_all_zero() const {
        for (auto c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    // z == 1, i.e. alpha == 0 (decidable on the Exact form)
    bool is_zero_angle() const {
        if (kind_ == Kind::Exact) return rational_.is_zero() && coeffs_all_zero();
        return float_value_.is_zero();
    }

    // z == -1
    bool is_half() const {
        if (kind_ == Kind::Exact)
            return rational_ == Rational(1, 2) && coeffs_all_zero();
        return float_value_ == DD(0.5);
    }

    Angle negated() const {
        if (kind_ == Kind::Exact) {
            std::vector<std::int64_t> c(coeffs_.size());
            for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
            return exact(-rational_, std::move(c));
        }
        return floating(dd_mod1(-float_value_), precision_bits_);
    }

    // 2*alpha mod 1; exactness is preserved, which is what makes the
    // odd-k reduction exact
    Angle doubled() const {
        if (kind_ == Kind::Exact) {
            std::vector<std::int64_t> c(coeffs_.size());
            for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = 2 * coeffs_[i];
            return exact(rational_ + rational_, std::move(c));
        }
        return floating(dd_mod1(float_value_ + float_value_), precision_bits_);
    }

    // alpha - other, Exact only
    Angle minus(const Angle& other) const {
        if (kind_ != Kind::Exact || other.kind_ != Kind::Exact)
            throw std::logic_error("Angle::minus: exact angles required");
        std::size_t d = std::max(coeffs_.size(), other.coeffs_.size());
        std::vector<std::int64_t> c(d, 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] -= other.coeffs_[i];
        return exact(rational_ - other.rational_, std::move(c));
    }

    friend bool operator==(const Angle& a, const Angle& b) {
        if (a.kind_ != b.kind_) return false;
        if (a.kind_ == Kind::Exact) {
            if (a.rational_ != b.rational_) return false;
            std::size_t d = std::max(a.coeffs_.size(), b.coeffs_.size());
            for (std::size_t i = 0; i < d; ++i) {
                std::int64_t ca = i < a.coeffs_.size() ? a.coeffs_[i] : 0;
                std::int64_t cb = i < b.coeffs_.size() ? b.coeffs_[i] : 0;
                if (ca != cb) return false;
            }
            return true;
        }
        return a.float_value_ == b.float_value_;
    }
    friend bool operator!=(const Angle& a, const Angle& b) { return !(a == b); }

    std::string describe() const {
        if (kind_ == Kind::Float) return "float " + dd_to_string(float_value_, 20);
        std::string s = rational_.to_string();
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0)
                s += (coeffs_[i] > 0 ? "+" : "") + std::to_string(coeffs_[i]) + "*b" + std::to_string(i);
        return s;
    }

private:
    Kind kind_ = Kind::Exact;
    Rational rational_;
    std::vector<std::int64_t> coeffs_;
    DD float_value_;
    int precision_bits_ = 53;
};

// (rational + sum coeffs_i * basis_i) mod 1, at double-double precision
inline DD angle_value(const Angle& a, const BasisDecl& basis) {
    if (a.kind() == Angle::Kind::Float) return a.float_value();
    if (a.coeffs().size() > basis.size())
        throw std::invalid_argument("angle_value: coefficient vector longer than basis");
    DD v = a.rational().to_dd();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        if (a.coeffs()[i] != 0)
            v += dd_from_int(a.coeffs()[i]) * basis.values[i];
    return dd_mod1(v);
}

} // namespace onesided
