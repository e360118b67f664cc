// structure.hpp — degeneracy decisions and the multiplicative group
// decomposition.
//
// The group generated by the z_j splits as (torsion) x Z^d. On Exact
// angles the split is syntactic: the torsion part comes from the rational
// parts, the free part from the integer coefficient rows over the declared
// basis. Degeneracy (some ratio z_i/z_j a root of unity) is then exactly
// the statement that two coefficient rows coincide, or a row is zero.
// Float angles only ever earn a heuristic verdict.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "onesided/bounds.hpp"
#include "onesided/rational.hpp"
#include "onesided/spectrum.hpp"

namespace onesided {

struct GroupDecomposition {
    std::int64_t torsion_order = 1;           // |T|
    std::vector<std::int64_t> torsion_exponents; // r_j, 0 <= r_j < |T|
    std::size_t d = 0;                        // free rank
    std::vector<std::vector<std::int64_t>> exponent_matrix; // n x d
    BasisDecl basis;

    // z_j rebuilt from (r_j, a_j.) must equal the input angle
    Angle reconstruct(std::size_t j) const {
        return Angle::exact(Rational(torsion_exponents[j], torsion_order), exponent_matrix[j]);
    }
};

struct Projection {
    std::vector<std::int64_t> p; // length d
    std::vector<std::int64_t> q; // q_j = sum_h a_{jh} p_h, distinct and nonzero
};

// Proof token: only the degeneracy analysis can mint one, and only for a
// definitive NonDegenerate verdict.
struct NonDegeneracyToken {
    friend struct DegeneracyVerdict;

private:
    NonDegeneracyToken() = default;
};

struct DegeneracyWitness {
    std::size_t i = 0;
    std::size_t j = 0;          // i == j marks a self root of unity
    std::int64_t order = 0;     // (z_i/z_j)^order == 1 (or z_i^order == 1)
    std::string kind;           // "ratio", "self_root_of_unity", "z_equals_minus_one"
};

struct DegeneracyVerdict {
    enum class Kind { NonDegenerate, Degenerate, HeuristicNonDegenerate };
    Kind kind = Kind::Degenerate;
    std::optional<DegeneracyWitness> witness;
    std::string note;

    bool non_degenerate() const { return kind == Kind::NonDegenerate; }
    std::optional<NonDegeneracyToken> token() const {
        if (kind == Kind::NonDegenerate) return NonDegeneracyToken{};
        return std::nullopt;
    }

    static DegeneracyVerdict make_non_degenerate() {
        DegeneracyVerdict v;
        v.kind = Kind::NonDegenerate;
        return v;
    }
    static DegeneracyVerdict make_degenerate(DegeneracyWitness w) {
        DegeneracyVerdict v;
        v.kind = Kind::Degenerate;
        v.witness = std::move(w);
        return v;
    }
    static DegeneracyVerdict make_heuristic(std::string note) {
        DegeneracyVerdict v;
        v.kind = Kind::HeuristicNonDegenerate;
        v.note = std::move(note);
        return v;
    }
};

inline const char* verdict_name(DegeneracyVerdict::Kind k) {
    switch (k) {
        case DegeneracyVerdict::Kind::NonDegenerate: return "NonDegenerate";
        case DegeneracyVerdict::Kind::Degenerate: return "Degenerate";
        case DegeneracyVerdict::Kind::HeuristicNonDegenerate: return "HeuristicNonDegenerate";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// exact decomposition

inline GroupDecomposition group_decompose(const SpectrumConfig& cfg) {
    if (!cfg.all_exact_angles())
        throw std::domain_error("group_decompose: exact angles required");
    GroupDecomposition g;
    g.basis = cfg.basis;
    g.d = cfg.basis.size();
    std::int64_t T = 1;
    for (const auto& nd : cfg.nodes) T = checked_lcm(T, nd.angle.rational().den());
    g.torsion_order = T;
    for (const auto& nd : cfg.nodes) {
        const Rational& r = nd.angle.rational();
        std::int64_t expo = r.num() * (T / r.den());
        expo %= T;
        if (expo < 0) expo += T;
        g.torsion_exponents.push_back(expo);
        std::vector<std::int64_t> row(g.d, 0);
        for (std::size_t h = 0; h < nd.angle.coeffs().size(); ++h) row[h] = nd.angle.coeffs()[h];
        g.exponent_matrix.push_back(std::move(row));
    }
    return g;
}

// ---------------------------------------------------------------------------
// degeneracy verdicts

namespace detail {

// exact path: ratios z_i/z_j are roots of unity iff the coefficient rows
// agree; z_i itself is a root of unity iff its row is zero
inline DegeneracyVerdict detect_exact(const SpectrumConfig& cfg) {
    for (std::size_t i = 0; i < cfg.n(); ++i) {
        const Angle& a = cfg.nodes[i].angle;
        if (a.is_half())
            return DegeneracyVerdict::make_degenerate({i, i, 2, "z_equals_minus_one"});
        if (a.coeffs_all_zero())
            return DegeneracyVerdict::make_degenerate(
                {i, i, a.rational().den(), "self_root_of_unity"});
    }
    for (std::size_t i = 0; i < cfg.n(); ++i)
        for (std::size_t j = i + 1; j < cfg.n(); ++j) {
            Angle diff = cfg.nodes[i].angle.minus(cfg.nodes[j].angle);
            if (diff.coeffs_all_zero()) {
                Rational r = diff.rational().mod1();
                // distinct angles with equal coefficient rows force r != 0
                return DegeneracyVerdict::make_degenerate({i, j, r.den(), "ratio"});
            }
        }
    return DegeneracyVerdict::make_non_degenerate();
}

// float path: continued-fraction check of every pairwise difference (the
// conjugate-closed node list makes sums redundant), plus each angle alone
inline DegeneracyVerdict detect_float(const std::vector<DD>& values, std::int64_t max_den,
                                      int precision_bits) {
    double tol = std::ldexp(1.0, -precision_bits / 2);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (dd_dist_to_int(values[i] - DD(0.5)).to_double() < tol)
            return DegeneracyVerdict::make_degenerate({i, i, 2, "z_equals_minus_one"});
        RationalApprox approx = best_rational(values[i], max_den);
        if (std::fabs(approx.error) < tol && approx.q >= 1)
            return DegeneracyVerdict::make_degenerate({i, i, approx.q, "self_root_of_unity"});
    }
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = 0; j < values.size(); ++j) {
            if (i == j) continue;
            DD diff = dd_mod1(values[i] - values[j]);
            if (dd_dist_to_int(diff).to_double() < tol) continue; // same angle: not a ratio
            RationalApprox approx = best_rational(diff, max_den);
            if (std::fabs(approx.error) < tol && approx.q >= 2)
                return DegeneracyVerdict::make_degenerate({i, j, approx.q, "ratio"});
        }
    return DegeneracyVerdict::make_heuristic(
        "no rational pairwise difference with denominator <= " + std::to_string(max_den) +
        " at 2^-" + std::to_string(precision_bits / 2) + " resolution");
}

} // namespace detail

// Verdict on the full Theorem 4 hypothesis set: no ratio z_i/z_j a root of
// unity, no z_i = -1 and no z_i itself a root of unity. Exact angles get a
// definitive answer; float angles a heuristic one.
inline DegeneracyVerdict detect_degeneracy(const SpectrumConfig& cfg,
                                           std::int64_t max_denominator = 1000,
                                           int precision_bits = 0) {
    if (precision_bits <= 0) precision_bits = runtime_precision_bits();
    if (cfg.all_exact_angles()) return detail::detect_exact(cfg);
    // a float angle is only as trustworthy as its declared precision
    for (const auto& nd : cfg.nodes)
        if (!nd.angle.is_exact())
            precision_bits = std::min(precision_bits, nd.angle.precision_bits());
    std::vector<DD> values;
    for (std::size_t j = 0; j < cfg.n(); ++j) values.push_back(cfg.angle_at(j));
    return detail::detect_float(values, max_denominator, precision_bits);
}

// Corollary 5 hypothesis: no difference alpha_i - alpha_j (i != j) and no
// sum alpha_i + alpha_j rational. Equivalent to the ratio condition on the
// conjugate-closed 2m-node spectrum.
inline DegeneracyVerdict detect_degeneracy(const CosineConfig& cfg,
                                           std::int64_t max_denominator = 1000,
                                           int precision_bits = 0) {
    return detect_degeneracy(to_spectrum(cfg), max_denominator, precision_bits);
}

// ---------------------------------------------------------------------------
// projection to distinct nonzero integer frequencies

inline Projection choose_projection(const GroupDecomposition& g) {
    std::size_t n = g.exponent_matrix.size();
    if (g.d == 0) throw std::domain_error("choose_projection: free rank is zero (pure torsion)");
    std::int64_t max_a = 0;
    for (const auto& row : g.exponent_matrix) {
        bool nonzero = false;
        for (auto v : row) {
            max_a = std::max<std::int64_t>(max_a, std::llabs(v));
            if (v != 0) nonzero = true;
        }
        if (!nonzero)
            throw std::domain_error("choose_projection: zero exponent row (degenerate input)");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.exponent_matrix[i] == g.exponent_matrix[j])
                throw std::domain_error("choose_projection: duplicate exponent rows (degenerate input)");

    std::int64_t M = 1 + 2 * max_a * static_cast<std::int64_t>(g.d);
    for (int attempt = 0; attempt < 64; ++attempt, ++M) {
        Projection proj;
        proj.p.resize(g.d);
        __int128 pw = 1;
        for (std::size_t h = 0; h < g.d; ++h) {
            if (pw > static_cast<__int128>(INT64_MAX)) throw std::overflow_error("choose_projection: p overflow");
            proj.p[h] = static_cast<std::int64_t>(pw);
            pw *= M;
        }
        proj.q.resize(n);
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
            __int128 qj = 0;
            for (std::size_t h = 0; h < g.d; ++h)
                qj += static_cast<__int128>(g.exponent_matrix[j][h]) * proj.p[h];
            if (qj == 0 || qj > INT64_MAX || qj < -static_cast<__int128>(INT64_MAX)) ok = false;
            else proj.q[j] = static_cast<std::int64_t>(qj);
        }
        if (!ok) continue;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (proj.q[i] == proj.q[j]) { ok = false; break; }
        if (ok) return proj;
    }
    throw std::logic_error("choose_projection: escalation failed to separate frequencies");
}

// Token-gated bound entry points: callable only with a certificate from
// detect_degeneracy, which is what "certified non-degenerate" means here.
inline BoundReport bound_thm4(const SpectrumConfig& cfg, const NonDegeneracyToken&) {
    return bound_thm4(cfg, true, true);
}

inline BoundReport bound_cor5(const CosineConfig& cfg, const NonDegeneracyToken&) {
    return bound_cor5(cfg, true);
}

// the integer-frequency polynomial sum b_j e^{i q_j t} induced by a projection
inline TrigPoly project_to_trigpoly(const SpectrumConfig& cfg, const Projection& proj) {
    if (proj.q.size() != cfg.n())
        throw std::invalid_argument("project_to_trigpoly: size mismatch");
    TrigPoly f;
    for (std::size_t j = 0; j < cfg.n(); ++j) f.terms.push_back({cfg.nodes[j].b.value, proj.q[j]});
    return f;
}

// ---------------------------------------------------------------------------
// Corollary 3 odd-k reduction: drop the node at z = -1, substituting
// k = 2*kappa + 1. New coefficients are b'_j = z_j, new angles 2*alpha_j,
// and the dropped node contributes the constant offset -1.

struct ReducedConfig {
    SpectrumConfig config;
    double offset = -1.0;
};

inline ReducedConfig reduce_minus_one(const SpectrumConfig& cfg) {
    if (cfg.n() < 2)
        throw std::domain_error("reduce_minus_one: nothing left after dropping the z = -1 node");
    std::size_t minus_one_index = cfg.n();
    for (std::size_t j = 0; j < cfg.n(); ++j) {
        bool is_one_coeff = cfg.nodes[j].b.exact ? (*cfg.nodes[j].b.exact == Rational(1))
                                                 : (cfg.nodes[j].b.value == Complex(1.0, 0.0));
        if (!is_one_coeff)
            throw std::domain_error("reduce_minus_one: all coefficients must equal 1");
        if (cfg.nodes[j].angle.is_half()) {
            if (minus_one_index != cfg.n())
                throw std::domain_error("reduce_minus_one: more than one node at z = -1");
            minus_one_index = j;
        }
    }
    if (minus_one_index == cfg.n())
        throw std::domain_error("reduce_minus_one: no node at z = -1");

    ReducedConfig out;
    out.config.basis = cfg.basis;
    out.offset = -1.0;
    for (std::size_t j = 0; j < cfg.n(); ++j) {
        if (j == minus_one_index) continue;
        DD a = cfg.angle_at(j);
        DD s, c;
        dd_sincos2pi(a, s, c);
        Coefficient b(Complex(c.to_double(), s.to_double())); // b'_j = z_j
        out.config.nodes.push_back({b, cfg.nodes[j].angle.doubled()});
    }
    ValidationReport val = validate_config(out.config);
    if (!val.conjugate_closed)
        throw std::logic_error("reduce_minus_one: reduced config lost conjugate closure");
    return out;
}

} // namespace onesided
