// spectrum.hpp — conjugate-closed power-sum configurations and their
// evaluation.
//
// A SpectrumConfig holds nodes (b_j, alpha_j) describing
//     s_k = sum_j b_j z_j^k,   z_j = exp(2*pi*i*alpha_j),
// closed under (b, z) -> (conj b, conj z) so that s_k is real. The module
// evaluates s_k with double-double argument reduction, computes the
// closed-form partial sums Sigma_1, Sigma_2 and their a-priori constants
// C_1, C_2, and merges repeated angles for the positive-coefficient case.

#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "onesided/angle.hpp"
#include "onesided/dd.hpp"
#include "onesided/rational.hpp"

namespace onesided {

using Complex = std::complex<double>;

struct Coefficient {
    Complex value{0.0, 0.0};
    std::optional<Rational> exact; // set when the input was an exact real

    Coefficient() = default;
    Coefficient(Complex v) : value(v) {}
    Coefficient(Rational r) : value(r.to_double(), 0.0), exact(r) {}

    bool is_real() const { return value.imag() == 0.0; }
    bool is_positive_real() const { return is_real() && value.real() > 0.0; }
    double abs() const { return std::abs(value); }

    Coefficient conj() const {
        Coefficient c = *this;
        c.value = std::conj(value);
        return c;
    }
};

struct SpectrumNode {
    Coefficient b;
    Angle angle;
};

struct SpectrumConfig {
    BasisDecl basis;
    std::vector<SpectrumNode> nodes;

    std::size_t n() const { return nodes.size(); }

    DD angle_at(std::size_t j) const { return angle_value(nodes[j].angle, basis); }

    bool all_exact_angles() const {
        return std::all_of(nodes.begin(), nodes.end(),
                           [](const SpectrumNode& nd) { return nd.angle.is_exact(); });
    }

    bool all_rational_angles() const {
        return std::all_of(nodes.begin(), nodes.end(), [](const SpectrumNode& nd) {
            return nd.angle.is_exact() && nd.angle.coeffs_all_zero();
        });
    }

    // period of k -> s_k when all angles are rational: lcm of denominators
    std::optional<std::int64_t> rational_period() const {
        if (!all_rational_angles()) return std::nullopt;
        std::int64_t l = 1;
        for (const auto& nd : nodes) l = checked_lcm(l, nd.angle.rational().den());
        return l;
    }

    double sum_abs_b() const {
        double s = 0.0;
        for (const auto& nd : nodes) s += nd.b.abs();
        return s;
    }

    double sum_abs_b_sq() const {
        double s = 0.0;
        for (const auto& nd : nodes) s += std::norm(nd.b.value);
        return s;
    }

    double min_abs_b() const {
        double m = nodes.empty() ? 0.0 : nodes[0].b.abs();
        for (const auto& nd : nodes) m = std::min(m, nd.b.abs());
        return m;
    }
};

struct CosineNode {
    Coefficient b; // real
    Angle alpha;   // strictly inside (0, 1/2)
};

// f(t) = sum_{j=1}^m b_j cos(2*pi*alpha_j*t)
struct CosineConfig {
    BasisDecl basis;
    std::vector<CosineNode> pairs;

    std::size_t m() const { return pairs.size(); }
    DD alpha_at(std::size_t j) const { return angle_value(pairs[j].alpha, basis); }

    double sum_abs_b() const {
        double s = 0.0;
        for (const auto& p : pairs) s += std::fabs(p.b.value.real());
        return s;
    }
    double min_abs_b() const {
        double m = pairs.empty() ? 0.0 : std::fabs(pairs[0].b.value.real());
        for (const auto& p : pairs) m = std::min(m, std::fabs(p.b.value.real()));
        return m;
    }
};

// ---------------------------------------------------------------------------
// validation

struct ValidationReport {
    bool structural_ok = true;
    std::vector<std::string> errors;   // structural: reject the config
    std::vector<std::string> warnings; // e.g. basis independence doubts

    bool conjugate_closed = false;
    bool no_unit_node = false; // z_j != 1 for all j
    bool all_distinct = false;
    bool all_b_nonzero = false;
    bool all_b_positive_real = false;

    bool thm1_hypotheses() const {
        return structural_ok && conjugate_closed && no_unit_node && all_distinct && all_b_nonzero;
    }
    // Theorem 2: distinctness dropped, but coefficients must be positive reals
    bool thm2_hypotheses() const {
        return structural_ok && conjugate_closed && no_unit_node && all_b_nonzero &&
               all_b_positive_real;
    }
};

namespace detail {

inline bool angles_equal_mod1(const Angle& a, const Angle& b, const BasisDecl& basis) {
    if (a.is_exact() && b.is_exact()) return a == b;
    DD d = dd_dist_to_int(angle_value(a, basis) - angle_value(b, basis));
    return d.to_double() < 1e-12;
}

inline bool coeffs_conjugate(const Coefficient& a, const Coefficient& b) {
    if (a.exact && b.exact) return *a.exact == *b.exact;
    double scale = std::max(1.0, std::abs(a.value));
    return std::abs(b.value - std::conj(a.value)) <= 1e-12 * scale;
}

} // namespace detail

inline ValidationReport validate_config(const SpectrumConfig& cfg) {
    ValidationReport rep;
    if (cfg.nodes.empty()) {
        rep.structural_ok = false;
        rep.errors.push_back("empty config");
        return rep;
    }
    try {
        cfg.basis.check();
    } catch (const std::exception& e) {
        rep.structural_ok = false;
        rep.errors.push_back(e.what());
    }
    for (std::size_t j = 0; j < cfg.n(); ++j)
        if (cfg.nodes[j].angle.is_exact() && cfg.nodes[j].angle.coeffs().size() > cfg.basis.size()) {
            rep.structural_ok = false;
            rep.errors.push_back("node " + std::to_string(j) + ": coefficient vector longer than basis");
        }
    if (!rep.structural_ok) return rep;

    rep.no_unit_node = true;
    rep.all_b_nonzero = true;
    rep.all_b_positive_real = true;
    for (const auto& nd : cfg.nodes) {
        if (nd.angle.is_zero_angle()) rep.no_unit_node = false;
        if (nd.b.abs() == 0.0) rep.all_b_nonzero = false;
        if (!nd.b.is_positive_real()) rep.all_b_positive_real = false;
    }

    rep.all_distinct = true;
    for (std::size_t i = 0; i < cfg.n() && rep.all_distinct; ++i)
        for (std::size_t j = i + 1; j < cfg.n(); ++j)
            if (detail::angles_equal_mod1(cfg.nodes[i].angle, cfg.nodes[j].angle, cfg.basis)) {
                rep.all_distinct = false;
                break;
            }

    // conjugate closure as a multiset property
    std::vector<bool> used(cfg.n(), false);
    rep.conjugate_closed = true;
    for (std::size_t i = 0; i < cfg.n(); ++i) {
        if (used[i]) continue;
        Angle want = cfg.nodes[i].angle.negated();
        bool found = false;
        for (std::size_t j = i; j < cfg.n(); ++j) {
            if (used[j]) continue;
            if (j == i) {
                // self-paired only when alpha == -alpha mod 1 and b real
                if (detail::angles_equal_mod1(cfg.nodes[i].angle, want, cfg.basis) &&
                    detail::coeffs_conjugate(cfg.nodes[i].b, cfg.nodes[i].b)) {
                    used[i] = true;
                    found = true;
                    break;
                }
                continue;
            }
            if (detail::angles_equal_mod1(cfg.nodes[j].angle, want, cfg.basis) &&
                detail::coeffs_conjugate(cfg.nodes[i].b, cfg.nodes[j].b)) {
                used[i] = used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) {
            rep.conjugate_closed = false;
            break;
        }
    }
    return rep;
}

inline ValidationReport validate_config(const CosineConfig& cfg) {
    ValidationReport rep;
    if (cfg.pairs.empty()) {
        rep.structural_ok = false;
        rep.errors.push_back("empty config");
        return rep;
    }
    try {
        cfg.basis.check();
    } catch (const std::exception& e) {
        rep.structural_ok = false;
        rep.errors.push_back(e.what());
        return rep;
    }
    rep.conjugate_closed = true; // by construction for cosine sums
    rep.no_unit_node = true;
    rep.all_b_nonzero = true;
    rep.all_b_positive_real = true;
    for (const auto& p : cfg.pairs) {
        double v = angle_value(p.alpha, cfg.basis).to_double();
        if (!(v > 0.0 && v < 0.5)) {
            rep.structural_ok = false;
            rep.errors.push_back("alpha not strictly inside (0, 1/2)");
        }
        if (!p.b.is_real()) {
            rep.structural_ok = false;
            rep.errors.push_back("cosine coefficient must be real");
        }
        if (p.b.abs() == 0.0) rep.all_b_nonzero = false;
        if (!p.b.is_positive_real()) rep.all_b_positive_real = false;
    }
    rep.all_distinct = true;
    for (std::size_t i = 0; i < cfg.m(); ++i)
        for (std::size_t j = i + 1; j < cfg.m(); ++j)
            if (detail::angles_equal_mod1(cfg.pairs[i].alpha, cfg.pairs[j].alpha, cfg.basis)) {
                rep.all_distinct = false;
                rep.structural_ok = false;
                rep.errors.push_back("cosine alphas must be pairwise distinct");
            }
    return rep;
}

// ---------------------------------------------------------------------------
// evaluation

// |Im s_k| beyond this signals broken conjugate closure, not roundoff
inline double imag_tolerance(const SpectrumConfig& cfg) {
    double maxb = 0.0;
    for (const auto& nd : cfg.nodes) maxb = std::max(maxb, nd.b.abs());
    return 1e-9 * std::max(1.0, static_cast<double>(cfg.n()) * maxb);
}

inline Complex eval_power_sum_complex(const SpectrumConfig& cfg, std::int64_t k) {
    Complex s{0.0, 0.0};
    DD kk = dd_from_int(k);
    for (const auto& nd : cfg.nodes) {
        DD theta = dd_mod1(angle_value(nd.angle, cfg.basis) * kk);
        double t = theta.to_double();
        s += nd.b.value * Complex(std::cos(2.0 * M_PI * t), std::sin(2.0 * M_PI * t));
    }
    return s;
}

// Re s_k; throws if the imaginary residue exceeds the structural tolerance
inline double eval_power_sum(const SpectrumConfig& cfg, std::int64_t k) {
    Complex s = eval_power_sum_complex(cfg, k);
    if (std::fabs(s.imag()) >= imag_tolerance(cfg))
        throw std::domain_error("eval_power_sum: imaginary residue " + std::to_string(s.imag()) +
                                " — conjugate closure violated");
    return s.real();
}

// double-double evaluation path, for witness soundness rechecks
inline DD eval_power_sum_hp(const SpectrumConfig& cfg, std::int64_t k) {
    DD re(0.0);
    DD kk = dd_from_int(k);
    for (const auto& nd : cfg.nodes) {
        DD theta = dd_mod1(angle_value(nd.angle, cfg.basis) * kk);
        DD s, c;
        dd_sincos2pi(theta, s, c);
        re += DD(nd.b.value.real()) * c - DD(nd.b.value.imag()) * s;
    }
    return re;
}

inline double eval_cosine_sum(const CosineConfig& cfg, DD t) {
    double s = 0.0;
    for (const auto& p : cfg.pairs) {
        DD theta = dd_mod1(angle_value(p.alpha, cfg.basis) * t);
        s += p.b.value.real() * std::cos(2.0 * M_PI * theta.to_double());
    }
    return s;
}

inline double eval_cosine_sum(const CosineConfig& cfg, double t) { return eval_cosine_sum(cfg, DD(t)); }
inline double eval_cosine_sum(const CosineConfig& cfg, std::int64_t k) {
    return eval_cosine_sum(cfg, dd_from_int(k));
}

inline DD eval_cosine_sum_hp(const CosineConfig& cfg, DD t) {
    DD s(0.0);
    for (const auto& p : cfg.pairs) {
        DD theta = dd_mod1(angle_value(p.alpha, cfg.basis) * t);
        s += DD(p.b.value.real()) * dd_cos2pi(theta);
    }
    return s;
}

// ---------------------------------------------------------------------------
// closed-form partial sums (averaging argument)

struct AveragingCertificate {
    std::int64_t N = 0;
    std::int64_t K = 0;
    Complex sigma1{0.0, 0.0};
    Complex sigma2{0.0, 0.0};
    double C1 = 0.0;
    double C2 = 0.0;
};

namespace detail {

inline Complex unit_at(DD theta) {
    double t = dd_mod1(theta).to_double();
    return {std::cos(2.0 * M_PI * t), std::sin(2.0 * M_PI * t)};
}

// |1 - exp(2*pi*i*theta)| = 2*|sin(pi*theta)|
inline double dist_to_one(DD theta) {
    double t = dd_mod1(theta).to_double();
    return 2.0 * std::fabs(std::sin(M_PI * t));
}

} // namespace detail

// Sigma_1 = sum_j b_j (z_j^N - z_j^{N+K}) / (1 - z_j) and C1
inline AveragingCertificate sigma1_closed_form(const SpectrumConfig& cfg, std::int64_t N,
                                               std::int64_t K) {
    if (K < 1) throw std::invalid_argument("sigma1_closed_form: K >= 1 required");
    AveragingCertificate cert;
    cert.N = N;
    cert.K = K;
    for (const auto& nd : cfg.nodes) {
        if (nd.angle.is_zero_angle())
            throw std::domain_error("sigma1_closed_form: z = 1 present (division by zero)");
        DD a = angle_value(nd.angle, cfg.basis);
        Complex zN = detail::unit_at(a * dd_from_int(N));
        Complex zNK = detail::unit_at(a * dd_from_int(N + K));
        Complex z = detail::unit_at(a);
        cert.sigma1 += nd.b.value * (zN - zNK) / (Complex(1.0, 0.0) - z);
        cert.C1 += 2.0 * nd.b.abs() / detail::dist_to_one(a);
    }
    return cert;
}

// Sigma_2 = K*sum|b|^2 + cross terms, and C2
inline AveragingCertificate sigma2_closed_form(const SpectrumConfig& cfg, std::int64_t N,
                                               std::int64_t K) {
    if (K < 1) throw std::invalid_argument("sigma2_closed_form: K >= 1 required");
    AveragingCertificate cert;
    cert.N = N;
    cert.K = K;
    double sum_b2 = cfg.sum_abs_b_sq();
    cert.sigma2 = Complex(static_cast<double>(K) * sum_b2, 0.0);
    for (std::size_t i = 0; i < cfg.n(); ++i) {
        for (std::size_t j = 0; j < cfg.n(); ++j) {
            if (i == j) continue;
            Angle diff_exact = cfg.nodes[i].angle.is_exact() && cfg.nodes[j].angle.is_exact()
                                   ? cfg.nodes[i].angle.minus(cfg.nodes[j].angle)
                                   : Angle::floating(DD(0.0));
            DD diff;
            if (cfg.nodes[i].angle.is_exact() && cfg.nodes[j].angle.is_exact()) {
                if (diff_exact.rational().is_zero() && diff_exact.coeffs_all_zero())
                    throw std::domain_error("sigma2_closed_form: repeated angles — collapse first");
                diff = angle_value(diff_exact, cfg.basis);
            } else {
                diff = dd_mod1(angle_value(cfg.nodes[i].angle, cfg.basis) -
                               angle_value(cfg.nodes[j].angle, cfg.basis));
                if (dd_dist_to_int(diff).to_double() < 1e-12)
                    throw std::domain_error("sigma2_closed_form: repeated angles — collapse first");
            }
            Complex wN = detail::unit_at(diff * dd_from_int(N));
            Complex wNK = detail::unit_at(diff * dd_from_int(N + K));
            Complex w = detail::unit_at(diff);
            Complex bb = cfg.nodes[i].b.value * std::conj(cfg.nodes[j].b.value);
            cert.sigma2 += bb * (wN - wNK) / (Complex(1.0, 0.0) - w);
            cert.C2 += 2.0 * std::abs(bb) / detail::dist_to_one(diff);
        }
    }
    return cert;
}

inline AveragingCertificate averaging_certificate(const SpectrumConfig& cfg, std::int64_t N,
                                                  std::int64_t K) {
    AveragingCertificate c1 = sigma1_closed_form(cfg, N, K);
    AveragingCertificate c2 = sigma2_closed_form(cfg, N, K);
    c1.sigma2 = c2.sigma2;
    c1.C2 = c2.C2;
    return c1;
}

// ---------------------------------------------------------------------------
// Theorem 2 collapse: merge equal angles, summing positive coefficients

inline SpectrumConfig collapse_repeats(const SpectrumConfig& cfg) {
    for (const auto& nd : cfg.nodes)
        if (!nd.b.is_positive_real())
            throw std::domain_error("collapse_repeats: coefficients must be positive reals");

    SpectrumConfig out;
    out.basis = cfg.basis;
    std::vector<bool> merged(cfg.n(), false);
    bool all_exact_b = std::all_of(cfg.nodes.begin(), cfg.nodes.end(),
                                   [](const SpectrumNode& nd) { return nd.b.exact.has_value(); });
    for (std::size_t i = 0; i < cfg.n(); ++i) {
        if (merged[i]) continue;
        Coefficient total = cfg.nodes[i].b;
        Rational rtotal = all_exact_b ? *cfg.nodes[i].b.exact : Rational(0);
        for (std::size_t j = i + 1; j < cfg.n(); ++j) {
            if (merged[j]) continue;
            if (cfg.nodes[i].angle == cfg.nodes[j].angle) {
                merged[j] = true;
                total.value += cfg.nodes[j].b.value;
                if (all_exact_b) rtotal += *cfg.nodes[j].b.exact;
            }
        }
        if (all_exact_b) {
            total.exact = rtotal;
            total.value = Complex(rtotal.to_double(), 0.0);
        } else {
            total.exact.reset();
        }
        out.nodes.push_back({total, cfg.nodes[i].angle});
    }

    // conservation: sum B_r == sum b_j (exact when coefficients are exact)
    if (all_exact_b) {
        Rational lhs(0), rhs(0);
        for (const auto& nd : out.nodes) lhs += *nd.b.exact;
        for (const auto& nd : cfg.nodes) rhs += *nd.b.exact;
        if (lhs != rhs) throw std::logic_error("collapse_repeats: exact coefficient sum not conserved");
    }
    double sq_before = cfg.sum_abs_b_sq();
    double sq_after = out.sum_abs_b_sq();
    if (sq_after < sq_before - 1e-9 * std::max(1.0, sq_before))
        throw std::logic_error("collapse_repeats: sum of squares decreased");
    return out;
}

// ---------------------------------------------------------------------------
// the tightness example: z_j = zeta^j, zeta = exp(2*pi*i/(n+1)), b_j = 1

inline SpectrumConfig extremal_example(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("extremal_example: n >= 1 required");
    SpectrumConfig cfg;
    for (std::int64_t j = 1; j <= n; ++j)
        cfg.nodes.push_back({Coefficient(Rational(1)), Angle::exact(Rational(j, n + 1))});
    return cfg;
}

// ---------------------------------------------------------------------------
// cosine <-> spectrum conversions

// nodes (b/2, alpha), (b/2, 1-alpha): power sum equals the cosine sum
inline SpectrumConfig to_spectrum(const CosineConfig& cos_cfg) {
    SpectrumConfig cfg;
    cfg.basis = cos_cfg.basis;
    for (const auto& p : cos_cfg.pairs) {
        Coefficient half;
        if (p.b.exact) half = Coefficient(*p.b.exact / Rational(2));
        else half = Coefficient(Complex(p.b.value.real() / 2.0, 0.0));
        cfg.nodes.push_back({half, p.alpha});
    }
    for (std::size_t j = cos_cfg.pairs.size(); j-- > 0;) {
        const auto& p = cos_cfg.pairs[j];
        Coefficient half;
        if (p.b.exact) half = Coefficient(*p.b.exact / Rational(2));
        else half = Coefficient(Complex(p.b.value.real() / 2.0, 0.0));
        cfg.nodes.push_back({half, p.alpha.negated()});
    }
    return cfg;
}

// requires real coefficients, no node at z = -1, and conjugate closure
inline CosineConfig to_cosine(const SpectrumConfig& cfg) {
    CosineConfig out;
    out.basis = cfg.basis;
    std::vector<bool> used(cfg.n(), false);
    for (std::size_t i = 0; i < cfg.n(); ++i) {
        if (used[i]) continue;
        if (!cfg.nodes[i].b.is_real())
            throw std::domain_error("to_cosine: real coefficients required");
        if (cfg.nodes[i].angle.is_half())
            throw std::domain_error("to_cosine: node at z = -1 has no cosine pair form");
        Angle want = cfg.nodes[i].angle.negated();
        bool found = false;
        for (std::size_t j = i + 1; j < cfg.n(); ++j) {
            if (used[j]) continue;
            if (detail::angles_equal_mod1(cfg.nodes[j].angle, want, cfg.basis)) {
                used[i] = used[j] = true;
                bool first_low = angle_value(cfg.nodes[i].angle, cfg.basis).to_double() < 0.5;
                const Angle& low = first_low ? cfg.nodes[i].angle : cfg.nodes[j].angle;
                Coefficient c;
                if (cfg.nodes[i].b.exact) c = Coefficient(*cfg.nodes[i].b.exact * Rational(2));
                else c = Coefficient(Complex(2.0 * cfg.nodes[i].b.value.real(), 0.0));
                out.pairs.push_back({c, low});
                found = true;
                break;
            }
        }
        if (!found) throw std::domain_error("to_cosine: config is not conjugate-closed");
    }
    return out;
}

// ---------------------------------------------------------------------------
// pair view: one entry per conjugate couple, used by the scanners. The
// imaginary parts cancel structurally, so scans stay real by construction.

struct PairView {
    struct Pair {
        Complex b;
        DD alpha;
    };
    std::vector<Pair> pairs;
    double half_coeff = 0.0; // total real coefficient sitting at z = -1

    double eval(const std::vector<DD>& thetas, std::int64_t k) const {
        double s = 0.0;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            double t = thetas[i].to_double();
            s += 2.0 * (pairs[i].b.real() * std::cos(2.0 * M_PI * t) -
                        pairs[i].b.imag() * std::sin(2.0 * M_PI * t));
        }
        if (half_coeff != 0.0) s += (k % 2 == 0) ? half_coeff : -half_coeff;
        return s;
    }
};

inline PairView build_pair_view(const SpectrumConfig& cfg) {
    PairView view;
    std::vector<bool> used(cfg.n(), false);
    for (std::size_t i = 0; i < cfg.n(); ++i) {
        if (used[i]) continue;
        if (cfg.nodes[i].angle.is_half()) {
            if (std::fabs(cfg.nodes[i].b.value.imag()) > 1e-12)
                throw std::domain_error("build_pair_view: node at z = -1 must carry a real coefficient");
            view.half_coeff += cfg.nodes[i].b.value.real();
            used[i] = true;
            continue;
        }
        Angle want = cfg.nodes[i].angle.negated();
        bool found = false;
        for (std::size_t j = i + 1; j < cfg.n(); ++j) {
            if (used[j]) continue;
            if (detail::angles_equal_mod1(cfg.nodes[j].angle, want, cfg.basis) &&
                detail::coeffs_conjugate(cfg.nodes[i].b, cfg.nodes[j].b)) {
                used[i] = used[j] = true;
                view.pairs.push_back({cfg.nodes[i].b.value, angle_value(cfg.nodes[i].angle, cfg.basis)});
                found = true;
                break;
            }
        }
        if (!found)
            throw std::domain_error("build_pair_view: config is not conjugate-closed");
    }
    return view;
}

} // namespace onesided
