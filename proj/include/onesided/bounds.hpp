// bounds.hpp — the explicit upper bounds for inf sum b_j z_j^k and the L1
// quantities behind the non-degenerate log-bound.
//
// Bound values are closed-form arithmetic; each report carries the
// hypothesis flags a caller must inspect before trusting the value, and a
// `strict` marker distinguishing "<" statements from liminf-style "<=".

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "onesided/quadrature.hpp"
#include "onesided/spectrum.hpp"

namespace onesided {

enum class TheoremId { Thm1, Cor1, Thm2, Thm4, Cor3, Cor4, Cor5, Lemma1, Lemma2 };

inline const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::Thm1: return "Thm1";
        case TheoremId::Cor1: return "Cor1";
        case TheoremId::Thm2: return "Thm2";
        case TheoremId::Thm4: return "Thm4";
        case TheoremId::Cor3: return "Cor3";
        case TheoremId::Cor4: return "Cor4";
        case TheoremId::Cor5: return "Cor5";
        case TheoremId::Lemma1: return "Lemma1";
        case TheoremId::Lemma2: return "Lemma2";
    }
    return "?";
}

inline TheoremId theorem_from_name(const std::string& s) {
    for (TheoremId id : {TheoremId::Thm1, TheoremId::Cor1, TheoremId::Thm2, TheoremId::Thm4,
                         TheoremId::Cor3, TheoremId::Cor4, TheoremId::Cor5, TheoremId::Lemma1,
                         TheoremId::Lemma2})
        if (s == theorem_name(id)) return id;
    throw std::invalid_argument("unknown theorem id '" + s + "'");
}

struct BoundReport {
    TheoremId id = TheoremId::Thm1;
    double value = 0.0;
    bool strict = false; // "<" in the source statement vs liminf-style "<="
    std::vector<std::pair<std::string, bool>> hypotheses;

    BoundReport() = default;
    explicit BoundReport(TheoremId i) : id(i) {}

    bool hypotheses_met() const {
        for (const auto& [name, ok] : hypotheses)
            if (!ok) return false;
        return true;
    }
};

inline constexpr double PI3 = 31.006276680299820175; // pi^3
inline constexpr double PI4 = 97.409091034002437236; // pi^4

// -sum|b|^2 / sum|b|
inline BoundReport bound_thm1(const SpectrumConfig& cfg, const ValidationReport& val) {
    BoundReport rep{TheoremId::Thm1};
    rep.strict = false;
    rep.hypotheses = {{"conjugate_closed", val.conjugate_closed},
                      {"no_z_equal_one", val.no_unit_node},
                      {"angles_distinct", val.all_distinct},
                      {"b_nonzero", val.all_b_nonzero}};
    double sb = cfg.sum_abs_b();
    rep.value = sb > 0.0 ? -cfg.sum_abs_b_sq() / sb : 0.0;
    return rep;
}

// -(1/n) sum|b| ; also asserts the Cauchy-Schwarz direction vs Theorem 1
inline BoundReport bound_cor1(const SpectrumConfig& cfg, const ValidationReport& val) {
    BoundReport rep{TheoremId::Cor1};
    rep.strict = false;
    rep.hypotheses = {{"conjugate_closed", val.conjugate_closed},
                      {"no_z_equal_one", val.no_unit_node},
                      {"angles_distinct", val.all_distinct},
                      {"b_nonzero", val.all_b_nonzero}};
    rep.value = cfg.n() ? -cfg.sum_abs_b() / static_cast<double>(cfg.n()) : 0.0;
    double t1 = bound_thm1(cfg, val).value;
    if (t1 > rep.value + 1e-12 * std::max(1.0, std::fabs(rep.value)))
        throw std::logic_error("bound_cor1: Cauchy-Schwarz direction violated");
    return rep;
}

// Theorem 2 is Theorem 1 with repeats allowed for positive real b; the
// bound formula is identical, hypotheses differ.
inline BoundReport bound_thm2(const SpectrumConfig& cfg, const ValidationReport& val) {
    BoundReport rep{TheoremId::Thm2};
    rep.strict = false;
    rep.hypotheses = {{"conjugate_closed", val.conjugate_closed},
                      {"no_z_equal_one", val.no_unit_node},
                      {"b_positive_real", val.all_b_positive_real}};
    double sb = cfg.sum_abs_b();
    rep.value = sb > 0.0 ? -cfg.sum_abs_b_sq() / sb : 0.0;
    return rep;
}

// -(1/pi^4) * min|b| * log n  (non-degenerate case, z != -1)
inline BoundReport bound_thm4(const SpectrumConfig& cfg, bool certified_nondegenerate,
                              bool no_minus_one) {
    BoundReport rep{TheoremId::Thm4};
    rep.strict = true;
    rep.hypotheses = {{"nondegenerate_certified", certified_nondegenerate},
                      {"no_z_equal_minus_one", no_minus_one}};
    rep.value = -cfg.min_abs_b() * std::log(static_cast<double>(cfg.n())) / PI4;
    return rep;
}

// -(1/pi^4) log n, valid for b = 1 even with z = -1 present
inline BoundReport bound_cor3(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("bound_cor3: n >= 2 required");
    BoundReport rep{TheoremId::Cor3};
    rep.strict = true;
    rep.hypotheses = {{"all_b_equal_one", true}, {"n_at_least_2", true}};
    rep.value = -std::log(static_cast<double>(n)) / PI4;
    return rep;
}

// -(1/2m) sum|b|
inline BoundReport bound_cor4(const CosineConfig& cfg) {
    BoundReport rep{TheoremId::Cor4};
    rep.strict = false;
    ValidationReport val = validate_config(cfg);
    rep.hypotheses = {{"alphas_valid", val.structural_ok}, {"alphas_distinct", val.all_distinct}};
    rep.value = cfg.m() ? -cfg.sum_abs_b() / (2.0 * static_cast<double>(cfg.m())) : 0.0;
    return rep;
}

// -log(2m)/(2*pi^4) * min|b|  (no rational difference or sum among alphas)
inline BoundReport bound_cor5(const CosineConfig& cfg, bool certified_nondegenerate) {
    BoundReport rep{TheoremId::Cor5};
    rep.strict = true;
    rep.hypotheses = {{"no_rational_difference_or_sum", certified_nondegenerate}};
    rep.value = -cfg.min_abs_b() * std::log(2.0 * static_cast<double>(cfg.m())) / (2.0 * PI4);
    return rep;
}

// ---------------------------------------------------------------------------
// integer-frequency trigonometric polynomials f(t) = sum b_j e^{i q_j t}

struct TrigPoly {
    struct Term {
        Complex b;
        std::int64_t q;
    };
    std::vector<Term> terms;

    std::size_t n() const { return terms.size(); }

    double min_abs_b() const {
        double m = terms.empty() ? 0.0 : std::abs(terms[0].b);
        for (const auto& t : terms) m = std::min(m, std::abs(t.b));
        return m;
    }

    Complex eval(double t) const {
        Complex s{0.0, 0.0};
        for (const auto& term : terms)
            s += term.b * std::exp(Complex(0.0, static_cast<double>(term.q) * t));
        return s;
    }

    // real-valued for all t iff terms pair up as (conj b, -q)
    bool is_real_valued(double tol = 1e-12) const {
        std::vector<bool> used(terms.size(), false);
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (used[i]) continue;
            bool found = false;
            for (std::size_t j = i; j < terms.size(); ++j) {
                if (used[j] && j != i) continue;
                if (terms[j].q == -terms[i].q &&
                    std::abs(terms[j].b - std::conj(terms[i].b)) <= tol) {
                    if (j == i && terms[i].q != 0 &&
                        std::abs(std::imag(terms[i].b)) > tol)
                        continue;
                    used[i] = used[j] = true;
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
        return true;
    }

    void check_distinct_q() const {
        for (std::size_t i = 0; i < terms.size(); ++i)
            for (std::size_t j = i + 1; j < terms.size(); ++j)
                if (terms[i].q == terms[j].q)
                    throw std::invalid_argument("TrigPoly: frequencies must be distinct");
    }
};

// (4/pi^3) * min|b| * log n — the L1 lower bound this library consumes as
// a numeric inequality, not a result it re-proves
inline double littlewood_lower_bound(const TrigPoly& f) {
    if (f.n() < 1) throw std::invalid_argument("littlewood_lower_bound: empty polynomial");
    return 4.0 / PI3 * f.min_abs_b() * std::log(static_cast<double>(f.n()));
}

namespace detail {

// zeros of a real-valued trig poly on [a, b], located by scan + bisection;
// used to split |f| into smooth pieces before quadrature
inline std::vector<double> real_zeros(const TrigPoly& f, double a, double b) {
    std::vector<double> zeros;
    std::int64_t maxq = 1;
    for (const auto& t : f.terms) maxq = std::max<std::int64_t>(maxq, std::llabs(t.q));
    std::size_t steps = static_cast<std::size_t>(64 * maxq) + 64;
    double h = (b - a) / static_cast<double>(steps);
    double prev = f.eval(a).real();
    for (std::size_t i = 1; i <= steps; ++i) {
        double x = a + h * static_cast<double>(i);
        double cur = f.eval(x).real();
        if ((prev < 0.0) != (cur < 0.0)) {
            double lo = x - h, hi = x, flo = prev;
            for (int iter = 0; iter < 80; ++iter) {
                double mid = 0.5 * (lo + hi);
                double fm = f.eval(mid).real();
                if ((flo < 0.0) != (fm < 0.0)) hi = mid;
                else { lo = mid; flo = fm; }
            }
            zeros.push_back(0.5 * (lo + hi));
        }
        prev = cur;
    }
    return zeros;
}

} // namespace detail

// int_{-pi}^{pi} |f(t)| dt. Real-valued polynomials are split at sign
// changes; genuinely complex ones integrate sqrt(Re^2 + Im^2) directly.
inline QuadResult l1_norm(const TrigPoly& f, double rel_tol = 1e-7) {
    f.check_distinct_q();
    QuadResult total;
    total.converged = true;
    if (f.is_real_valued()) {
        // splitting at the located zeros makes each piece smooth; the
        // integrand stays |f| so a missed kink only costs subdivisions,
        // never correctness
        std::vector<double> cuts = detail::real_zeros(f, -M_PI, M_PI);
        cuts.insert(cuts.begin(), -M_PI);
        cuts.push_back(M_PI);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            if (cuts[i + 1] - cuts[i] < 1e-14) continue;
            QuadResult piece = integrate_adaptive(
                [&](double t) { return std::fabs(f.eval(t).real()); }, cuts[i], cuts[i + 1],
                rel_tol);
            total.value += piece.value;
            total.error_estimate += piece.error_estimate;
            total.evaluations += piece.evaluations;
            total.converged = total.converged && piece.converged;
        }
    } else {
        QuadResult piece = integrate_adaptive([&](double t) { return std::abs(f.eval(t)); },
                                              -M_PI, M_PI, rel_tol);
        total = piece;
    }
    return total;
}

// Lemma 1 bound report for a polynomial: value is the lower bound the L1
// norm must dominate.
inline BoundReport bound_lemma1(const TrigPoly& f) {
    BoundReport rep{TheoremId::Lemma1};
    rep.strict = false;
    bool distinct = true;
    try {
        f.check_distinct_q();
    } catch (...) {
        distinct = false;
    }
    rep.hypotheses = {{"frequencies_distinct", distinct}};
    rep.value = littlewood_lower_bound(f);
    return rep;
}

// Lemma 2 bound: min_t f(t) < -(1/pi^4) min|b| log n, for real-valued f
// with distinct nonzero integer frequencies.
inline BoundReport bound_lemma2(const TrigPoly& f) {
    BoundReport rep{TheoremId::Lemma2};
    rep.strict = true;
    bool nonzero = true;
    for (const auto& t : f.terms)
        if (t.q == 0) nonzero = false;
    bool distinct = true;
    try {
        f.check_distinct_q();
    } catch (...) {
        distinct = false;
    }
    rep.hypotheses = {{"frequencies_distinct", distinct},
                      {"frequencies_nonzero", nonzero},
                      {"real_valued", f.is_real_valued()}};
    rep.value = -f.min_abs_b() * std::log(static_cast<double>(f.n())) / PI4;
    return rep;
}

} // namespace onesided
