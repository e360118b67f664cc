// generators.hpp — random config construction for property tests.
// Configs are built conjugate-closed by construction; value-level
// expectations always come from oracle.hpp, never from the library.

#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "onesided/spectrum.hpp"

namespace gen {

using namespace onesided;

struct SpectrumOptions {
    int max_pairs = 4;
    std::int64_t max_den = 50;
    std::int64_t max_period = 20000; // cap on lcm of denominators
    bool allow_half_node = true;     // may add one self-paired z = -1 node
    bool complex_b = true;
    bool rational_b = false;         // exact positive rational coefficients
    bool float_angles = false;       // irrational angles as raw floats
};

// conjugate-closed spectrum with rational (or float) angles
inline SpectrumConfig random_spectrum(std::mt19937_64& rng, const SpectrumOptions& opt) {
    std::uniform_int_distribution<int> pair_count(1, opt.max_pairs);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    SpectrumConfig cfg;
    int pairs = pair_count(rng);

    std::set<std::pair<std::int64_t, std::int64_t>> seen_rationals;
    std::vector<double> seen_floats;
    std::int64_t lcm_so_far = 1;

    for (int p = 0; p < pairs; ++p) {
        Coefficient b;
        if (opt.rational_b) {
            std::uniform_int_distribution<std::int64_t> num(1, 8), den(1, 4);
            b = Coefficient(Rational(num(rng), den(rng)));
        } else if (opt.complex_b) {
            double re = uni(rng) * 3.0 - 1.5;
            double im = uni(rng) * 3.0 - 1.5;
            if (std::abs(Complex(re, im)) < 0.2) re += 0.5;
            b = Coefficient(Complex(re, im));
        } else {
            b = Coefficient(Complex(0.25 + 2.0 * uni(rng), 0.0));
        }

        if (opt.float_angles) {
            double a;
            bool ok;
            do {
                a = 0.02 + 0.46 * uni(rng); // keep away from 0 and 1/2
                ok = true;
                for (double s : seen_floats)
                    if (std::fabs(s - a) < 1e-3 || std::fabs(s + a - 1.0) < 1e-3) ok = false;
            } while (!ok);
            seen_floats.push_back(a);
            Angle alpha = Angle::floating(DD(a));
            cfg.nodes.push_back({b, alpha});
            cfg.nodes.push_back({b.conj(), alpha.negated()});
        } else {
            std::int64_t q, num;
            for (int attempt = 0;; ++attempt) {
                std::uniform_int_distribution<std::int64_t> den(2, opt.max_den);
                q = den(rng);
                if (onesided::checked_lcm(lcm_so_far, q) > opt.max_period) continue;
                std::uniform_int_distribution<std::int64_t> pnum(1, q - 1);
                num = pnum(rng);
                Rational r(num, q);
                if (r == Rational(1, 2)) continue;
                auto key = std::make_pair(r.num(), r.den());
                auto neg_key = std::make_pair((-r).mod1().num(), (-r).mod1().den());
                if (seen_rationals.count(key) || seen_rationals.count(neg_key)) {
                    if (attempt > 200) break;
                    continue;
                }
                seen_rationals.insert(key);
                seen_rationals.insert(neg_key);
                lcm_so_far = onesided::checked_lcm(lcm_so_far, r.den());
                Angle alpha = Angle::exact(r);
                cfg.nodes.push_back({b, alpha});
                cfg.nodes.push_back({b.conj(), alpha.negated()});
                break;
            }
        }
    }
    if (cfg.nodes.empty())
        cfg.nodes.push_back({Coefficient(Rational(1)), Angle::exact(Rational(1, 3))}),
        cfg.nodes.push_back({Coefficient(Rational(1)), Angle::exact(Rational(2, 3))});

    if (opt.allow_half_node && !opt.float_angles && uni(rng) < 0.3) {
        Coefficient b = opt.rational_b ? Coefficient(Rational(1))
                                       : Coefficient(Complex(0.5 + uni(rng), 0.0));
        cfg.nodes.push_back({b, Angle::exact(Rational(1, 2))});
        lcm_so_far = onesided::checked_lcm(lcm_so_far, 2);
    }
    return cfg;
}

// positive rational coefficients with deliberately repeated angles
inline SpectrumConfig random_repeated_spectrum(std::mt19937_64& rng) {
    SpectrumOptions opt;
    opt.rational_b = true;
    opt.complex_b = false;
    opt.allow_half_node = false;
    opt.max_pairs = 3;
    SpectrumConfig base = random_spectrum(rng, opt);
    SpectrumConfig cfg;
    cfg.basis = base.basis;
    std::uniform_int_distribution<int> copies(1, 3);
    std::uniform_int_distribution<std::int64_t> num(1, 5), den(1, 3);
    // duplicate each conjugate pair a random number of times, keeping the
    // multiset conjugate-closed
    for (std::size_t i = 0; i + 1 < base.nodes.size(); i += 2) {
        int c = copies(rng);
        for (int r = 0; r < c; ++r) {
            Rational b(num(rng), den(rng));
            cfg.nodes.push_back({Coefficient(b), base.nodes[i].angle});
            cfg.nodes.push_back({Coefficient(b), base.nodes[i + 1].angle});
        }
    }
    return cfg;
}

} // namespace gen
