// lattice.hpp — all-integer LLL reduction (exact lambda/d arithmetic).
//
// The relation-finding lattices here carry value columns scaled by up to
// 2^96; Gram-Schmidt in any machine float loses the low ~190 bits of the
// Gram matrix to cancellation and reduces garbage. The classical integral
// formulation (Cohen, Alg. 2.6.3) keeps the scaled Gram-Schmidt data as
// exact integers, where every division in the recurrences is exact.
// Quality parameter is the canonical 3/4, folded into the integer Lovasz
// test 4*(d_k*d_{k-2} + lambda^2) < 3*d_{k-1}^2.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "onesided/bigint.hpp"

namespace onesided {

using LatticeBasis = std::vector<std::vector<BigInt>>;

namespace detail {

inline BigInt row_dot(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    BigInt s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

struct IntegralLLL {
    LatticeBasis& b; // 0-indexed rows
    std::size_t n;
    std::vector<BigInt> d;                 // d[0..n], d[0] = 1
    std::vector<std::vector<BigInt>> lam;  // lam[k][j], j < k (0-indexed rows)
    std::size_t kmax = 0;

    explicit IntegralLLL(LatticeBasis& basis) : b(basis), n(basis.size()) {
        d.assign(n + 1, BigInt(1));
        lam.assign(n, std::vector<BigInt>(n));
        if (n > 0) d[1] = row_dot(b[0], b[0]);
    }

    void incremental_gram(std::size_t k) { // 0-indexed row k
        for (std::size_t j = 0; j <= k; ++j) {
            BigInt u = row_dot(b[k], b[j]);
            for (std::size_t i = 0; i < j; ++i)
                u = BigInt::exact_div(d[i + 1] * u - lam[k][i] * lam[j][i], d[i]);
            if (j < k) lam[k][j] = u;
            else d[k + 1] = u;
        }
        if (d[k + 1].is_zero())
            throw std::invalid_argument("lll_reduce: input rows are linearly dependent");
    }

    void redi(std::size_t k, std::size_t l) {
        BigInt twice = lam[k][l] + lam[k][l];
        BigInt abs_twice = twice.sign() < 0 ? -twice : twice;
        if (!(d[l + 1] < abs_twice)) return;
        BigInt q = BigInt::div_round_nearest(lam[k][l], d[l + 1]);
        for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= q * b[l][c];
        lam[k][l] -= q * d[l + 1];
        for (std::size_t i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
    }

    void swapi(std::size_t k) { // 1 <= k <= kmax (0-indexed)
        std::swap(b[k], b[k - 1]);
        for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
        BigInt lambda = lam[k][k - 1];
        BigInt Bnew = BigInt::exact_div(d[k - 1] * d[k + 1] + lambda * lambda, d[k]);
        for (std::size_t i = k + 1; i <= kmax; ++i) {
            BigInt t = lam[i][k];
            lam[i][k] = BigInt::exact_div(d[k + 1] * lam[i][k - 1] - lambda * t, d[k]);
            lam[i][k - 1] = BigInt::exact_div(Bnew * t + lambda * lam[i][k], d[k + 1]);
        }
        d[k] = Bnew;
    }

    void run() {
        if (n < 2) return;
        std::size_t k = 1;
        long iterations = 0;
        const long cap = 1000000;
        while (k < n) {
            if (++iterations > cap) throw std::runtime_error("lll_reduce: iteration cap hit");
            if (k > kmax) {
                kmax = k;
                incremental_gram(k);
            }
            redi(k, k - 1);
            // Lovasz (delta = 3/4): swap when 4(d_{k+1} d_{k-1} + lam^2) < 3 d_k^2
            BigInt lhs = (d[k + 1] * d[k - 1] + lam[k][k - 1] * lam[k][k - 1]);
            lhs = lhs + lhs;
            lhs = lhs + lhs;
            BigInt rhs = d[k] * d[k];
            rhs = rhs + rhs + rhs;
            if (lhs < rhs) {
                swapi(k);
                k = k > 1 ? k - 1 : 1;
            } else {
                for (std::size_t l = k - 1; l-- > 0;) redi(k, l);
                ++k;
            }
        }
    }
};

} // namespace detail

// In-place LLL with the canonical 3/4 quality parameter.
inline void lll_reduce(LatticeBasis& basis) {
    if (basis.size() < 2) return;
    detail::IntegralLLL algo(basis);
    algo.run();
}

} // namespace onesided
