// relation_scan.hpp — heuristic integer-relation detection.
//
// Finds integer vectors (c_0, c_1, ..., c_n) of bounded height with
//     c_0 + sum_j c_j * alpha_j ~ 0
// via LLL on the standard relation-finding lattice: identity block plus a
// scaled value column. Candidates read off the reduced basis are verified
// against the original double-double values, so LLL only proposes. The
// scan stress-tests declared independence and backs the float-angle
// degeneracy path; it certifies nothing.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "onesided/dd.hpp"
#include "onesided/lattice.hpp"

namespace onesided {

struct IntegerRelation {
    std::int64_t c0 = 0;
    std::vector<std::int64_t> coeffs;
    double residual = 0.0; // c0 + sum c_j alpha_j, from the DD recheck

    std::int64_t height() const {
        std::int64_t h = std::llabs(c0);
        for (auto c : coeffs) h = std::max<std::int64_t>(h, std::llabs(c));
        return h;
    }
};

namespace detail {

inline DD relation_residual(const IntegerRelation& r, const std::vector<DD>& alphas) {
    DD s = dd_from_int(r.c0);
    for (std::size_t j = 0; j < alphas.size(); ++j)
        if (r.coeffs[j] != 0) s += dd_from_int(r.coeffs[j]) * alphas[j];
    return s;
}

} // namespace detail

// Scan for relations of height <= height_limit with residual below
// 2^(-precision_bits/2). Throws when the requested precision cannot
// separate relations at the requested height for this many angles.
inline std::vector<IntegerRelation> numeric_relation_scan(const std::vector<DD>& alphas,
                                                          std::int64_t height_limit = 1000,
                                                          int precision_bits = 0) {
    if (precision_bits <= 0) precision_bits = runtime_precision_bits();
    if (alphas.empty()) return {};
    std::size_t n = alphas.size();

    // the identity-plus-column lattice needs the column scale to dominate
    // height_limit^(n+1), or shortness stops meaning "relation"
    double needed = (static_cast<double>(n) + 1.0) * std::log2(2.0 * static_cast<double>(height_limit)) + 16.0;
    if (static_cast<double>(precision_bits) < needed)
        throw std::invalid_argument(
            "numeric_relation_scan: precision " + std::to_string(precision_bits) +
            " bits insufficient for height limit " + std::to_string(height_limit) + " over " +
            std::to_string(n) + " angles (need >= " + std::to_string(static_cast<int>(needed)) + ")");

    // Column scale: large enough that junk vectors (pigeonhole
    // quasi-relations) stay longer than any admissible relation whose
    // residual meets the 2^(-precision/2) target, small enough that such a
    // relation's scaled residual stays below the height scale. Capped at
    // 96 bits, where double-double input accuracy runs out.
    int scale_bits = precision_bits / 2 +
                     static_cast<int>(std::ceil(std::log2(static_cast<double>(height_limit)))) + 8;
    if (scale_bits > 96) scale_bits = 96;
    if (scale_bits < 24) scale_bits = 24;

    LatticeBasis basis(n + 1, std::vector<BigInt>(n + 2));
    basis[0][0] = BigInt(1);
    basis[0][n + 1] = BigInt::from_scaled_double(1.0, scale_bits); // the constant 1
    for (std::size_t j = 0; j < n; ++j) {
        basis[j + 1][j + 1] = BigInt(1);
        basis[j + 1][n + 1] = BigInt::from_scaled_double(alphas[j].hi, scale_bits) +
                              BigInt::from_scaled_double(alphas[j].lo, scale_bits);
    }
    lll_reduce(basis);

    double threshold = std::ldexp(1.0, -precision_bits / 2);
    std::vector<IntegerRelation> found;
    for (const auto& row : basis) {
        IntegerRelation rel;
        bool small = true;
        for (std::size_t c = 0; c <= n && small; ++c) {
            if (!row[c].fits_int64()) { small = false; break; }
            std::int64_t v = row[c].to_int64();
            if (std::llabs(v) > height_limit) small = false;
            else if (c == 0) rel.c0 = v;
            else rel.coeffs.push_back(v);
        }
        if (!small || rel.coeffs.size() != n) continue;
        bool all_zero = rel.c0 == 0 &&
                        std::all_of(rel.coeffs.begin(), rel.coeffs.end(),
                                    [](std::int64_t c) { return c == 0; });
        if (all_zero) continue;
        DD res = detail::relation_residual(rel, alphas);
        rel.residual = res.to_double();
        if (std::fabs(rel.residual) < threshold) found.push_back(rel);
    }
    std::sort(found.begin(), found.end(), [](const IntegerRelation& a, const IntegerRelation& b) {
        return a.height() < b.height();
    });
    return found;
}

} // namespace onesided
