#pragma once

// Weighted primitives of the chord-distribution branches,
//   W_e(x) = integral of s^e H_k(s) ds,  e >= 0,
// and the branch-wise definite integrals J_e,k(x) = integral_{ell_k}^{x} s^e H_k(s) ds.
// The distance density uses e = 0; the distance moment M_m uses e = m + 2.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "polymoments/antiderivatives.hpp"
#include "polymoments/chord_cdf.hpp"
#include "polymoments/geometry.hpp"

namespace polymoments {

namespace detail {

/// Working precision of the primitives. On the top branch of a many-sided polygon
/// the interval is short and the coefficients grow like n, so primitive values
/// cancel by several orders of magnitude when differenced.
using Extended = long double;

/// integral of x^(e-1) dx: x^e / e, or ln x for e = 0.
inline Extended reciprocal_power_primitive(int e, Extended x) {
    return e == 0 ? std::log(x) : ipow(x, e) / e;
}

inline Extended branch_primitive_ext(const PolygonParams& P, BranchTag tag, int k, int e,
                                     Extended x) {
    if (e < 0) throw std::domain_error("branch weight exponent must be >= 0");
    using X = Extended;
    const X two_r_cos = 2 * X(P.r) * X(P.cos_alpha);
    switch (tag) {
        case BranchTag::H0:
            return X(P.ell[1]) * ipow(x, e + 1) / (e + 1) -
                   X(h0_slope(P)) * ipow(x, e + 2) / (2 * (e + 2));
        case BranchTag::H1: {
            const X hk = P.h[k];
            return X(coefficient(P.p[k], "p", k)) * sigma_tilde(e + 1, hk, x) -
                   X(h1_linear(P, k)) * ipow(x, e + 2) / (e + 2) -
                   X(h1_root(P, k)) * tau_tilde(e - 1, hk, x);
        }
        case BranchTag::H2: {
            const X hk = P.h[k];
            const X c = coefficient(P.cot2k[k], "cot2k", k);
            const X t = coefficient(P.tank[k], "tank", k);
            return (X(0.5) - k * X(P.alpha) * c) * ipow(x, e + 2) / (e + 2) +
                   c * sigma_tilde(e + 1, hk, x) -
                   (hk - two_r_cos) * hk * reciprocal_power_primitive(e, x) -
                   (hk * c + two_r_cos * t) * tau_tilde(e - 1, hk, x);
        }
        case BranchTag::H3: {
            const X hk = P.h[k];
            const X lam = P.lambda;
            const X c1 = coefficient(P.cot2k[k + 1], "cot2k", k + 1);
            return X(coefficient(P.p[k], "p", k)) * sigma_tilde(e + 1, hk, x) +
                   2 * c1 * sigma_tilde(e + 1, lam, x) -
                   ((std::numbers::pi_v<X> - X(P.alpha)) * c1 + X(coefficient(P.s[k], "s", k))) *
                       ipow(x, e + 2) / (e + 2) -
                   X(h1_root(P, k)) * tau_tilde(e - 1, hk, x) -
                   X(h3_lambda_root(P)) * tau_tilde(e - 1, lam, x);
        }
    }
    throw std::logic_error("unknown branch tag");
}

}  // namespace detail

/// Antiderivative of x^e H_k(x) for the given branch family (e >= 0).
inline double weighted_branch_primitive(const PolygonParams& P, BranchTag tag, int k, int e,
                                        double x) {
    return static_cast<double>(detail::branch_primitive_ext(P, tag, k, e, x));
}

/// integral_{ell_k}^{x} s^e H_k(s) ds for ell_k <= x <= ell_{k+1}, following the
/// branch case table (including the continuation through lambda for odd n).
inline double weighted_branch_integral(const PolygonParams& P, int k, int e, double x) {
    if (k < 0 || k > P.bigK) throw std::out_of_range("branch index " + std::to_string(k));
    const double lo = P.ell[k];
    const double hi = P.ell[k + 1];
    const double slack = 1e-12 * P.d;
    if (!(x >= lo - slack && x <= hi + slack))
        throw std::domain_error("abscissa outside branch interval [ell_k, ell_{k+1}]");

    auto W = [&](BranchTag tag, double at) {
        return detail::branch_primitive_ext(P, tag, k, e, at);
    };
    detail::Extended value;
    if (k == 0 && (P.n > 3 || x < P.lambda)) {
        value = W(BranchTag::H0, x);
    } else if (P.even() && k == P.bigK) {
        value = W(BranchTag::H2, x) - W(BranchTag::H2, lo);
    } else if (k == P.bigK && x >= P.lambda) {
        const detail::Extended below = P.n == 3 ? W(BranchTag::H0, P.lambda)
                                                : W(BranchTag::H1, P.lambda) - W(BranchTag::H1, lo);
        value = W(BranchTag::H3, x) - W(BranchTag::H3, P.lambda) + below;
    } else {
        value = W(BranchTag::H1, x) - W(BranchTag::H1, lo);
    }
    return static_cast<double>(value);
}

}  // namespace polymoments
