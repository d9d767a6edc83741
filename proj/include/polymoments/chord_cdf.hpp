#pragma once

// Chord length distribution F(x) = P(chord <= x) of an isotropic uniform random
// line hitting the regular polygon. On [ell_k, ell_{k+1}) the distribution is
// F = 1 - H_k / ell_1 with one of four closed-form branch families:
//
//   H0  k = 0 (and x < lambda when n = 3)
//   H1  1 <= k <= K-1 (even n), 1 <= k <= K with x < lambda (odd n)
//   H2  k = K, even n
//   H3  k = K, odd n, x >= lambda
//
// The H3 family carries the term 2 cot(2(K+1)alpha) sigma_{1,lambda}(x) without
// a p_K factor; only that form is continuous at lambda and integrates to the
// known moments.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "polymoments/antiderivatives.hpp"
#include "polymoments/geometry.hpp"
#include "polymoments/quadrature.hpp"

namespace polymoments {

enum class BranchTag { H0, H1, H2, H3 };

struct BranchId {
    BranchTag tag = BranchTag::H0;
    int k = 0;
    friend bool operator==(const BranchId&, const BranchId&) = default;
};

inline const char* to_string(BranchTag tag) {
    switch (tag) {
        case BranchTag::H0: return "H0";
        case BranchTag::H1: return "H1";
        case BranchTag::H2: return "H2";
        case BranchTag::H3: return "H3";
    }
    return "?";
}

struct CurveSample {
    double x = 0.0;
    double value = 0.0;
};

/// Breakpoints of the piecewise representation: ell_0 = 0 < ell_1 < ... < ell_{K+1} = d,
/// plus lambda, which splits the last branch for odd n.
struct PiecewiseDomain {
    std::vector<double> ell;
    double lambda = 0.0;
    bool lambda_splits = false;

    /// Interior abscissae where F changes branch, ascending.
    std::vector<double> interior_breakpoints() const {
        std::vector<double> out(ell.begin() + 1, ell.end() - 1);
        if (lambda_splits) out.push_back(lambda);
        std::sort(out.begin(), out.end());
        return out;
    }
    double diameter() const { return ell.back(); }
};

inline PiecewiseDomain piecewise_domain(const PolygonParams& P) {
    return {P.ell, P.lambda, P.odd()};
}

/// Branch formula constants that are not stored directly in PolygonParams.
namespace detail {

/// 1 + alpha (tan alpha - cot alpha), the H0 slope factor.
inline double h0_slope(const PolygonParams& P) {
    return 1.0 + P.alpha * (P.tan_alpha - P.cot_alpha);
}

/// k alpha cot(2k alpha) - (k+1) alpha cot(2(k+1) alpha).
inline double h1_linear(const PolygonParams& P, int k) {
    return k * P.alpha * coefficient(P.cot2k[k], "cot2k", k) -
           (k + 1) * P.alpha * coefficient(P.cot2k[k + 1], "cot2k", k + 1);
}

/// h_k p_k + 2 r q_k cos(alpha), the weight of tau_{.,h_k} in H1 and H3.
inline double h1_root(const PolygonParams& P, int k) {
    return P.h[k] * coefficient(P.p[k], "p", k) +
           2.0 * P.r * coefficient(P.q[k], "q", k) * P.cos_alpha;
}

/// 2 cos(alpha) [2 r cos(alpha/2) sec((K+1) alpha) - lambda csc(2(K+1) alpha)] for odd n,
/// using (K+1) alpha = pi/2 - alpha/2 and 2(K+1) alpha = pi - alpha.
inline double h3_lambda_root(const PolygonParams& P) {
    return 2.0 * P.cos_alpha *
           (2.0 * P.r * P.cos_half_alpha / P.sin_half_alpha - P.lambda / P.sin_alpha);
}

}  // namespace detail

/// Branch (k, family) responsible for x in [0, d); std::nullopt outside.
inline std::optional<BranchId> select_branch(const PolygonParams& P, double x) {
    if (!(x >= 0.0) || x >= P.d) return std::nullopt;
    const auto first = P.ell.begin();
    const auto last = P.ell.begin() + P.bigK + 1;  // ell_0 .. ell_K
    const int k = static_cast<int>(std::upper_bound(first, last, x) - first) - 1;
    if (k == 0 && (P.n > 3 || x < P.lambda)) return BranchId{BranchTag::H0, 0};
    if (k == P.bigK && P.even()) return BranchId{BranchTag::H2, k};
    if (k == P.bigK && x >= P.lambda) return BranchId{BranchTag::H3, k};
    return BranchId{BranchTag::H1, k};
}

/// Evaluates the H_k formula of the given branch family at x, without checking
/// that x lies in that branch's interval (one-sided limits use this).
inline double branch_h(const PolygonParams& P, BranchId b, double x) {
    const int k = b.k;
    switch (b.tag) {
        case BranchTag::H0:
            return P.ell[1] - detail::h0_slope(P) * x / 2.0;
        case BranchTag::H1: {
            const double hk = P.h[k];
            return detail::coefficient(P.p[k], "p", k) * sigma(1, hk, x) -
                   detail::h1_linear(P, k) * x - detail::h1_root(P, k) * tau(-1, hk, x);
        }
        case BranchTag::H2: {
            const double hk = P.h[k];
            const double c = detail::coefficient(P.cot2k[k], "cot2k", k);
            const double t = detail::coefficient(P.tank[k], "tank", k);
            return (0.5 - k * P.alpha * c) * x + c * sigma(1, hk, x) -
                   (hk - 2.0 * P.r * P.cos_alpha) * hk / x -
                   (hk * c + 2.0 * P.r * P.cos_alpha * t) * tau(-1, hk, x);
        }
        case BranchTag::H3: {
            const double hk = P.h[k];
            const double c1 = detail::coefficient(P.cot2k[k + 1], "cot2k", k + 1);
            const double pk = detail::coefficient(P.p[k], "p", k);
            const double sk = detail::coefficient(P.s[k], "s", k);
            return pk * sigma(1, hk, x) + 2.0 * c1 * sigma(1, P.lambda, x) -
                   ((std::numbers::pi - P.alpha) * c1 + sk) * x -
                   detail::h1_root(P, k) * tau(-1, hk, x) -
                   detail::h3_lambda_root(P) * tau(-1, P.lambda, x);
        }
    }
    throw std::logic_error("unknown branch tag");
}

/// H_k(x) = ell_1 (1 - F(x)) for x in [0, d); 0 outside.
inline double survival_scaled(const PolygonParams& P, double x) {
    if (x < 0.0) return P.ell[1];
    const auto b = select_branch(P, x);
    return b ? branch_h(P, *b, x) : 0.0;
}

inline double chord_cdf(const PolygonParams& P, double x) {
    if (x < 0.0) return 0.0;
    const auto b = select_branch(P, x);
    if (!b) return 1.0;
    return std::clamp(1.0 - branch_h(P, *b, x) / P.ell[1], 0.0, 1.0);
}

/// Centered difference of F; refuses abscissae within h of a breakpoint or of 0, d.
inline double chord_pdf_numeric(const PolygonParams& P, double x, double h) {
    if (!(h > 0.0)) throw std::domain_error("difference step must be positive");
    if (!(x - h > 0.0) || !(x + h < P.d))
        throw std::domain_error("numeric chord density needs (x - h, x + h) inside (0, d)");
    for (double b : piecewise_domain(P).interior_breakpoints()) {
        if (std::abs(x - b) <= h)
            throw std::domain_error("numeric chord density refused within h of a breakpoint");
    }
    return (chord_cdf(P, x + h) - chord_cdf(P, x - h)) / (2.0 * h);
}

/// E[chord] = pi A / L (Cauchy-Crofton).
inline double mean_chord(const PolygonParams& P) {
    return std::numbers::pi * P.area / P.perimeter;
}

/// The same mean as the integral of 1 - F over [0, d], split at every breakpoint.
inline QuadResult mean_chord_integral(const PolygonParams& P, QuadConfig cfg = {}) {
    cfg.mandatory_splits = piecewise_domain(P).interior_breakpoints();
    return integrate([&P](double x) { return survival_scaled(P, x) / P.ell[1]; }, 0.0, P.d, cfg);
}

}  // namespace polymoments
