#pragma once

// Moments M_m = E[distance^m] of the distance between two uniform points in P(n, r).
//
// The analytic route integrates x^(m+2) H_k(x) branch by branch:
//
//   M_m = 2 L / ((m + 2) A^2 ell_1) * sum_k J~_{m,k}(ell_{k+1}).
//
// Two quadrature routes (x^m g and x^(m+2) (1 - F)) are provided for cross-checks,
// together with the short closed forms for M_2 and M_4 and the chord power integrals.

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polymoments/antiderivatives.hpp"
#include "polymoments/branch_integrals.hpp"
#include "polymoments/chord_cdf.hpp"
#include "polymoments/circle.hpp"
#include "polymoments/distance_pdf.hpp"
#include "polymoments/geometry.hpp"
#include "polymoments/quadrature.hpp"
#include "polymoments/summation.hpp"

namespace polymoments {

inline constexpr int kMaxMomentOrder = 64;

enum class MomentMethod { analytic, quadrature_pdf, quadrature_cdf, monte_carlo };

inline const char* to_string(MomentMethod m) {
    switch (m) {
        case MomentMethod::analytic: return "analytic";
        case MomentMethod::quadrature_pdf: return "quadrature_pdf";
        case MomentMethod::quadrature_cdf: return "quadrature_cdf";
        case MomentMethod::monte_carlo: return "monte_carlo";
    }
    return "?";
}

struct MomentResult {
    int m = 0;
    double value = 0.0;
    MomentMethod method = MomentMethod::analytic;
    std::optional<double> err_estimate;
};

namespace detail {

inline void require_moment_order(int m) {
    if (m < -1) throw std::domain_error("moment order must be >= -1, got " + std::to_string(m));
    if (m > kMaxMomentOrder)
        throw std::range_error("moment order above " + std::to_string(kMaxMomentOrder));
}

}  // namespace detail

/// H~^(variant)_{m,k}(x): an antiderivative of x^(m+2) H_k(x) on the branch family `variant`.
inline double h_tilde(const PolygonParams& P, BranchTag variant, int m, int k, double x) {
    detail::require_moment_order(m);
    return weighted_branch_primitive(P, variant, k, m + 2, x);
}

/// J~_{m,k}(x) = integral_{ell_k}^{x} s^(m+2) H_k(s) ds.
inline double j_tilde(const PolygonParams& P, int m, int k, double x) {
    detail::require_moment_order(m);
    return weighted_branch_integral(P, k, m + 2, x);
}

inline MomentResult moment(const PolygonParams& P, int m) {
    detail::require_moment_order(m);
    std::vector<double> terms;
    terms.reserve(P.bigK + 1);
    for (int k = 0; k <= P.bigK; ++k) terms.push_back(j_tilde(P, m, k, P.ell[k + 1]));
    const double scale = 2.0 * P.perimeter / ((m + 2) * P.area * P.area * P.ell[1]);
    return {m, scale * sum_descending(std::move(terms)), MomentMethod::analytic, std::nullopt};
}

/// M_m as the quadrature of x^m g(x) over [0, d], split at every breakpoint.
inline MomentResult moment_by_pdf_quadrature(const PolygonParams& P, int m, QuadConfig cfg = {}) {
    detail::require_moment_order(m);
    const DistanceDensity g(P);
    cfg.mandatory_splits = piecewise_domain(P).interior_breakpoints();
    const QuadResult q =
        integrate([&](double x) { return detail::ipow(x, m) * g(x); }, 0.0, P.d, cfg);
    return {m, q.value, MomentMethod::quadrature_pdf, q.err_estimate};
}

/// M_m = 2 L / ((m + 2) A^2) * integral_0^d x^(m+2) (1 - F(x)) dx, by quadrature.
inline MomentResult moment_by_cdf_quadrature(const PolygonParams& P, int m, QuadConfig cfg = {}) {
    detail::require_moment_order(m);
    cfg.mandatory_splits = piecewise_domain(P).interior_breakpoints();
    const QuadResult q = integrate(
        [&](double x) { return detail::ipow(x, m + 2) * (1.0 - chord_cdf(P, x)); }, 0.0, P.d, cfg);
    const double scale = 2.0 * P.perimeter / ((m + 2) * P.area * P.area);
    return {m, scale * q.value, MomentMethod::quadrature_cdf, scale * q.err_estimate};
}

/// M_2 = (r^2 / 3) (2 + cos(2 pi / n)).
inline double moment2_closed(const PolygonParams& P) {
    return P.r * P.r / 3.0 * (2.0 + std::cos(2.0 * P.alpha));
}

/// M_4 = (r^4 / 90) (77 + 64 cos(2 pi / n) + 9 cos(4 pi / n)).
inline double moment4_closed(const PolygonParams& P) {
    const double r2 = P.r * P.r;
    return r2 * r2 / 90.0 * (77.0 + 64.0 * std::cos(2.0 * P.alpha) + 9.0 * std::cos(4.0 * P.alpha));
}

/// Polar moment of area about the centroid, (n r^4 / 6) cos(pi/n) sin(pi/n) (2 + cos(2 pi / n)).
inline double polar_moment(const PolygonParams& P) {
    const double r2 = P.r * P.r;
    return P.n * r2 * r2 / 6.0 * P.cos_alpha * P.sin_alpha * (2.0 + std::cos(2.0 * P.alpha));
}

/// M_2 through the polar moment, 2 I_p / A.
inline double moment2_from_polar(const PolygonParams& P) { return 2.0 * polar_moment(P) / P.area; }

/// Var = M_2 - M_1^2 with the closed form for M_2.
inline double variance(const PolygonParams& P) {
    const double m1 = moment(P, 1).value;
    return moment2_closed(P) - m1 * m1;
}

/// Chord power integral S_m = m (m - 1) / 2 * A^2 * M_{m-3}, m >= 2.
inline double chord_power_integral(const PolygonParams& P, int m) {
    if (m < 2) throw std::domain_error("chord power integral needs m >= 2, got " + std::to_string(m));
    return 0.5 * m * (m - 1) * P.area * P.area * moment(P, m - 3).value;
}

/// Distance power integral T_m = A^2 M_m.
inline double distance_power_integral(const PolygonParams& P, int m) {
    return P.area * P.area * moment(P, m).value;
}

}  // namespace polymoments
