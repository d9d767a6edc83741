#pragma once

// Density g of the distance between two independent uniform points in P(n, r):
//
//   g(x) = (2x / A) [pi - L phi(x) / (A ell_1)],   0 <= x < d,
//
// where phi(x) = ell_1 * integral_0^x (1 - F(s)) ds is accumulated branch by branch.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "polymoments/branch_integrals.hpp"
#include "polymoments/chord_cdf.hpp"
#include "polymoments/geometry.hpp"
#include "polymoments/summation.hpp"

namespace polymoments {

/// H-flat antiderivative of branch family `tag` on branch k: a primitive of H_k.
inline double h_flat(const PolygonParams& P, BranchTag tag, int k, double x) {
    return weighted_branch_primitive(P, tag, k, 0, x);
}

/// J-flat: integral_{ell_k}^{x} H_k(s) ds for ell_k <= x <= ell_{k+1}.
inline double j_flat(const PolygonParams& P, int k, double x) {
    return weighted_branch_integral(P, k, 0, x);
}

/// Prefix sums partial[k] = sum_{nu < k} J-flat_nu(ell_{nu+1}), k = 0..K+1.
struct PhiPrefix {
    std::vector<double> partial;

    static PhiPrefix build(const PolygonParams& P) {
        PhiPrefix out;
        out.partial.assign(P.bigK + 2, 0.0);
        CompensatedSum acc;
        for (int k = 0; k <= P.bigK; ++k) {
            acc.add(j_flat(P, k, P.ell[k + 1]));
            out.partial[k + 1] = acc.value();
        }
        return out;
    }
};

/// Distance density with the branch prefix sums cached; O(1) per evaluation.
class DistanceDensity {
public:
    explicit DistanceDensity(PolygonParams params)
        : params_(std::move(params)), prefix_(PhiPrefix::build(params_)) {}

    const PolygonParams& params() const { return params_; }
    const PhiPrefix& prefix() const { return prefix_; }

    /// ell_1 * integral_0^x (1 - F); constant pi A ell_1 / L for x >= d.
    double phi_flat(double x) const {
        if (x <= 0.0) return 0.0;
        if (x >= params_.d) return prefix_.partial.back();
        const auto b = select_branch(params_, x);
        return prefix_.partial[b->k] + j_flat(params_, b->k, x);
    }

    /// g without flushing the rounding-level negatives that occur next to d.
    double raw(double x) const {
        if (!(x >= 0.0) || x >= params_.d) return 0.0;
        const PolygonParams& P = params_;
        return 2.0 * x / P.area *
               (std::numbers::pi - P.perimeter * phi_flat(x) / (P.area * P.ell[1]));
    }

    double operator()(double x) const { return std::max(0.0, raw(x)); }

private:
    PolygonParams params_;
    PhiPrefix prefix_;
};

/// One-shot evaluation of g; prefer DistanceDensity for many abscissae.
inline double distance_pdf(const PolygonParams& P, double x) {
    if (!(x >= 0.0) || x >= P.d) return 0.0;
    return DistanceDensity(P)(x);
}

}  // namespace polymoments
