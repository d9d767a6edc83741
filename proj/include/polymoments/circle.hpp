#pragma once

// The disk of radius r, the n -> infinity limit of P(n, r).

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace polymoments {

namespace detail {

/// Gamma(k / 2) for integer k >= 1, by the recurrence Gamma(z + 1) = z Gamma(z).
inline double gamma_of_half(int k) {
    if (k < 1) throw std::domain_error("gamma_of_half needs k >= 1");
    double g = (k % 2 == 0) ? 1.0 : std::sqrt(std::numbers::pi);
    for (int j = (k % 2 == 0) ? 2 : 1; j + 2 <= k; j += 2) g *= j / 2.0;
    return g;
}

}  // namespace detail

/// M_m of the disk: 2^(m+4) r^m Gamma((m+3)/2) / (sqrt(pi) (m+2) (m+4) Gamma(m/2 + 2)).
inline double circle_moment(int m, double r) {
    if (m < -1) throw std::domain_error("circle moment order must be >= -1, got " + std::to_string(m));
    if (m > 64) throw std::range_error("circle moment order above 64");
    if (!(r > 0.0)) throw std::domain_error("radius must be positive");
    const double ratio = detail::gamma_of_half(m + 3) / detail::gamma_of_half(m + 4);
    return std::ldexp(std::pow(r, m), m + 4) * ratio /
           (std::sqrt(std::numbers::pi) * (m + 2) * (m + 4));
}

inline double circle_variance(double r) {
    const double m1 = circle_moment(1, r);
    return circle_moment(2, r) - m1 * m1;
}

/// Chord length distribution of the disk, 1 - sqrt(1 - (x / 2r)^2).
inline double circle_chord_cdf(double x, double r) {
    if (x <= 0.0) return 0.0;
    if (x >= 2.0 * r) return 1.0;
    const double t = x / (2.0 * r);
    return 1.0 - std::sqrt((1.0 - t) * (1.0 + t));
}

/// Point distance density of the disk, (4x / (pi r^2)) [arccos t - t sqrt(1 - t^2)], t = x / 2r.
inline double circle_distance_pdf(double x, double r) {
    if (x < 0.0 || x >= 2.0 * r) return 0.0;
    const double t = x / (2.0 * r);
    return 4.0 * x / (std::numbers::pi * r * r) *
           (std::acos(t) - t * std::sqrt((1.0 - t) * (1.0 + t)));
}

}  // namespace polymoments
