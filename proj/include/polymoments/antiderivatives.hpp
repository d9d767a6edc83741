#pragma once

// Closed-form primitives of
//   psi_{mu,a}(x)   = x^mu / sqrt(x^2 - a^2)
//   sigma_{mu,a}(x) = x^mu * arcsin(a / x)
//   tau_{mu,a}(x)   = x^mu * sqrt(x^2 - a^2)
// on [a, inf), for integer orders mu. Every branch formula of the chord length
// distribution, the distance density and the moments is assembled from these.
// The primitives are templates so callers that difference them across narrow
// intervals can evaluate in long double.

#include <cmath>
#include <concepts>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace polymoments {

/// Relative slack below x = a that is still accepted and clamped onto x = a.
inline constexpr double kRadicandClampTol = 1e-12;

namespace detail {

/// x^k for integer k (negative allowed), by repeated squaring.
template <std::floating_point Real>
Real ipow(Real x, int k) {
    if (k < 0) return Real(1) / ipow(x, -k);
    Real result = 1;
    Real base = x;
    while (k > 0) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

template <std::floating_point Real>
void require_abscissa(Real a, Real x) {
    if (!(x >= a * (1 - Real(kRadicandClampTol)))) {
        throw std::domain_error("abscissa x = " + std::to_string(static_cast<double>(x)) +
                                " lies below a = " + std::to_string(static_cast<double>(a)));
    }
}

/// sqrt(x^2 - a^2), with the radicand clamped to 0 for x within the rounding slack of a.
template <std::floating_point Real>
Real radical(Real a, Real x) {
    const Real rad = (x - a) * (x + a);
    return rad > 0 ? std::sqrt(rad) : Real(0);
}

/// arcsin(a / x) with the argument clamped to 1.
template <std::floating_point Real>
Real arcsin_ratio(Real a, Real x) {
    const Real t = a / x;
    return t >= 1 ? std::numbers::pi_v<Real> / 2 : std::asin(t);
}

/// ln((x + sqrt(x^2 - a^2)) / a), written through log1p for accuracy near x = a.
template <std::floating_point Real>
Real log_ratio(Real a, Real x, Real rad) {
    return std::log1p((x - a + rad) / a);
}

/// (mu - 1)!! / mu!! for even mu >= 2, accumulated as a product of ratios.
template <std::floating_point Real = double>
Real even_double_factorial_ratio(int mu) {
    Real ratio = 1;
    for (int i = 2; i <= mu; i += 2) ratio *= static_cast<Real>(i - 1) / i;
    return ratio;
}

}  // namespace detail

/// k!! with 0!! = (-1)!! = 1; k is limited to 30 so the result fits in 64 bits.
inline std::uint64_t double_factorial(int k) {
    if (k < -1) throw std::domain_error("double factorial of " + std::to_string(k));
    if (k > 30) throw std::overflow_error("double factorial argument above 30");
    std::uint64_t result = 1;
    for (int i = k; i > 1; i -= 2) result *= static_cast<std::uint64_t>(i);
    return result;
}

/// 1 + sum_{nu=1}^{floor((mu-1)/2)} (a/x)^{2nu} prod_{j=1}^{nu} (mu+1-2j)/(mu-2j).
template <std::floating_point Real>
Real gamma_factor(int mu, Real a, Real x) {
    if (mu < 1) throw std::domain_error("gamma_factor needs mu >= 1");
    if (!(a > 0)) throw std::domain_error("gamma_factor needs a > 0");
    detail::require_abscissa(a, x);
    const Real ratio2 = (a / x) * (a / x);
    Real sum = 1;
    Real power = 1;
    Real product = 1;
    const int top = (mu - 1) / 2;
    for (int nu = 1; nu <= top; ++nu) {
        power *= ratio2;
        product *= static_cast<Real>(mu + 1 - 2 * nu) / (mu - 2 * nu);
        sum += power * product;
    }
    return sum;
}

template <std::floating_point Real>
Real psi(int mu, Real a, Real x) {
    return detail::ipow(x, mu) / detail::radical(a, x);
}

template <std::floating_point Real>
Real sigma(int mu, Real a, Real x) {
    return detail::ipow(x, mu) * detail::arcsin_ratio(a, x);
}

template <std::floating_point Real>
Real tau(int mu, Real a, Real x) {
    return detail::ipow(x, mu) * detail::radical(a, x);
}

/// Antiderivative of x^mu / sqrt(x^2 - a^2), mu >= -1, a > 0, x >= a.
template <std::floating_point Real>
Real psi_tilde(int mu, Real a, Real x) {
    if (mu < -1) throw std::domain_error("psi_tilde needs mu >= -1, got " + std::to_string(mu));
    if (!(a > 0)) throw std::domain_error("psi_tilde needs a > 0");
    detail::require_abscissa(a, x);
    const Real rad = detail::radical(a, x);
    if (mu == -1) return -detail::arcsin_ratio(a, x) / a;
    if (mu == 0) return detail::log_ratio(a, x, rad);
    const Real head = detail::ipow(x, mu - 1) * rad * gamma_factor(mu, a, x) / mu;
    if (mu % 2 != 0) return head;
    return head + detail::even_double_factorial_ratio<Real>(mu) * detail::ipow(a, mu) *
                      detail::log_ratio(a, x, rad);
}

/// Antiderivative of x^mu * arcsin(a / x), mu >= 0, a >= 0, x >= a. Identically 0 for a = 0.
template <std::floating_point Real>
Real sigma_tilde(int mu, Real a, Real x) {
    if (mu < 0) throw std::domain_error("sigma_tilde needs mu >= 0, got " + std::to_string(mu));
    if (a < 0) throw std::domain_error("sigma_tilde needs a >= 0");
    if (a == 0) return 0;
    detail::require_abscissa(a, x);
    return (detail::ipow(x, mu + 1) * detail::arcsin_ratio(a, x) + a * psi_tilde(mu, a, x)) /
           (mu + 1);
}

/// Antiderivative of x^mu * sqrt(x^2 - a^2), mu >= -1, a >= 0, x >= a.
template <std::floating_point Real>
Real tau_tilde(int mu, Real a, Real x) {
    if (mu < -1) throw std::domain_error("tau_tilde needs mu >= -1, got " + std::to_string(mu));
    if (a < 0) throw std::domain_error("tau_tilde needs a >= 0");
    if (a == 0) return detail::ipow(x, mu + 2) / (mu + 2);
    detail::require_abscissa(a, x);
    return (detail::ipow(x, mu + 1) * detail::radical(a, x) - a * a * psi_tilde(mu, a, x)) /
           (mu + 2);
}

}  // namespace polymoments
