#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature with mandatory split points.
// Used as an independent oracle for the closed-form results: every integrand
// here is only piecewise smooth, so the caller passes the abscissae where the
// analytic branch changes and no panel ever straddles one of them.

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <tuple>
#include <stdexcept>
#include <string>
#include <vector>

#include "polymoments/summation.hpp"

namespace polymoments {

struct QuadConfig {
    double abs_tol = 1e-14;
    double rel_tol = 1e-12;
    int max_depth = 60;
    std::vector<double> mandatory_splits;
};

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    int evaluations = 0;
};

/// Raised when a panel would have to be bisected beyond QuadConfig::max_depth.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, QuadResult best)
        : std::runtime_error(what), best_(best) {}
    const QuadResult& best_estimate() const { return best_; }

private:
    QuadResult best_;
};

namespace detail {

struct Panel {
    double a;
    double b;
    double value;
    double error;
    int depth;
    bool operator<(const Panel& o) const { return error < o.error; }
};

// Kronrod abscissae (positive half, descending) and weights; the Gauss weights
// belong to the odd-indexed Kronrod nodes and the centre.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
Panel gauss_kronrod_15(F& f, double a, double b, int depth) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(centre);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    double abs_sum = std::abs(fc) * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(centre - dx);
        const double f2 = f(centre + dx);
        kronrod += kWgk[j] * (f1 + f2);
        abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
    }
    const double value = kronrod * half;
    double error = std::abs((kronrod - gauss) * half);
    // Round-off floor for the panel.
    const double floor = 50.0 * std::numeric_limits<double>::epsilon() * abs_sum * std::abs(half);
    error = std::max(error, floor);
    return {a, b, value, error, depth};
}

}  // namespace detail

/// Integrates f over [a, b]. The interval is first cut at every mandatory split
/// inside (a, b); panels are then bisected, worst error first, until the total
/// error estimate meets max(abs_tol, rel_tol * |value|).
template <class F>
QuadResult integrate(F&& f, double a, double b, const QuadConfig& cfg = {}) {
    if (!(a <= b)) throw std::domain_error("integrate needs a <= b");
    if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0))
        throw std::domain_error("quadrature tolerances must be positive");
    QuadResult out;
    if (a == b) return out;

    std::vector<double> cuts{a};
    std::vector<double> splits = cfg.mandatory_splits;
    std::sort(splits.begin(), splits.end());
    for (double s : splits)
        if (s > a && s < b && s > cuts.back()) cuts.push_back(s);
    cuts.push_back(b);

    int evaluations = 0;
    auto counted = [&](double x) {
        ++evaluations;
        return static_cast<double>(f(x));
    };

    std::priority_queue<detail::Panel> heap;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        heap.push(detail::gauss_kronrod_15(counted, cuts[i], cuts[i + 1], 0));

    auto totals = [&heap]() {
        auto copy = heap;
        CompensatedSum value;
        double error = 0.0;
        while (!copy.empty()) {
            value.add(copy.top().value);
            error += copy.top().error;
            copy.pop();
        }
        return std::pair{value.value(), error};
    };

    // Running sums are refreshed from scratch periodically to avoid drift.
    auto [value, error] = totals();
    int since_refresh = 0;
    constexpr int kMaxPanels = 200000;
    while (error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value))) {
        detail::Panel worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (worst.depth >= cfg.max_depth || mid <= worst.a || mid >= worst.b ||
            static_cast<int>(heap.size()) >= kMaxPanels) {
            out.value = value;
            out.err_estimate = error;
            out.evaluations = evaluations;
            throw QuadratureError("adaptive quadrature exceeded max_depth on [" +
                                      std::to_string(worst.a) + ", " + std::to_string(worst.b) + "]",
                                  out);
        }
        heap.pop();
        const detail::Panel left = detail::gauss_kronrod_15(counted, worst.a, mid, worst.depth + 1);
        const detail::Panel right = detail::gauss_kronrod_15(counted, mid, worst.b, worst.depth + 1);
        heap.push(left);
        heap.push(right);
        if (++since_refresh == 64) {
            std::tie(value, error) = totals();
            since_refresh = 0;
        } else {
            value += left.value + right.value - worst.value;
            error += left.error + right.error - worst.error;
        }
    }
    std::tie(value, error) = totals();
    out.value = value;
    out.err_estimate = error;
    out.evaluations = evaluations;
    return out;
}

}  // namespace polymoments
