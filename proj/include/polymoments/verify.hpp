#pragma once

// Property and oracle suites behind `polymoments verify`. Each check records
// the measured discrepancy next to its pinned tolerance.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "polymoments/antiderivatives.hpp"
#include "polymoments/chord_cdf.hpp"
#include "polymoments/distance_pdf.hpp"
#include "polymoments/geometry.hpp"
#include "polymoments/moments.hpp"
#include "polymoments/monte_carlo.hpp"
#include "polymoments/output_record.hpp"
#include "polymoments/quadrature.hpp"

namespace polymoments {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double tolerance = 0.0;
};

struct VerifyConfig {
    int n_lo = 3;
    int n_hi = 12;
    int m_lo = -1;
    int m_hi = 4;
    double r = 1.0;
    std::uint64_t mc_samples = 200'000;  // 0 skips the Monte Carlo suite
    std::uint64_t seed = 42;
    double budget_seconds = 120.0;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    double elapsed_seconds = 0.0;

    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }
    std::size_t failures() const {
        return static_cast<std::size_t>(
            std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
    }
};

/// Tolerances pinned by the verification contract.
namespace tol {
inline constexpr double geometry_rel = 1e-12;
inline constexpr double derivative_rel = 1e-6;
inline constexpr double derivative_step = 1e-5;
inline constexpr double monotone_slack = 1e-14;
inline constexpr double jump = 1e-8;
inline constexpr double jump_eps = 1e-10;  // times d
inline constexpr double boundary = 1e-8;
inline constexpr double mean_identity_rel = 1e-9;
inline constexpr double pdf_floor = -1e-12;
inline constexpr double normalization = 1e-9;
inline constexpr double origin_law_rel = 1e-4;
inline constexpr double phi_rel = 1e-8;
inline constexpr double m0 = 1e-10;
inline constexpr double short_form_rel = 1e-12;
inline constexpr double triple_oracle_rel = 1e-8;
inline constexpr double mc_sigmas = 4.0;
inline constexpr double chi_square_alpha = 1e-3;
inline constexpr int chi_square_bins = 50;
inline constexpr int grid_points = 10'000;
}  // namespace tol

namespace detail {

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

inline std::string polygon_tag(const PolygonParams& P) { return "n=" + std::to_string(P.n); }

inline void record(std::vector<CheckResult>& out, std::string suite, std::string name,
                   double measured, double tolerance) {
    out.push_back({std::move(suite), std::move(name), measured <= tolerance, measured, tolerance});
}

/// Breakpoints where the branch entered from the right has a square-root onset:
/// ell_K for even n and lambda for odd n. F is continuous there but its slope is
/// unbounded, so a fixed-epsilon jump scales like sqrt(epsilon).
inline bool sqrt_onset(const PolygonParams& P, double b) {
    return P.even() ? b == P.ell[P.bigK] : b == P.lambda;
}

}  // namespace detail

inline void check_geometry(const PolygonParams& P, std::vector<CheckResult>& out) {
    const std::string t = detail::polygon_tag(P);
    detail::record(out, "geometry", t + " area vs shoelace",
                   detail::rel_diff(P.area, shoelace_area(P.vertices)), tol::geometry_rel);
    detail::record(out, "geometry", t + " diameter vs vertex distance",
                   detail::rel_diff(P.d, max_vertex_distance(P.vertices)), tol::geometry_rel);
    detail::record(out, "geometry", t + " perimeter vs edge length",
                   detail::rel_diff(P.perimeter, P.n * norm(vertex(P, 1) - vertex(P, 0))),
                   tol::geometry_rel);
}

/// Centered differences of psi~, sigma~, tau~ against their integrands,
/// mu = -1..8, random a in (0, 2], x in (1.01 a, a + 5].
inline void check_antiderivatives(std::uint64_t seed, std::vector<CheckResult>& out,
                                  int draws_per_order = 20) {
    Rng rng(shard_seed(seed, 0xA471));
    for (int mu = -1; mu <= 8; ++mu) {
        double worst_psi = 0.0;
        double worst_sigma = 0.0;
        double worst_tau = 0.0;
        for (int i = 0; i < draws_per_order; ++i) {
            const double a = 2.0 * (1.0 - rng.uniform());
            const double x = 1.01 * a + (a + 5.0 - 1.01 * a) * (1.0 - rng.uniform());
            const double h = tol::derivative_step * x;
            auto fd = [&](auto&& F) { return (F(x + h) - F(x - h)) / (2.0 * h); };
            worst_psi = std::max(worst_psi, detail::rel_diff(fd([&](double s) { return psi_tilde(mu, a, s); }),
                                                             psi(mu, a, x)));
            worst_tau = std::max(worst_tau, detail::rel_diff(fd([&](double s) { return tau_tilde(mu, a, s); }),
                                                             tau(mu, a, x)));
            if (mu >= 0) {
                worst_sigma = std::max(
                    worst_sigma, detail::rel_diff(fd([&](double s) { return sigma_tilde(mu, a, s); }),
                                                  sigma(mu, a, x)));
            }
        }
        const std::string m = "mu=" + std::to_string(mu);
        detail::record(out, "antiderivatives", "psi~ derivative " + m, worst_psi, tol::derivative_rel);
        detail::record(out, "antiderivatives", "tau~ derivative " + m, worst_tau, tol::derivative_rel);
        if (mu >= 0)
            detail::record(out, "antiderivatives", "sigma~ derivative " + m, worst_sigma,
                           tol::derivative_rel);
    }
}

inline void check_chord_cdf(const PolygonParams& P, std::vector<CheckResult>& out) {
    const std::string t = detail::polygon_tag(P);

    double worst_drop = 0.0;
    double prev = chord_cdf(P, 0.0);
    for (int i = 1; i <= tol::grid_points; ++i) {
        const double f = chord_cdf(P, P.d * i / tol::grid_points);
        worst_drop = std::max(worst_drop, prev - f);
        prev = f;
    }
    detail::record(out, "chord_cdf", t + " monotone on grid", worst_drop, tol::monotone_slack);

    // One-sided branch limits must agree exactly at every breakpoint; the
    // literal epsilon test applies except at square-root onsets, where the
    // sqrt(epsilon) scaling is checked instead.
    const double eps = tol::jump_eps * P.d;
    for (double b : piecewise_domain(P).interior_breakpoints()) {
        const auto left = select_branch(P, std::nextafter(b, 0.0));
        const auto right = select_branch(P, b);
        const double limit_gap = std::abs(branch_h(P, *left, b) - branch_h(P, *right, b)) / P.ell[1];
        const std::string where = t + " x=" + format_double(b);
        detail::record(out, "chord_cdf", "one-sided limits agree at " + where, limit_gap, tol::jump);

        const double jump = std::abs(chord_cdf(P, b + eps) - chord_cdf(P, b - eps));
        if (!detail::sqrt_onset(P, b) || jump < tol::jump) {
            detail::record(out, "chord_cdf", "epsilon jump at " + where, jump, tol::jump);
        } else {
            const double finer = std::abs(chord_cdf(P, b + eps / 100.0) - chord_cdf(P, b - eps / 100.0));
            // sqrt scaling gives a ratio of 0.1; a genuine discontinuity gives 1.
            detail::record(out, "chord_cdf", "sqrt-onset jump scaling at " + where,
                           std::abs(finer / jump - 0.1), 0.05);
        }
    }

    detail::record(out, "chord_cdf", t + " F(0) = 0", std::abs(chord_cdf(P, 0.0)), 0.0);
    detail::record(out, "chord_cdf", t + " F(d-) -> 1",
                   1.0 - chord_cdf(P, P.d * (1.0 - tol::jump_eps)), tol::boundary);
    detail::record(out, "chord_cdf", t + " F(d) = 1", std::abs(chord_cdf(P, P.d) - 1.0), 0.0);
    detail::record(out, "chord_cdf", t + " integral of 1 - F = pi A / L",
                   detail::rel_diff(mean_chord_integral(P).value, mean_chord(P)), tol::mean_identity_rel);
}

inline void check_distance_pdf(const PolygonParams& P, std::vector<CheckResult>& out) {
    const std::string t = detail::polygon_tag(P);
    const DistanceDensity g(P);

    double lowest = 0.0;
    for (int i = 0; i <= tol::grid_points; ++i) lowest = std::min(lowest, g.raw(P.d * i / tol::grid_points));
    detail::record(out, "distance_pdf", t + " g >= 0 on grid", -lowest, -tol::pdf_floor);

    QuadConfig cfg;
    cfg.mandatory_splits = piecewise_domain(P).interior_breakpoints();
    const double mass = integrate([&](double x) { return g(x); }, 0.0, P.d, cfg).value;
    detail::record(out, "distance_pdf", t + " integral of g = 1", std::abs(mass - 1.0), tol::normalization);

    const double x0 = 1e-6 * P.d;
    detail::record(out, "distance_pdf", t + " g(x)/x -> 2 pi / A",
                   detail::rel_diff(g(x0) / x0, 2.0 * std::numbers::pi / P.area), tol::origin_law_rel);

    double worst = 0.0;
    for (int i = 1; i <= 10; ++i) {
        const double x = P.d * (i - 0.5) / 10.0;
        QuadConfig sub;
        for (double b : cfg.mandatory_splits)
            if (b < x) sub.mandatory_splits.push_back(b);
        const double natural =
            integrate([&](double s) { return 1.0 - chord_cdf(P, s); }, 0.0, x, sub).value;
        worst = std::max(worst, detail::rel_diff(g.phi_flat(x), P.ell[1] * natural));
    }
    detail::record(out, "distance_pdf", t + " phi-flat vs quadrature of F", worst, tol::phi_rel);
}

inline void check_moments(const PolygonParams& P, int m_lo, int m_hi, std::vector<CheckResult>& out) {
    const std::string t = detail::polygon_tag(P);
    detail::record(out, "moments", t + " M_0 = 1", std::abs(moment(P, 0).value - 1.0), tol::m0);
    detail::record(out, "moments", t + " M_2 short form",
                   detail::rel_diff(moment(P, 2).value, moment2_closed(P)), tol::short_form_rel);
    detail::record(out, "moments", t + " M_4 short form",
                   detail::rel_diff(moment(P, 4).value, moment4_closed(P)), tol::short_form_rel);
    detail::record(out, "moments", t + " M_2 = 2 I_p / A",
                   detail::rel_diff(moment2_closed(P), moment2_from_polar(P)), tol::short_form_rel);
    for (int m = m_lo; m <= m_hi; ++m) {
        const double a = moment(P, m).value;
        const double b = moment_by_pdf_quadrature(P, m).value;
        const double c = moment_by_cdf_quadrature(P, m).value;
        const double worst = std::max({detail::rel_diff(a, b), detail::rel_diff(a, c), detail::rel_diff(b, c)});
        detail::record(out, "moments", t + " m=" + std::to_string(m) + " triple oracle", worst,
                       tol::triple_oracle_rel);
    }
}

/// Expected probabilities of `bins` equal-width bins of [0, d] under g.
inline std::vector<double> distance_bin_probabilities(const PolygonParams& P, int bins,
                                                      std::vector<double>& edges) {
    const DistanceDensity g(P);
    const auto breaks = piecewise_domain(P).interior_breakpoints();
    edges.resize(bins + 1);
    for (int i = 0; i <= bins; ++i) edges[i] = P.d * i / bins;
    edges.back() = P.d;
    std::vector<double> probs(bins);
    for (int i = 0; i < bins; ++i) {
        QuadConfig cfg;
        for (double b : breaks)
            if (b > edges[i] && b < edges[i + 1]) cfg.mandatory_splits.push_back(b);
        probs[i] = integrate([&](double x) { return g(x); }, edges[i], edges[i + 1], cfg).value;
    }
    return probs;
}

inline void check_monte_carlo(const PolygonParams& P, std::uint64_t samples, std::uint64_t seed,
                              std::vector<CheckResult>& out) {
    const std::string t = detail::polygon_tag(P);
    McConfig cfg;
    cfg.samples = samples;
    cfg.seed = seed;

    const McSamples pairs = draw_samples(P, cfg);
    const McEstimate m1 = power_mean(pairs, 1);
    const double exact = moment(P, 1).value;
    detail::record(out, "monte_carlo", t + " point-pair M_1 (standard errors)",
                   std::abs(m1.estimate - exact) / m1.std_error, tol::mc_sigmas);

    std::vector<double> edges;
    const auto probs = distance_bin_probabilities(P, tol::chi_square_bins, edges);
    const ChiSquareResult chi = chi_square_test(pairs.values, edges, probs);
    // Recorded as (alpha - p); passes when p >= alpha.
    detail::record(out, "monte_carlo", t + " distance histogram chi-square (alpha - p)",
                   tol::chi_square_alpha - chi.p_value, 0.0);

    cfg.estimator = Estimator::iur_chord_length;
    const McSamples chords = draw_samples(P, cfg);
    const double ks = ks_distance(chords.values, [&](double x) { return chord_cdf(P, x); });
    detail::record(out, "monte_carlo", t + " chord KS distance / DKW bound", ks / dkw_bound(samples), 1.0);
    const double acceptance = static_cast<double>(chords.values.size()) / chords.proposals;
    detail::record(out, "monte_carlo", t + " chord acceptance rate (0.5 - rate)", 0.5 - acceptance, 0.0);
}

inline VerifyReport run_verify(const VerifyConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    check_antiderivatives(cfg.seed, report.checks);
    for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
        const PolygonParams P = derive_params({n, cfg.r});
        check_geometry(P, report.checks);
        check_chord_cdf(P, report.checks);
        check_distance_pdf(P, report.checks);
        check_moments(P, cfg.m_lo, cfg.m_hi, report.checks);
        if (cfg.mc_samples > 0) check_monte_carlo(P, cfg.mc_samples, cfg.seed, report.checks);
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    detail::record(report.checks, "budget", "elapsed seconds", report.elapsed_seconds, cfg.budget_seconds);
    return report;
}

}  // namespace polymoments
