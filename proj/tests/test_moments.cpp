#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "golden_values.hpp"
#include "polymoments/moments.hpp"

using namespace polymoments;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("mean distance table, n = 3..30", "[moments]") {
    for (const auto& [n, value] : golden::mean_distance) {
        INFO("n=" << n);
        CHECK_THAT(moment(derive_params({n, 1.0}), 1).value, WithinAbs(value, 1e-12));
    }
}

TEST_CASE("pentagon moments, m = -1..10", "[moments]") {
    const auto P = derive_params({5, 1.0});
    for (const auto& [m, value] : golden::pentagon_moments) {
        INFO("m=" << m);
        CHECK_THAT(moment(P, m).value, WithinRel(value, 1e-11));
    }
}

TEST_CASE("exact closed forms", "[moments]") {
    for (const auto& c : golden::closed_forms) {
        INFO("n=" << c.n << " m=" << c.m << " form " << c.form);
        CHECK_THAT(moment(derive_params({c.n, 1.0}), c.m).value, WithinRel(c.value, 1e-11));
    }
    const auto tri = derive_params({3, 1.0});
    CHECK_THAT(moment(tri, 1).value / tri.ell[1], WithinRel(golden::triangle_mean_over_side, 1e-11));
    const auto sq = derive_params({4, 1.0});
    CHECK_THAT(moment(sq, 1).value / sq.ell[1], WithinRel(golden::square_mean_over_side, 1e-11));
}

TEST_CASE("moments scale as r^m", "[moments]") {
    for (int m = -1; m <= 6; ++m) {
        const double unit = moment(derive_params({7, 1.0}), m).value;
        CHECK_THAT(moment(derive_params({7, 2.5}), m).value, WithinRel(unit * std::pow(2.5, m), 1e-13));
    }
}

TEST_CASE("short forms for M_2 and M_4", "[moments]") {
    CHECK_THAT(moment2_closed(derive_params({3, 1.0})), WithinRel(0.5, 1e-15));
    CHECK_THAT(moment2_closed(derive_params({4, 1.0})), WithinRel(2.0 / 3.0, 1e-15));
    CHECK_THAT(moment2_closed(derive_params({1'000'000, 1.0})), WithinRel(1.0, 1e-10));
    CHECK_THAT(moment4_closed(derive_params({4, 1.0})), WithinRel(34.0 / 45.0, 1e-15));
    CHECK_THAT(moment4_closed(derive_params({5, 1.0})), WithinRel(47.0 / 72.0 + 11.0 * std::sqrt(5.0) / 72.0, 1e-15));
    CHECK_THAT(moment4_closed(derive_params({1'000'000, 1.0})), WithinRel(5.0 / 3.0, 1e-10));
    for (int n = 3; n <= 100; ++n) {
        const auto P = derive_params({n, 1.0});
        INFO("n=" << n);
        CHECK_THAT(moment(P, 2).value, WithinRel(moment2_closed(P), 1e-12));
        CHECK_THAT(moment(P, 4).value, WithinRel(moment4_closed(P), 1e-12));
    }
}

TEST_CASE("normalization M_0 = 1", "[moments]") {
    for (int n = 3; n <= 30; ++n) CHECK_THAT(moment(derive_params({n, 1.0}), 0).value, WithinAbs(1.0, 1e-10));
}

TEST_CASE("analytic, density and CDF routes agree", "[moments]") {
    for (int n = 3; n <= 12; ++n) {
        const auto P = derive_params({n, 1.0});
        for (int m = -1; m <= 4; ++m) {
            const double a = moment(P, m).value;
            const auto b = moment_by_pdf_quadrature(P, m);
            const auto c = moment_by_cdf_quadrature(P, m);
            INFO("n=" << n << " m=" << m);
            CHECK_THAT(b.value, WithinRel(a, 1e-8));
            CHECK_THAT(c.value, WithinRel(a, 1e-8));
            CHECK_THAT(b.value, WithinRel(c.value, 1e-8));
            CHECK(b.method == MomentMethod::quadrature_pdf);
            CHECK(c.err_estimate.has_value());
        }
    }
}

TEST_CASE("mean distance increases toward the disc", "[moments]") {
    double prev = 0.0;
    for (int n = 3; n <= 30; ++n) {
        const double m1 = moment(derive_params({n, 1.0}), 1).value;
        CHECK(m1 > prev);
        CHECK(m1 < 128.0 / (45.0 * std::numbers::pi));
        prev = m1;
    }
}

TEST_CASE("variance", "[moments]") {
    const auto pent = derive_params({5, 1.0});
    const double m1 = golden::pentagon_moments[2].value;
    const double m2 = golden::pentagon_moments[3].value;
    CHECK_THAT(variance(pent), WithinRel(m2 - m1 * m1, 1e-12));
    const auto sq = derive_params({4, 1.0});
    const double sq_m1 = golden::mean_distance[1].value;
    CHECK_THAT(variance(sq), WithinRel(2.0 / 3.0 - sq_m1 * sq_m1, 1e-12));
    // Cancellation in the k-sum limits very large n to about 1e-5.
    CHECK_THAT(variance(derive_params({1'000'000, 1.0})), WithinAbs(golden::disc_variance, 1e-5));
    CHECK_THAT(variance(derive_params({10'000, 1.0})), WithinAbs(golden::disc_variance, 1e-7));
}

TEST_CASE("polar moment", "[moments]") {
    CHECK_THAT(moment2_from_polar(derive_params({4, 1.0})), WithinRel(2.0 / 3.0, 1e-15));
    CHECK_THAT(moment2_from_polar(derive_params({3, 1.0})), WithinRel(0.5, 1e-15));
    CHECK_THAT(moment2_from_polar(derive_params({6, 1.0})), WithinRel(5.0 / 6.0, 1e-15));
}

TEST_CASE("chord and distance power integrals", "[moments]") {
    const auto hex = derive_params({6, 1.0});
    CHECK_THAT(chord_power_integral(hex, 2), WithinAbs(golden::hexagon_s2, 5e-6));
    CHECK_THAT(chord_power_integral(hex, 2), WithinRel(hex.area * hex.area * moment(hex, -1).value, 1e-15));

    const auto tri = derive_params({3, 1.0});
    const double a = 3.0 * std::sqrt(3.0) / 4.0;
    CHECK_THAT(chord_power_integral(tri, 3), WithinRel(3.0 * a * a, 1e-12));

    const auto sq = derive_params({4, 1.0});
    CHECK_THAT(chord_power_integral(sq, 5), WithinRel(80.0 / 3.0, 1e-12));

    for (int m = -1; m <= 6; ++m) {
        const double t = distance_power_integral(hex, m);
        CHECK_THAT(t, WithinRel(2.0 * chord_power_integral(hex, m + 3) / ((m + 2) * (m + 3)), 1e-13));
        CHECK_THAT(t / (hex.area * hex.area), WithinRel(moment(hex, m).value, 1e-15));
    }
    CHECK_THROWS_AS(chord_power_integral(hex, 1), std::domain_error);
}

TEST_CASE("H~ differentiates to x^(m+2) H_k", "[moments]") {
    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    for (int n = 5; n <= 12; ++n) {
        const auto P = derive_params({n, 1.0});
        for (int m : {-1, 0, 1, 2, 4}) {
            for (int k = 1; k <= P.bigK; ++k) {
                if (P.even() && k == P.bigK) continue;
                const double hi = P.odd() && k == P.bigK ? P.lambda : P.ell[k + 1];
                const double x = P.ell[k] + (hi - P.ell[k]) * u(gen);
                const double h = 1e-6 * x;
                const double fd = (h_tilde(P, BranchTag::H1, m, k, x + h) - h_tilde(P, BranchTag::H1, m, k, x - h)) / (2 * h);
                INFO("n=" << n << " m=" << m << " k=" << k);
                CHECK_THAT(fd, WithinRel(std::pow(x, m + 2) * branch_h(P, {BranchTag::H1, k}, x), 1e-7));
            }
        }
    }
    CHECK(h_tilde(derive_params({6, 1.0}), BranchTag::H0, 1, 0, 0.0) == 0.0);
}

TEST_CASE("moment order limits", "[moments]") {
    const auto P = derive_params({5, 1.0});
    CHECK_THROWS_AS(moment(P, -2), std::domain_error);
    CHECK_THROWS_AS(moment(P, kMaxMomentOrder + 1), std::range_error);
    CHECK(std::isfinite(moment(P, kMaxMomentOrder).value));
    CHECK(moment(P, 3).method == MomentMethod::analytic);
    CHECK(std::string(to_string(MomentMethod::monte_carlo)) == "monte_carlo");
}
