#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "polymoments/distance_pdf.hpp"
#include "polymoments/quadrature.hpp"

using namespace polymoments;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

QuadConfig split_at_breakpoints(const PolygonParams& P) {
    QuadConfig cfg;
    cfg.mandatory_splits = piecewise_domain(P).interior_breakpoints();
    return cfg;
}

}  // namespace

TEST_CASE("H-flat of the first branch", "[distance_pdf]") {
    const auto P = derive_params({6, 1.0});
    CHECK(h_flat(P, BranchTag::H0, 0, 0.0) == 0.0);
    const double h = 1e-7;
    CHECK_THAT((h_flat(P, BranchTag::H0, 0, h) - h_flat(P, BranchTag::H0, 0, 0.0)) / h,
               WithinRel(P.ell[1], 1e-6));
}

TEST_CASE("H-flat differentiates to H_k on H1 branches", "[distance_pdf]") {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    for (int n = 5; n <= 12; ++n) {
        const auto P = derive_params({n, 1.0});
        for (int k = 1; k <= P.bigK; ++k) {
            const bool h1 = P.odd() || k < P.bigK;
            if (!h1) continue;
            const double hi = P.odd() && k == P.bigK ? P.lambda : P.ell[k + 1];
            for (int i = 0; i < 20; ++i) {
                const double x = P.ell[k] + (hi - P.ell[k]) * u(gen);
                const double step = 1e-6 * x;
                const double fd = (h_flat(P, BranchTag::H1, k, x + step) -
                                   h_flat(P, BranchTag::H1, k, x - step)) / (2.0 * step);
                INFO("n=" << n << " k=" << k << " x=" << x);
                CHECK_THAT(fd, WithinRel(branch_h(P, {BranchTag::H1, k}, x), 1e-7));
            }
        }
    }
}

TEST_CASE("J-flat against quadrature of H_k", "[distance_pdf]") {
    for (int n = 3; n <= 12; ++n) {
        const auto P = derive_params({n, 1.0});
        CHECK(j_flat(P, 0, 0.0) == 0.0);
        for (int k = 0; k <= P.bigK; ++k) {
            QuadConfig cfg;
            if (P.odd() && k == P.bigK) cfg.mandatory_splits = {P.lambda};
            const auto q = integrate([&](double x) { return survival_scaled(P, x); }, P.ell[k],
                                     P.ell[k + 1], cfg);
            INFO("n=" << n << " k=" << k);
            CHECK_THAT(j_flat(P, k, P.ell[k + 1]), WithinRel(q.value, 1e-9));
        }
    }
    // Frozen oracle values.
    const auto tri = derive_params({3, 1.0});
    CHECK_THAT(j_flat(tri, 0, tri.d), WithinRel(std::sqrt(3.0) * std::numbers::pi / 4.0, 1e-14));
    const auto hex = derive_params({6, 1.0});
    CHECK_THAT(j_flat(hex, 2, hex.d), WithinRel(0.0172492052927723132425978220527, 1e-12));
    CHECK_THROWS_AS(j_flat(hex, 2, 1.0), std::domain_error);
    CHECK_THROWS_AS(j_flat(hex, 3, 1.9), std::out_of_range);
}

TEST_CASE("prefix sums", "[distance_pdf]") {
    for (int n = 3; n <= 30; ++n) {
        const auto P = derive_params({n, 1.0});
        const auto pre = PhiPrefix::build(P);
        REQUIRE(pre.partial.size() == static_cast<std::size_t>(P.bigK + 2));
        CHECK(pre.partial[0] == 0.0);
        for (std::size_t k = 1; k < pre.partial.size(); ++k) CHECK(pre.partial[k] >= pre.partial[k - 1]);
        // phi-flat(d) = ell_1 * E[chord] = ell_1 pi A / L.
        CHECK_THAT(pre.partial.back(), WithinRel(P.ell[1] * std::numbers::pi * P.area / P.perimeter, 1e-12));
    }
}

TEST_CASE("density support, sign and normalization", "[distance_pdf]") {
    for (int n = 3; n <= 30; ++n) {
        const auto P = derive_params({n, 1.0});
        const DistanceDensity g(P);
        CHECK(g(-0.5) == 0.0);
        CHECK(g(P.d) == 0.0);
        CHECK(distance_pdf(P, 2.0 * P.d) == 0.0);
        double lowest = 0.0;
        for (int i = 0; i <= 10'000; ++i) lowest = std::min(lowest, g.raw(P.d * i / 10'000));
        INFO("n=" << n);
        CHECK(lowest > -1e-12);
        const auto mass = integrate([&](double x) { return g(x); }, 0.0, P.d, split_at_breakpoints(P));
        CHECK_THAT(mass.value, WithinAbs(1.0, 1e-9));
    }
}

TEST_CASE("pentagon mean distance by quadrature of x g(x)", "[distance_pdf]") {
    const auto P = derive_params({5, 1.0});
    const DistanceDensity g(P);
    const auto q = integrate([&](double x) { return x * g(x); }, 0.0, P.d, split_at_breakpoints(P));
    CHECK_THAT(q.value, WithinAbs(0.79369819503375338176, 1e-9));
}

TEST_CASE("density near the origin", "[distance_pdf]") {
    for (int n = 3; n <= 30; ++n) {
        const auto P = derive_params({n, 1.0});
        const double x = 1e-6 * P.d;
        CHECK_THAT(distance_pdf(P, x) / x, WithinRel(2.0 * std::numbers::pi / P.area, 1e-4));
    }
}

TEST_CASE("phi-flat equals ell_1 times the integral of 1 - F", "[distance_pdf]") {
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n : {3, 4, 5, 6, 7, 8, 11, 12}) {
        const auto P = derive_params({n, 1.0});
        const DistanceDensity g(P);
        const auto breaks = piecewise_domain(P).interior_breakpoints();
        for (int i = 0; i < 13; ++i) {  // 104 abscissae over the eight polygons
            const double x = P.d * u(gen);
            QuadConfig cfg;
            for (double b : breaks)
                if (b < x) cfg.mandatory_splits.push_back(b);
            const double natural = integrate([&](double s) { return 1.0 - chord_cdf(P, s); }, 0.0, x, cfg).value;
            INFO("n=" << n << " x=" << x);
            CHECK_THAT(g.phi_flat(x), WithinRel(P.ell[1] * natural, 1e-8));
        }
    }
}

TEST_CASE("phi-flat is continuous at lambda for odd n", "[distance_pdf]") {
    for (int n = 3; n <= 29; n += 2) {
        const auto P = derive_params({n, 1.0});
        const DistanceDensity g(P);
        const double below = g.phi_flat(std::nextafter(P.lambda, 0.0));
        CHECK_THAT(g.phi_flat(P.lambda), WithinAbs(below, 1e-13));
    }
}
