#pragma once

// Geometric constants of the regular polygon P(n, r): n equal sides, inscribed
// in a circle of radius r, centroid at the origin and vertex 0 on the +x axis.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace polymoments {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }

struct PolygonSpec {
    int n = 3;
    double r = 1.0;
};

/// All derived constants of P(n, r), computed once and immutable afterwards.
///
/// Index conventions follow the branch index k of the chord length
/// distribution: k = 0..K with K = floor(n/2) - 1, and ell[k] for k = 0..K+1.
/// The per-branch coefficients p, q, s (and the cotangent/tangent tables they
/// are built from) are only materialized for the indices a branch formula
/// actually consumes; every other entry is std::nullopt. In particular p[K]
/// for even n would need cot(pi) and is never stored.
struct PolygonParams {
    int n = 0;
    double r = 0.0;
    double alpha = 0.0;  // pi / n
    int bigK = 0;        // floor(n/2) - 1

    std::vector<double> ell;  // ell[k] = 2 r sin(k alpha), k = 0..K+1
    double lambda = 0.0;      // 2 r cos^2(alpha/2)
    double d = 0.0;           // diameter, ell[K+1]
    double perimeter = 0.0;   // 2 n r sin(alpha)
    double area = 0.0;        // n r^2 sin(2 alpha) / 2

    std::vector<double> h;                  // h[k] = 2 r sin(k alpha) sin((k+1) alpha), k = 0..K
    std::vector<std::optional<double>> p;   // k = 0..K
    std::vector<std::optional<double>> q;   // k = 0..K
    std::vector<std::optional<double>> s;   // k = 0..K

    // cot(2 k alpha) for k = 1..K+1 where finite; tan(k alpha) for k = 0..K+1 where finite.
    std::vector<std::optional<double>> cot2k;
    std::vector<std::optional<double>> tank;

    double sin_alpha = 0.0;
    double cos_alpha = 0.0;
    double tan_alpha = 0.0;
    double cot_alpha = 0.0;
    double cos_half_alpha = 0.0;
    double sin_half_alpha = 0.0;

    std::vector<Point> vertices;      // counter-clockwise
    std::vector<Point> edge_normals;  // outward unit normal of edge (v_i, v_{i+1})
    double inradius = 0.0;            // r cos(alpha)

    bool even() const { return n % 2 == 0; }
    bool odd() const { return n % 2 != 0; }
};

namespace detail {

inline double coefficient(const std::optional<double>& v, const char* name, int k) {
    if (!v) {
        throw std::logic_error(std::string("polygon coefficient ") + name + "[" +
                               std::to_string(k) + "] is not defined for this polygon");
    }
    return *v;
}

}  // namespace detail

inline PolygonParams derive_params(const PolygonSpec& spec) {
    if (spec.n < 3) {
        throw std::domain_error("polygon needs n >= 3 sides, got " + std::to_string(spec.n));
    }
    if (!(spec.r > 0.0) || !std::isfinite(spec.r)) {
        throw std::domain_error("circumradius must be positive and finite");
    }

    PolygonParams P;
    P.n = spec.n;
    P.r = spec.r;
    const double r = spec.r;
    const int n = spec.n;
    const double a = std::numbers::pi / n;
    P.alpha = a;
    P.bigK = n / 2 - 1;
    const int K = P.bigK;

    P.sin_alpha = std::sin(a);
    P.cos_alpha = std::cos(a);
    P.tan_alpha = std::tan(a);
    P.cot_alpha = P.cos_alpha / P.sin_alpha;
    P.cos_half_alpha = std::cos(a / 2.0);
    P.sin_half_alpha = std::sin(a / 2.0);

    P.ell.resize(K + 2);
    for (int k = 0; k <= K + 1; ++k) P.ell[k] = 2.0 * r * std::sin(k * a);
    P.ell[0] = 0.0;
    P.d = P.ell[K + 1];
    P.lambda = 2.0 * r * P.cos_half_alpha * P.cos_half_alpha;
    P.perimeter = n * P.ell[1];
    P.area = 0.5 * n * r * r * std::sin(2.0 * a);
    P.inradius = r * P.cos_alpha;

    // 2 k alpha hits pi only at k = K+1 for even n; k alpha hits pi/2 only there too.
    P.cot2k.assign(K + 2, std::nullopt);
    P.tank.assign(K + 2, std::nullopt);
    for (int k = 0; k <= K + 1; ++k) {
        const bool singular_top = P.even() && k == K + 1;
        if (k >= 1 && !singular_top) P.cot2k[k] = 1.0 / std::tan(2.0 * k * a);
        if (!singular_top) P.tank[k] = std::tan(k * a);
    }
    P.tank[0] = 0.0;

    P.h.resize(K + 1);
    for (int k = 0; k <= K; ++k) P.h[k] = 2.0 * r * std::sin(k * a) * std::sin((k + 1) * a);
    P.h[0] = 0.0;

    P.p.assign(K + 1, std::nullopt);
    P.q.assign(K + 1, std::nullopt);
    P.s.assign(K + 1, std::nullopt);
    if (n == 3) {
        P.p[0] = 0.0;
        P.q[0] = -P.tan_alpha;
        P.s[0] = 0.5;
    } else {
        // H1 consumes k = 1..K-1 (even n) or 1..K (odd n); H3 additionally s[K] for odd n.
        const int last = P.even() ? K - 1 : K;
        for (int k = 1; k <= last; ++k) {
            P.p[k] = *P.cot2k[k] - *P.cot2k[k + 1];
            P.q[k] = *P.tank[k] - *P.tank[k + 1];
        }
        if (P.odd()) P.s[K] = K * a * *P.p[K];
    }

    P.vertices.resize(n);
    P.edge_normals.resize(n);
    for (int k = 0; k < n; ++k) {
        P.vertices[k] = {r * std::cos(2.0 * k * a), r * std::sin(2.0 * k * a)};
        P.edge_normals[k] = {std::cos((2.0 * k + 1.0) * a), std::sin((2.0 * k + 1.0) * a)};
    }
    return P;
}

inline Point vertex(const PolygonParams& params, int k) {
    if (k < 0 || k >= params.n) {
        throw std::out_of_range("vertex index " + std::to_string(k) + " outside [0, " +
                                std::to_string(params.n) + ")");
    }
    return params.vertices[k];
}

/// Closed-polygon membership: the point lies on the inner side of every edge.
inline bool contains(const PolygonParams& params, Point pt) {
    const double limit = params.inradius * (1.0 + 1e-12);
    for (const Point& u : params.edge_normals) {
        if (dot(u, pt) > limit) return false;
    }
    return true;
}

inline double shoelace_area(std::span<const Point> poly) {
    double twice = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        twice += cross(poly[i], poly[(i + 1) % poly.size()]);
    }
    return 0.5 * std::abs(twice);
}

inline double max_vertex_distance(std::span<const Point> poly) {
    double best = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i)
        for (std::size_t j = i + 1; j < poly.size(); ++j) best = std::max(best, norm(poly[i] - poly[j]));
    return best;
}

}  // namespace polymoments
