// polymoments: moment tables, distribution curves and verification suites for
// the distance between two random points in a regular polygon.
//
// Exit status: 0 success, 1 verification failure, 2 usage or domain error.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polymoments/polymoments.hpp"

namespace pm = polymoments;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IntRange {
    int lo = 0;
    int hi = 0;
};

int parse_int(const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
    return v;
}

/// "a..b" (inclusive) or a single integer.
IntRange parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const int v = parse_int(s);
        return {v, v};
    }
    IntRange r{parse_int(s.substr(0, dots)), parse_int(s.substr(dots + 2))};
    if (r.lo > r.hi) throw UsageError("empty range '" + s + "'");
    return r;
}

/// Sample counts are accepted in scientific notation ("1e6").
std::uint64_t parse_count(const std::string& s) {
    double v = 0.0;
    try {
        std::size_t used = 0;
        v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
        throw UsageError("not a count: '" + s + "'");
    }
    if (!(v >= 0.0) || v != std::floor(v) || v > 1e12) throw UsageError("not a count: '" + s + "'");
    return static_cast<std::uint64_t>(v);
}

std::string fmt(double v) { return pm::format_double(v); }

void emit(const pm::OutputRecord& rec, bool json) {
    std::cout << (json ? pm::to_json(rec) : pm::to_csv(rec));
}

void add_timing(pm::OutputRecord& rec, bool enabled, std::chrono::steady_clock::time_point start) {
    if (!enabled) return;
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rec.metadata.emplace_back("elapsed_ms", fmt(ms));
}

void add_mc_metadata(pm::OutputRecord& rec, std::uint64_t samples, std::uint64_t seed) {
    rec.metadata.emplace_back("mc_samples", std::to_string(samples));
    rec.metadata.emplace_back("seed", std::to_string(seed));
    rec.metadata.emplace_back("generator", pm::kGeneratorName);
    rec.metadata.emplace_back("shard_plan", pm::kShardPlan);
}

void add_quad_metadata(pm::OutputRecord& rec) {
    const pm::QuadConfig q;
    rec.metadata.emplace_back("quad_abs_tol", fmt(q.abs_tol));
    rec.metadata.emplace_back("quad_rel_tol", fmt(q.rel_tol));
}

struct CommonOptions {
    bool json = false;
    bool timings = false;
};

struct MomentsOptions {
    int n = 5;
    double r = 1.0;
    std::string m = "1";
    bool verify = false;
    std::string mc_samples = "1e6";
    std::uint64_t seed = 42;
};

pm::OutputRecord cmd_moments(const MomentsOptions& o) {
    const IntRange ms = parse_range(o.m);
    const pm::PolygonParams P = pm::derive_params({o.n, o.r});
    const std::uint64_t samples = o.verify ? parse_count(o.mc_samples) : 0;

    pm::OutputRecord rec;
    rec.command = "moments";
    rec.params = {{"n", std::to_string(o.n)}, {"r", fmt(o.r)}, {"m", o.m}};
    rec.columns = {"m", "value", "method"};
    if (o.verify) {
        rec.columns.insert(rec.columns.end(),
                           {"quadrature_pdf", "quadrature_cdf", "monte_carlo", "mc_std_error"});
        rec.params.emplace_back("verify", "true");
        add_quad_metadata(rec);
        add_mc_metadata(rec, samples, o.seed);
    }

    std::optional<pm::McSamples> pairs;
    if (o.verify && samples > 0) {
        pm::McConfig cfg;
        cfg.samples = samples;
        cfg.seed = o.seed;
        pairs = pm::draw_samples(P, cfg);
    }
    for (int m = ms.lo; m <= ms.hi; ++m) {
        const pm::MomentResult res = pm::moment(P, m);
        std::vector<pm::Cell> row{double(m), res.value, std::string(pm::to_string(res.method))};
        if (o.verify) {
            row.emplace_back(pm::moment_by_pdf_quadrature(P, m).value);
            row.emplace_back(pm::moment_by_cdf_quadrature(P, m).value);
            if (pairs) {
                const pm::McEstimate e = pm::power_mean(*pairs, m);
                row.emplace_back(e.estimate);
                row.emplace_back(e.std_error);
            } else {
                row.emplace_back(std::monostate{});
                row.emplace_back(std::monostate{});
            }
        }
        rec.add_row(std::move(row));
    }
    return rec;
}

struct TableOptions {
    std::string n = "3..30";
    double r = 1.0;
    std::string m = "1";
};

pm::OutputRecord cmd_table(const TableOptions& o) {
    const IntRange ns = parse_range(o.n);
    const bool var = o.m == "var";
    const int m = var ? 0 : parse_int(o.m);
    if (!var) pm::detail::require_moment_order(m);
    if (!(o.r > 0.0)) throw std::domain_error("circumradius must be positive");

    pm::OutputRecord rec;
    rec.command = "table";
    rec.params = {{"n", o.n}, {"r", fmt(o.r)}, {"m", o.m}};
    rec.columns = {"n", var ? "variance" : "value"};
    for (int n = ns.lo; n <= ns.hi; ++n) {
        const pm::PolygonParams P = pm::derive_params({n, o.r});
        rec.add_row({double(n), var ? pm::variance(P) : pm::moment(P, m).value});
    }
    rec.add_row({std::string("inf"), var ? pm::circle_variance(o.r) : pm::circle_moment(m, o.r)});
    return rec;
}

struct CurveOptions {
    std::string kind;
    int n = 5;
    double r = 1.0;
    int points = 1000;
    bool circle = false;
};

pm::OutputRecord cmd_curve(const CurveOptions& o) {
    if (o.points < 2) throw UsageError("--points must be at least 2");
    const pm::PolygonParams P = pm::derive_params({o.n, o.r});
    const bool cdf = o.kind == "cdf";

    pm::OutputRecord rec;
    rec.command = "curve";
    rec.params = {{"kind", o.kind}, {"n", std::to_string(o.n)}, {"r", fmt(o.r)},
                  {"points", std::to_string(o.points)}};
    if (cdf) rec.columns = {"x", "F"};
    else rec.columns = {"x", "g", "chord_pdf_numeric"};
    if (o.circle) {
        rec.columns.emplace_back(cdf ? "circle_F" : "circle_g");
        rec.params.emplace_back("circle", "true");
    }

    const double step = 1e-6 * P.d;
    if (!cdf) rec.metadata.emplace_back("chord_pdf_step", fmt(step));
    const pm::DistanceDensity g(P);
    for (int i = 0; i < o.points; ++i) {
        const double x = P.d * i / (o.points - 1);
        std::vector<pm::Cell> row{x};
        if (cdf) {
            row.emplace_back(pm::chord_cdf(P, x));
        } else {
            row.emplace_back(g(x));
            try {
                row.emplace_back(pm::chord_pdf_numeric(P, x, step));
            } catch (const std::domain_error&) {
                row.emplace_back(std::monostate{});  // next to a breakpoint or an end point
            }
        }
        if (o.circle) row.emplace_back(cdf ? pm::circle_chord_cdf(x, o.r) : pm::circle_distance_pdf(x, o.r));
        rec.add_row(std::move(row));
    }
    return rec;
}

struct VerifyOptions {
    std::string n = "3..12";
    std::string m = "-1..4";
    double r = 1.0;
    std::string mc_samples = "2e5";
    std::uint64_t seed = 42;
    double budget = 120.0;
};

pm::OutputRecord cmd_verify(const VerifyOptions& o, bool& passed) {
    const IntRange ns = parse_range(o.n);
    const IntRange ms = parse_range(o.m);
    if (ns.lo < 3) throw std::domain_error("polygon needs n >= 3 sides");
    pm::detail::require_moment_order(ms.lo);
    pm::detail::require_moment_order(ms.hi);
    if (!(o.r > 0.0)) throw std::domain_error("circumradius must be positive");

    pm::VerifyConfig cfg;
    cfg.n_lo = ns.lo;
    cfg.n_hi = ns.hi;
    cfg.m_lo = ms.lo;
    cfg.m_hi = ms.hi;
    cfg.r = o.r;
    cfg.mc_samples = parse_count(o.mc_samples);
    cfg.seed = o.seed;
    cfg.budget_seconds = o.budget;
    const pm::VerifyReport report = pm::run_verify(cfg);
    passed = report.all_passed();

    pm::OutputRecord rec;
    rec.command = "verify";
    rec.params = {{"n", o.n}, {"m", o.m}, {"r", fmt(o.r)}, {"budget", fmt(o.budget)}};
    rec.columns = {"suite", "check", "status", "measured", "tolerance"};
    for (const auto& c : report.checks) {
        // The wall-clock row would make the report non-deterministic.
        if (c.suite == "budget") continue;
        rec.add_row({c.suite, c.name, std::string(c.passed ? "pass" : "fail"), c.measured, c.tolerance});
    }
    add_quad_metadata(rec);
    add_mc_metadata(rec, cfg.mc_samples, cfg.seed);
    rec.metadata.emplace_back("checks", std::to_string(report.checks.size()));
    rec.metadata.emplace_back("failures", std::to_string(report.failures()));
    if (!report.checks.back().passed)
        std::cerr << "verify: budget of " << o.budget << " s exceeded\n";
    return rec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distance moments and chord-length distributions of regular polygons"};
    app.require_subcommand(1);
    app.fallthrough();
    CommonOptions common;
    app.add_flag("--json", common.json, "Write JSON instead of CSV");
    app.add_flag("--timings", common.timings, "Record wall-clock time in the metadata");

    MomentsOptions mo;
    auto* moments = app.add_subcommand("moments", "Moments M_m of P(n, r)");
    moments->add_option("--n", mo.n, "Number of sides")->required();
    moments->add_option("--r", mo.r, "Circumradius");
    moments->add_option("--m", mo.m, "Order or range a..b");
    moments->add_flag("--verify", mo.verify, "Add quadrature and Monte Carlo columns");
    moments->add_option("--mc-samples", mo.mc_samples, "Point pairs for --verify");
    moments->add_option("--seed", mo.seed, "Random seed");

    TableOptions to;
    auto* table = app.add_subcommand("table", "M_m of P(n, 1) across n, with the circle limit");
    table->add_option("--n", to.n, "Range a..b of side counts");
    table->add_option("--r", to.r, "Circumradius");
    table->add_option("--m", to.m, "Moment order, or 'var' for the variance");

    CurveOptions co;
    auto* curve = app.add_subcommand("curve", "Chord-length CDF or distance density over [0, d]");
    curve->add_option("kind", co.kind, "cdf or pdf")->required()->check(CLI::IsMember({"cdf", "pdf"}));
    curve->add_option("--n", co.n, "Number of sides");
    curve->add_option("--r", co.r, "Circumradius");
    curve->add_option("--points", co.points, "Number of abscissae");
    curve->add_flag("--circle", co.circle, "Add the disc reference curve");

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Run the property and oracle suites");
    verify->add_option("--n", vo.n, "Range a..b of side counts");
    verify->add_option("--m", vo.m, "Range a..b of moment orders");
    verify->add_option("--r", vo.r, "Circumradius");
    verify->add_option("--mc-samples", vo.mc_samples, "Monte Carlo samples per polygon (0 skips)");
    verify->add_option("--seed", vo.seed, "Random seed");
    verify->add_option("--budget", vo.budget, "Time budget in seconds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        pm::OutputRecord rec;
        int status = kExitOk;
        if (*moments) {
            rec = cmd_moments(mo);
        } else if (*table) {
            rec = cmd_table(to);
        } else if (*curve) {
            rec = cmd_curve(co);
        } else {
            bool passed = false;
            rec = cmd_verify(vo, passed);
            status = passed ? kExitOk : kExitVerifyFailed;
        }
        add_timing(rec, common.timings, start);
        emit(rec, common.json);
        return status;
    } catch (const UsageError& e) {
        std::cerr << "polymoments: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {
        // domain_error and out_of_range: invalid n, r or m.
        std::cerr << "polymoments: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::range_error& e) {
        std::cerr << "polymoments: " << e.what() << '\n';
        return kExitUsage;
    }
}
