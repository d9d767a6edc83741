#pragma once

// Monte Carlo oracles: uniform point pairs in P(n, r) and isotropic uniform
// random (IUR) chords, plus the goodness-of-fit statistics used to compare
// them with the closed forms.
//
// Reproducibility: samples are produced in shards of kShardSize draws. Shard i
// owns an mt19937_64 seeded with splitmix64(seed, i) and writes a fixed slice of
// the output, so the result is bit-identical for any number of worker threads.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "polymoments/antiderivatives.hpp"
#include "polymoments/geometry.hpp"
#include "polymoments/summation.hpp"

namespace polymoments {

enum class Estimator { point_pair_distance, iur_chord_length };

inline const char* to_string(Estimator e) {
    return e == Estimator::point_pair_distance ? "point_pair_distance" : "iur_chord_length";
}

struct McConfig {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 42;
    Estimator estimator = Estimator::point_pair_distance;
    unsigned threads = 0;  // 0: POLYMOMENTS_THREADS or hardware concurrency
};

inline constexpr std::uint64_t kShardSize = std::uint64_t{1} << 16;
inline constexpr const char* kGeneratorName = "mt19937_64";
inline constexpr const char* kShardPlan = "shards of 65536 draws, shard seed = splitmix64(seed, shard)";

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t shard) {
    return splitmix64(seed ^ splitmix64(shard));
}

/// 64-bit engine with a portable [0, 1) conversion (53 random mantissa bits).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

/// Uniform point: pick one of the n congruent centre-edge triangles, then map
/// two uniforms onto it by the reflected barycentric rule.
inline Point sample_point(const PolygonParams& P, Rng& rng) {
    for (;;) {
        const int i = std::min(P.n - 1, static_cast<int>(rng.uniform() * P.n));
        double u = rng.uniform();
        double v = rng.uniform();
        if (u + v > 1.0) {
            u = 1.0 - u;
            v = 1.0 - v;
        }
        const Point pt = u * P.vertices[i] + v * P.vertices[(i + 1) % P.n];
        if (contains(P, pt)) return pt;
    }
}

/// Length of the chord cut by the line {x cos(phi) + y sin(phi) = p}, or nullopt
/// if the line misses the polygon. The line is clipped against each edge.
inline std::optional<double> chord_length(const PolygonParams& P, double p, double phi) {
    const Point u{std::cos(phi), std::sin(phi)};
    Point hits[2];
    int count = 0;
    for (int i = 0; i < P.n && count < 2; ++i) {
        const Point a = P.vertices[i];
        const Point b = P.vertices[(i + 1) % P.n];
        const double sa = dot(u, a) - p;
        const double sb = dot(u, b) - p;
        // Half-open in the edge parameter so a vertex hit is counted once.
        if ((sa < 0.0 && sb >= 0.0) || (sa >= 0.0 && sb < 0.0)) {
            const double t = sa / (sa - sb);
            hits[count++] = a + t * (b - a);
        }
    }
    if (count < 2) return std::nullopt;
    return norm(hits[1] - hits[0]);
}

struct ChordDraw {
    double length = 0.0;
    std::uint64_t proposals = 0;
};

/// IUR chord: (p, phi) uniform on [0, r] x [0, 2 pi), retried until the line hits.
inline ChordDraw sample_chord(const PolygonParams& P, Rng& rng) {
    ChordDraw out;
    for (;;) {
        ++out.proposals;
        const double p = P.r * rng.uniform();
        const double phi = 2.0 * std::numbers::pi * rng.uniform();
        if (const auto len = chord_length(P, p, phi)) {
            out.length = *len;
            return out;
        }
    }
}

struct McSamples {
    std::vector<double> values;
    std::uint64_t proposals = 0;  // line proposals for chords; equals values.size() for pairs
};

inline unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("POLYMOMENTS_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap > 0) hw = std::min(hw, static_cast<unsigned>(cap));
    }
    return hw;
}

/// Draws cfg.samples point-pair distances or chord lengths.
inline McSamples draw_samples(const PolygonParams& P, const McConfig& cfg) {
    if (cfg.samples < 1) throw std::domain_error("Monte Carlo needs at least one sample");
    McSamples out;
    out.values.resize(cfg.samples);
    const std::uint64_t shards = (cfg.samples + kShardSize - 1) / kShardSize;
    std::vector<std::uint64_t> proposals(shards, 0);

    auto run_shard = [&](std::uint64_t shard) {
        Rng rng(shard_seed(cfg.seed, shard));
        const std::uint64_t begin = shard * kShardSize;
        const std::uint64_t end = std::min(cfg.samples, begin + kShardSize);
        std::uint64_t tries = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            if (cfg.estimator == Estimator::point_pair_distance) {
                const Point a = sample_point(P, rng);
                const Point b = sample_point(P, rng);
                out.values[i] = norm(a - b);
                ++tries;
            } else {
                const ChordDraw c = sample_chord(P, rng);
                out.values[i] = c.length;
                tries += c.proposals;
            }
        }
        proposals[shard] = tries;
    };

    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(cfg.threads), shards));
    if (workers <= 1) {
        for (std::uint64_t s = 0; s < shards; ++s) run_shard(s);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t s = w; s < shards; s += workers) run_shard(s);
            });
        }
        for (auto& t : pool) t.join();
    }
    for (std::uint64_t t : proposals) out.proposals += t;
    return out;
}

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    double acceptance_rate = 1.0;
};

/// Sample mean of X^m over an already drawn sample, with its standard error.
inline McEstimate power_mean(const McSamples& s, int m) {
    McEstimate out;
    out.samples = s.values.size();
    out.acceptance_rate =
        s.proposals > 0 ? static_cast<double>(out.samples) / static_cast<double>(s.proposals) : 1.0;
    if (m == 0) {
        out.estimate = 1.0;
        return out;
    }
    CompensatedSum sum;
    for (double v : s.values) sum.add(detail::ipow(v, m));
    const double mean = sum.value() / out.samples;
    CompensatedSum sq;
    for (double v : s.values) {
        const double dv = detail::ipow(v, m) - mean;
        sq.add(dv * dv);
    }
    out.estimate = mean;
    if (out.samples > 1) out.std_error = std::sqrt(sq.value() / (out.samples - 1) / out.samples);
    return out;
}

inline McEstimate mc_estimate(const PolygonParams& P, const McConfig& cfg, int m) {
    if (m == 0) {
        McEstimate out;
        out.estimate = 1.0;
        out.samples = cfg.samples;
        return out;
    }
    return power_mean(draw_samples(P, cfg), m);
}

/// Kolmogorov-Smirnov distance between the empirical CDF of `samples` and `cdf`.
template <class Cdf>
double ks_distance(std::vector<double> samples, Cdf&& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        worst = std::max({worst, f - i / n, (i + 1) / n - f});
    }
    return worst;
}

/// multiplier * sqrt(ln 2 / (2 N)), the DKW-type acceptance bound for the KS distance.
inline double dkw_bound(std::uint64_t samples, double multiplier = 4.0) {
    return multiplier * std::sqrt(std::log(2.0) / (2.0 * static_cast<double>(samples)));
}

struct ChiSquareResult {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
    int bins = 0;
};

/// Pearson chi-square of binned samples against expected bin probabilities.
/// Adjacent bins are pooled left to right until each expects at least 5 counts.
inline ChiSquareResult chi_square_test(const std::vector<double>& samples,
                                       const std::vector<double>& edges,
                                       const std::vector<double>& probabilities) {
    if (edges.size() != probabilities.size() + 1 || probabilities.empty())
        throw std::invalid_argument("chi_square_test needs one more edge than probabilities");
    std::vector<double> counts(probabilities.size(), 0.0);
    for (double v : samples) {
        auto it = std::upper_bound(edges.begin(), edges.end(), v);
        std::ptrdiff_t bin = (it - edges.begin()) - 1;
        bin = std::clamp<std::ptrdiff_t>(bin, 0, static_cast<std::ptrdiff_t>(counts.size()) - 1);
        counts[bin] += 1.0;
    }
    const double total = static_cast<double>(samples.size());
    std::vector<double> obs;
    std::vector<double> exp;
    double o = 0.0;
    double e = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        o += counts[i];
        e += probabilities[i] * total;
        if (e >= 5.0) {
            obs.push_back(o);
            exp.push_back(e);
            o = e = 0.0;
        }
    }
    if (e > 0.0 || o > 0.0) {
        if (exp.empty()) {
            obs.push_back(o);
            exp.push_back(e);
        } else {
            obs.back() += o;
            exp.back() += e;
        }
    }
    ChiSquareResult out;
    out.bins = static_cast<int>(obs.size());
    for (std::size_t i = 0; i < obs.size(); ++i) {
        const double diff = obs[i] - exp[i];
        out.statistic += diff * diff / exp[i];
    }
    out.dof = out.bins - 1;
    if (out.dof >= 1) {
        boost::math::chi_squared dist(out.dof);
        out.p_value = boost::math::cdf(boost::math::complement(dist, out.statistic));
    }
    return out;
}

}  // namespace polymoments
