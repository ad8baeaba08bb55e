#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <future>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toeplitz/bounds.hpp"
#include "toeplitz/extremal.hpp"

namespace toeplitz {

/// First two Taylor coefficients of a Schwarz function w = w1 z + w2 z^2 + ...
/// Attainable pairs form the closed region |w1| <= 1, |w2| <= 1 - |w1|^2.
struct SchwarzPoint {
    std::complex<double> w1;
    std::complex<double> w2;

    bool in_region(double tol = 1e-12) const {
        return std::abs(w1) <= 1 + tol && std::abs(w2) <= 1 - std::norm(w1) + tol;
    }

    friend bool operator==(const SchwarzPoint&, const SchwarzPoint&) = default;
};

/// Nearest-by-radial-scaling point of the region: clamp w1 to the unit disk,
/// then w2 to its disk of radius 1 - |w1|^2.
inline SchwarzPoint project(SchwarzPoint p) {
    const double r1 = std::abs(p.w1);
    if (r1 > 1) p.w1 /= r1;
    const double cap = std::max(0.0, 1 - std::norm(p.w1));
    const double r2 = std::abs(p.w2);
    if (r2 > cap) p.w2 = cap == 0 ? std::complex<double>{} : p.w2 * (cap / r2);
    return p;
}

/// Coefficients of p1 = (1 + w)/(1 - w) = 1 + c1 z + c2 z^2 + ...
struct CaratheodoryPoint {
    std::complex<double> c1;
    std::complex<double> c2;

    static CaratheodoryPoint from_schwarz(const SchwarzPoint& p) { return {2.0 * p.w1, 2.0 * (p.w2 + p.w1 * p.w1)}; }
};

enum class FunctionalKind { t22, t31, fs };

struct Functional {
    FunctionalKind kind = FunctionalKind::t22;
    double mu = 0;  // fs only

    static Functional t22() { return {FunctionalKind::t22, 0}; }
    static Functional t31() { return {FunctionalKind::t31, 0}; }
    static Functional fs(double mu) { return {FunctionalKind::fs, mu}; }

    std::string name() const {
        switch (kind) {
            case FunctionalKind::t22: return "t22";
            case FunctionalKind::t31: return "t31";
            default: {
                char buf[48];
                std::snprintf(buf, sizeof buf, "fs(%g)", mu);
                return buf;
            }
        }
    }

    friend bool operator==(const Functional&, const Functional&) = default;
};

struct OracleConfig {
    std::size_t samples = 200000;
    std::uint64_t seed = 7;
    std::size_t polish_steps = 40;
    double tol = 1e-3;  // pass/fail tolerance used by verification
    std::size_t shards = 8;
    std::size_t polish_starts = 16;
    double initial_step = 0.05;
};

struct OracleResult {
    Functional functional;
    double sup_estimate = 0;
    SchwarzPoint argmax;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::size_t polish_steps = 0;

    friend bool operator==(const OracleResult&, const OracleResult&) = default;
};

namespace detail {

struct A2A3 {
    std::complex<double> a2;
    std::complex<double> a3;
};

inline A2A3 a2a3_unchecked(ClassKind kind, double b1, double b2, const SchwarzPoint& p) {
    const auto quad = (b1 * b1 + b2) * p.w1 * p.w1 + b1 * p.w2;
    if (kind == ClassKind::starlike) return {b1 * p.w1, 0.5 * quad};
    return {0.5 * b1 * p.w1, quad / 6.0};
}

}  // namespace detail

/// a2, a3 of the class member whose Schwarz function starts w1 z + w2 z^2.
inline std::pair<std::complex<double>, std::complex<double>> a2a3_from_schwarz(ClassKind kind, double b1, double b2,
                                                                               const SchwarzPoint& p) {
    if (!p.in_region()) throw std::domain_error("a2a3_from_schwarz: point outside |w2| <= 1 - |w1|^2");
    const auto r = detail::a2a3_unchecked(kind, b1, b2, p);
    return {r.a2, r.a3};
}

/// |T2(2)|, |T3(1)| or |a3 - mu a2^2|, evaluated in complex arithmetic.
inline double eval_functional(const Functional& fn, std::complex<double> a2, std::complex<double> a3) {
    switch (fn.kind) {
        case FunctionalKind::t22: return std::abs(toeplitz_t22(a2, a3));
        case FunctionalKind::t31: return std::abs(toeplitz_t31(a2, a3));
        default: return std::abs(a3 - fn.mu * a2 * a2);
    }
}

/// Discrepancy between a2, a3 computed from (w1, w2) directly and through
/// (c1, c2) = (2 w1, 2 (w2 + w1^2)).
inline double caratheodory_crosscheck(ClassKind kind, double b1, double b2, const SchwarzPoint& p) {
    const auto [a2w, a3w] = a2a3_from_schwarz(kind, b1, b2, p);
    const auto c = CaratheodoryPoint::from_schwarz(p);
    std::complex<double> a2c;
    std::complex<double> a3c;
    if (kind == ClassKind::starlike) {
        a2c = 0.5 * b1 * c.c1;
        a3c = ((b1 * b1 - b1 + b2) * c.c1 * c.c1 + 2 * b1 * c.c2) / 8.0;
    } else {
        a2c = 0.25 * b1 * c.c1;
        a3c = ((-b1 + b1 * b1 + b2) * c.c1 * c.c1 + 2 * b1 * c.c2) / 24.0;
    }
    return std::max(std::abs(a2w - a2c), std::abs(a3w - a3c));
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t shard_seed(std::uint64_t master, std::size_t shard) {
    return splitmix64(master ^ splitmix64(static_cast<std::uint64_t>(shard) + 1));
}

// 53-bit uniform in [0, 1); independent of the standard library's distributions.
inline double unit(std::mt19937_64& eng) { return static_cast<double>(eng() >> 11) * 0x1p-53; }

inline double frac(double x) { return x - std::floor(x); }

// Additive-recurrence (Kronecker) steps: golden ratio in 1-D, and powers of
// the root of x^5 = x + 1 in 4-D.
inline constexpr double kronecker_1d = 0.6180339887498949;
inline const std::array<double, 4>& kronecker_4d() {
    static const std::array<double, 4> a = [] {
        double g = 1.5;
        for (int i = 0; i < 64; ++i) g = std::pow(1 + g, 1.0 / 5.0);
        std::array<double, 4> r{};
        double p = 1;
        for (auto& x : r) x = frac(p /= g);
        return r;
    }();
    return a;
}

struct Candidate {
    double value;
    std::uint64_t key;  // global sample position; lower wins ties
    SchwarzPoint point;
};

inline bool better(const Candidate& a, const Candidate& b) {
    return a.value > b.value || (a.value == b.value && a.key < b.key);
}

struct Objective {
    ClassKind kind;
    double b1;
    double b2;
    Functional fn;

    double operator()(const SchwarzPoint& p) const {
        const auto r = a2a3_unchecked(kind, b1, b2, p);
        return eval_functional(fn, r.a2, r.a3);
    }
};

// Keeps the `keep` best candidates seen, ordered best-first.
class TopK {
public:
    explicit TopK(std::size_t keep) : keep_(keep) {}

    void offer(const Candidate& c) {
        if (items_.size() < keep_) {
            items_.insert(std::upper_bound(items_.begin(), items_.end(), c, better), c);
        } else if (keep_ > 0 && better(c, items_.back())) {
            items_.pop_back();
            items_.insert(std::upper_bound(items_.begin(), items_.end(), c, better), c);
        }
    }

    const std::vector<Candidate>& items() const { return items_; }

private:
    std::size_t keep_;
    std::vector<Candidate> items_;
};

// One shard: half its budget on |w1| = 1 (w2 = 0), half spread over the
// interior, both from Kronecker sequences with seed-derived offsets.
inline std::vector<Candidate> run_shard(const Objective& f, std::size_t shard, std::size_t count,
                                        std::uint64_t key_base, std::uint64_t master_seed, std::size_t keep) {
    std::mt19937_64 eng(shard_seed(master_seed, shard));
    const double o1 = unit(eng);
    std::array<double, 4> o4{};
    for (auto& o : o4) o = unit(eng);
    const auto& a4 = kronecker_4d();
    constexpr double two_pi = 2 * std::numbers::pi;

    TopK top(keep);
    const std::size_t boundary = count / 2;
    for (std::size_t k = 0; k < count; ++k) {
        SchwarzPoint p;
        if (k < boundary) {
            p.w1 = std::polar(1.0, two_pi * frac(o1 + static_cast<double>(k) * kronecker_1d));
        } else {
            const double kk = static_cast<double>(k - boundary);
            std::array<double, 4> u{};
            for (std::size_t j = 0; j < 4; ++j) u[j] = frac(o4[j] + kk * a4[j]);
            p.w1 = std::polar(std::sqrt(u[0]), two_pi * u[1]);
            p.w2 = std::polar((1 - std::norm(p.w1)) * std::sqrt(u[2]), two_pi * u[3]);
            p = project(p);
        }
        top.offer({f(p), key_base + k, p});
    }
    return top.items();
}

// Derivative-free coordinate ascent over (Re w1, Im w1, Re v, Im v), where
// w2 = (1 - |w1|^2) v and both w1 and v are clamped to the closed unit disk.
// Each of the `steps` step sizes is swept until no move improves, then halved.
inline Candidate polish(const Objective& f, Candidate start, std::size_t steps, double h) {
    constexpr std::size_t max_sweeps_per_step = 200;
    using cd = std::complex<double>;
    auto clamp = [](cd z) { return std::abs(z) > 1 ? z / std::abs(z) : z; };
    auto to_point = [&](cd w1, cd v) { return project({clamp(w1), (1 - std::norm(clamp(w1))) * clamp(v)}); };

    cd w1 = start.point.w1;
    const double room = 1 - std::norm(w1);
    cd v = room > 0 ? clamp(start.point.w2 / room) : cd(0);
    for (std::size_t s = 0, sweeps = 0; s < steps;) {
        Candidate best = start;
        cd best_w1 = w1, best_v = v;
        for (int coord = 0; coord < 4; ++coord) {
            for (double sign : {1.0, -1.0}) {
                cd x = w1, y = v;
                const double d = sign * h;
                switch (coord) {
                    case 0: x += d; break;
                    case 1: x += cd(0, d); break;
                    case 2: y += d; break;
                    default: y += cd(0, d); break;
                }
                x = clamp(x);
                y = clamp(y);
                const SchwarzPoint q = to_point(x, y);
                const double val = f(q);
                if (val > best.value) {
                    best = {val, start.key, q};
                    best_w1 = x;
                    best_v = y;
                }
            }
        }
        const bool improved = best.value > start.value;
        if (improved) {
            start = best;
            w1 = best_w1;
            v = best_v;
            ++sweeps;
        }
        if (!improved || sweeps >= max_sweeps_per_step) {
            h *= 0.5;
            ++s;
            sweeps = 0;
        }
    }
    return start;
}

}  // namespace detail

/// Empirical supremum of a functional over the attainable (w1, w2) region:
/// sharded quasi-random sampling, the distinguished points (+-i, 0) and
/// (+-1, 0), then coordinate-ascent polish from the best `polish_starts`.
/// Deterministic for a fixed config.
inline OracleResult maximize(ClassKind kind, double b1, double b2, const Functional& fn, const OracleConfig& cfg) {
    if (!(b1 > 0)) throw std::domain_error("maximize: B1 > 0 required");
    if (cfg.samples == 0) throw std::invalid_argument("maximize: sample budget must be positive");

    const detail::Objective f{kind, b1, b2, fn};
    const std::size_t shards = std::max<std::size_t>(1, std::min(cfg.shards, cfg.samples));
    const std::size_t keep = std::max<std::size_t>(1, cfg.polish_starts);

    // Distinguished points take keys 0..3; shard k's samples follow in order.
    detail::TopK top(keep);
    const std::array<SchwarzPoint, 4> special{{{{0, 1}, 0}, {{0, -1}, 0}, {1, 0}, {-1, 0}}};
    for (std::size_t i = 0; i < special.size(); ++i) top.offer({f(special[i]), i, special[i]});

    std::vector<std::future<std::vector<detail::Candidate>>> jobs;
    std::uint64_t key = special.size();
    for (std::size_t s = 0; s < shards; ++s) {
        const std::size_t count = cfg.samples / shards + (s < cfg.samples % shards ? 1 : 0);
        jobs.push_back(std::async(shards > 1 ? std::launch::async : std::launch::deferred, detail::run_shard, f, s,
                                  count, key, cfg.seed, keep));
        key += count;
    }
    for (auto& j : jobs)
        for (const auto& c : j.get()) top.offer(c);

    detail::Candidate best = top.items().front();
    for (const auto& start : top.items()) {
        const auto c = detail::polish(f, start, cfg.polish_steps, cfg.initial_step);
        if (detail::better(c, best)) best = c;
    }
    return {fn, best.value, best.point, cfg.samples, cfg.seed, cfg.polish_steps};
}

}  // namespace toeplitz
