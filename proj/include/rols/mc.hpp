#ifndef ROLS_MC_HPP
#define ROLS_MC_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "rols/dgp.hpp"
#include "rols/errors.hpp"
#include "rols/kernel.hpp"
#include "rols/missing.hpp"
#include "rols/ols.hpp"
#include "rols/stats.hpp"
#include "rols/tv.hpp"

namespace rols {

// ---- configuration ----

struct MaskSpec {
    enum class Kind { none, block, random };

    Kind kind = Kind::none;
    Eigen::Index block_lo = 0;  // 1-based inclusive
    Eigen::Index block_hi = 0;
    Eigen::Index count = 0;     // random: missing observations per replication

    static MaskSpec none() { return {}; }
    static MaskSpec block(Eigen::Index lo, Eigen::Index hi) {
        MaskSpec m;
        m.kind = Kind::block;
        m.block_lo = lo;
        m.block_hi = hi;
        return m;
    }
    static MaskSpec random(Eigen::Index count) {
        MaskSpec m;
        m.kind = Kind::random;
        m.count = count;
        return m;
    }

    bool active() const { return kind != Kind::none; }

    // The mask stream is part of the design side (independent of {eps, eta}).
    MissingMask realize(Eigen::Index n, const SeedRecord& seed) const {
        switch (kind) {
            case Kind::none:
                return MissingMask::all_observed(n);
            case Kind::block: {
                MissingMask m = MissingMask::all_observed(n);
                for (Eigen::Index t = block_lo; t <= block_hi && t <= n; ++t) {
                    if (t >= 1) m.tau[static_cast<std::size_t>(t - 1)] = 0;
                }
                return m;
            }
            case Kind::random: {
                if (count >= n) throw ConfigError("MaskSpec: count must be < n");
                RngStream stream = RngStream::derive(seed.master, seed.replication, "mask");
                // partial Fisher-Yates over time indices
                std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
                for (Eigen::Index i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
                MissingMask m = MissingMask::all_observed(n);
                for (Eigen::Index i = 0; i < count; ++i) {
                    const auto j = static_cast<Eigen::Index>(
                        stream.next_below(static_cast<std::uint64_t>(n - i)));
                    std::swap(idx[static_cast<std::size_t>(i)],
                              idx[static_cast<std::size_t>(i + j)]);
                    m.tau[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] = 0;
                }
                return m;
            }
        }
        return MissingMask::all_observed(n);
    }
};

struct McConfig {
    ModelSpec model;
    Eigen::Index n = 1500;
    Eigen::Index replications = 1000;
    std::uint64_t master_seed = 42;
    double level = 0.95;
    std::vector<double> h_exponents = {0.5};     // TV runs
    std::vector<double> null_grid;               // power runs, beta_p targets
    MaskSpec mask;
    std::vector<Eigen::Index> eval_points;       // TV: 1-based grid; empty = all t
    unsigned threads = 1;

    void validate() const {
        if (replications < 1) throw ConfigError("McConfig: replications >= 1 required");
        if (!(level > 0.0 && level < 1.0)) throw ConfigError("McConfig: level in (0,1)");
        model.validate();
    }
};

// Failed replications (rank deficiency) are excluded and counted; more than 1%
// of them aborts the run.
inline constexpr double kMaxFailureShare = 0.01;

// ---- results ----

struct McSummary {
    Eigen::VectorXd bias;      // mean(beta_hat) - beta
    Eigen::VectorXd rmse;      // sqrt(mean (beta_hat - beta)^2)
    Eigen::VectorXd sd;        // sample sd of beta_hat, (S-1) denominator
    Eigen::VectorXd cp;        // robust coverage, percent
    Eigen::VectorXd cp_st;     // standard coverage, percent
    Eigen::Index replications = 0;
    Eigen::Index failures = 0;
    Eigen::Index n = 0;
    std::string model_id;
    std::uint64_t master_seed = 0;
    double level = 0.95;
};

struct PointwiseCoverage {
    std::vector<Eigen::Index> eval_points;  // 1-based times
    Eigen::MatrixXd coverage;               // T x p, percent
    Eigen::MatrixXd rmse;                   // T x p
    Eigen::VectorXi excluded;               // failed replications per point
    Eigen::Index replications = 0;
    double bandwidth = 0.0;
    std::string model_id;
};

struct PowerCurve {
    std::vector<double> grid;               // hypothesized-truth values of beta_p
    std::vector<double> reject_robust;      // percent
    std::vector<double> reject_standard;
    std::vector<double> adjusted_standard;  // empirical-critical-value power
    double critical_value = 0.0;            // empirical |t| threshold at the null
    Eigen::Index replications = 0;
};

namespace detail {

// Deterministic parallel map over replication indices: results land in
// preallocated per-replication slots, so the reduction is independent of the
// thread count and completion order.
template <typename Fn>
void for_each_replication(Eigen::Index R, unsigned threads, Fn&& fn) {
    threads = std::max(1u, threads);
    if (threads == 1) {
        for (Eigen::Index r = 0; r < R; ++r) fn(r);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<Eigen::Index> next{0};
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const Eigen::Index r = next.fetch_add(1);
                if (r >= R) return;
                fn(r);
            }
        });
    }
    for (auto& th : pool) th.join();
}

// Coverage convention for degenerate intervals: a zero-width interval covers
// iff the estimate equals the truth exactly.
inline bool ci_covers(double estimate, double truth, double se, double z) {
    if (se == 0.0) return estimate == truth;
    return std::abs(estimate - truth) <= z * se;
}

}  // namespace detail

// Fixed-parameter replication study: Bias, RMSE, SD and robust/standard
// coverage against the latent truth.
inline McSummary run_mc_fixed(const McConfig& config) {
    config.validate();
    const Eigen::Index R = config.replications;
    const Eigen::Index p =
        (config.model.kind == ModelSpec::Kind::autoregression)
            ? static_cast<Eigen::Index>(config.model.ar_coeffs.size())
            : config.model.p;
    const double z = two_sided_critical(config.level);

    Eigen::MatrixXd estimates(R, p);
    Eigen::MatrixXd hit_rob(R, p), hit_std(R, p);
    Eigen::MatrixXd truth(R, p);
    std::vector<char> ok(static_cast<std::size_t>(R), 0);

    detail::for_each_replication(R, config.threads, [&](Eigen::Index r) {
        SeedRecord seed{config.master_seed, static_cast<std::uint64_t>(r + 1), 0};
        GeneratedSample gs = gen_model(config.model, config.n, seed);
        try {
            FixedFit fit;
            if (config.mask.active()) {
                MissingMask mask = config.mask.realize(config.n, seed);
                fit = fit_ols_missing(gs.sample, mask, MissingForm::zerofill);
            } else {
                fit = fit_ols(gs.sample);
            }
            for (Eigen::Index k = 0; k < p; ++k) {
                const double b0 = gs.beta_truth(0, k);
                truth(r, k) = b0;
                estimates(r, k) = fit.beta_hat(k);
                hit_rob(r, k) =
                    detail::ci_covers(fit.beta_hat(k), b0, fit.se_robust(k), z) ? 1.0 : 0.0;
                hit_std(r, k) =
                    detail::ci_covers(fit.beta_hat(k), b0, fit.se_standard(k), z) ? 1.0 : 0.0;
            }
            ok[static_cast<std::size_t>(r)] = 1;
        } catch (const RankDeficientError&) {
            // excluded and counted below
        }
    });

    McSummary s;
    s.replications = R;
    s.n = config.n;
    s.model_id = config.model.id;
    s.master_seed = config.master_seed;
    s.level = config.level;
    s.bias = Eigen::VectorXd::Zero(p);
    s.rmse = Eigen::VectorXd::Zero(p);
    s.sd = Eigen::VectorXd::Zero(p);
    s.cp = Eigen::VectorXd::Zero(p);
    s.cp_st = Eigen::VectorXd::Zero(p);

    Eigen::Index S = 0;
    for (Eigen::Index r = 0; r < R; ++r) S += ok[static_cast<std::size_t>(r)];
    s.failures = R - S;
    if (S == 0 || static_cast<double>(s.failures) > kMaxFailureShare * static_cast<double>(R)) {
        throw Error("run_mc_fixed: " + std::to_string(s.failures) + " of " +
                    std::to_string(R) + " replications failed (rank deficiency)");
    }

    for (Eigen::Index k = 0; k < p; ++k) {
        double mean = 0.0, msqe = 0.0, hr = 0.0, hs = 0.0, b0 = 0.0;
        for (Eigen::Index r = 0; r < R; ++r) {
            if (!ok[static_cast<std::size_t>(r)]) continue;
            mean += estimates(r, k);
            msqe += (estimates(r, k) - truth(r, k)) * (estimates(r, k) - truth(r, k));
            hr += hit_rob(r, k);
            hs += hit_std(r, k);
            b0 = truth(r, k);
        }
        mean /= static_cast<double>(S);
        s.bias(k) = mean - b0;
        s.rmse(k) = std::sqrt(msqe / static_cast<double>(S));
        double var = 0.0;
        for (Eigen::Index r = 0; r < R; ++r) {
            if (!ok[static_cast<std::size_t>(r)]) continue;
            var += (estimates(r, k) - mean) * (estimates(r, k) - mean);
        }
        s.sd(k) = (S > 1) ? std::sqrt(var / static_cast<double>(S - 1)) : 0.0;
        s.cp(k) = 100.0 * hr / static_cast<double>(S);
        s.cp_st(k) = 100.0 * hs / static_cast<double>(S);
    }
    return s;
}

// Time-varying replication study: pointwise coverage of the robust band and
// pointwise RMSE against the replication's own realized coefficient path,
// scored at the configured grid (all t when the grid is empty).
inline PointwiseCoverage run_mc_tv(const McConfig& config) {
    config.validate();
    if (config.model.kind != ModelSpec::Kind::regression) {
        throw ConfigError("run_mc_tv: needs a regression-kind model");
    }
    const Eigen::Index R = config.replications;
    const Eigen::Index p = config.model.p;
    const double z = two_sided_critical(config.level);
    const double h_exp = config.h_exponents.empty() ? 0.5 : config.h_exponents.front();
    const double H = std::pow(static_cast<double>(config.n), h_exp);
    const KernelSpec kernel = KernelSpec::gaussian(H);

    std::vector<Eigen::Index> ts = config.eval_points;
    if (ts.empty()) {
        ts.resize(static_cast<std::size_t>(config.n));
        for (Eigen::Index t = 1; t <= config.n; ++t) ts[static_cast<std::size_t>(t - 1)] = t;
    }
    std::vector<Eigen::Index> ts0;  // 0-based for fit_tv
    for (Eigen::Index t : ts) {
        if (t < 1 || t > config.n) throw ConfigError("run_mc_tv: eval point out of range");
        ts0.push_back(t - 1);
    }
    const auto T = static_cast<Eigen::Index>(ts.size());

    std::vector<Eigen::MatrixXd> hits(static_cast<std::size_t>(R));
    std::vector<Eigen::MatrixXd> sqerr(static_cast<std::size_t>(R));
    std::vector<std::vector<char>> point_ok(static_cast<std::size_t>(R));

    detail::for_each_replication(R, config.threads, [&](Eigen::Index r) {
        SeedRecord seed{config.master_seed, static_cast<std::uint64_t>(r + 1), 0};
        GeneratedSample gs = gen_model(config.model, config.n, seed);
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(T, p);
        Eigen::MatrixXd e = Eigen::MatrixXd::Zero(T, p);
        std::vector<char> okv(static_cast<std::size_t>(T), 0);
        try {
            TvFit fit;
            if (config.mask.active()) {
                MissingMask mask = config.mask.realize(config.n, seed);
                fit = fit_tv_missing(gs.sample, mask, kernel, ts0);
            } else {
                fit = fit_tv(gs.sample, kernel, ts0);
            }
            for (Eigen::Index i = 0; i < T; ++i) {
                const Eigen::Index t = ts0[static_cast<std::size_t>(i)];
                if (fit.failed[static_cast<std::size_t>(t)]) continue;
                okv[static_cast<std::size_t>(i)] = 1;
                for (Eigen::Index k = 0; k < p; ++k) {
                    const double truth = gs.beta_truth(t, k);
                    const double est = fit.beta_path(t, k);
                    const double se = fit.se_robust_path(t, k);
                    h(i, k) = detail::ci_covers(est, truth, se, z) ? 1.0 : 0.0;
                    e(i, k) = (est - truth) * (est - truth);
                }
            }
        } catch (const AllPointsFailedError&) {
            // every point flagged; okv stays zero
        }
        hits[static_cast<std::size_t>(r)] = std::move(h);
        sqerr[static_cast<std::size_t>(r)] = std::move(e);
        point_ok[static_cast<std::size_t>(r)] = std::move(okv);
    });

    PointwiseCoverage out;
    out.eval_points = ts;
    out.replications = R;
    out.bandwidth = H;
    out.model_id = config.model.id;
    out.coverage = Eigen::MatrixXd::Zero(T, p);
    out.rmse = Eigen::MatrixXd::Zero(T, p);
    out.excluded = Eigen::VectorXi::Zero(T);
    for (Eigen::Index i = 0; i < T; ++i) {
        Eigen::Index S = 0;
        for (Eigen::Index r = 0; r < R; ++r) {
            if (point_ok[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)]) {
                ++S;
            }
        }
        out.excluded(i) = static_cast<int>(R - S);
        if (S == 0) continue;
        for (Eigen::Index k = 0; k < p; ++k) {
            double hr = 0.0, ms = 0.0;
            for (Eigen::Index r = 0; r < R; ++r) {
                if (!point_ok[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)]) continue;
                hr += hits[static_cast<std::size_t>(r)](i, k);
                ms += sqerr[static_cast<std::size_t>(r)](i, k);
            }
            out.coverage(i, k) = 100.0 * hr / static_cast<double>(S);
            out.rmse(i, k) = std::sqrt(ms / static_cast<double>(S));
        }
    }
    return out;
}

// Size and power of the t-test for H0: beta_p = 0 while the generating value
// of beta_p walks over `null_grid`. Common random numbers: each replication
// generates z, h, eps once and reassembles y per grid value. The adjusted
// power of the standard test replaces the asymptotic critical value with the
// empirical 95th percentile of |t| at the true-null point, so adjusted power
// at the null is 5% by construction when 0.05 * R is an integer.
inline PowerCurve size_power_curve(const McConfig& config) {
    config.validate();
    if (config.model.kind != ModelSpec::Kind::regression) {
        throw ConfigError("size_power_curve: needs a regression-kind model");
    }
    if (config.null_grid.empty()) throw ConfigError("size_power_curve: empty grid");
    const bool has_null = std::any_of(config.null_grid.begin(), config.null_grid.end(),
                                      [](double v) { return v == 0.0; });
    if (!has_null) {
        throw ConfigError("size_power_curve: grid must include the true-null point 0");
    }
    const Eigen::Index R = config.replications;
    const Eigen::Index p = config.model.p;
    const auto G = static_cast<Eigen::Index>(config.null_grid.size());
    const double z5 = two_sided_critical(0.95);

    Eigen::MatrixXd t_rob(R, G), t_std(R, G);
    std::vector<char> ok(static_cast<std::size_t>(R), 0);

    detail::for_each_replication(R, config.threads, [&](Eigen::Index r) {
        SeedRecord seed{config.master_seed, static_cast<std::uint64_t>(r + 1), 0};
        GeneratedSample gs = gen_model(config.model, config.n, seed);
        try {
            Eigen::MatrixXd beta = gs.beta_truth;
            RegressionSample sample = gs.sample;
            for (Eigen::Index gi = 0; gi < G; ++gi) {
                beta.col(p - 1).setConstant(config.null_grid[static_cast<std::size_t>(gi)]);
                sample.y = rebuild_y(gs, beta);
                FixedFit fit = fit_ols(sample);
                t_rob(r, gi) = fit.beta_hat(p - 1) / fit.se_robust(p - 1);
                t_std(r, gi) = fit.beta_hat(p - 1) / fit.se_standard(p - 1);
            }
            ok[static_cast<std::size_t>(r)] = 1;
        } catch (const RankDeficientError&) {
        } catch (const ZeroStandardError&) {
        }
    });

    Eigen::Index S = 0;
    for (auto v : ok) S += (v != 0);
    if (S == 0 || static_cast<double>(R - S) > kMaxFailureShare * static_cast<double>(R)) {
        throw Error("size_power_curve: too many failed replications");
    }

    // empirical critical value from the null-point standard |t| draws
    Eigen::Index null_idx = 0;
    for (Eigen::Index gi = 0; gi < G; ++gi) {
        if (config.null_grid[static_cast<std::size_t>(gi)] == 0.0) null_idx = gi;
    }
    std::vector<double> null_abs;
    null_abs.reserve(static_cast<std::size_t>(S));
    for (Eigen::Index r = 0; r < R; ++r) {
        if (ok[static_cast<std::size_t>(r)]) null_abs.push_back(std::abs(t_std(r, null_idx)));
    }
    std::sort(null_abs.begin(), null_abs.end());
    const auto rank = static_cast<std::size_t>(
        std::ceil(0.95 * static_cast<double>(null_abs.size()))) - 1;
    const double cstar = null_abs[rank];

    PowerCurve out;
    out.grid = config.null_grid;
    out.replications = R;
    out.critical_value = cstar;
    for (Eigen::Index gi = 0; gi < G; ++gi) {
        double rr = 0.0, rs = 0.0, ra = 0.0;
        for (Eigen::Index r = 0; r < R; ++r) {
            if (!ok[static_cast<std::size_t>(r)]) continue;
            rr += std::abs(t_rob(r, gi)) > z5;
            rs += std::abs(t_std(r, gi)) > z5;
            ra += std::abs(t_std(r, gi)) > cstar;
        }
        out.reject_robust.push_back(100.0 * rr / static_cast<double>(S));
        out.reject_standard.push_back(100.0 * rs / static_cast<double>(S));
        out.adjusted_standard.push_back(100.0 * ra / static_cast<double>(S));
    }
    return out;
}

}  // namespace rols

#endif
