#ifndef ROLS_EMPIRICAL_HPP
#define ROLS_EMPIRICAL_HPP

#include <Eigen/Dense>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "rols/diagnostics.hpp"
#include "rols/dgp.hpp"
#include "rols/errors.hpp"
#include "rols/kernel.hpp"
#include "rols/sample.hpp"
#include "rols/tv.hpp"

namespace rols {

// Return-series pipeline:
//   (i)   r_t = mu_t + u_t: estimate the time-varying mean mu_t by an
//         intercept-only kernel regression with H = n^h;
//   (ii)  y_t = |r_t - mu_hat_t| = beta_1t + noise with beta_1t = h_t E|eps_t|:
//         a second intercept-only kernel regression estimates the scale path;
//   (iii) standard + robust zero-correlation tests on the residuals
//         y_t - beta_1t_hat over a subsample window, lags 1..max_lag;
//   (iv)  optionally the same pipeline on a simulated GARCH(1,1) series of the
//         same length (conditional heteroskedasticity should trigger
//         rejections that step (iii) does not show under an iid-noise model).
struct EmpiricalOptions {
    double h_exponent = 0.6;
    Eigen::Index subsample_lo = 500;   // 1-based inclusive
    Eigen::Index subsample_hi = 1000;
    Eigen::Index max_lag = 20;
    double level = 0.95;
    bool garch_compare = false;
    GarchParams garch{1.563e-6, 0.096974, 0.88913};  // fitted constants, taken as given
    std::uint64_t seed = 42;
};

struct EmpiricalResult {
    Eigen::VectorXd mu_hat, mu_lower, mu_upper;           // step (i)
    Eigen::VectorXd beta1_hat, beta1_lower, beta1_upper;  // step (ii)
    Eigen::VectorXd residuals;                            // y_t - beta1_hat_t, full length
    std::vector<CorrTestResult> lag_tests;                // step (iii), on the subsample
    std::optional<std::vector<CorrTestResult>> garch_lag_tests;
    double bandwidth = 0.0;
};

namespace detail {

struct InterceptFit {
    Eigen::VectorXd path, lower, upper;
};

inline InterceptFit tv_intercept(const Eigen::VectorXd& series, const KernelSpec& kernel,
                                 double level) {
    RegressionSample s;
    s.y = series;
    s.Z = Eigen::MatrixXd::Ones(series.size(), 1);
    TvFit fit = fit_tv(s, kernel);
    auto band = tv_confidence_band(fit, 0, level);
    return {fit.beta_path.col(0), std::move(band.first), std::move(band.second)};
}

}  // namespace detail

inline EmpiricalResult run_empirical(const Eigen::VectorXd& returns,
                                     const EmpiricalOptions& opt) {
    const Eigen::Index n = returns.size();
    if (n < 10) throw DimensionError("run_empirical: series too short");
    if (opt.subsample_lo < 1 || opt.subsample_hi > n || opt.subsample_lo > opt.subsample_hi) {
        throw ConfigError("run_empirical: bad subsample window");
    }
    EmpiricalResult out;
    out.bandwidth = std::pow(static_cast<double>(n), opt.h_exponent);
    const KernelSpec kernel = KernelSpec::gaussian(out.bandwidth);
    if (out.bandwidth >= static_cast<double>(n)) {
        throw ConfigError("run_empirical: series too short for the bandwidth");
    }

    auto mu = detail::tv_intercept(returns, kernel, opt.level);
    out.mu_hat = mu.path;
    out.mu_lower = mu.lower;
    out.mu_upper = mu.upper;

    Eigen::VectorXd abs_resid = (returns - out.mu_hat).cwiseAbs();
    auto b1 = detail::tv_intercept(abs_resid, kernel, opt.level);
    out.beta1_hat = b1.path;
    out.beta1_lower = b1.lower;
    out.beta1_upper = b1.upper;
    out.residuals = abs_resid - out.beta1_hat;

    const Eigen::Index m = opt.subsample_hi - opt.subsample_lo + 1;
    Eigen::VectorXd sub = out.residuals.segment(opt.subsample_lo - 1, m);
    out.lag_tests = corr_tests_up_to(sub, opt.max_lag);

    if (opt.garch_compare) {
        RngStream stream = RngStream::derive(opt.seed, 0, "garch-compare");
        Eigen::VectorXd sim = gen_garch(opt.garch, n, stream);
        Eigen::VectorXd abs_sim = sim.cwiseAbs();
        auto bs = detail::tv_intercept(abs_sim, kernel, opt.level);
        Eigen::VectorXd resid_sim = abs_sim - bs.path;
        Eigen::VectorXd sub_sim = resid_sim.segment(opt.subsample_lo - 1, m);
        out.garch_lag_tests = corr_tests_up_to(sub_sim, opt.max_lag);
    }
    return out;
}

}  // namespace rols

#endif
