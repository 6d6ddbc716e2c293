#ifndef ROLS_TV_HPP
#define ROLS_TV_HPP

#include <Eigen/Dense>
#include <cmath>
#include <utility>
#include <vector>

#include "rols/errors.hpp"
#include "rols/kernel.hpp"
#include "rols/ols.hpp"
#include "rols/sample.hpp"

namespace rols {

// Kernel-weighted time-varying OLS.
//
// At each time t the local estimator regresses sqrt(b_{n,tj}) y_j on
// sqrt(b_{n,tj}) z_j:
//
//   beta_t = (sum_j b_{n,tj} z_j z_j')^{-1} (sum_j b_{n,tj} z_j y_j)
//
// and its robust covariance is the weight-vs-weight-squared sandwich
//
//   Omega_t = S_{zz,t}^{-1} S_{zzuu,t} S_{zz,t}^{-1},
//   S_{zz,t}   = sum_j b_{n,tj}   z_j z_j',
//   S_{zzuu,t} = sum_j b_{n,tj}^2 z_j z_j' u_j^2,  u_j = y_j - beta_j' z_j.
//
// The residual at j uses the path estimate beta_j, so the full path is
// computed before any covariance. Rank-deficient windows are flagged per t
// and skipped rather than aborting the path.
struct TvFit {
    Eigen::MatrixXd beta_path;       // n x p, row t = beta_t' (NaN where failed)
    Eigen::MatrixXd se_robust_path;  // n x p, sqrt(omega_{kk,t}) (NaN where failed
                                     // or where se was not requested)
    Eigen::VectorXd residuals;       // u_t = y_t - beta_t' z_t (NaN where failed)
    KernelSpec kernel;
    std::vector<char> failed;        // per-t rank failure flags

    Eigen::Index n() const { return beta_path.rows(); }
    Eigen::Index p() const { return beta_path.cols(); }
};

namespace detail {

struct TvWindow {
    Eigen::Index lo = 0;  // inclusive, 0-based
    Eigen::Index hi = 0;  // exclusive
};

inline TvWindow tv_window(const KernelSpec& kernel, Eigen::Index t0, Eigen::Index n) {
    const double radius = kernel.support_radius();
    TvWindow w;
    w.lo = std::max<Eigen::Index>(0, t0 - static_cast<Eigen::Index>(std::floor(radius)));
    w.hi = std::min<Eigen::Index>(n, t0 + static_cast<Eigen::Index>(std::floor(radius)) + 1);
    return w;
}

}  // namespace detail

// Fit the whole path. When `se_points` is non-empty, robust standard errors
// are computed only at those (0-based) times; the beta path and residuals are
// always computed everywhere, since the covariance at any single t needs the
// full residual path.
inline TvFit fit_tv(const RegressionSample& sample, const KernelSpec& kernel,
                    const std::vector<Eigen::Index>& se_points = {}) {
    sample.validate();
    kernel.validate();
    const Eigen::Index n = sample.n();
    const Eigen::Index p = sample.p();

    TvFit fit;
    fit.kernel = kernel;
    fit.beta_path = Eigen::MatrixXd::Constant(n, p, std::nan(""));
    fit.se_robust_path = Eigen::MatrixXd::Constant(n, p, std::nan(""));
    fit.residuals = Eigen::VectorXd::Constant(n, std::nan(""));
    fit.failed.assign(static_cast<std::size_t>(n), 0);

    Eigen::MatrixXd scaled_Z;
    Eigen::VectorXd scaled_y;
    std::vector<Eigen::MatrixXd> s_inv(static_cast<std::size_t>(n));

    Eigen::Index ok_count = 0;
    for (Eigen::Index t = 0; t < n; ++t) {
        const auto w = detail::tv_window(kernel, t, n);
        const Eigen::Index m = w.hi - w.lo;
        if (m < p) {
            fit.failed[static_cast<std::size_t>(t)] = 1;
            continue;
        }
        scaled_Z.resize(m, p);
        scaled_y.resize(m);
        for (Eigen::Index j = w.lo; j < w.hi; ++j) {
            const double b = kernel.evaluate(
                std::abs(static_cast<double>(t - j)) / kernel.bandwidth);
            const double s = std::sqrt(b);
            scaled_Z.row(j - w.lo) = s * sample.Z.row(j);
            scaled_y(j - w.lo) = s * sample.y(j);
        }
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(scaled_Z);
        if (!detail::qr_rank_ok(qr)) {
            fit.failed[static_cast<std::size_t>(t)] = 1;
            continue;
        }
        fit.beta_path.row(t) = qr.solve(scaled_y).transpose();
        fit.residuals(t) = sample.y(t) - sample.Z.row(t).dot(fit.beta_path.row(t));
        s_inv[static_cast<std::size_t>(t)] = detail::inverse_from_qr(qr);
        ++ok_count;
    }
    if (ok_count == 0) {
        throw AllPointsFailedError("fit_tv: every time point is rank deficient");
    }

    // Second pass: sandwich at the requested points, using path residuals.
    std::vector<Eigen::Index> points;
    if (se_points.empty()) {
        points.resize(static_cast<std::size_t>(n));
        for (Eigen::Index t = 0; t < n; ++t) points[static_cast<std::size_t>(t)] = t;
    } else {
        points = se_points;
    }
    Eigen::MatrixXd meat(p, p);
    for (Eigen::Index t : points) {
        if (t < 0 || t >= n) throw DimensionError("fit_tv: se point out of range");
        if (fit.failed[static_cast<std::size_t>(t)]) continue;
        const auto w = detail::tv_window(kernel, t, n);
        meat.setZero();
        for (Eigen::Index j = w.lo; j < w.hi; ++j) {
            if (fit.failed[static_cast<std::size_t>(j)]) continue;  // no residual there
            const double b = kernel.evaluate(
                std::abs(static_cast<double>(t - j)) / kernel.bandwidth);
            const double u = fit.residuals(j);
            meat.noalias() += (b * b * u * u) * (sample.Z.row(j).transpose() * sample.Z.row(j));
        }
        const Eigen::MatrixXd& si = s_inv[static_cast<std::size_t>(t)];
        Eigen::MatrixXd omega = si * meat * si;
        fit.se_robust_path.row(t) =
            omega.diagonal().cwiseMax(0.0).cwiseSqrt().transpose();
    }
    return fit;
}

// Pointwise band beta_kt +/- z_{1-alpha/2} * se_kt over t = 1..n.
inline std::pair<Eigen::VectorXd, Eigen::VectorXd> tv_confidence_band(const TvFit& fit,
                                                                      Eigen::Index k,
                                                                      double level = 0.95) {
    if (k < 0 || k >= fit.p()) {
        throw DimensionError("tv_confidence_band: coefficient index out of range");
    }
    if (!(level > 0.0 && level < 1.0)) {
        throw ConfigError("tv_confidence_band: level must be in (0,1)");
    }
    const double z = two_sided_critical(level);
    const Eigen::Index n = fit.n();
    Eigen::VectorXd lower(n), upper(n);
    for (Eigen::Index t = 0; t < n; ++t) {
        if (fit.failed[static_cast<std::size_t>(t)] ||
            std::isnan(fit.se_robust_path(t, k))) {
            throw FailedPointError("tv_confidence_band: no estimate at t=" +
                                   std::to_string(t + 1));
        }
        lower(t) = fit.beta_path(t, k) - z * fit.se_robust_path(t, k);
        upper(t) = fit.beta_path(t, k) + z * fit.se_robust_path(t, k);
    }
    return {lower, upper};
}

}  // namespace rols

#endif
