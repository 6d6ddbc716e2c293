#ifndef ROLS_OLS_HPP
#define ROLS_OLS_HPP

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "rols/errors.hpp"
#include "rols/sample.hpp"
#include "rols/stats.hpp"

namespace rols {

// Relative threshold on the QR diagonal below which a design is treated as
// numerically rank deficient.
inline constexpr double kRankTolerance = 1e-10;

namespace detail {

// Rank check on a computed column-pivoted QR: smallest |R_ii| against largest.
// Returns the diagonal ratio |r_max|/|r_min| as a condition proxy.
inline double qr_condition(const Eigen::ColPivHouseholderQR<Eigen::MatrixXd>& qr) {
    const auto& R = qr.matrixR();
    const Eigen::Index p = R.cols();
    double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < p; ++i) {
        double d = std::abs(R(i, i));
        dmax = std::max(dmax, d);
        dmin = std::min(dmin, d);
    }
    if (dmin == 0.0) return std::numeric_limits<double>::infinity();
    return dmax / dmin;
}

inline bool qr_rank_ok(const Eigen::ColPivHouseholderQR<Eigen::MatrixXd>& qr) {
    const auto& R = qr.matrixR();
    const Eigen::Index p = R.cols();
    double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < p; ++i) {
        double d = std::abs(R(i, i));
        dmax = std::max(dmax, d);
        dmin = std::min(dmin, d);
    }
    return dmin >= kRankTolerance * dmax;
}

// (X'X)^{-1} from the QR of X: P R^{-1} R^{-T} P'. Avoids squaring the
// condition number the way an explicit normal-equations inverse would.
inline Eigen::MatrixXd inverse_from_qr(const Eigen::ColPivHouseholderQR<Eigen::MatrixXd>& qr) {
    const Eigen::Index p = qr.matrixR().cols();
    Eigen::MatrixXd Rinv =
        qr.matrixR().topLeftCorner(p, p).template triangularView<Eigen::Upper>().solve(
            Eigen::MatrixXd::Identity(p, p));
    Eigen::MatrixXd Sinv = Rinv * Rinv.transpose();
    Eigen::MatrixXd P = qr.colsPermutation();
    Sinv = P * Sinv * P.transpose();
    return 0.5 * (Sinv + Sinv.transpose());
}

}  // namespace detail

// Fitted fixed-parameter OLS with both covariance estimators.
//
//   beta_hat     solves min_b ||y - Z b||^2 (QR of Z)
//   cov_robust   S_zz^{-1} (sum_t z_t z_t' u_t^2) S_zz^{-1}   (White / HC0)
//   cov_standard S_zz^{-1} * (n^{-1} sum_t u_t^2)
struct FixedFit {
    Eigen::VectorXd beta_hat;
    Eigen::VectorXd residuals;
    Eigen::MatrixXd s_zz;          // sum z_t z_t'
    Eigen::MatrixXd cov_robust;
    Eigen::MatrixXd cov_standard;
    Eigen::VectorXd se_robust;
    Eigen::VectorXd se_standard;
};

namespace detail {

// Shared core: fit on (y, Z) with the standard-error variance divisor given
// explicitly. The missing-data zero-fill form passes the observed count N so
// that sigma^2 is not deflated by all-zero rows.
inline FixedFit fit_ols_core(const RegressionSample& sample, Eigen::Index sigma_divisor) {
    const Eigen::Index n = sample.n();
    const Eigen::Index p = sample.p();

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(sample.Z);
    if (!qr_rank_ok(qr)) {
        throw RankDeficientError(
            "fit_ols: collinear regressors (QR diagonal ratio " +
                std::to_string(qr_condition(qr)) + ")",
            qr_condition(qr));
    }

    FixedFit fit;
    fit.beta_hat = qr.solve(sample.y);
    fit.residuals = sample.y - sample.Z * fit.beta_hat;
    fit.s_zz = sample.Z.transpose() * sample.Z;

    Eigen::MatrixXd s_inv = inverse_from_qr(qr);

    // meat of the sandwich: sum_t z_t z_t' u_t^2
    Eigen::MatrixXd meat = Eigen::MatrixXd::Zero(p, p);
    for (Eigen::Index t = 0; t < n; ++t) {
        const double u2 = fit.residuals(t) * fit.residuals(t);
        meat.noalias() += u2 * (sample.Z.row(t).transpose() * sample.Z.row(t));
    }
    Eigen::MatrixXd cov = s_inv * meat * s_inv;
    fit.cov_robust = 0.5 * (cov + cov.transpose());

    const double sigma2 = fit.residuals.squaredNorm() / static_cast<double>(sigma_divisor);
    fit.cov_standard = s_inv * sigma2;
    fit.cov_standard = 0.5 * (fit.cov_standard + fit.cov_standard.transpose()).eval();

    fit.se_robust = fit.cov_robust.diagonal().cwiseMax(0.0).cwiseSqrt();
    fit.se_standard = fit.cov_standard.diagonal().cwiseMax(0.0).cwiseSqrt();
    return fit;
}

}  // namespace detail

inline FixedFit fit_ols(const RegressionSample& sample) {
    sample.validate();
    return detail::fit_ols_core(sample, sample.n());
}

enum class SeFlavor { robust, standard };

// Two-sided test of H0: beta_k = beta0 with normal critical values.
struct CoefficientTest {
    Eigen::Index k = 0;       // 0-based coefficient index
    double beta0 = 0.0;
    double t_stat = 0.0;
    double se_used = 0.0;
    SeFlavor flavor = SeFlavor::robust;
    bool reject_5pct = false;     // |t| > z_{0.975}, strictly
    bool reject_at_level = false; // |t| > z_{1-alpha/2} at the requested level
    double ci_lower = 0.0;        // beta_hat_k -/+ z * se at the requested level
    double ci_upper = 0.0;
};

inline CoefficientTest test_coefficient(const FixedFit& fit, Eigen::Index k, double beta0,
                                        SeFlavor flavor, double level = 0.95) {
    if (k < 0 || k >= fit.beta_hat.size()) {
        throw DimensionError("test_coefficient: coefficient index out of range");
    }
    CoefficientTest out;
    out.k = k;
    out.beta0 = beta0;
    out.flavor = flavor;
    out.se_used = (flavor == SeFlavor::robust) ? fit.se_robust(k) : fit.se_standard(k);
    if (out.se_used <= 0.0) {
        throw ZeroStandardError("test_coefficient: zero standard error (exact fit?)");
    }
    out.t_stat = (fit.beta_hat(k) - beta0) / out.se_used;
    const double z5 = two_sided_critical(0.95);
    const double z = two_sided_critical(level);
    // Boundary convention: rejection requires strict inequality.
    out.reject_5pct = std::abs(out.t_stat) > z5;
    out.reject_at_level = std::abs(out.t_stat) > z;
    out.ci_lower = fit.beta_hat(k) - z * out.se_used;
    out.ci_upper = fit.beta_hat(k) + z * out.se_used;
    return out;
}

}  // namespace rols

#endif
