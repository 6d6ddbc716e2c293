#ifndef ROLS_DIAGNOSTICS_HPP
#define ROLS_DIAGNOSTICS_HPP

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "rols/errors.hpp"
#include "rols/stats.hpp"

namespace rols {

// Zero-correlation tests on a residual series at a single lag, in the
// standard and heteroskedasticity-robust flavors.
struct CorrTestResult {
    Eigen::Index lag = 0;
    double rho = 0.0;          // sample autocorrelation
    double std_stat = 0.0;     // sqrt(n) * rho
    double robust_stat = 0.0;  // self-normalized cross-product ratio
    bool reject_std_5pct = false;
    bool reject_robust_5pct = false;
};

// rho_k = sum_{t>k} (x_t - xbar)(x_{t-k} - xbar) / sum_t (x_t - xbar)^2
inline double sample_autocorr(const Eigen::VectorXd& series, Eigen::Index k) {
    const Eigen::Index n = series.size();
    if (k < 1 || k >= n) throw DimensionError("sample_autocorr: need n > k >= 1");
    const double mean = series.mean();
    Eigen::VectorXd x = series.array() - mean;
    const double denom = x.squaredNorm();
    if (denom == 0.0) throw ZeroVarianceError("sample_autocorr: constant series");
    double num = 0.0;
    for (Eigen::Index t = k; t < n; ++t) num += x(t) * x(t - k);
    return num / denom;
}

// Robust statistic: t_k = sum x~_t x~_{t-k} / sqrt(sum x~_t^2 x~_{t-k}^2) with
// x~ the demeaned series. Self-normalized, so conditionally heteroskedastic
// noise does not distort its null distribution.
inline CorrTestResult robust_corr_test(const Eigen::VectorXd& series, Eigen::Index k) {
    const Eigen::Index n = series.size();
    if (k < 1 || k >= n) throw DimensionError("robust_corr_test: need n > k >= 1");
    CorrTestResult out;
    out.lag = k;
    out.rho = sample_autocorr(series, k);
    out.std_stat = std::sqrt(static_cast<double>(n)) * out.rho;

    const double mean = series.mean();
    Eigen::VectorXd x = series.array() - mean;
    double num = 0.0, den = 0.0;
    for (Eigen::Index t = k; t < n; ++t) {
        num += x(t) * x(t - k);
        den += x(t) * x(t) * x(t - k) * x(t - k);
    }
    if (den == 0.0) throw ZeroDenominatorError("robust_corr_test: zero denominator");
    out.robust_stat = num / std::sqrt(den);

    const double z5 = two_sided_critical(0.95);
    out.reject_std_5pct = std::abs(out.std_stat) > z5;
    out.reject_robust_5pct = std::abs(out.robust_stat) > z5;
    return out;
}

inline std::vector<CorrTestResult> corr_tests_up_to(const Eigen::VectorXd& series,
                                                    Eigen::Index max_lag) {
    std::vector<CorrTestResult> out;
    out.reserve(static_cast<std::size_t>(max_lag));
    for (Eigen::Index k = 1; k <= max_lag; ++k) out.push_back(robust_corr_test(series, k));
    return out;
}

}  // namespace rols

#endif
