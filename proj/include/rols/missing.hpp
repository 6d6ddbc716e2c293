#ifndef ROLS_MISSING_HPP
#define ROLS_MISSING_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "rols/errors.hpp"
#include "rols/kernel.hpp"
#include "rols/ols.hpp"
#include "rols/sample.hpp"
#include "rols/tv.hpp"

namespace rols {

// Missing-data indicator: tau_t = 1 iff both y_t and z_t are observed.
struct MissingMask {
    std::vector<std::uint8_t> tau;

    MissingMask() = default;
    explicit MissingMask(std::vector<std::uint8_t> tau_) : tau(std::move(tau_)) {}

    static MissingMask all_observed(Eigen::Index n) {
        return MissingMask(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 1));
    }

    // Build from a list of 1-based missing time indices.
    static MissingMask from_missing_indices(Eigen::Index n,
                                            const std::vector<Eigen::Index>& missing) {
        MissingMask m = all_observed(n);
        for (Eigen::Index idx : missing) {
            if (idx < 1 || idx > n) throw DimensionError("MissingMask: index out of range");
            m.tau[static_cast<std::size_t>(idx - 1)] = 0;
        }
        return m;
    }

    Eigen::Index n() const { return static_cast<Eigen::Index>(tau.size()); }

    Eigen::Index observed_count() const {
        Eigen::Index c = 0;
        for (auto v : tau) c += (v != 0);
        return c;
    }
};

// Zero-filled representation: (y~_t, z~_t) = (tau_t y_t, tau_t z_t).
struct MaskedSample {
    RegressionSample zero_filled;
    MissingMask mask;

    static MaskedSample apply(const RegressionSample& sample, const MissingMask& mask) {
        if (mask.n() != sample.n()) {
            throw DimensionError("MaskedSample: mask length != sample length");
        }
        MaskedSample out;
        out.mask = mask;
        out.zero_filled.y = sample.y;
        out.zero_filled.Z = sample.Z;
        for (Eigen::Index t = 0; t < sample.n(); ++t) {
            if (!mask.tau[static_cast<std::size_t>(t)]) {
                out.zero_filled.y(t) = 0.0;
                out.zero_filled.Z.row(t).setZero();
            }
        }
        return out;
    }
};

enum class MissingForm { zerofill, subsample };

// OLS on a partially observed sample. The zero-fill form runs the regression
// on the n-length zero-filled arrays; the subsample form drops the missing
// rows and runs a plain fit on the N observed ones. Both give identical
// beta_hat and robust variances; the standard-error variance divides by the
// observed count N in both forms.
inline FixedFit fit_ols_missing(const RegressionSample& sample, const MissingMask& mask,
                                MissingForm form = MissingForm::zerofill) {
    sample.validate();
    if (mask.n() != sample.n()) {
        throw DimensionError("fit_ols_missing: mask length != sample length");
    }
    const Eigen::Index N = mask.observed_count();
    if (N < sample.p()) {
        throw EmptyMaskError("fit_ols_missing: fewer observed rows than coefficients");
    }
    if (form == MissingForm::zerofill) {
        MaskedSample ms = MaskedSample::apply(sample, mask);
        return detail::fit_ols_core(ms.zero_filled, N);
    }
    RegressionSample sub;
    sub.y.resize(N);
    sub.Z.resize(N, sample.p());
    Eigen::Index r = 0;
    for (Eigen::Index t = 0; t < sample.n(); ++t) {
        if (mask.tau[static_cast<std::size_t>(t)]) {
            sub.y(r) = sample.y(t);
            sub.Z.row(r) = sample.Z.row(t);
            ++r;
        }
    }
    return detail::fit_ols_core(sub, N);
}

// Effective kernel mass N_t = sum_j tau_j b_{n,tj}; how much observed weight
// the window at t actually carries. Callers compare H/N_t against an advisory
// threshold (estimation at t is unreliable when N_t is small, e.g. < 0.1 H).
inline double effective_kernel_mass(const MissingMask& mask, const KernelSpec& kernel,
                                    Eigen::Index t) {
    kernel.validate();
    const Eigen::Index n = mask.n();
    if (t < 0 || t >= n) throw DimensionError("effective_kernel_mass: t out of range");
    const auto w = detail::tv_window(kernel, t, n);
    double mass = 0.0;
    for (Eigen::Index j = w.lo; j < w.hi; ++j) {
        if (mask.tau[static_cast<std::size_t>(j)]) {
            mass += kernel.evaluate(std::abs(static_cast<double>(t - j)) / kernel.bandwidth);
        }
    }
    return mass;
}

inline constexpr double kMassAdvisoryFactor = 0.1;  // warn when N_t < 0.1 * H

// Time-varying fit on the zero-filled arrays. Windows whose observed rows are
// rank deficient get per-t failure flags, as in fit_tv.
inline TvFit fit_tv_missing(const RegressionSample& sample, const MissingMask& mask,
                            const KernelSpec& kernel,
                            const std::vector<Eigen::Index>& se_points = {}) {
    sample.validate();
    MaskedSample ms = MaskedSample::apply(sample, mask);
    return fit_tv(ms.zero_filled, kernel, se_points);
}

}  // namespace rols

#endif
