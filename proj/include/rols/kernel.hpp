#ifndef ROLS_KERNEL_HPP
#define ROLS_KERNEL_HPP

#include <Eigen/Core>
#include <cmath>
#include <string>

#include "rols/errors.hpp"
#include "rols/stats.hpp"

namespace rols {

// Kernel generating the time weights b_{n,tj} = K(|t-j|/H).
struct KernelSpec {
    enum class Kind { gaussian, indicator };

    Kind kind = Kind::gaussian;
    double bandwidth = 1.0;  // H > 0

    static KernelSpec gaussian(double H) { return {Kind::gaussian, H}; }
    static KernelSpec indicator(double H) { return {Kind::indicator, H}; }

    void validate() const {
        if (!(bandwidth > 0.0)) throw ConfigError("KernelSpec: bandwidth must be > 0");
    }

    double evaluate(double x) const {
        switch (kind) {
            case Kind::gaussian:
                return normal_pdf(x);
            case Kind::indicator:
                return (x >= 0.0 && x <= 1.0) ? 1.0 : 0.0;
        }
        return 0.0;
    }

    // Distance |t-j| beyond which weights fall below `drop` (documented
    // truncation threshold; 1e-15 changes nothing at test tolerances).
    double support_radius(double drop = 1e-15) const {
        if (kind == Kind::indicator) return bandwidth;
        const double x = std::sqrt(2.0 * std::log(normal_pdf(0.0) / drop));
        return bandwidth * x;
    }
};

// b_{n,tj} for 1-based time indices.
inline double kernel_weight(const KernelSpec& spec, Eigen::Index t, Eigen::Index j) {
    spec.validate();
    const double x = std::abs(static_cast<double>(t - j)) / spec.bandwidth;
    return spec.evaluate(x);
}

// Bandwidth rule H = n^h with the negligible-bias requirement
// h < 2*gamma/(2*gamma + 1), gamma the smoothness exponent of beta_t.
struct BandwidthPolicy {
    double exponent = 0.5;   // h in (0,1)
    double smoothness = 1.0; // gamma in (0,1]
};

struct BandwidthReport {
    double H = 0.0;
    double limit = 0.0;          // 2*gamma/(2*gamma+1)
    bool valid = false;          // h < limit, strictly
    double variance_rate = 0.0;  // H^{-1/2}
    double bias_rate = 0.0;      // (H/n)^gamma
    std::string message;
};

inline BandwidthReport check_bandwidth(const BandwidthPolicy& policy, Eigen::Index n) {
    BandwidthReport rep;
    rep.H = std::pow(static_cast<double>(n), policy.exponent);
    rep.limit = 2.0 * policy.smoothness / (2.0 * policy.smoothness + 1.0);
    rep.valid = policy.exponent < rep.limit;
    rep.variance_rate = 1.0 / std::sqrt(rep.H);
    rep.bias_rate = std::pow(rep.H / static_cast<double>(n), policy.smoothness);
    if (!rep.valid) {
        rep.message = "bandwidth exponent h=" + std::to_string(policy.exponent) +
                      " violates h < 2*gamma/(2*gamma+1) = " + std::to_string(rep.limit) +
                      "; the smoothing bias need not be negligible";
    }
    return rep;
}

}  // namespace rols

#endif
