#ifndef ROLS_SAMPLE_HPP
#define ROLS_SAMPLE_HPP

#include <Eigen/Dense>

#include "rols/errors.hpp"

namespace rols {

// Observed regression data: y_t = beta'z_t + u_t, rows of Z are z_t'.
// The first column may be a constant for an intercept.
struct RegressionSample {
    Eigen::VectorXd y;
    Eigen::MatrixXd Z;

    RegressionSample() = default;
    RegressionSample(Eigen::VectorXd y_, Eigen::MatrixXd Z_)
        : y(std::move(y_)), Z(std::move(Z_)) {}

    Eigen::Index n() const { return Z.rows(); }
    Eigen::Index p() const { return Z.cols(); }

    void validate() const {
        if (Z.rows() != y.size()) {
            throw DimensionError("RegressionSample: y length != rows of Z");
        }
        if (Z.cols() < 1 || Z.rows() < Z.cols()) {
            throw DimensionError("RegressionSample: need n >= p >= 1");
        }
        if (!y.allFinite() || !Z.allFinite()) {
            throw NonFiniteError("RegressionSample: non-finite entries");
        }
    }
};

}  // namespace rols

#endif
