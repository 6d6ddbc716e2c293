// Test-only oracles, deliberately independent of the library's solve paths:
// explicit normal equations with adjugate (Cramer) inverses for p <= 3.
#ifndef ROLS_TESTS_ORACLE_HELPERS_HPP
#define ROLS_TESTS_ORACLE_HELPERS_HPP

#include <Eigen/Dense>
#include <stdexcept>

namespace oracle {

inline Eigen::MatrixXd cramer_inverse(const Eigen::MatrixXd& A) {
    const Eigen::Index p = A.rows();
    Eigen::MatrixXd inv(p, p);
    if (p == 1) {
        inv(0, 0) = 1.0 / A(0, 0);
    } else if (p == 2) {
        const double det = A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0);
        inv << A(1, 1), -A(0, 1), -A(1, 0), A(0, 0);
        inv /= det;
    } else if (p == 3) {
        const double det = A(0, 0) * (A(1, 1) * A(2, 2) - A(1, 2) * A(2, 1)) -
                           A(0, 1) * (A(1, 0) * A(2, 2) - A(1, 2) * A(2, 0)) +
                           A(0, 2) * (A(1, 0) * A(2, 1) - A(1, 1) * A(2, 0));
        inv(0, 0) = A(1, 1) * A(2, 2) - A(1, 2) * A(2, 1);
        inv(0, 1) = A(0, 2) * A(2, 1) - A(0, 1) * A(2, 2);
        inv(0, 2) = A(0, 1) * A(1, 2) - A(0, 2) * A(1, 1);
        inv(1, 0) = A(1, 2) * A(2, 0) - A(1, 0) * A(2, 2);
        inv(1, 1) = A(0, 0) * A(2, 2) - A(0, 2) * A(2, 0);
        inv(1, 2) = A(0, 2) * A(1, 0) - A(0, 0) * A(1, 2);
        inv(2, 0) = A(1, 0) * A(2, 1) - A(1, 1) * A(2, 0);
        inv(2, 1) = A(0, 1) * A(2, 0) - A(0, 0) * A(2, 1);
        inv(2, 2) = A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0);
        inv /= det;
    } else {
        throw std::runtime_error("cramer_inverse: p <= 3 only");
    }
    return inv;
}

struct OlsOracle {
    Eigen::VectorXd beta;
    Eigen::VectorXd residuals;
    Eigen::MatrixXd cov_robust;
    Eigen::MatrixXd cov_standard;  // divisor passed by the caller
};

inline OlsOracle fit(const Eigen::VectorXd& y, const Eigen::MatrixXd& Z,
                     Eigen::Index sigma_divisor = -1) {
    const Eigen::Index n = Z.rows();
    const Eigen::Index p = Z.cols();
    if (sigma_divisor < 0) sigma_divisor = n;
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(p, p);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(p);
    for (Eigen::Index t = 0; t < n; ++t) {
        S += Z.row(t).transpose() * Z.row(t);
        b += Z.row(t).transpose() * y(t);
    }
    OlsOracle out;
    Eigen::MatrixXd Sinv = cramer_inverse(S);
    out.beta = Sinv * b;
    out.residuals = y - Z * out.beta;
    Eigen::MatrixXd meat = Eigen::MatrixXd::Zero(p, p);
    double ss = 0.0;
    for (Eigen::Index t = 0; t < n; ++t) {
        const double u2 = out.residuals(t) * out.residuals(t);
        meat += u2 * (Z.row(t).transpose() * Z.row(t));
        ss += u2;
    }
    out.cov_robust = Sinv * meat * Sinv;
    out.cov_standard = Sinv * (ss / static_cast<double>(sigma_divisor));
    return out;
}

}  // namespace oracle

#endif
