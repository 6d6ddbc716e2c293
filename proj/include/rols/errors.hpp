#ifndef ROLS_ERRORS_HPP
#define ROLS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rols {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input shape or content problems (bad dimensions, non-finite values, parse failures).
struct DimensionError : Error {
    using Error::Error;
};

struct NonFiniteError : Error {
    using Error::Error;
};

// Numerically collinear design: smallest QR diagonal below 1e-10 of the largest.
struct RankDeficientError : Error {
    double condition;  // |r_max| / |r_min| of the triangular factor
    explicit RankDeficientError(const std::string& msg, double cond = 0.0)
        : Error(msg), condition(cond) {}
};

struct ZeroStandardError : Error {
    using Error::Error;
};

struct EmptyMaskError : Error {
    using Error::Error;
};

struct AllPointsFailedError : Error {
    using Error::Error;
};

struct FailedPointError : Error {
    using Error::Error;
};

struct NonStationaryError : Error {
    using Error::Error;
};

struct UnknownCatalogIdError : Error {
    using Error::Error;
};

struct ZeroVarianceError : Error {
    using Error::Error;
};

struct ZeroDenominatorError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace rols

#endif
