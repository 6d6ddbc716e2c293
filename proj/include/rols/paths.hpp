#ifndef ROLS_PATHS_HPP
#define ROLS_PATHS_HPP

#include <Eigen/Dense>
#include <cmath>
#include <memory>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "rols/errors.hpp"
#include "rols/rng.hpp"
#include "rols/stats.hpp"

namespace rols {

// Latent scale/mean/coefficient paths over t = 1..n.
//
// Primitives:
//   constant(c)                c
//   sine(a, f, o)              a * sin(f * pi * t / n) + o
//   linear(c)                  c * t / n
//   power(g)                   t^g
//   abs_scaled_walk            |coef * n^nexp * sum_{j<=t} iota_j| + offset,
//                              iota iid N(0,1) or ARFIMA(0,d,0)
// Composites: product(a, b), sum(a, b).
//
// Each walk owns a named RNG stream so that stochastic paths are independent
// of each other and of the regression noise.
struct PathSpec {
    enum class Kind { constant, sine, linear, power, abs_scaled_walk, product, sum };
    enum class Innovation { iid_normal, arfima };

    Kind kind = Kind::constant;
    double value = 0.0;       // constant
    double amplitude = 0.0;   // sine
    double frequency = 0.0;   // sine (multiples of pi)
    double offset = 0.0;      // sine, abs_scaled_walk
    double coef = 0.0;        // linear, abs_scaled_walk
    double exponent = 0.0;    // power
    double n_exponent = 0.0;  // abs_scaled_walk scale = coef * n^n_exponent
    Innovation innovation = Innovation::iid_normal;
    double memory_d = 0.0;    // arfima innovation memory
    std::string stream;       // walk stream id
    std::shared_ptr<PathSpec> a, b;  // composites

    static PathSpec constant(double c) {
        PathSpec p;
        p.kind = Kind::constant;
        p.value = c;
        return p;
    }
    static PathSpec sine(double amplitude, double frequency, double offset) {
        PathSpec p;
        p.kind = Kind::sine;
        p.amplitude = amplitude;
        p.frequency = frequency;
        p.offset = offset;
        return p;
    }
    static PathSpec linear(double coef) {
        PathSpec p;
        p.kind = Kind::linear;
        p.coef = coef;
        return p;
    }
    static PathSpec power(double exponent) {
        PathSpec p;
        p.kind = Kind::power;
        p.exponent = exponent;
        return p;
    }
    static PathSpec walk(double coef, double n_exponent, double offset, std::string stream,
                         Innovation innovation = Innovation::iid_normal, double d = 0.0) {
        PathSpec p;
        p.kind = Kind::abs_scaled_walk;
        p.coef = coef;
        p.n_exponent = n_exponent;
        p.offset = offset;
        p.stream = std::move(stream);
        p.innovation = innovation;
        p.memory_d = d;
        return p;
    }
    static PathSpec product(PathSpec x, PathSpec y) {
        PathSpec p;
        p.kind = Kind::product;
        p.a = std::make_shared<PathSpec>(std::move(x));
        p.b = std::make_shared<PathSpec>(std::move(y));
        return p;
    }
    static PathSpec sum(PathSpec x, PathSpec y) {
        PathSpec p;
        p.kind = Kind::sum;
        p.a = std::make_shared<PathSpec>(std::move(x));
        p.b = std::make_shared<PathSpec>(std::move(y));
        return p;
    }
};

// ARFIMA(0,d,0) MA(inf) coefficients a_0 = 1, a_j = a_{j-1} (j-1+d)/j.
inline Eigen::VectorXd arfima_coeffs(double d, Eigen::Index count) {
    if (!(std::abs(d) < 0.5)) throw ConfigError("arfima_coeffs: require |d| < 0.5");
    Eigen::VectorXd a(count);
    if (count == 0) return a;
    a(0) = 1.0;
    for (Eigen::Index j = 1; j < count; ++j) {
        a(j) = a(j - 1) * (static_cast<double>(j) - 1.0 + d) / static_cast<double>(j);
    }
    return a;
}

inline constexpr Eigen::Index kArfimaTruncation = 2000;

// Truncated MA(inf) convolution of iid standard normal innovations.
inline Eigen::VectorXd gen_arfima(double d, Eigen::Index n, RngStream stream,
                                  Eigen::Index truncation = kArfimaTruncation) {
    const Eigen::VectorXd a = arfima_coeffs(d, truncation);
    Eigen::VectorXd e(n + truncation - 1);
    for (Eigen::Index i = 0; i < e.size(); ++i) e(i) = stream.next_normal();
    Eigen::VectorXd x(n);
    for (Eigen::Index t = 0; t < n; ++t) {
        double s = 0.0;
        for (Eigen::Index j = 0; j < truncation; ++j) {
            s += a(j) * e(truncation - 1 + t - j);
        }
        x(t) = s;
    }
    return x;
}

// Realize a path over t = 1..n. Walk streams derive from (master, replication,
// "path:" + stream id) and never touch the noise streams.
inline Eigen::VectorXd evaluate_path(const PathSpec& spec, Eigen::Index n,
                                     const SeedRecord& seed) {
    Eigen::VectorXd out(n);
    switch (spec.kind) {
        case PathSpec::Kind::constant:
            out.setConstant(spec.value);
            return out;
        case PathSpec::Kind::sine:
            for (Eigen::Index t = 1; t <= n; ++t) {
                out(t - 1) = spec.amplitude *
                                 std::sin(spec.frequency * kPi * static_cast<double>(t) /
                                          static_cast<double>(n)) +
                             spec.offset;
            }
            return out;
        case PathSpec::Kind::linear:
            for (Eigen::Index t = 1; t <= n; ++t) {
                out(t - 1) = spec.coef * static_cast<double>(t) / static_cast<double>(n);
            }
            return out;
        case PathSpec::Kind::power:
            for (Eigen::Index t = 1; t <= n; ++t) {
                out(t - 1) = std::pow(static_cast<double>(t), spec.exponent);
            }
            return out;
        case PathSpec::Kind::abs_scaled_walk: {
            RngStream stream =
                RngStream::derive(seed.master, seed.replication, "path:" + spec.stream);
            Eigen::VectorXd iota;
            if (spec.innovation == PathSpec::Innovation::iid_normal) {
                iota.resize(n);
                for (Eigen::Index i = 0; i < n; ++i) iota(i) = stream.next_normal();
            } else {
                iota = gen_arfima(spec.memory_d, n, stream);
            }
            const double scale =
                spec.coef * std::pow(static_cast<double>(n), spec.n_exponent);
            double cum = 0.0;
            for (Eigen::Index t = 0; t < n; ++t) {
                cum += iota(t);
                out(t) = std::abs(scale * cum) + spec.offset;
            }
            return out;
        }
        case PathSpec::Kind::product:
            return evaluate_path(*spec.a, n, seed).cwiseProduct(
                evaluate_path(*spec.b, n, seed));
        case PathSpec::Kind::sum:
            return evaluate_path(*spec.a, n, seed) + evaluate_path(*spec.b, n, seed);
    }
    throw ConfigError("evaluate_path: unknown kind");
}

// ---- JSON (de)serialization ----

inline void to_json(nlohmann::json& j, const PathSpec& p) {
    using Kind = PathSpec::Kind;
    switch (p.kind) {
        case Kind::constant:
            j = {{"kind", "constant"}, {"value", p.value}};
            return;
        case Kind::sine:
            j = {{"kind", "sine"},
                 {"amplitude", p.amplitude},
                 {"frequency", p.frequency},
                 {"offset", p.offset}};
            return;
        case Kind::linear:
            j = {{"kind", "linear"}, {"coef", p.coef}};
            return;
        case Kind::power:
            j = {{"kind", "power"}, {"exponent", p.exponent}};
            return;
        case Kind::abs_scaled_walk:
            j = {{"kind", "abs_scaled_walk"}, {"coef", p.coef},
                 {"n_exponent", p.n_exponent}, {"offset", p.offset},
                 {"stream", p.stream}};
            if (p.innovation == PathSpec::Innovation::arfima) {
                j["innovation"] = {{"kind", "arfima"}, {"d", p.memory_d}};
            } else {
                j["innovation"] = "iid_normal";
            }
            return;
        case Kind::product:
        case Kind::sum:
            j = {{"kind", p.kind == Kind::product ? "product" : "sum"},
                 {"a", *p.a},
                 {"b", *p.b}};
            return;
    }
}

inline void from_json(const nlohmann::json& j, PathSpec& p) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "constant") {
        p = PathSpec::constant(j.at("value").get<double>());
    } else if (kind == "sine") {
        p = PathSpec::sine(j.at("amplitude").get<double>(), j.at("frequency").get<double>(),
                           j.at("offset").get<double>());
    } else if (kind == "linear") {
        p = PathSpec::linear(j.at("coef").get<double>());
    } else if (kind == "power") {
        p = PathSpec::power(j.at("exponent").get<double>());
    } else if (kind == "abs_scaled_walk") {
        PathSpec::Innovation innov = PathSpec::Innovation::iid_normal;
        double d = 0.0;
        if (j.contains("innovation") && j.at("innovation").is_object()) {
            innov = PathSpec::Innovation::arfima;
            d = j.at("innovation").at("d").get<double>();
        }
        p = PathSpec::walk(j.at("coef").get<double>(), j.at("n_exponent").get<double>(),
                           j.at("offset").get<double>(), j.at("stream").get<std::string>(),
                           innov, d);
    } else if (kind == "product" || kind == "sum") {
        PathSpec a = j.at("a").get<PathSpec>();
        PathSpec b = j.at("b").get<PathSpec>();
        p = (kind == "product") ? PathSpec::product(std::move(a), std::move(b))
                                : PathSpec::sum(std::move(a), std::move(b));
    } else {
        throw ConfigError("PathSpec: unknown kind '" + kind + "'");
    }
}

}  // namespace rols

#endif
