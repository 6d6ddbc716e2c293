#ifndef ROLS_DGP_HPP
#define ROLS_DGP_HPP

#include <Eigen/Dense>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rols/errors.hpp"
#include "rols/paths.hpp"
#include "rols/rng.hpp"
#include "rols/sample.hpp"

namespace rols {

// ---- noise ----

struct GarchParams {
    double omega = 1.0;
    double alpha = 0.2;  // coefficient on eps_{t-1}^2
    double beta = 0.7;   // coefficient on sigma_{t-1}^2

    void validate() const {
        if (!(omega > 0.0) || alpha < 0.0 || beta < 0.0) {
            throw ConfigError("GarchParams: need omega > 0, alpha >= 0, beta >= 0");
        }
        if (!(alpha + beta < 1.0)) {
            throw NonStationaryError("GarchParams: alpha + beta must be < 1");
        }
    }
    double unconditional_variance() const { return omega / (1.0 - alpha - beta); }
};

struct NoiseSpec {
    enum class Kind { iid_normal, garch11, lagged_product };

    Kind kind = Kind::iid_normal;
    GarchParams garch;
    Eigen::Index burn_in = 1000;

    static NoiseSpec iid_normal() { return {}; }
    static NoiseSpec garch11(double omega, double alpha, double beta,
                             Eigen::Index burn = 1000) {
        NoiseSpec s;
        s.kind = Kind::garch11;
        s.garch = {omega, alpha, beta};
        s.burn_in = burn;
        return s;
    }
    // eps_t = e_t e_{t-1}, a martingale difference that is not independent.
    static NoiseSpec lagged_product() {
        NoiseSpec s;
        s.kind = Kind::lagged_product;
        return s;
    }
};

// GARCH(1,1): sigma^2_t = omega + beta sigma^2_{t-1} + alpha eps^2_{t-1},
// eps_t = sigma_t e_t. Returns n values after discarding burn_in draws;
// sigma^2 starts at the unconditional variance.
inline Eigen::VectorXd gen_garch(const GarchParams& params, Eigen::Index n, RngStream stream,
                                 Eigen::Index burn_in = 1000) {
    params.validate();
    Eigen::VectorXd out(n);
    double s2 = params.unconditional_variance();
    double eps = std::sqrt(s2) * stream.next_normal();
    if (burn_in == 0) out(0) = eps;
    for (Eigen::Index i = 1; i < burn_in + n; ++i) {
        s2 = params.omega + params.beta * s2 + params.alpha * eps * eps;
        eps = std::sqrt(s2) * stream.next_normal();
        if (i >= burn_in) out(i - burn_in) = eps;
    }
    return out;
}

inline Eigen::VectorXd gen_noise(const NoiseSpec& spec, Eigen::Index n, RngStream stream) {
    switch (spec.kind) {
        case NoiseSpec::Kind::iid_normal: {
            Eigen::VectorXd out(n);
            for (Eigen::Index i = 0; i < n; ++i) out(i) = stream.next_normal();
            return out;
        }
        case NoiseSpec::Kind::garch11:
            return gen_garch(spec.garch, n, stream, spec.burn_in);
        case NoiseSpec::Kind::lagged_product: {
            Eigen::VectorXd out(n);
            double prev = stream.next_normal();
            for (Eigen::Index i = 0; i < n; ++i) {
                double e = stream.next_normal();
                out(i) = e * prev;
                prev = e;
            }
            return out;
        }
    }
    throw ConfigError("gen_noise: unknown kind");
}

// ---- model specification ----

// Regression DGP:  y_t = sum_k beta_kt z_kt + h_t eps_t,  z_1t = 1,
//                  z_kt = mu_kt + g_kt eta_kt               (k = 2..p)
// with eta either the AR(1) recursion eta_kt = 0.5 eta_{k,t-1} + eps_{t-(k-1)}
// driven by lags of the regression noise, or iid standard normal.
//
// Autoregression DGP:  y_t = phi_0 + phi_1 y_{t-1} + ... + phi_q y_{t-q} + eps_t,
// exposed as the regression of y_t on (1, y_{t-1}, ..., y_{t-q}).
struct ModelSpec {
    enum class Kind { regression, autoregression };
    enum class EtaKind { lagged_eps_ar, iid_normal };

    std::string id = "custom";
    Kind kind = Kind::regression;

    // regression fields
    Eigen::Index p = 0;
    std::vector<PathSpec> beta;  // size p
    std::vector<PathSpec> mu;    // size p-1, regressors k = 2..p
    std::vector<PathSpec> g;     // size p-1
    PathSpec h = PathSpec::constant(1.0);
    NoiseSpec noise;
    EtaKind eta = EtaKind::lagged_eps_ar;
    double eta_ar_coef = 0.5;

    // autoregression fields
    std::vector<double> ar_coeffs;  // phi_0 .. phi_q
    Eigen::Index ar_burn_in = 500;

    void validate() const {
        if (kind == Kind::regression) {
            if (p < 1) throw ConfigError("ModelSpec: p >= 1 required");
            if (static_cast<Eigen::Index>(beta.size()) != p ||
                static_cast<Eigen::Index>(mu.size()) != p - 1 ||
                static_cast<Eigen::Index>(g.size()) != p - 1) {
                throw ConfigError("ModelSpec: beta/mu/g path counts inconsistent with p");
            }
        } else {
            if (ar_coeffs.size() < 2) throw ConfigError("ModelSpec: AR needs phi_0, phi_1, ...");
            double s = 0.0;
            for (std::size_t i = 1; i < ar_coeffs.size(); ++i) s += std::abs(ar_coeffs[i]);
            if (!(s < 1.0)) {
                // sufficient (not necessary) stationarity check; catches the catalog cases
                throw NonStationaryError("ModelSpec: AR coefficient sum >= 1");
            }
        }
    }
};

// A realized sample plus the latent truth needed for scoring.
struct GeneratedSample {
    RegressionSample sample;
    Eigen::MatrixXd beta_truth;  // n x p (constant rows for fixed-beta models)
    Eigen::VectorXd h;           // noise scale path
    Eigen::VectorXd eps;         // raw noise
    Eigen::MatrixXd g;           // n x p scale paths (column 0 = 1)
    Eigen::MatrixXd mu;          // n x p mean paths (column 0 = 0)
    SeedRecord seed;
    std::string model_id;
};

namespace detail {

inline constexpr Eigen::Index kEtaPreSample = 500;

inline RngStream noise_stream(const SeedRecord& seed, std::string_view tag) {
    return RngStream::derive(seed.master ^ mix64(seed.noise_salt + 0x517CC1B727220A95ULL),
                             seed.replication, tag);
}

inline GeneratedSample gen_regression(const ModelSpec& spec, Eigen::Index n,
                                      const SeedRecord& seed) {
    const Eigen::Index p = spec.p;
    const Eigen::Index lag_max = p - 1;
    const Eigen::Index pre = kEtaPreSample + lag_max;

    GeneratedSample out;
    out.seed = seed;
    out.model_id = spec.id;

    Eigen::VectorXd eps_full = gen_noise(spec.noise, n + pre, noise_stream(seed, "noise"));

    // eta recursion through the pre-sample window, started at zero
    Eigen::MatrixXd eta(n, p);
    eta.col(0).setOnes();
    if (spec.eta == ModelSpec::EtaKind::lagged_eps_ar) {
        for (Eigen::Index k = 2; k <= p; ++k) {
            const Eigen::Index lag = k - 1;
            double prev = 0.0;
            for (Eigen::Index i = lag; i < n + pre; ++i) {
                const double xi = eps_full(i - lag);
                prev = spec.eta_ar_coef * prev + xi;
                if (i >= pre) eta(i - pre, k - 1) = prev;
            }
        }
    } else {
        RngStream es = noise_stream(seed, "eta");
        for (Eigen::Index k = 2; k <= p; ++k) {
            for (Eigen::Index t = 0; t < n; ++t) eta(t, k - 1) = es.next_normal();
        }
    }

    out.eps = eps_full.tail(n);
    out.h = evaluate_path(spec.h, n, seed);
    out.mu = Eigen::MatrixXd::Zero(n, p);
    out.g = Eigen::MatrixXd::Ones(n, p);
    out.beta_truth.resize(n, p);
    for (Eigen::Index k = 2; k <= p; ++k) {
        out.mu.col(k - 1) = evaluate_path(spec.mu[static_cast<std::size_t>(k - 2)], n, seed);
        out.g.col(k - 1) = evaluate_path(spec.g[static_cast<std::size_t>(k - 2)], n, seed);
    }
    for (Eigen::Index k = 1; k <= p; ++k) {
        out.beta_truth.col(k - 1) =
            evaluate_path(spec.beta[static_cast<std::size_t>(k - 1)], n, seed);
    }

    out.sample.Z.resize(n, p);
    out.sample.Z.col(0).setOnes();
    for (Eigen::Index k = 2; k <= p; ++k) {
        out.sample.Z.col(k - 1) =
            out.mu.col(k - 1) + out.g.col(k - 1).cwiseProduct(eta.col(k - 1));
    }
    out.sample.y = (out.beta_truth.cwiseProduct(out.sample.Z)).rowwise().sum() +
                   out.h.cwiseProduct(out.eps);
    return out;
}

inline GeneratedSample gen_autoregression(const ModelSpec& spec, Eigen::Index n,
                                          const SeedRecord& seed) {
    const Eigen::Index q = static_cast<Eigen::Index>(spec.ar_coeffs.size()) - 1;
    const Eigen::Index total = spec.ar_burn_in + n + q;

    GeneratedSample out;
    out.seed = seed;
    out.model_id = spec.id;

    Eigen::VectorXd eps = gen_noise(spec.noise, total, noise_stream(seed, "noise"));
    Eigen::VectorXd y = Eigen::VectorXd::Zero(total);
    for (Eigen::Index t = 0; t < total; ++t) {
        double v = spec.ar_coeffs[0];
        for (Eigen::Index j = 1; j <= q; ++j) {
            if (t - j >= 0) v += spec.ar_coeffs[static_cast<std::size_t>(j)] * y(t - j);
        }
        y(t) = v + eps(t);
    }

    const Eigen::Index p = q + 1;
    out.sample.y = y.tail(n);
    out.sample.Z.resize(n, p);
    out.sample.Z.col(0).setOnes();
    for (Eigen::Index j = 1; j <= q; ++j) {
        out.sample.Z.col(j) = y.segment(total - n - j, n);
    }
    out.eps = eps.tail(n);
    out.h = Eigen::VectorXd::Ones(n);
    out.g = Eigen::MatrixXd::Ones(n, p);
    out.mu = Eigen::MatrixXd::Zero(n, p);
    out.beta_truth.resize(n, p);
    for (Eigen::Index k = 0; k < p; ++k) {
        out.beta_truth.col(k).setConstant(spec.ar_coeffs[static_cast<std::size_t>(k)]);
    }
    return out;
}

}  // namespace detail

// ---- catalog ----

inline constexpr double kModel4WalkExponent = 0.9;  // d + 1/2 with d = 0.4

// Named simulation designs. `gamma` parameterizes supp2 (and overrides the
// model4 walk exponent when given).
inline ModelSpec catalog_model(const std::string& id,
                               std::optional<double> gamma = std::nullopt) {
    using PS = PathSpec;
    ModelSpec m;
    m.id = id;
    m.p = 3;
    m.noise = NoiseSpec::garch11(1.0, 0.2, 0.7);
    const PS mu_main = PS::sine(0.5, 1.0, 1.0);  // 0.5 sin(pi t/n) + 1

    if (id == "model1") {
        m.beta = {PS::constant(0.5), PS::constant(0.4), PS::constant(0.3)};
        m.mu = {mu_main, mu_main};
        m.g = {PS::linear(0.4), PS::linear(0.4)};
        m.h = PS::linear(0.3);
    } else if (id == "model2") {
        m.beta = {PS::constant(0.5), PS::constant(0.4), PS::constant(0.3)};
        m.mu = {mu_main, mu_main};
        m.g = {PS::walk(0.5, -0.5, 0.25, "g2"), PS::walk(0.5, -0.5, 0.25, "g3")};
        m.h = PS::walk(0.5, -0.5, 0.25, "h");
    } else if (id == "model3") {
        m.beta = {PS::sine(0.5, 0.5, 1.0), PS::sine(0.5, 1.0, 1.0), PS::sine(0.5, 2.0, 1.0)};
        m.mu = {mu_main, mu_main};
        m.g = {PS::sine(0.5, 1.0, 1.0), PS::sine(0.5, 1.0, 1.0)};
        m.h = PS::sine(0.5, 2.0, 1.0);
    } else if (id == "model4") {
        const double ge = gamma.value_or(kModel4WalkExponent);
        m.noise = NoiseSpec::iid_normal();
        m.beta = {PS::sine(0.5, 0.5, 1.0), PS::sine(0.5, 1.0, 1.0),
                  PS::sum(PS::walk(1.0, -ge, 0.0, "beta3", PS::Innovation::arfima, 0.4),
                          PS::linear(0.3))};
        m.mu = {mu_main, mu_main};
        m.g = {PS::walk(1.0, -ge, 0.2, "g2", PS::Innovation::arfima, 0.4),
               PS::sine(0.5, 1.0, 1.0)};
        m.h = PS::sine(0.5, 2.0, 1.0);
    } else if (id == "ar2") {
        m.kind = ModelSpec::Kind::autoregression;
        m.ar_coeffs = {0.5, 0.4, 0.3};
        m.noise = NoiseSpec::lagged_product();
        m.p = 3;
    } else if (id == "supp1") {
        m.beta = {PS::constant(0.5), PS::constant(0.4), PS::constant(0.3)};
        m.mu = {mu_main, PS::sine(0.5, 0.5, 1.0)};
        m.g = {PS::walk(0.5, -0.5, 0.25, "g2"), PS::sine(0.5, 3.0, 1.0)};
        m.h = PS::linear(0.4);
    } else if (id == "supp2") {
        if (!gamma) throw ConfigError("catalog_model: supp2 requires gamma");
        m.beta = {PS::constant(0.5), PS::constant(0.4), PS::constant(0.3)};
        m.mu = {PS::product(PS::sine(0.5, 10.0, 1.0), PS::power(0.5)),
                PS::product(PS::sine(0.5, 5.0, 1.0), PS::power(*gamma))};
        m.g = {PS::power(1.0), PS::power(*gamma)};
        m.h = PS::constant(1.0);
    } else if (id == "iid") {
        // homoskedastic reference design: iid noise, iid regressors
        m.noise = NoiseSpec::iid_normal();
        m.eta = ModelSpec::EtaKind::iid_normal;
        m.beta = {PS::constant(0.5), PS::constant(0.4), PS::constant(0.3)};
        m.mu = {PS::constant(1.0), PS::constant(1.0)};
        m.g = {PS::constant(1.0), PS::constant(1.0)};
        m.h = PS::constant(1.0);
    } else {
        throw UnknownCatalogIdError("catalog_model: unknown id '" + id + "'");
    }
    return m;
}

inline GeneratedSample gen_model(const ModelSpec& spec, Eigen::Index n,
                                 const SeedRecord& seed) {
    spec.validate();
    if (n < 1) throw ConfigError("gen_model: n >= 1 required");
    if (spec.kind == ModelSpec::Kind::regression) {
        return detail::gen_regression(spec, n, seed);
    }
    return detail::gen_autoregression(spec, n, seed);
}

inline GeneratedSample gen_model(const std::string& catalog_id, Eigen::Index n,
                                 const SeedRecord& seed,
                                 std::optional<double> gamma = std::nullopt) {
    return gen_model(catalog_model(catalog_id, gamma), n, seed);
}

// Reassemble y from the stored latent pieces under a different coefficient
// path (common-random-numbers power curves: z, h, eps stay fixed).
inline Eigen::VectorXd rebuild_y(const GeneratedSample& gs, const Eigen::MatrixXd& beta) {
    if (beta.rows() != gs.sample.Z.rows() || beta.cols() != gs.sample.Z.cols()) {
        throw DimensionError("rebuild_y: beta path shape mismatch");
    }
    return (beta.cwiseProduct(gs.sample.Z)).rowwise().sum() + gs.h.cwiseProduct(gs.eps);
}

// ---- ModelSpec JSON ----

inline void to_json(nlohmann::json& j, const NoiseSpec& s) {
    switch (s.kind) {
        case NoiseSpec::Kind::iid_normal:
            j = "iid_normal";
            return;
        case NoiseSpec::Kind::garch11:
            j = {{"kind", "garch11"}, {"omega", s.garch.omega}, {"alpha", s.garch.alpha},
                 {"beta", s.garch.beta}, {"burn_in", s.burn_in}};
            return;
        case NoiseSpec::Kind::lagged_product:
            j = "lagged_product";
            return;
    }
}

inline void from_json(const nlohmann::json& j, NoiseSpec& s) {
    if (j.is_string()) {
        const std::string k = j.get<std::string>();
        if (k == "iid_normal") {
            s = NoiseSpec::iid_normal();
        } else if (k == "lagged_product") {
            s = NoiseSpec::lagged_product();
        } else {
            throw ConfigError("NoiseSpec: unknown kind '" + k + "'");
        }
        return;
    }
    const std::string k = j.at("kind").get<std::string>();
    if (k != "garch11") throw ConfigError("NoiseSpec: unknown kind '" + k + "'");
    s = NoiseSpec::garch11(j.at("omega").get<double>(), j.at("alpha").get<double>(),
                           j.at("beta").get<double>(),
                           j.value("burn_in", Eigen::Index{1000}));
}

inline void to_json(nlohmann::json& j, const ModelSpec& m) {
    j["id"] = m.id;
    if (m.kind == ModelSpec::Kind::autoregression) {
        j["kind"] = "autoregression";
        j["coeffs"] = m.ar_coeffs;
        j["noise"] = m.noise;
        j["burn_in"] = m.ar_burn_in;
        return;
    }
    j["kind"] = "regression";
    j["p"] = m.p;
    j["beta"] = m.beta;
    j["mu"] = m.mu;
    j["g"] = m.g;
    j["h"] = m.h;
    j["noise"] = m.noise;
    j["eta"] = (m.eta == ModelSpec::EtaKind::lagged_eps_ar) ? "lagged_eps_ar" : "iid_normal";
    j["eta_ar_coef"] = m.eta_ar_coef;
}

inline void from_json(const nlohmann::json& j, ModelSpec& m) {
    m = ModelSpec{};
    m.id = j.value("id", std::string("custom"));
    const std::string kind = j.value("kind", std::string("regression"));
    if (kind == "autoregression") {
        m.kind = ModelSpec::Kind::autoregression;
        m.ar_coeffs = j.at("coeffs").get<std::vector<double>>();
        m.p = static_cast<Eigen::Index>(m.ar_coeffs.size());
        if (j.contains("noise")) m.noise = j.at("noise").get<NoiseSpec>();
        m.ar_burn_in = j.value("burn_in", Eigen::Index{500});
        return;
    }
    m.kind = ModelSpec::Kind::regression;
    m.p = j.at("p").get<Eigen::Index>();
    m.beta = j.at("beta").get<std::vector<PathSpec>>();
    m.mu = j.at("mu").get<std::vector<PathSpec>>();
    m.g = j.at("g").get<std::vector<PathSpec>>();
    m.h = j.at("h").get<PathSpec>();
    if (j.contains("noise")) m.noise = j.at("noise").get<NoiseSpec>();
    const std::string eta = j.value("eta", std::string("lagged_eps_ar"));
    m.eta = (eta == "iid_normal") ? ModelSpec::EtaKind::iid_normal
                                  : ModelSpec::EtaKind::lagged_eps_ar;
    m.eta_ar_coef = j.value("eta_ar_coef", 0.5);
}

}  // namespace rols

#endif
