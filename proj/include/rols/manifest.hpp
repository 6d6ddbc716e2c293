#ifndef ROLS_MANIFEST_HPP
#define ROLS_MANIFEST_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rols/dgp.hpp"
#include "rols/errors.hpp"
#include "rols/mc.hpp"

namespace rols {

// JSON experiment description consumed by the `mc` subcommand. Round-trips
// losslessly through to_json/from_json.
struct ExperimentManifest {
    std::string kind = "fixed";  // fixed | tv | power
    std::string model_id;        // catalog id; empty when `custom_model` is set
    std::optional<ModelSpec> custom_model;
    std::optional<double> gamma;  // supp2 / model4 parameter
    Eigen::Index n = 1500;
    Eigen::Index replications = 1000;
    std::uint64_t seed = 42;
    double level = 0.95;
    std::vector<double> h_exponents = {0.5};
    std::vector<double> null_grid;
    MaskSpec mask;
    std::vector<Eigen::Index> eval_points;  // 1-based
    unsigned threads = 1;
    std::string out_prefix = "mc";

    McConfig to_config() const {
        McConfig c;
        c.model = custom_model ? *custom_model : catalog_model(model_id, gamma);
        c.n = n;
        c.replications = replications;
        c.master_seed = seed;
        c.level = level;
        c.h_exponents = h_exponents;
        c.null_grid = null_grid;
        c.mask = mask;
        c.eval_points = eval_points;
        c.threads = threads;
        return c;
    }
};

inline void to_json(nlohmann::json& j, const MaskSpec& m) {
    switch (m.kind) {
        case MaskSpec::Kind::none:
            j = nullptr;
            return;
        case MaskSpec::Kind::block:
            j = {{"type", "block"}, {"lo", m.block_lo}, {"hi", m.block_hi}};
            return;
        case MaskSpec::Kind::random:
            j = {{"type", "random"}, {"count", m.count}};
            return;
    }
}

inline void from_json(const nlohmann::json& j, MaskSpec& m) {
    if (j.is_null()) {
        m = MaskSpec::none();
        return;
    }
    const std::string type = j.at("type").get<std::string>();
    if (type == "block") {
        m = MaskSpec::block(j.at("lo").get<Eigen::Index>(), j.at("hi").get<Eigen::Index>());
    } else if (type == "random") {
        m = MaskSpec::random(j.at("count").get<Eigen::Index>());
    } else {
        throw ConfigError("MaskSpec: unknown type '" + type + "'");
    }
}

inline void to_json(nlohmann::json& j, const ExperimentManifest& m) {
    j["kind"] = m.kind;
    if (m.custom_model) {
        j["model"] = *m.custom_model;
    } else {
        j["model"] = m.model_id;
    }
    if (m.gamma) j["gamma"] = *m.gamma;
    j["n"] = m.n;
    j["replications"] = m.replications;
    j["seed"] = m.seed;
    j["level"] = m.level;
    j["h_exponents"] = m.h_exponents;
    if (!m.null_grid.empty()) j["null_grid"] = m.null_grid;
    j["mask"] = m.mask;
    if (!m.eval_points.empty()) j["eval_points"] = m.eval_points;
    j["threads"] = m.threads;
    j["out_prefix"] = m.out_prefix;
}

inline void from_json(const nlohmann::json& j, ExperimentManifest& m) {
    m = ExperimentManifest{};
    m.kind = j.value("kind", std::string("fixed"));
    if (m.kind != "fixed" && m.kind != "tv" && m.kind != "power") {
        throw ConfigError("ExperimentManifest: kind must be fixed|tv|power");
    }
    if (j.contains("model")) {
        if (j.at("model").is_string()) {
            m.model_id = j.at("model").get<std::string>();
        } else {
            m.custom_model = j.at("model").get<ModelSpec>();
        }
    }
    if (j.contains("gamma")) m.gamma = j.at("gamma").get<double>();
    m.n = j.value("n", Eigen::Index{1500});
    m.replications = j.value("replications", Eigen::Index{1000});
    m.seed = j.value("seed", std::uint64_t{42});
    m.level = j.value("level", 0.95);
    if (j.contains("h_exponents")) {
        m.h_exponents = j.at("h_exponents").get<std::vector<double>>();
    }
    if (j.contains("null_grid")) m.null_grid = j.at("null_grid").get<std::vector<double>>();
    if (j.contains("mask")) m.mask = j.at("mask").get<MaskSpec>();
    if (j.contains("eval_points")) {
        m.eval_points = j.at("eval_points").get<std::vector<Eigen::Index>>();
    }
    m.threads = j.value("threads", 1u);
    m.out_prefix = j.value("out_prefix", std::string("mc"));
}

}  // namespace rols

#endif
