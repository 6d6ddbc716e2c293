// rols — robust regression workbench.
//
// Subcommands:
//   fit        fixed-parameter OLS with robust + standard standard errors
//   tvfit      kernel-weighted time-varying OLS path with confidence bands
//   mc         Monte Carlo experiment driven by a JSON manifest
//   simulate   draw a sample from the model catalog, dumping latent truth
//   diagnose   zero-correlation lag tests on a series
//   empirical  return-series pipeline: TV mean, TV scale, residual lag tests
//
// Exit codes: 0 success, 2 input error, 3 numerical failure, 4 config error.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "rols/csv.hpp"
#include "rols/diagnostics.hpp"
#include "rols/dgp.hpp"
#include "rols/empirical.hpp"
#include "rols/kernel.hpp"
#include "rols/manifest.hpp"
#include "rols/mc.hpp"
#include "rols/missing.hpp"
#include "rols/ols.hpp"
#include "rols/tv.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitConfig = 4;

struct Dataset {
    rols::RegressionSample sample;
    std::optional<rols::MissingMask> mask;  // from an in-file `mask` column
    std::vector<std::string> names;         // regressor column names
};

Dataset load_dataset(const std::string& path) {
    rols::CsvTable table = rols::read_csv(path);
    Dataset ds;
    Eigen::Index ycol = table.find("y");
    if (ycol < 0) ycol = 0;
    const Eigen::Index maskcol = table.find("mask");
    const Eigen::Index n = table.rows();
    if (n == 0) throw rols::DimensionError("dataset '" + path + "' has no rows");

    std::vector<Eigen::Index> zcols;
    for (Eigen::Index c = 0; c < table.cols(); ++c) {
        if (c == ycol || c == maskcol) continue;
        zcols.push_back(c);
        ds.names.push_back(table.header[static_cast<std::size_t>(c)]);
    }
    if (zcols.empty()) throw rols::DimensionError("dataset '" + path + "' has no regressors");

    ds.sample.y = table.column(ycol);
    ds.sample.Z.resize(n, static_cast<Eigen::Index>(zcols.size()));
    for (std::size_t i = 0; i < zcols.size(); ++i) {
        ds.sample.Z.col(static_cast<Eigen::Index>(i)) = table.column(zcols[i]);
    }
    if (maskcol >= 0) {
        std::vector<std::uint8_t> tau;
        for (double v : table.columns[static_cast<std::size_t>(maskcol)]) {
            if (v != 0.0 && v != 1.0) {
                throw rols::DimensionError("mask column must be 0/1 in '" + path + "'");
            }
            tau.push_back(v != 0.0);
        }
        ds.mask = rols::MissingMask(std::move(tau));
    }
    return ds;
}

// Mask file: either one 0/1 per line, or a JSON array of 1-based missing
// time indices.
rols::MissingMask load_mask_file(const std::string& path, Eigen::Index n) {
    std::ifstream in(path);
    if (!in) throw rols::DimensionError("cannot open mask file '" + path + "'");
    char first = 0;
    in >> std::ws;
    in.get(first);
    in.unget();
    if (first == '[') {
        json j;
        in >> j;
        std::vector<Eigen::Index> missing = j.get<std::vector<Eigen::Index>>();
        return rols::MissingMask::from_missing_indices(n, missing);
    }
    std::vector<std::uint8_t> tau;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        if (line == "0") {
            tau.push_back(0);
        } else if (line == "1") {
            tau.push_back(1);
        } else {
            throw rols::DimensionError("mask file '" + path + "': lines must be 0 or 1");
        }
    }
    if (static_cast<Eigen::Index>(tau.size()) != n) {
        throw rols::DimensionError("mask file '" + path + "' length != sample length");
    }
    return rols::MissingMask(std::move(tau));
}

fs::path ensure_out_dir(const std::string& out) {
    fs::path dir = out.empty() ? fs::path(".") : fs::path(out);
    fs::create_directories(dir);
    return dir;
}

// ---- fit ----

int cmd_fit(const std::string& input, const std::string& mask_file, double level,
            const std::string& out) {
    Dataset ds = load_dataset(input);
    rols::FixedFit fit;
    if (!mask_file.empty()) {
        auto mask = load_mask_file(mask_file, ds.sample.n());
        fit = rols::fit_ols_missing(ds.sample, mask, rols::MissingForm::zerofill);
    } else if (ds.mask) {
        fit = rols::fit_ols_missing(ds.sample, *ds.mask, rols::MissingForm::zerofill);
    } else {
        fit = rols::fit_ols(ds.sample);
    }

    const double z = rols::two_sided_critical(level);
    std::cout << "coef        estimate      se_rob       se_std       t_rob        t_std\n";
    bool degenerate = false;
    for (Eigen::Index k = 0; k < fit.beta_hat.size(); ++k) {
        const double ser = fit.se_robust(k);
        const double ses = fit.se_standard(k);
        degenerate = degenerate || ser == 0.0 || ses == 0.0;
        auto tstr = [&](double se) {
            return se > 0.0 ? rols::format_fixed(fit.beta_hat(k) / se) : std::string("   --");
        };
        std::cout << ds.names[static_cast<std::size_t>(k)] << "\t"
                  << rols::format_fixed(fit.beta_hat(k)) << "  " << rols::format_fixed(ser)
                  << "  " << rols::format_fixed(ses) << "  " << tstr(ser) << "  " << tstr(ses)
                  << "\n";
    }
    if (degenerate) {
        std::cout << "note: zero standard errors (exact fit); intervals are degenerate\n";
    }

    fs::path dir = ensure_out_dir(out);
    rols::CsvWriter w((dir / "fit.csv").string());
    w.header({"coef", "estimate", "se_robust", "se_standard", "ci_lower", "ci_upper"});
    for (Eigen::Index k = 0; k < fit.beta_hat.size(); ++k) {
        w.row_strings({ds.names[static_cast<std::size_t>(k)],
                       rols::format_full(fit.beta_hat(k)), rols::format_full(fit.se_robust(k)),
                       rols::format_full(fit.se_standard(k)),
                       rols::format_full(fit.beta_hat(k) - z * fit.se_robust(k)),
                       rols::format_full(fit.beta_hat(k) + z * fit.se_robust(k))});
    }
    return kExitOk;
}

// ---- tvfit ----

int cmd_tvfit(const std::string& input, const std::string& kernel_name, double h_exponent,
              double H_direct, double gamma, double level, const std::string& mask_file,
              const std::string& out) {
    Dataset ds = load_dataset(input);
    const auto n = ds.sample.n();
    const double H =
        H_direct > 0.0 ? H_direct : std::pow(static_cast<double>(n), h_exponent);
    rols::KernelSpec kernel = (kernel_name == "indicator") ? rols::KernelSpec::indicator(H)
                                                           : rols::KernelSpec::gaussian(H);

    if (H_direct <= 0.0) {
        auto rep = rols::check_bandwidth({h_exponent, gamma}, n);
        if (!rep.valid) {
            std::cerr << "warning: H=" << rols::format_fixed(rep.H, 3)
                      << " violates the negligible-bias rule H=o(n^{2g/(2g+1)}) (h="
                      << h_exponent << ", limit=" << rols::format_fixed(rep.limit, 4)
                      << " for smoothness g=" << gamma << ")\n";
        }
    }

    rols::TvFit fit;
    if (!mask_file.empty()) {
        auto mask = load_mask_file(mask_file, n);
        fit = rols::fit_tv_missing(ds.sample, mask, kernel);
    } else if (ds.mask) {
        fit = rols::fit_tv_missing(ds.sample, *ds.mask, kernel);
    } else {
        fit = rols::fit_tv(ds.sample, kernel);
    }

    const double z = rols::two_sided_critical(level);
    fs::path dir = ensure_out_dir(out);
    rols::CsvWriter w((dir / "tvfit.csv").string());
    w.header({"t", "k", "beta", "se", "ci_lower", "ci_upper"});
    for (Eigen::Index t = 0; t < n; ++t) {
        if (fit.failed[static_cast<std::size_t>(t)]) continue;
        for (Eigen::Index k = 0; k < fit.p(); ++k) {
            const double b = fit.beta_path(t, k);
            const double se = fit.se_robust_path(t, k);
            w.row({static_cast<double>(t + 1), static_cast<double>(k + 1), b, se, b - z * se,
                   b + z * se});
        }
    }
    Eigen::Index failed = 0;
    for (char f : fit.failed) failed += (f != 0);
    std::cout << "tvfit: n=" << n << " p=" << fit.p() << " H=" << rols::format_fixed(H, 3)
              << " kernel=" << kernel_name << " failed_points=" << failed << "\n";
    return kExitOk;
}

// ---- mc ----

void write_summary_csv(const fs::path& path, const rols::McSummary& s) {
    rols::CsvWriter w(path.string());
    w.header({"parameter", "bias", "rmse", "cp", "cp_st", "sd"});
    for (Eigen::Index k = 0; k < s.bias.size(); ++k) {
        w.row_strings({"beta" + std::to_string(k + 1), rols::format_full(s.bias(k)),
                       rols::format_full(s.rmse(k)), rols::format_full(s.cp(k)),
                       rols::format_full(s.cp_st(k)), rols::format_full(s.sd(k))});
    }
}

int cmd_mc(const std::string& manifest_path, const std::string& out, unsigned threads_flag) {
    std::ifstream in(manifest_path);
    if (!in) throw rols::ConfigError("cannot open manifest '" + manifest_path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw rols::ConfigError(std::string("manifest parse error: ") + e.what());
    }
    auto manifest = j.get<rols::ExperimentManifest>();
    if (threads_flag > 0) manifest.threads = threads_flag;
    rols::McConfig config = manifest.to_config();

    std::cout << json(manifest).dump(2) << "\n";  // echo the config
    fs::path dir = ensure_out_dir(out);

    if (manifest.kind == "fixed") {
        rols::McSummary s = rols::run_mc_fixed(config);
        write_summary_csv(dir / (manifest.out_prefix + "_summary.csv"), s);
        std::cout << "parameter      bias      rmse        cp     cp_st        sd\n";
        for (Eigen::Index k = 0; k < s.bias.size(); ++k) {
            std::cout << "beta" << (k + 1) << "  " << rols::format_fixed(s.bias(k)) << "  "
                      << rols::format_fixed(s.rmse(k)) << "  " << rols::format_fixed(s.cp(k), 1)
                      << "  " << rols::format_fixed(s.cp_st(k), 1) << "  "
                      << rols::format_fixed(s.sd(k)) << "\n";
        }
        if (s.failures > 0) std::cout << "excluded replications: " << s.failures << "\n";
    } else if (manifest.kind == "tv") {
        rols::PointwiseCoverage pc = rols::run_mc_tv(config);
        rols::CsvWriter wc((dir / (manifest.out_prefix + "_coverage.csv")).string());
        wc.header({"t", "k", "value"});
        rols::CsvWriter wr((dir / (manifest.out_prefix + "_rmse.csv")).string());
        wr.header({"t", "k", "value"});
        for (std::size_t i = 0; i < pc.eval_points.size(); ++i) {
            for (Eigen::Index k = 0; k < pc.coverage.cols(); ++k) {
                const auto t = static_cast<double>(pc.eval_points[i]);
                wc.row({t, static_cast<double>(k + 1),
                        pc.coverage(static_cast<Eigen::Index>(i), k)});
                wr.row({t, static_cast<double>(k + 1),
                        pc.rmse(static_cast<Eigen::Index>(i), k)});
            }
        }
        std::cout << "tv run: H=" << rols::format_fixed(pc.bandwidth, 3) << ", "
                  << pc.eval_points.size() << " grid points, R=" << pc.replications << "\n";
    } else {
        rols::PowerCurve pw = rols::size_power_curve(config);
        rols::CsvWriter w((dir / (manifest.out_prefix + "_power.csv")).string());
        w.header({"beta", "reject_robust", "reject_standard", "adjusted_standard"});
        for (std::size_t i = 0; i < pw.grid.size(); ++i) {
            w.row({pw.grid[i], pw.reject_robust[i], pw.reject_standard[i],
                   pw.adjusted_standard[i]});
        }
        std::cout << "power run: empirical |t| critical value "
                  << rols::format_fixed(pw.critical_value, 4) << "\n";
    }
    return kExitOk;
}

// ---- simulate ----

int cmd_simulate(const std::string& model_id, Eigen::Index n, std::uint64_t seed,
                 std::optional<double> gamma, const std::string& out) {
    rols::GeneratedSample gs = rols::gen_model(model_id, n, rols::SeedRecord{seed, 1}, gamma);
    fs::path dir = ensure_out_dir(out);

    const Eigen::Index p = gs.sample.p();
    {
        rols::CsvWriter w((dir / "data.csv").string());
        std::vector<std::string> header = {"y"};
        for (Eigen::Index k = 1; k <= p; ++k) header.push_back("z" + std::to_string(k));
        w.header(header);
        for (Eigen::Index t = 0; t < n; ++t) {
            std::vector<double> row = {gs.sample.y(t)};
            for (Eigen::Index k = 0; k < p; ++k) row.push_back(gs.sample.Z(t, k));
            w.row(row);
        }
    }
    {
        rols::CsvWriter w((dir / "truth.csv").string());
        std::vector<std::string> header = {"t"};
        for (Eigen::Index k = 1; k <= p; ++k) header.push_back("beta" + std::to_string(k));
        header.insert(header.end(), {"h", "eps"});
        for (Eigen::Index k = 1; k <= p; ++k) header.push_back("mu" + std::to_string(k));
        for (Eigen::Index k = 1; k <= p; ++k) header.push_back("g" + std::to_string(k));
        w.header(header);
        for (Eigen::Index t = 0; t < n; ++t) {
            std::vector<double> row = {static_cast<double>(t + 1)};
            for (Eigen::Index k = 0; k < p; ++k) row.push_back(gs.beta_truth(t, k));
            row.push_back(gs.h(t));
            row.push_back(gs.eps(t));
            for (Eigen::Index k = 0; k < p; ++k) row.push_back(gs.mu(t, k));
            for (Eigen::Index k = 0; k < p; ++k) row.push_back(gs.g(t, k));
            w.row(row);
        }
    }
    {
        json j = {{"model", gs.model_id},
                  {"n", n},
                  {"master_seed", gs.seed.master},
                  {"replication", gs.seed.replication}};
        if (gamma) j["gamma"] = *gamma;
        std::ofstream js(dir / "seeds.json");
        js << j.dump(2) << "\n";
    }
    std::cout << "simulated " << model_id << ": n=" << n << ", files in " << dir.string()
              << "\n";
    return kExitOk;
}

// ---- diagnose ----

int cmd_diagnose(const std::string& input, Eigen::Index max_lag, const std::string& subsample,
                 const std::string& out) {
    Eigen::VectorXd series = rols::read_series(input);
    if (!subsample.empty()) {
        const auto colon = subsample.find(':');
        if (colon == std::string::npos) {
            throw rols::ConfigError("--subsample expects LO:HI (1-based, inclusive)");
        }
        const long lo = std::stol(subsample.substr(0, colon));
        const long hi = std::stol(subsample.substr(colon + 1));
        if (lo < 1 || hi > series.size() || lo > hi) {
            throw rols::ConfigError("--subsample window out of range");
        }
        series = series.segment(lo - 1, hi - lo + 1).eval();
    }
    auto tests = rols::corr_tests_up_to(series, max_lag);

    fs::path dir = ensure_out_dir(out);
    rols::CsvWriter w((dir / "lagtests.csv").string());
    w.header({"lag", "rho", "std_stat", "robust_stat", "reject_std", "reject_robust"});
    std::cout << "lag     rho     std_stat  robust_stat  reject(std,rob)\n";
    for (const auto& t : tests) {
        w.row({static_cast<double>(t.lag), t.rho, t.std_stat, t.robust_stat,
               t.reject_std_5pct ? 1.0 : 0.0, t.reject_robust_5pct ? 1.0 : 0.0});
        std::cout << t.lag << "\t" << rols::format_fixed(t.rho, 4) << "  "
                  << rols::format_fixed(t.std_stat, 4) << "  "
                  << rols::format_fixed(t.robust_stat, 4) << "  " << t.reject_std_5pct << ","
                  << t.reject_robust_5pct << "\n";
    }
    return kExitOk;
}

// ---- empirical ----

int cmd_empirical(const std::string& input, bool prices, double h_exponent,
                  const std::string& subsample, bool garch_compare, std::uint64_t seed,
                  const std::string& out) {
    Eigen::VectorXd series = rols::read_series(input);
    if (prices) {
        if (series.size() < 2) throw rols::DimensionError("price series too short");
        for (Eigen::Index t = 0; t < series.size(); ++t) {
            if (!(series(t) > 0.0)) {
                throw rols::DimensionError("--prices requires positive prices");
            }
        }
        Eigen::VectorXd r(series.size() - 1);
        for (Eigen::Index t = 1; t < series.size(); ++t) {
            r(t - 1) = std::log(series(t) / series(t - 1));
        }
        series = r;
    }

    rols::EmpiricalOptions opt;
    opt.h_exponent = h_exponent;
    opt.garch_compare = garch_compare;
    opt.seed = seed;
    if (!subsample.empty()) {
        const auto colon = subsample.find(':');
        if (colon == std::string::npos) {
            throw rols::ConfigError("--subsample expects LO:HI (1-based, inclusive)");
        }
        opt.subsample_lo = std::stol(subsample.substr(0, colon));
        opt.subsample_hi = std::stol(subsample.substr(colon + 1));
    }

    rols::EmpiricalResult res = rols::run_empirical(series, opt);
    fs::path dir = ensure_out_dir(out);

    auto write_path = [&](const std::string& name, const Eigen::VectorXd& v,
                          const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) {
        rols::CsvWriter w((dir / name).string());
        w.header({"t", "estimate", "ci_lower", "ci_upper"});
        for (Eigen::Index t = 0; t < v.size(); ++t) {
            w.row({static_cast<double>(t + 1), v(t), lo(t), hi(t)});
        }
    };
    write_path("mu_path.csv", res.mu_hat, res.mu_lower, res.mu_upper);
    write_path("scale_path.csv", res.beta1_hat, res.beta1_lower, res.beta1_upper);

    auto write_tests = [&](const std::string& name,
                           const std::vector<rols::CorrTestResult>& tests) {
        rols::CsvWriter w((dir / name).string());
        w.header({"lag", "rho", "std_stat", "robust_stat", "reject_std", "reject_robust"});
        int nrej_std = 0, nrej_rob = 0;
        for (const auto& t : tests) {
            w.row({static_cast<double>(t.lag), t.rho, t.std_stat, t.robust_stat,
                   t.reject_std_5pct ? 1.0 : 0.0, t.reject_robust_5pct ? 1.0 : 0.0});
            nrej_std += t.reject_std_5pct;
            nrej_rob += t.reject_robust_5pct;
        }
        std::cout << name << ": rejections at 5% over " << tests.size()
                  << " lags: standard=" << nrej_std << " robust=" << nrej_rob << "\n";
    };
    std::cout << "empirical: n=" << series.size()
              << " H=" << rols::format_fixed(res.bandwidth, 2) << "\n";
    write_tests("lagtests.csv", res.lag_tests);
    if (res.garch_lag_tests) write_tests("garch_lagtests.csv", *res.garch_lag_tests);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"robust fixed and time-varying OLS workbench"};
    app.require_subcommand(1);

    // fit
    std::string fit_input, fit_mask, fit_out;
    double fit_level = 0.95;
    auto* fit = app.add_subcommand("fit", "fixed-parameter OLS with robust standard errors");
    fit->add_option("--input", fit_input, "dataset CSV (y,z1..zp[,mask])")->required();
    fit->add_option("--mask", fit_mask, "mask file (0/1 lines or JSON missing indices)");
    fit->add_option("--level", fit_level, "confidence level");
    fit->add_option("--out", fit_out, "output directory");

    // tvfit
    std::string tv_input, tv_kernel = "gaussian", tv_mask, tv_out;
    double tv_h = 0.5, tv_H = 0.0, tv_gamma = 1.0, tv_level = 0.95;
    auto* tvf = app.add_subcommand("tvfit", "time-varying OLS path with bands");
    tvf->add_option("--input", tv_input, "dataset CSV")->required();
    tvf->add_option("--kernel", tv_kernel, "gaussian|indicator")
        ->check(CLI::IsMember({"gaussian", "indicator"}));
    tvf->add_option("--h-exponent", tv_h, "bandwidth exponent, H = n^h");
    tvf->add_option("--H", tv_H, "bandwidth directly (overrides --h-exponent)");
    tvf->add_option("--gamma", tv_gamma, "smoothness exponent for the bandwidth rule");
    tvf->add_option("--level", tv_level, "confidence level");
    tvf->add_option("--mask", tv_mask, "mask file");
    tvf->add_option("--out", tv_out, "output directory");

    // mc
    std::string mc_manifest, mc_out;
    unsigned mc_threads = 0;
    auto* mc = app.add_subcommand("mc", "Monte Carlo experiment from a JSON manifest");
    mc->add_option("--manifest", mc_manifest, "experiment manifest JSON")->required();
    mc->add_option("--out", mc_out, "output directory");
    mc->add_option("--threads", mc_threads, "replication worker threads");

    // simulate
    std::string sim_model, sim_out;
    Eigen::Index sim_n = 1500;
    std::uint64_t sim_seed = 42;
    double sim_gamma = std::nan("");
    auto* sim = app.add_subcommand("simulate", "draw a catalog sample with latent truth");
    sim->add_option("--model", sim_model,
                    "model1|model2|model3|model4|ar2|supp1|supp2|iid")
        ->required();
    sim->add_option("--n", sim_n, "sample size");
    sim->add_option("--seed", sim_seed, "master seed");
    sim->add_option("--gamma", sim_gamma, "supp2/model4 exponent");
    sim->add_option("--out", sim_out, "output directory");

    // diagnose
    std::string diag_input, diag_subsample, diag_out;
    Eigen::Index diag_maxlag = 20;
    auto* diag = app.add_subcommand("diagnose", "zero-correlation lag tests on a series");
    diag->add_option("--input", diag_input, "series CSV")->required();
    diag->add_option("--max-lag", diag_maxlag, "test lags 1..K");
    diag->add_option("--subsample", diag_subsample, "LO:HI window (1-based)");
    diag->add_option("--out", diag_out, "output directory");

    // empirical
    std::string emp_input, emp_subsample = "500:1000", emp_out;
    double emp_h = 0.6;
    bool emp_prices = false, emp_garch = false;
    std::uint64_t emp_seed = 42;
    auto* emp = app.add_subcommand("empirical", "return-series estimation pipeline");
    emp->add_option("--input", emp_input, "returns CSV (one numeric column)")->required();
    emp->add_flag("--prices", emp_prices, "input is prices; use log returns");
    emp->add_option("--h-exponent", emp_h, "bandwidth exponent");
    emp->add_option("--subsample", emp_subsample, "lag-test window LO:HI");
    emp->add_flag("--garch-compare", emp_garch, "run the simulated GARCH comparison branch");
    emp->add_option("--seed", emp_seed, "seed for the GARCH comparison draw");
    emp->add_option("--out", emp_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*fit) return cmd_fit(fit_input, fit_mask, fit_level, fit_out);
        if (*tvf) {
            return cmd_tvfit(tv_input, tv_kernel, tv_h, tv_H, tv_gamma, tv_level, tv_mask,
                             tv_out);
        }
        if (*mc) return cmd_mc(mc_manifest, mc_out, mc_threads);
        if (*sim) {
            std::optional<double> g;
            if (!std::isnan(sim_gamma)) g = sim_gamma;
            return cmd_simulate(sim_model, sim_n, sim_seed, g, sim_out);
        }
        if (*diag) return cmd_diagnose(diag_input, diag_maxlag, diag_subsample, diag_out);
        if (*emp) {
            return cmd_empirical(emp_input, emp_prices, emp_h, emp_subsample, emp_garch,
                                 emp_seed, emp_out);
        }
    } catch (const rols::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const rols::UnknownCatalogIdError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const rols::RankDeficientError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const rols::ZeroStandardError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const rols::ZeroVarianceError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const rols::ZeroDenominatorError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const rols::NonStationaryError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const rols::AllPointsFailedError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const rols::FailedPointError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const rols::Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
