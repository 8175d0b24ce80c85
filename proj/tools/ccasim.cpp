// ccasim: single-photon transport through a 1D coupled-cavity array with
// embedded V-type three-level atoms. Subcommands: spectrum, report, selftest.
#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cca/analysis.hpp"
#include "cca/config.hpp"
#include "cca/errors.hpp"
#include "cca/io.hpp"
#include "cca/model.hpp"
#include "cca/oracle.hpp"
#include "cca/scattering.hpp"
#include "cca/selftest.hpp"

namespace {

enum ExitCode {
    kOk = 0,
    kSelftestFailure = 1,
    kConfigError = 2,
    kIoError = 3,
    kDomainError = 4,
};

struct CliOverrides {
    std::optional<std::string> config_path;
    std::optional<std::string> output;
    std::optional<std::string> format;
    std::optional<double> v_over_gamma;
    std::optional<double> delta_omega;
    std::optional<double> omega0;
    std::optional<int> n_cells;
    std::optional<double> grid_min;
    std::optional<double> grid_max;
    std::optional<int> grid_count;
    std::optional<double> probe;
    std::optional<std::string> feature;
    std::optional<std::uint64_t> seed;
    bool emit_plot_script = false;
};

cca::RunConfig build_config(const CliOverrides& o, const std::string& default_output) {
    cca::RunConfig cfg;
    if (o.config_path)
        cfg = cca::parse_config_file(*o.config_path);
    if (o.output)
        cfg.output = *o.output;
    if (o.format)
        cfg.format = *o.format;
    if (o.v_over_gamma)
        cfg.v_over_gamma = *o.v_over_gamma;
    if (o.delta_omega)
        cfg.delta_omega_over_gamma = *o.delta_omega;
    if (o.omega0)
        cfg.omega0_over_gamma = *o.omega0;
    if (o.n_cells)
        cfg.n_cells = *o.n_cells;
    if (o.grid_min)
        cfg.grid_min_over_gamma = *o.grid_min;
    if (o.grid_max)
        cfg.grid_max_over_gamma = *o.grid_max;
    if (o.grid_count)
        cfg.grid_count = *o.grid_count;
    if (o.probe)
        cfg.probe_over_gamma = *o.probe;
    if (o.feature)
        cfg.feature = *o.feature;
    if (o.seed)
        cfg.seed = *o.seed;
    if (o.emit_plot_script)
        cfg.emit_plot_script = true;
    if (cfg.output.empty())
        cfg.output = default_output;
    cca::validate(cfg);
    return cfg;
}

void add_model_options(CLI::App* cmd, CliOverrides& o) {
    cmd->add_option("--config", o.config_path, "config file (key = value lines)");
    cmd->add_option("--output", o.output, "output file path");
    cmd->add_option("--format", o.format, "output format: csv or json");
    cmd->add_option("--v-over-gamma", o.v_over_gamma, "lead bandwidth v in units of gamma");
    cmd->add_option("--delta-omega", o.delta_omega, "level half-splitting in units of gamma");
    cmd->add_option("--omega0", o.omega0, "atomic center minus cavity frequency, units of gamma");
    cmd->add_option("--n-cells", o.n_cells, "number of doped cavities");
    cmd->add_option("--grid-min", o.grid_min, "grid minimum, units of gamma");
    cmd->add_option("--grid-max", o.grid_max, "grid maximum, units of gamma");
    cmd->add_option("--grid-count", o.grid_count, "number of grid points");
    cmd->add_option("--seed", o.seed, "random seed");
}

int cmd_spectrum(const CliOverrides& o) {
    cca::RunConfig cfg = build_config(o, "spectrum.csv");
    cca::ModelParams params = cfg.to_model_params();
    cca::Spectrum spec = cca::sweep(params, cfg.make_grid());

    if (cfg.format == "csv")
        cca::write_spectrum_csv(spec, cfg.output);
    else
        cca::write_spectrum_json(spec, cfg.output);
    if (cfg.emit_plot_script)
        cca::write_plot_script(cfg.output, cfg.output + ".gp",
                               "N = " + std::to_string(cfg.n_cells));

    double tmin = 2.0, tmax = -1.0;
    for (const auto& p : spec.points) {
        tmin = std::min(tmin, p.big_t);
        tmax = std::max(tmax, p.big_t);
    }
    std::cout << "wrote " << cfg.output << " (" << spec.grid.size()
              << " points)\n"
              << "min T = " << cca::format_g17(tmin)
              << "  max T = " << cca::format_g17(tmax) << "\n";
    try {
        cca::BandReport band = cca::find_band_edges(params);
        std::cout << "gap edges (units of gamma): "
                  << cca::format_g17(band.gap_edges.first) << ", "
                  << cca::format_g17(band.gap_edges.second) << "\n";
    } catch (const cca::NoGapError&) {
        std::cout << "gap edges: none\n";
    }
    return kOk;
}

int cmd_report(const CliOverrides& o, const std::vector<int>& n_list_flag,
               std::optional<int> draws_flag) {
    cca::RunConfig cfg = build_config(o, "report.json");
    if (!n_list_flag.empty())
        cfg.n_list = n_list_flag;
    if (draws_flag)
        cfg.draws = *draws_flag;
    cca::validate(cfg);

    cca::ModelParams params = cfg.to_model_params();
    double gam = params.gamma();
    nlohmann::json doc;
    doc["model"] = {{"v_over_gamma", cfg.v_over_gamma},
                    {"delta_omega_over_gamma", cfg.delta_omega_over_gamma},
                    {"omega0_over_gamma", cfg.omega0_over_gamma},
                    {"n_cells", cfg.n_cells},
                    {"gamma", gam}};

    // gap edges
    try {
        cca::BandReport band = cca::find_band_edges(params);
        doc["no_gap"] = false;
        doc["gap_edges"] = {band.gap_edges.first / gam, band.gap_edges.second / gam};
        doc["nominal_gap"] = {band.nominal_gap.first / gam,
                              band.nominal_gap.second / gam};
        // leading finite-bandwidth correction to the nominal +-2 gamma
        double corr = 2.0 * (1.0 - gam / params.v);
        doc["nominal_gap_wideband_corrected"] = {-corr, corr};
    } catch (const cca::NoGapError& e) {
        doc["no_gap"] = true;
        doc["no_gap_reason"] = e.what();
    }

    // narrow central band
    doc["dicke_nominal"] = params.delta_omega * params.delta_omega / (2.0 * gam) / gam;
    if (params.delta_omega > 0.0) {
        try {
            double w = cca::measure_halfwidth(params, cca::Feature::CentralPeak);
            doc["dicke_halfwidth"] = w / gam;
            doc["dicke_width_ratio"] =
                w / (params.delta_omega * params.delta_omega / (2.0 * gam));
        } catch (const cca::FeatureAbsentError& e) {
            doc["dicke_halfwidth"] = nullptr;
            doc["dicke_note"] = e.what();
        }
    } else {
        doc["dicke_halfwidth"] = nullptr;
    }

    // broad line-shape width fixed by the half-maximum sweep
    try {
        doc["fitted_broad_semiwidth_over_gamma"] =
            cca::fitted_broad_semiwidth(params) / gam;
    } catch (const cca::FeatureAbsentError&) {
        doc["fitted_broad_semiwidth_over_gamma"] = nullptr;
    }

    // evanescent attenuation at the probe energy
    double probe = params.omega_c + params.omega0 + cfg.probe_over_gamma * gam;
    cca::EnergyPoint probe_pt = cca::classify(probe, params);
    if (probe_pt.regime == cca::Regime::Evanescent) {
        std::vector<int> n_range = cfg.n_list;
        if (n_range.empty()) {
            n_range.resize(16);
            std::iota(n_range.begin(), n_range.end(), 5);
        }
        double slope = cca::gap_attenuation(params, probe, n_range);
        double kappa = cca::evanescent_kappa(probe_pt);
        doc["attenuation_slope"] = slope;
        doc["kappa_reference"] = kappa;
        doc["attenuation_slope_over_minus_2kappa"] = slope / (-2.0 * kappa);
    } else {
        doc["attenuation_slope"] = nullptr;
        doc["kappa_reference"] = nullptr;
        doc["attenuation_note"] =
            std::string("probe energy classifies as ") +
            cca::to_string(probe_pt.regime) + ", not Evanescent";
    }

    // oracle-vs-analytic deviation for this run
    cca::SelftestOptions opts;
    opts.seed = cfg.seed;
    opts.solver_draws = cfg.draws;
    opts.unitarity_draws = 0;
    cca::SelftestReport st = cca::run_selftest(opts, std::cerr);
    doc["oracle_vs_analytic_max_dev"] = st.solver_max_dev;
    doc["oracle_vs_analytic_draws"] = st.solver_checked;

    std::ofstream out(cfg.output, std::ios::binary);
    if (!out)
        throw cca::IoError("cannot open for writing: " + cfg.output);
    out << doc.dump(2) << '\n';
    if (!out)
        throw cca::IoError("write failed: " + cfg.output);
    std::cout << "wrote " << cfg.output << "\n";
    return kOk;
}

int cmd_selftest(std::uint64_t seed, int draws, bool inject_fault) {
    cca::SelftestOptions opts;
    opts.seed = seed;
    opts.solver_draws = draws;
    opts.unitarity_draws = std::max(100 * draws, 100000);
    if (inject_fault)
        opts.injected_fault = 1e-6;

    cca::SelftestReport report = cca::run_selftest(opts, std::cout);
    std::cout << "solver agreement: " << report.solver_checked - report.solver_failed
              << "/" << report.solver_checked
              << " passed (max dev = " << report.solver_max_dev << ")\n"
              << "unitarity: " << report.unitarity_checked - report.unitarity_failed
              << "/" << report.unitarity_checked
              << " passed (max |R+T-1| = " << report.unitarity_max_dev << ")\n";
    if (!report.passed()) {
        std::cout << "selftest FAILED; reproduce with: " << report.first_failure
                  << "\n";
        return kSelftestFailure;
    }
    std::cout << "selftest passed\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-photon transport in an atom-doped coupled-cavity array"};
    app.require_subcommand(1);

    CliOverrides spec_o;
    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "sweep T and R over a detuning grid and write CSV/JSON");
    add_model_options(spectrum, spec_o);
    spectrum->add_flag("--emit-plot-script", spec_o.emit_plot_script,
                       "also write a gnuplot script next to the output");

    CliOverrides rep_o;
    std::vector<int> n_list_flag;
    std::optional<int> draws_flag;
    CLI::App* report = app.add_subcommand(
        "report", "write a JSON band report (gap edges, widths, attenuation)");
    add_model_options(report, rep_o);
    report->add_option("--probe", rep_o.probe,
                       "attenuation probe energy, units of gamma from omega0");
    report->add_option("--n-list", n_list_flag, "N values for the attenuation fit");
    report->add_option("--draws", draws_flag, "oracle comparison draws");

    std::uint64_t st_seed = 20260801;
    int st_draws = 1000;
    bool st_fault = false;
    CLI::App* selftest = app.add_subcommand(
        "selftest", "randomized solver agreement and unitarity suites");
    selftest->add_option("--seed", st_seed, "random seed");
    selftest->add_option("--draws", st_draws, "number of solver draws");
    selftest->add_flag("--inject-fault", st_fault, "perturb one solver (harness hook)")
        ->group(""); // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    }

    try {
        if (spectrum->parsed())
            return cmd_spectrum(spec_o);
        if (report->parsed())
            return cmd_report(rep_o, n_list_flag, draws_flag);
        if (selftest->parsed())
            return cmd_selftest(st_seed, st_draws, st_fault);
    } catch (const cca::ConfigError& e) {
        std::cerr << "config error [" << e.field() << "]: " << e.what() << "\n";
        return kConfigError;
    } catch (const cca::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kIoError;
    } catch (const cca::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return kOk;
}
