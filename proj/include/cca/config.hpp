#ifndef CCA_CONFIG_HPP
#define CCA_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cca/model.hpp"

namespace cca {

/// Run configuration in units of gamma. Internally the model is built with
/// gamma = 1 (g = sqrt(2 v_over_gamma)), omega_c = 0, so configured values
/// are raw energies as well.
struct RunConfig {
    double v_over_gamma = 10.0; // lead bandwidth; mandatory in config files
    double delta_omega_over_gamma = 0.0;
    double omega0_over_gamma = 0.0; // atomic center relative to omega_c
    int n_cells = 1;

    double grid_min_over_gamma = -6.0;
    double grid_max_over_gamma = 6.0;
    int grid_count = 2001;

    std::string format = "csv"; // csv | json
    std::string output;
    bool emit_plot_script = false;

    std::string feature = "central_peak"; // central_peak | reflection_dip | reflection_peak
    std::vector<int> n_list;              // attenuation fit range, default 5..20
    double probe_over_gamma = 1.0;

    std::uint64_t seed = 20260801;
    int draws = 1000;

    ModelParams to_model_params() const;
    std::vector<double> make_grid() const;
};

/// Parses a flat `key = value` file ('#' starts a comment). Unknown keys
/// and malformed values raise ConfigError naming the offending field;
/// v_over_gamma must be present in the file.
RunConfig parse_config_file(const std::string& path);

/// Range checks shared by file- and flag-built configs.
void validate(const RunConfig& config);

} // namespace cca

#endif
