#include "cca/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace cca {

ModelParams RunConfig::to_model_params() const {
    double v = v_over_gamma; // gamma = 1
    return ModelParams(0.0, v, std::sqrt(2.0 * v), omega0_over_gamma,
                       delta_omega_over_gamma, n_cells);
}

std::vector<double> RunConfig::make_grid() const {
    std::vector<double> grid(static_cast<std::size_t>(grid_count));
    double span = grid_max_over_gamma - grid_min_over_gamma;
    for (int i = 0; i < grid_count; ++i)
        grid[static_cast<std::size_t>(i)] =
            grid_min_over_gamma + span * i / (grid_count - 1);
    return grid;
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    char* end = nullptr;
    double x = std::strtod(value.c_str(), &end);
    if (end != value.c_str() + value.size() || value.empty() || !std::isfinite(x))
        throw ConfigError(key, "config field '" + key + "': bad number '" + value + "'");
    return x;
}

long parse_long(const std::string& key, const std::string& value) {
    char* end = nullptr;
    long x = std::strtol(value.c_str(), &end, 10);
    if (end != value.c_str() + value.size() || value.empty())
        throw ConfigError(key, "config field '" + key + "': bad integer '" + value + "'");
    return x;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes")
        return true;
    if (value == "false" || value == "0" || value == "no")
        return false;
    throw ConfigError(key, "config field '" + key + "': bad boolean '" + value + "'");
}

std::vector<int> parse_int_list(const std::string& key, const std::string& value) {
    std::vector<int> out;
    std::istringstream in(value);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty())
            continue;
        out.push_back(static_cast<int>(parse_long(key, item)));
    }
    if (out.empty())
        throw ConfigError(key, "config field '" + key + "': empty list");
    return out;
}

} // namespace

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config", "cannot open config file: " + path);

    RunConfig cfg;
    std::set<std::string> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            std::ostringstream msg;
            msg << "config line " << lineno << ": expected 'key = value', got '"
                << line << "'";
            throw ConfigError("config", msg.str());
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        seen.insert(key);

        if (key == "v_over_gamma")
            cfg.v_over_gamma = parse_double(key, value);
        else if (key == "delta_omega_over_gamma")
            cfg.delta_omega_over_gamma = parse_double(key, value);
        else if (key == "omega0_over_gamma")
            cfg.omega0_over_gamma = parse_double(key, value);
        else if (key == "n_cells")
            cfg.n_cells = static_cast<int>(parse_long(key, value));
        else if (key == "grid_min_over_gamma")
            cfg.grid_min_over_gamma = parse_double(key, value);
        else if (key == "grid_max_over_gamma")
            cfg.grid_max_over_gamma = parse_double(key, value);
        else if (key == "grid_count")
            cfg.grid_count = static_cast<int>(parse_long(key, value));
        else if (key == "format")
            cfg.format = value;
        else if (key == "output")
            cfg.output = value;
        else if (key == "emit_plot_script")
            cfg.emit_plot_script = parse_bool(key, value);
        else if (key == "feature")
            cfg.feature = value;
        else if (key == "n_list")
            cfg.n_list = parse_int_list(key, value);
        else if (key == "probe_over_gamma")
            cfg.probe_over_gamma = parse_double(key, value);
        else if (key == "seed")
            cfg.seed = static_cast<std::uint64_t>(parse_long(key, value));
        else if (key == "draws")
            cfg.draws = static_cast<int>(parse_long(key, value));
        else
            throw ConfigError(key, "unknown config field '" + key + "'");
    }

    // The wide-band assumption must be stated, never implied.
    if (!seen.count("v_over_gamma"))
        throw ConfigError("v_over_gamma",
                          "config field 'v_over_gamma' is mandatory in config files");

    validate(cfg);
    return cfg;
}

void validate(const RunConfig& cfg) {
    if (!(cfg.v_over_gamma > 0.0))
        throw ConfigError("v_over_gamma", "config field 'v_over_gamma' must be > 0");
    if (cfg.delta_omega_over_gamma < 0.0)
        throw ConfigError("delta_omega_over_gamma",
                          "config field 'delta_omega_over_gamma' must be >= 0");
    if (cfg.n_cells < 1)
        throw ConfigError("n_cells", "config field 'n_cells' must be >= 1");
    if (cfg.grid_count < 2)
        throw ConfigError("grid", "config field 'grid': count must be >= 2");
    if (!(cfg.grid_min_over_gamma < cfg.grid_max_over_gamma))
        throw ConfigError("grid", "config field 'grid': min must be < max");
    if (cfg.format != "csv" && cfg.format != "json")
        throw ConfigError("format", "config field 'format' must be csv or json");
    if (cfg.feature != "central_peak" && cfg.feature != "reflection_dip" &&
        cfg.feature != "reflection_peak")
        throw ConfigError("feature",
                          "config field 'feature' must be central_peak, "
                          "reflection_dip, or reflection_peak");
    for (int n : cfg.n_list)
        if (n < 1)
            throw ConfigError("n_list", "config field 'n_list': entries must be >= 1");
    if (cfg.draws < 1)
        throw ConfigError("draws", "config field 'draws' must be >= 1");
}

} // namespace cca
