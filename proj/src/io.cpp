#include "cca/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cca {

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_spectrum_csv(const Spectrum& spectrum, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open for writing: " + path);
    out << "omega_minus_omega0_over_gamma,T,R,regime\n";
    for (std::size_t i = 0; i < spectrum.grid.size(); ++i) {
        const ScatteringAmplitudes& a = spectrum.points[i];
        out << format_g17(spectrum.grid[i]) << ',' << format_g17(a.big_t)
            << ',' << format_g17(a.big_r) << ',' << to_string(a.regime)
            << '\n';
    }
    if (!out)
        throw IoError("write failed: " + path);
}

SpectrumTable read_spectrum_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open for reading: " + path);
    SpectrumTable table;
    std::string line;
    if (!std::getline(in, line))
        throw IoError("empty spectrum file: " + path);
    if (line != "omega_minus_omega0_over_gamma,T,R,regime")
        throw IoError("unexpected CSV header in " + path + ": " + line);
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream row(line);
        std::string field;
        double vals[3];
        for (int c = 0; c < 3; ++c) {
            if (!std::getline(row, field, ','))
                throw IoError("short CSV row in " + path + ": " + line);
            char* end = nullptr;
            vals[c] = std::strtod(field.c_str(), &end);
            if (end == field.c_str())
                throw IoError("bad number in " + path + ": " + field);
        }
        std::string regime;
        if (!std::getline(row, regime))
            throw IoError("missing regime column in " + path + ": " + line);
        table.detuning_over_gamma.push_back(vals[0]);
        table.transmission.push_back(vals[1]);
        table.reflection.push_back(vals[2]);
        table.regime.push_back(regime);
    }
    return table;
}

void write_spectrum_json(const Spectrum& spectrum, const std::string& path) {
    nlohmann::json doc;
    doc["metadata"] = spectrum.metadata;
    auto& pts = doc["points"] = nlohmann::json::array();
    for (std::size_t i = 0; i < spectrum.grid.size(); ++i) {
        const ScatteringAmplitudes& a = spectrum.points[i];
        pts.push_back({{"omega_minus_omega0_over_gamma", spectrum.grid[i]},
                       {"T", a.big_t},
                       {"R", a.big_r},
                       {"regime", to_string(a.regime)}});
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open for writing: " + path);
    out << doc.dump(2) << '\n';
    if (!out)
        throw IoError("write failed: " + path);
}

void write_plot_script(const std::string& csv_path,
                       const std::string& script_path,
                       const std::string& title) {
    std::ofstream out(script_path, std::ios::binary);
    if (!out)
        throw IoError("cannot open for writing: " + script_path);
    out << "set datafile separator ','\n"
        << "set title '" << title << "'\n"
        << "set xlabel 'Omega - omega_0  (units of gamma)'\n"
        << "set ylabel 'probability'\n"
        << "set yrange [0:1.05]\n"
        << "set key top right\n"
        << "plot '" << csv_path
        << "' using 1:2 every ::1 with lines lc rgb 'blue' title 'T', \\\n"
        << "     '" << csv_path
        << "' using 1:3 every ::1 with lines dashtype 2 lc rgb 'red' title 'R'\n";
    if (!out)
        throw IoError("write failed: " + script_path);
}

} // namespace cca
