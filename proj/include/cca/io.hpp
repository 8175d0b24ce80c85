#ifndef CCA_IO_HPP
#define CCA_IO_HPP

#include <string>
#include <vector>

#include "cca/analysis.hpp"

namespace cca {

/// Spectrum CSV as written to disk: UTF-8, LF line endings, header row
/// `omega_minus_omega0_over_gamma,T,R,regime`, 17 significant digits.
struct SpectrumTable {
    std::vector<double> detuning_over_gamma;
    std::vector<double> transmission;
    std::vector<double> reflection;
    std::vector<std::string> regime;
};

void write_spectrum_csv(const Spectrum& spectrum, const std::string& path);

/// Parses a spectrum CSV back; %.17g output round-trips doubles exactly.
SpectrumTable read_spectrum_csv(const std::string& path);

/// Spectrum serialized as a JSON document (same content as the CSV plus
/// the sweep metadata).
void write_spectrum_json(const Spectrum& spectrum, const std::string& path);

/// Standalone gnuplot script plotting T (solid) and R (dashed) from the
/// CSV next to it.
void write_plot_script(const std::string& csv_path,
                       const std::string& script_path,
                       const std::string& title);

std::string format_g17(double x);

} // namespace cca

#endif
