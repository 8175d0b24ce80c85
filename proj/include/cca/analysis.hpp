#ifndef CCA_ANALYSIS_HPP
#define CCA_ANALYSIS_HPP

#include <map>
#include <string>
#include <vector>

#include "cca/model.hpp"
#include "cca/scattering.hpp"

namespace cca {

/// Amplitudes/probabilities over an ordered grid of detunings
/// Omega - omega0, given in units of gamma.
struct Spectrum {
    ModelParams params;
    std::vector<double> grid; // strictly increasing, units of gamma
    std::vector<ScatteringAmplitudes> points;
    std::map<std::string, std::string> metadata;
};

enum class Feature { CentralPeak, ReflectionDip, ReflectionPeak };

/// Gap/band measurements. Edge and width energies are offsets Omega - omega0
/// from the atomic center (raw energy units), directly comparable with the
/// nominal (-2 gamma, +2 gamma).
struct BandReport {
    std::pair<double, double> gap_edges{0.0, 0.0};
    std::pair<double, double> nominal_gap{0.0, 0.0};
    double dicke_halfwidth = -1.0;    // < 0 when not measured
    double dicke_nominal = 0.0;       // delta_omega^2 / (2 gamma)
    double attenuation_slope = 0.0;   // d log T / dN at the probe energy
    double kappa_reference = 0.0;     // kappa(probe)
};

/// Evaluates the analytic amplitudes at every grid point (detunings in
/// units of gamma; raw energies when g = 0 leaves gamma undefined).
/// AtomPole points become T = 0, R = 1 entries tagged AtomPole rather
/// than aborting the sweep. Any grid point outside the lead band
/// violates the precondition and raises LeadBandEdgeError.
/// Grid points are independent pure evaluations; output order follows the
/// grid and identical inputs give bit-identical output.
Spectrum sweep(const ModelParams& params, const std::vector<double>& grid);

/// Locates the |x(E)| = 1 crossings nearest omega0 on each side by
/// bracketing and bisection (relative tolerance 1e-10) and fills the gap
/// fields of a BandReport. Throws NoGapError when g = 0 or no crossing
/// lies strictly inside the lead band.
BandReport find_band_edges(const ModelParams& params);

/// Semi-width of the selected feature: the first |Omega - omega0| at which
/// the curve crosses the half level, found by outward scan + bisection on
/// the analytic T or R (tolerance 1e-10). Peaks and dips in this model
/// reach exactly 1 and 0, so the half level is 1/2 in all three cases.
/// Throws FeatureAbsentError when the feature does not exist (e.g.
/// CentralPeak with delta_omega = 0).
double measure_halfwidth(const ModelParams& params, Feature feature);

/// Least-squares slope of log T versus N over n_range at a fixed probe
/// energy, which must classify as Evanescent. Compare against
/// -2 kappa(probe). Throws DomainError for a non-evanescent probe.
double gap_attenuation(const ModelParams& params, double probe_energy,
                       const std::vector<int>& n_range);

} // namespace cca

#endif
