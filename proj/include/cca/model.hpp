#ifndef CCA_MODEL_HPP
#define CCA_MODEL_HPP

#include <string>

#include "cca/errors.hpp"

namespace cca {

/// Parameters of the 1D coupled-cavity array with one V-type three-level
/// atom in each of the n_cells doped cavities. All energies share one
/// consistent unit; nothing here assumes a particular scale.
///
/// Lead dispersion: E = omega_c + 2 v cos k. The two excited levels sit
/// symmetrically about omega0: omega_a = omega0 + delta_omega (upper),
/// omega_e = omega0 - delta_omega (lower); both transitions couple to the
/// cavity mode with the same strength g.
struct ModelParams {
    double omega_c;     // cavity mode frequency
    double v;           // inter-cavity hopping, > 0
    double g;           // atom-field coupling, >= 0
    double omega0;      // center of the two excited levels
    double delta_omega; // half-splitting of the excited levels, >= 0
    int n_cells;        // number of atom-doped cavities, >= 1

    ModelParams(double omega_c, double v, double g, double omega0,
                double delta_omega, int n_cells);

    double gamma() const { return g * g / (2.0 * v); }
    double omega_a() const { return omega0 + delta_omega; }
    double omega_e() const { return omega0 - delta_omega; }

    // Absolute tolerance below which E counts as sitting on an atomic level.
    double pole_tolerance() const;
};

/// gamma = g^2 / (2 v), the resonance width scale of a single doped cavity.
double gamma(const ModelParams& params);

// Energies are stored raw; reporting uses detunings in units of gamma.
double to_gamma_units(double energy, const ModelParams& params);
double from_gamma_units(double value, const ModelParams& params);

enum class Regime {
    Propagating,  // |E - omega_c| < 2v and |x| <= 1
    Evanescent,   // |E - omega_c| < 2v and |x| > 1
    LeadBandEdge, // |E - omega_c| >= 2v: no incident photon
    AtomPole,     // E on an atomic level within pole tolerance
};

const char* to_string(Regime regime);

/// One photon energy with its derived kinematic quantities.
struct EnergyPoint {
    double energy;             // E
    double detuning_from_atom; // Omega - omega0 = E - omega_c - omega0
    double wavenumber;         // k in (0, pi); NaN outside the lead band
    double bloch_cosine;       // x = -(E - omega_c - eps)/2v; NaN on a pole
    Regime regime;
    bool at_internal_band_edge; // |x| == 1 exactly: degenerate Chebyshev limit
};

/// Renormalized site energy of a doped cavity,
///   eps(E) = g^2 (2E - omega_a - omega_e) / ((E - omega_a)(E - omega_e)).
/// The two excited levels enter symmetrically; for delta_omega = 0 this is
/// 2 g^2 / (E - omega0). Throws AtomPoleError within pole tolerance of a level.
double effective_energy(double E, const ModelParams& params);

/// k = arccos((E - omega_c)/2v) in (0, pi), sin k > 0.
/// Throws LeadBandEdgeError when |E - omega_c| >= 2v.
///
/// The incident wave is taken as e^{ikj} with unit amplitude; with the
/// dispersion E = omega_c + 2v cos k the group velocity on (0, pi) is
/// negative, but transport probabilities do not depend on this labeling.
double incident_wavenumber(double E, const ModelParams& params);

/// Full kinematic classification. Degenerate inputs become regime tags,
/// never failures. When E lies outside the lead band AND on an atomic
/// level, LeadBandEdge wins: without an incident photon there is no
/// scattering problem to pose.
EnergyPoint classify(double E, const ModelParams& params);

/// kappa = arccosh|x| for an Evanescent point (decay per doped cell).
/// Throws DomainError if the point is not Evanescent.
double evanescent_kappa(const EnergyPoint& point);

} // namespace cca

#endif
