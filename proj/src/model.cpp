#include "cca/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace cca {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

ModelParams::ModelParams(double omega_c_, double v_, double g_, double omega0_,
                         double delta_omega_, int n_cells_)
    : omega_c(omega_c_), v(v_), g(g_), omega0(omega0_),
      delta_omega(delta_omega_), n_cells(n_cells_) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument("ModelParams: hopping v must be > 0");
    if (!(g >= 0.0) || !std::isfinite(g))
        throw std::invalid_argument("ModelParams: coupling g must be >= 0");
    if (!(delta_omega >= 0.0) || !std::isfinite(delta_omega))
        throw std::invalid_argument("ModelParams: delta_omega must be >= 0");
    if (n_cells < 1)
        throw std::invalid_argument("ModelParams: n_cells must be >= 1");
    if (!std::isfinite(omega_c) || !std::isfinite(omega0))
        throw std::invalid_argument("ModelParams: frequencies must be finite");
}

double ModelParams::pole_tolerance() const {
    double scale = std::max({1.0, std::abs(omega_a()), std::abs(omega_e())});
    return 1e-12 * scale;
}

double gamma(const ModelParams& params) { return params.gamma(); }

double to_gamma_units(double energy, const ModelParams& params) {
    return energy / params.gamma();
}

double from_gamma_units(double value, const ModelParams& params) {
    return value * params.gamma();
}

const char* to_string(Regime regime) {
    switch (regime) {
    case Regime::Propagating: return "Propagating";
    case Regime::Evanescent: return "Evanescent";
    case Regime::LeadBandEdge: return "LeadBandEdge";
    case Regime::AtomPole: return "AtomPole";
    }
    return "?";
}

namespace {

bool on_atom_pole(double E, const ModelParams& p) {
    if (p.g == 0.0)
        return false; // uncoupled levels do not produce poles
    double tol = p.pole_tolerance();
    return std::abs(E - p.omega_a()) <= tol || std::abs(E - p.omega_e()) <= tol;
}

} // namespace

double effective_energy(double E, const ModelParams& params) {
    if (params.g == 0.0)
        return 0.0;
    if (on_atom_pole(E, params)) {
        std::ostringstream msg;
        msg << "effective_energy: E = " << E << " lies on an atomic level";
        throw AtomPoleError(msg.str());
    }
    double wa = params.omega_a();
    double we = params.omega_e();
    return params.g * params.g * (2.0 * E - wa - we) / ((E - wa) * (E - we));
}

double incident_wavenumber(double E, const ModelParams& params) {
    double c = (E - params.omega_c) / (2.0 * params.v);
    if (!(std::abs(c) < 1.0)) {
        std::ostringstream msg;
        msg << "incident_wavenumber: E = " << E
            << " is outside the lead band (|E - omega_c| >= 2v)";
        throw LeadBandEdgeError(msg.str());
    }
    return std::acos(c);
}

EnergyPoint classify(double E, const ModelParams& params) {
    EnergyPoint pt;
    pt.energy = E;
    pt.detuning_from_atom = E - params.omega_c - params.omega0;
    pt.at_internal_band_edge = false;

    double c = (E - params.omega_c) / (2.0 * params.v);
    bool in_band = std::abs(c) < 1.0;
    pt.wavenumber = in_band ? std::acos(c) : kNaN;

    bool pole = on_atom_pole(E, params);
    if (pole) {
        pt.bloch_cosine = kNaN;
    } else {
        double eps = (params.g == 0.0)
                         ? 0.0
                         : params.g * params.g *
                               (2.0 * E - params.omega_a() - params.omega_e()) /
                               ((E - params.omega_a()) * (E - params.omega_e()));
        pt.bloch_cosine = -(E - params.omega_c - eps) / (2.0 * params.v);
    }

    if (!in_band) {
        pt.regime = Regime::LeadBandEdge;
    } else if (pole) {
        pt.regime = Regime::AtomPole;
    } else if (std::abs(pt.bloch_cosine) <= 1.0) {
        pt.regime = Regime::Propagating;
        pt.at_internal_band_edge = (std::abs(pt.bloch_cosine) == 1.0);
    } else {
        pt.regime = Regime::Evanescent;
    }
    return pt;
}

double evanescent_kappa(const EnergyPoint& point) {
    if (point.regime != Regime::Evanescent)
        throw DomainError("evanescent_kappa: point is not in the Evanescent regime");
    return std::acosh(std::abs(point.bloch_cosine));
}

} // namespace cca
