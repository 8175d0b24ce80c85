#include "cca/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace cca {

namespace {

std::string format_double(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

// |x(E)| - 1 at offset s from the atomic center; > 0 inside a gap.
double gap_indicator(double s, const ModelParams& p) {
    double E = p.omega_c + p.omega0 + s;
    EnergyPoint pt = classify(E, p);
    if (pt.regime == Regime::AtomPole)
        return std::numeric_limits<double>::infinity();
    return std::abs(pt.bloch_cosine) - 1.0;
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double flo, double rel_tol) {
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (hi - lo <= rel_tol * std::max(1.0, std::abs(mid)))
            break;
    }
    return 0.5 * (lo + hi);
}

// One gap edge on the chosen side of omega0 (side = +1 or -1); returns the
// |Omega - omega0| offset of the |x| = 1 crossing nearest the center.
double edge_offset(const ModelParams& p, double side) {
    auto f = [&](double s) { return gap_indicator(side * s, p); };
    double band_top = 2.0 * p.v - side * p.omega0; // offset where the lead band ends
    if (!(band_top > 0.0))
        throw NoGapError("find_band_edges: atomic center outside the lead band");

    double tol = p.pole_tolerance();
    if (p.delta_omega > 0.0) {
        // Allowed region around the center, gap beyond; the crossing sits
        // between the center and the pole at |Omega - omega0| = delta_omega.
        double lo = std::min(10.0 * tol, 0.5 * p.delta_omega);
        double hi = p.delta_omega * (1.0 - 1e-12);
        double flo = f(lo);
        if (flo >= 0.0) {
            // Already evanescent at the center: fall through to the outward
            // scan used for the degenerate case.
        } else {
            return bisect(f, lo, hi, flo, 1e-14);
        }
    }

    // Degenerate case (or no allowed center region): start just off the
    // pole where |x| >> 1 and scan outward geometrically for the crossing.
    double lo = std::min(10.0 * tol, 1e-6 * p.v);
    double flo = f(lo);
    if (flo <= 0.0)
        throw NoGapError("find_band_edges: no gap adjacent to the atomic center");
    double hi = lo;
    while (true) {
        double next = std::min(hi * 1.5, band_top * (1.0 - 1e-12));
        double fn = f(next);
        if (fn < 0.0) {
            return bisect(f, hi, next, f(hi), 1e-14);
        }
        if (next >= band_top * (1.0 - 1e-12))
            throw NoGapError(
                "find_band_edges: |x| = 1 crossing not bracketed inside the lead band");
        hi = next;
    }
}

} // namespace

Spectrum sweep(const ModelParams& params, const std::vector<double>& grid) {
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("sweep: grid must be strictly increasing");

    double gam = params.gamma();
    double scale = (gam > 0.0) ? gam : 1.0; // g = 0: detunings are raw energies
    Spectrum spec{params, grid, {}, {}};
    spec.points.reserve(grid.size());

    for (double d : grid) {
        double E = params.omega_c + params.omega0 + d * scale;
        EnergyPoint pt = classify(E, params);
        if (pt.regime == Regime::LeadBandEdge) {
            std::ostringstream msg;
            msg << "sweep: grid point " << d
                << " (units of gamma) lies outside the lead band";
            throw LeadBandEdgeError(msg.str());
        }
        spec.points.push_back(transmission_amplitude(pt, params));
    }

    spec.metadata["n_cells"] = std::to_string(params.n_cells);
    spec.metadata["gamma"] = format_double(gam);
    if (gam > 0.0) {
        spec.metadata["v_over_gamma"] = format_double(params.v / gam);
        spec.metadata["delta_omega_over_gamma"] =
            format_double(params.delta_omega / gam);
        spec.metadata["omega0_minus_omega_c_over_gamma"] =
            format_double(params.omega0 / gam);
    }
    return spec;
}

BandReport find_band_edges(const ModelParams& params) {
    if (params.g == 0.0)
        throw NoGapError("find_band_edges: no scatterer for g = 0");

    BandReport report;
    double gam = params.gamma();
    report.nominal_gap = {-2.0 * gam, 2.0 * gam};
    report.gap_edges = {-edge_offset(params, -1.0), edge_offset(params, +1.0)};
    report.dicke_nominal = params.delta_omega * params.delta_omega / (2.0 * gam);
    return report;
}

namespace {

double curve_value(const ModelParams& p, Feature feature, double s) {
    double E = p.omega_c + p.omega0 + s;
    EnergyPoint pt = classify(E, p);
    if (pt.regime == Regime::LeadBandEdge)
        return (feature == Feature::CentralPeak) ? 0.0 : 1.0; // beyond band: mirror
    ScatteringAmplitudes amp = transmission_amplitude(pt, p);
    return (feature == Feature::CentralPeak) ? amp.big_t : amp.big_r;
}

} // namespace

double measure_halfwidth(const ModelParams& params, Feature feature) {
    double gam = params.gamma();
    if (params.g == 0.0)
        throw FeatureAbsentError("measure_halfwidth: no feature for g = 0");

    auto value = [&](double s) { return curve_value(params, feature, s); };
    double center = value(0.0);

    // Peaks sit at 1 and dips at 0 in this model, so every feature is
    // measured against the same half level.
    const double half = 0.5;
    bool rising_out; // does the curve cross half from above or below?
    double scan_cap; // how far out the feature can extend

    switch (feature) {
    case Feature::CentralPeak:
        if (params.delta_omega <= 0.0 || center < half)
            throw FeatureAbsentError(
                "measure_halfwidth: no central transmission peak (requires "
                "delta_omega > 0)");
        rising_out = false;
        scan_cap = params.delta_omega; // T = 0 at the level poles
        break;
    case Feature::ReflectionDip:
        if (params.delta_omega <= 0.0 || center > half)
            throw FeatureAbsentError(
                "measure_halfwidth: no central reflection dip (requires "
                "delta_omega > 0)");
        rising_out = true;
        scan_cap = params.delta_omega; // R = 1 at the level poles
        break;
    case Feature::ReflectionPeak:
        if (center < half)
            throw FeatureAbsentError(
                "measure_halfwidth: reflection at the center is below 1/2");
        rising_out = false;
        scan_cap = 2.0 * params.v - params.omega0; // lead band edge
        break;
    }

    auto crossed = [&](double val) {
        return rising_out ? (val > half) : (val < half);
    };

    // Outward scan for the first crossing interval, then bisection. Step
    // fine enough to resolve the narrow central feature of the split-level
    // system (nominal semi-width delta_omega^2 / 2 gamma).
    double step;
    if (feature == Feature::ReflectionPeak) {
        step = std::min(gam / 64.0, scan_cap / 64.0);
    } else {
        double delta_nominal =
            params.delta_omega * params.delta_omega / (2.0 * gam);
        step = std::min(delta_nominal / 256.0, scan_cap / 256.0);
    }

    double lo = 0.0;
    double hi = step;
    bool bracketed = false;
    while (hi < scan_cap * (1.0 - 1e-12)) {
        if (crossed(value(hi))) {
            bracketed = true;
            break;
        }
        lo = hi;
        hi = std::min(hi + step, scan_cap * (1.0 - 1e-12));
        // widen gradually so distant crossings stay reachable
        step *= 1.05;
    }
    if (!bracketed && crossed(value(hi)))
        bracketed = true;
    if (!bracketed)
        throw FeatureAbsentError(
            "measure_halfwidth: half-level crossing not found within the feature range");

    auto f = [&](double s) { return value(s) - half; };
    return bisect(f, lo, hi, f(lo), 1e-13);
}

double gap_attenuation(const ModelParams& params, double probe_energy,
                       const std::vector<int>& n_range) {
    if (n_range.size() < 2)
        throw std::invalid_argument("gap_attenuation: need at least two N values");

    EnergyPoint pt = classify(probe_energy, params);
    if (pt.regime != Regime::Evanescent) {
        std::ostringstream msg;
        msg << "gap_attenuation: probe energy classifies as "
            << to_string(pt.regime) << ", not Evanescent";
        throw DomainError(msg.str());
    }

    // log T versus N, least squares.
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int n : n_range) {
        ModelParams p(params.omega_c, params.v, params.g, params.omega0,
                      params.delta_omega, n);
        double T = transmission_amplitude(classify(probe_energy, p), p).big_t;
        if (!(T > 0.0))
            throw DomainError("gap_attenuation: transmission underflowed to zero");
        double x = static_cast<double>(n);
        double y = std::log(T);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double m = static_cast<double>(n_range.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

} // namespace cca
