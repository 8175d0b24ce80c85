#include "cca/scattering.hpp"

#include <cassert>
#include <cmath>
#include <sstream>

namespace cca {

using cdouble = std::complex<double>;

LineShapeParams::LineShapeParams(LineShapeKind kind_, double center_,
                                 double broad_width_, double narrow_width_)
    : kind(kind_), center(center_), broad_width(broad_width_),
      narrow_width(narrow_width_) {
    if (!(broad_width > 0.0))
        throw std::invalid_argument("LineShapeParams: broad_width must be > 0");
    if (!(narrow_width >= 0.0))
        throw std::invalid_argument("LineShapeParams: narrow_width must be >= 0");
    if (narrow_width > broad_width)
        throw std::invalid_argument(
            "LineShapeParams: narrow_width must not exceed broad_width");
}

double chebyshev_u(int n, double x) {
    assert(n >= -1);
    if (n == -1)
        return 0.0;
    double prev = 0.0; // U_{-1}
    double cur = 1.0;  // U_0
    for (int m = 0; m < n; ++m) {
        double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

void require_scatterable(const EnergyPoint& point) {
    if (point.regime == Regime::LeadBandEdge) {
        std::ostringstream msg;
        msg << "no propagating incident photon at E = " << point.energy;
        throw LeadBandEdgeError(msg.str());
    }
    if (point.regime == Regime::AtomPole) {
        std::ostringstream msg;
        msg << "E = " << point.energy << " sits on an atomic level";
        throw AtomPoleError(msg.str());
    }
}

} // namespace

std::complex<double> denominator_delta(const EnergyPoint& point,
                                       const ModelParams& params) {
    require_scatterable(point);
    int n = params.n_cells;
    double x = point.bloch_cosine;
    double k = point.wavenumber;
    cdouble eik = std::polar(1.0, k);
    return chebyshev_u(n, x) / eik + 2.0 * chebyshev_u(n - 1, x) +
           eik * chebyshev_u(n - 2, x);
}

ScatteringAmplitudes transmission_amplitude(const EnergyPoint& point,
                                            const ModelParams& params) {
    if (point.regime == Regime::LeadBandEdge) {
        std::ostringstream msg;
        msg << "no propagating incident photon at E = " << point.energy;
        throw LeadBandEdgeError(msg.str());
    }

    ScatteringAmplitudes out;
    out.regime = point.regime;

    if (point.regime == Regime::AtomPole) {
        // kappa -> infinity limit: the doped cells pin the photon amplitude
        // to zero and the chain reflects totally.
        double k = point.wavenumber;
        out.t = 0.0;
        out.r = -std::polar(1.0, 2.0 * k);
        out.big_t = 0.0;
        out.big_r = 1.0;
        return out;
    }

    int n = params.n_cells;
    double x = point.bloch_cosine;
    double k = point.wavenumber;
    double un = chebyshev_u(n, x);
    double unm1 = chebyshev_u(n - 1, x);
    double unm2 = chebyshev_u(n - 2, x);

    cdouble eik = std::polar(1.0, k);
    cdouble delta = un / eik + 2.0 * unm1 + eik * unm2;

    double sign = (n % 2 == 1) ? 1.0 : -1.0;
    out.t = sign * cdouble(0.0, 2.0) * std::polar(1.0, -k * n) * std::sin(k) / delta;
    out.r = -eik * (un + 2.0 * std::cos(k) * unm1 + unm2) / delta;
    out.big_t = std::norm(out.t);
    out.big_r = std::norm(out.r);
    return out;
}

ScatteringAmplitudes scatter(double E, const ModelParams& params) {
    return transmission_amplitude(classify(E, params), params);
}

std::pair<double, double> probabilities_closed_form(const EnergyPoint& point,
                                                    const ModelParams& params) {
    require_scatterable(point);

    int n = params.n_cells;
    double x = point.bloch_cosine;
    double k = point.wavenumber;
    double sk = std::sin(k);
    double ck = std::cos(k);

    double R, T;
    if (std::abs(std::abs(x) - 1.0) < 1e-9) {
        // Removable singularity at the internal band edge:
        // sin(m q)/sin q -> U_{m-1}(x), cos(N q) -> (U_N(x) - U_{N-2}(x))/2.
        double s = chebyshev_u(n - 1, x);
        double c = 0.5 * (chebyshev_u(n, x) - chebyshev_u(n - 2, x));
        double num_r = s * s * (x + ck) * (x + ck);
        double den = s * s * (x * ck + 1.0) * (x * ck + 1.0) + sk * sk * c * c;
        R = num_r / den;
        T = 1.0 / (c * c + s * s * (1.0 + x * ck) * (1.0 + x * ck) / (sk * sk));
    } else if (std::abs(x) < 1.0) {
        double q = std::acos(x);
        double sq = std::sin(q);
        double cq = std::cos(q);
        double snq = std::sin(n * q);
        double cnq = std::cos(n * q);
        R = snq * snq * (cq + ck) * (cq + ck) /
            (snq * snq * (ck * cq + 1.0) * (ck * cq + 1.0) +
             sk * sq * cnq * sk * sq * cnq);
        double ratio = snq * (1.0 + cq * ck) / (sq * sk);
        T = 1.0 / (cnq * cnq + ratio * ratio);
    } else {
        // |x| > 1: hyperbolic form; s carries the sign of x so the x <= -1
        // tail is covered by the same expression.
        double s = (x > 0.0) ? 1.0 : -1.0;
        double kap = std::acosh(std::abs(x));
        double sh = std::sinh(kap);
        double ch = std::cosh(kap);
        double shn = std::sinh(n * kap);
        double chn = std::cosh(n * kap);
        R = shn * shn * (s * ch + ck) * (s * ch + ck) /
            (shn * shn * (ck * s * ch + 1.0) * (ck * s * ch + 1.0) +
             sk * sh * chn * sk * sh * chn);
        double ratio = shn * (1.0 + s * ch * ck) / (sh * sk);
        T = 1.0 / (chn * chn + ratio * ratio);
    }
    return {R, T};
}

namespace {

// T of the degenerate-level single cell at offset s from the line center,
// used for the half-maximum search.
double single_cell_transmission(double s, const ModelParams& base) {
    ModelParams p(base.omega_c, base.v, base.g, base.omega0, 0.0, 1);
    double E = base.omega_c + base.omega0 + s;
    EnergyPoint pt = classify(E, p);
    if (pt.regime == Regime::LeadBandEdge)
        return 0.0;
    return transmission_amplitude(pt, p).big_t;
}

} // namespace

double fitted_broad_semiwidth(const ModelParams& params) {
    if (params.g == 0.0)
        throw FeatureAbsentError(
            "fitted_broad_semiwidth: no resonance for g = 0");

    // T rises from the exact zero at the line center towards 1; scan
    // geometrically for the first T > 1/2 bracket, then bisect.
    double band_top = 2.0 * params.v - params.omega0; // offset of the band edge
    if (!(band_top > 0.0))
        throw FeatureAbsentError(
            "fitted_broad_semiwidth: atomic center outside the lead band");
    double lo = params.gamma() * 1e-6;
    double hi = lo;
    bool bracketed = false;
    while (hi < band_top) {
        hi = std::min(hi * 1.5, band_top * (1.0 - 1e-12));
        if (single_cell_transmission(hi, params) > 0.5) {
            bracketed = true;
            break;
        }
        lo = hi;
        if (hi >= band_top * (1.0 - 1e-12))
            break;
    }
    if (!bracketed)
        throw FeatureAbsentError(
            "fitted_broad_semiwidth: transmission never reaches 1/2 in band");

    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (single_cell_transmission(mid, params) < 0.5)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-12 * std::max(1.0, std::abs(hi)))
            break;
    }
    return 0.5 * (lo + hi);
}

double breit_wigner_reflection(double Omega, const ModelParams& params) {
    double w = fitted_broad_semiwidth(params);
    double d = Omega - params.omega0;
    return w * w / (d * d + w * w);
}

double fano_transmission(double Omega, const ModelParams& params) {
    double w = fitted_broad_semiwidth(params);
    double eps = (Omega - params.omega0) / w;
    return eps * eps / (eps * eps + 1.0);
}

namespace {

double narrow_lorentzian(double d, double delta) {
    if (delta == 0.0)
        return 0.0; // degenerate levels: no narrow band
    return delta * delta / (d * d + delta * delta);
}

} // namespace

std::pair<double, double> dicke_line_shapes(double Omega,
                                            const ModelParams& params) {
    double w = fitted_broad_semiwidth(params);
    double delta =
        params.delta_omega * params.delta_omega / (2.0 * params.gamma());
    double d = Omega - params.omega0;
    double broad_bw = w * w / (d * d + w * w);
    double broad_fano = d * d / (d * d + w * w);
    double narrow = narrow_lorentzian(d, delta);
    return {broad_bw - narrow, broad_fano + narrow};
}

LineShapeParams dicke_params(const ModelParams& params) {
    double w = fitted_broad_semiwidth(params);
    double delta =
        params.delta_omega * params.delta_omega / (2.0 * params.gamma());
    return LineShapeParams(LineShapeKind::DickeT, params.omega0, w, delta);
}

} // namespace cca
