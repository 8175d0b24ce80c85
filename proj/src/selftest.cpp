#include "cca/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "cca/oracle.hpp"
#include "cca/scattering.hpp"

namespace cca {

std::uint64_t DrawSequence::next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double DrawSequence::uniform(double lo, double hi) {
    double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

int DrawSequence::uniform_int(int lo, int hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
}

RandomDraw random_draw(DrawSequence& seq) {
    const double v = 1.0;
    for (;;) {
        double g = seq.uniform(0.05, 2.0);
        double gam = g * g / (2.0 * v);
        double dw = seq.uniform(0.0, 3.0) * gam;
        double omega0 = seq.uniform(-0.5, 0.5);
        int n = seq.uniform_int(1, 10);
        double E = seq.uniform(-2.0 * v + 1e-6, 2.0 * v - 1e-6);
        if (std::min(std::abs(E - (omega0 + dw)), std::abs(E - (omega0 - dw))) <
            1e-6)
            continue;
        return RandomDraw{ModelParams(0.0, v, g, omega0, dw, n), E};
    }
}

namespace {

std::string describe(const RandomDraw& d) {
    std::ostringstream os;
    os.precision(17);
    os << "E=" << d.energy << " v=" << d.params.v << " g=" << d.params.g
       << " omega0=" << d.params.omega0
       << " delta_omega=" << d.params.delta_omega << " N=" << d.params.n_cells;
    return os.str();
}

} // namespace

SelftestReport run_selftest(const SelftestOptions& options, std::ostream& log) {
    SelftestReport report;
    DrawSequence seq(options.seed);

    for (int i = 0; i < options.solver_draws; ++i) {
        RandomDraw d = random_draw(seq);
        InternalState full = solve_full_system(d.energy, d.params);
        ReducedSolution red = solve_reduced_system(d.energy, d.params);
        auto [tm_r, tm_t] = solve_transfer_matrix(d.energy, d.params);
        ScatteringAmplitudes an = scatter(d.energy, d.params);

        if (options.injected_fault != 0.0)
            tm_t += options.injected_fault;

        double dev = 0.0;
        auto upd = [&dev](std::complex<double> a, std::complex<double> b) {
            dev = std::max(dev, std::abs(a - b));
        };
        upd(full.t, red.t);
        upd(full.r, red.r);
        upd(full.t, tm_t);
        upd(full.r, tm_r);
        upd(full.t, an.t);
        upd(full.r, an.r);

        // atomic amplitudes must satisfy d = g u / (E - omega')
        for (int j = 0; j < d.params.n_cells; ++j) {
            upd(full.d_e[j],
                d.params.g * full.u[j] / (d.energy - d.params.omega_e()));
            upd(full.d_a[j],
                d.params.g * full.u[j] / (d.energy - d.params.omega_a()));
        }

        ++report.solver_checked;
        report.solver_max_dev = std::max(report.solver_max_dev, dev);
        if (!(dev <= options.solver_tolerance)) {
            ++report.solver_failed;
            if (report.first_failure.empty()) {
                report.first_failure = "solver agreement: " + describe(d);
                log << "FAIL solver agreement (dev = " << dev << ") at "
                    << report.first_failure << "\n";
            }
        }
    }

    for (int i = 0; i < options.unitarity_draws; ++i) {
        RandomDraw d = random_draw(seq);
        ScatteringAmplitudes an = scatter(d.energy, d.params);
        double dev = std::abs(an.big_r + an.big_t - 1.0);
        ++report.unitarity_checked;
        report.unitarity_max_dev = std::max(report.unitarity_max_dev, dev);
        if (!(dev <= options.unitarity_tolerance)) {
            ++report.unitarity_failed;
            if (report.first_failure.empty()) {
                report.first_failure = "unitarity: " + describe(d);
                log << "FAIL unitarity (|R+T-1| = " << dev << ") at "
                    << report.first_failure << "\n";
            }
        }
    }

    return report;
}

} // namespace cca
