#ifndef CCA_SELFTEST_HPP
#define CCA_SELFTEST_HPP

#include <cstdint>
#include <ostream>
#include <string>

#include "cca/model.hpp"

namespace cca {

/// Deterministic 64-bit generator (splitmix64) with an explicit
/// uint64 -> double mapping, so the same seed reproduces the same draw
/// sequence on every platform and standard library.
class DrawSequence {
public:
    explicit DrawSequence(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    double uniform(double lo, double hi);
    int uniform_int(int lo, int hi); // inclusive

private:
    std::uint64_t state_;
};

/// One random scattering configuration in the documented ranges:
/// v = 1, g in [0.05, 2], delta_omega in [0, 3] gamma, omega0 in
/// [-1/2, 1/2], N in 1..10, E in the open lead band with atomic poles
/// excluded by a 1e-6 margin.
struct RandomDraw {
    ModelParams params;
    double energy;
};

RandomDraw random_draw(DrawSequence& seq);

struct SelftestOptions {
    std::uint64_t seed = 20260801;
    int solver_draws = 1000;
    int unitarity_draws = 100000;
    double solver_tolerance = 1e-10;
    double unitarity_tolerance = 1e-12;
    double injected_fault = 0.0; // test-harness hook: perturbs one solver
};

struct SelftestReport {
    int solver_checked = 0;
    int solver_failed = 0;
    double solver_max_dev = 0.0;
    int unitarity_checked = 0;
    int unitarity_failed = 0;
    double unitarity_max_dev = 0.0;
    std::string first_failure; // echo of the failing draw, if any

    bool passed() const { return solver_failed == 0 && unitarity_failed == 0; }
};

/// Randomized three-solver agreement suite (analytic amplitudes vs the
/// full linear system vs the transfer-matrix product, plus the atomic
/// amplitude consistency of the full solve) and the unitarity suite on
/// the analytic amplitudes.
SelftestReport run_selftest(const SelftestOptions& options, std::ostream& log);

} // namespace cca

#endif
