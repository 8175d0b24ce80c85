#ifndef CCA_ORACLE_HPP
#define CCA_ORACLE_HPP

#include <complex>
#include <utility>
#include <vector>

#include "cca/model.hpp"

namespace cca {

/// Full solution of the scattering problem: photon amplitude u_j in each
/// doped cavity plus the two excited-state amplitudes of each atom, along
/// with the boundary amplitudes r and t of the unit-amplitude incident wave.
struct InternalState {
    std::vector<std::complex<double>> u;   // length n_cells
    std::vector<std::complex<double>> d_a; // upper level, length n_cells
    std::vector<std::complex<double>> d_e; // lower level, length n_cells
    std::complex<double> r;
    std::complex<double> t;
};

struct ReducedSolution {
    std::complex<double> r;
    std::complex<double> t;
    std::vector<std::complex<double>> u;
};

/// Brute-force solve of the (3N+2)-unknown linear system built from the
/// cavity/atom difference equations at j = 1..N and the plane-wave matching
/// rows at j = 0 and j = N+1. Dense LU with partial pivoting.
/// Throws SingularSystemError on pole or band-edge inputs, or when the
/// condition estimate exceeds 1e14.
InternalState solve_full_system(double E, const ModelParams& params);

/// Same scattering data from the (N+2)-unknown chain with the atoms
/// eliminated into the renormalized site energy.
ReducedSolution solve_reduced_system(double E, const ModelParams& params);

/// 2x2 cell-matrix product for the reduced chain. Each cell matrix is
/// [[2a, -1], [1, 0]] with a = (E - omega_c - eps)/2v and has determinant 1;
/// the product is rescaled when its norm exceeds 1e300 (log factor tracked,
/// so t underflows gracefully instead of overflowing).
std::pair<std::complex<double>, std::complex<double>>
solve_transfer_matrix(double E, const ModelParams& params);

} // namespace cca

#endif
