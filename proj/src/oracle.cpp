#include "cca/oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>

namespace cca {

using cdouble = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

namespace {

// Both degenerate input classes surface as SingularSystemError: a pole or
// band-edge hit degenerates the inhomogeneous system.
double checked_wavenumber(double E, const ModelParams& p, const char* who) {
    EnergyPoint pt = classify(E, p);
    if (pt.regime == Regime::LeadBandEdge) {
        std::ostringstream msg;
        msg << who << ": E = " << E << " outside the lead band (band edge hit)";
        throw SingularSystemError(msg.str());
    }
    if (pt.regime == Regime::AtomPole) {
        std::ostringstream msg;
        msg << who << ": E = " << E << " on an atomic level (pole hit)";
        throw SingularSystemError(msg.str());
    }
    return pt.wavenumber;
}

VectorXcd solve_checked(const MatrixXcd& A, const VectorXcd& b, const char* who) {
    Eigen::PartialPivLU<MatrixXcd> lu(A);
    double rc = lu.rcond();
    if (!(rc > 1e-14)) {
        std::ostringstream msg;
        msg << who << ": matrix numerically singular (rcond = " << rc << ")";
        throw SingularSystemError(msg.str());
    }
    return lu.solve(b);
}

} // namespace

InternalState solve_full_system(double E, const ModelParams& params) {
    const int n = params.n_cells;
    const double v = params.v;
    const double g = params.g;
    const double omega = params.omega_c;
    const double wa = params.omega_a();
    const double we = params.omega_e();
    const double k = checked_wavenumber(E, params, "solve_full_system");
    const cdouble eik = std::polar(1.0, k);

    // unknowns: u_1..u_N, d_a_1..d_a_N, d_e_1..d_e_N, r, t
    const int dim = 3 * n + 2;
    const int ir = 3 * n;
    const int it = 3 * n + 1;
    auto iu = [](int j) { return j - 1; };
    auto ia = [n](int j) { return n + j - 1; };
    auto ie = [n](int j) { return 2 * n + j - 1; };

    MatrixXcd A = MatrixXcd::Zero(dim, dim);
    VectorXcd b = VectorXcd::Zero(dim);

    // j = 0 matching: (E - omega)(1 + r) = v (u_1 + e^{-ik} + r e^{ik})
    A(0, iu(1)) = -v;
    A(0, ir) = (E - omega) - v * eik;
    b(0) = v / eik - (E - omega);

    // j = N+1 matching: (E - omega) t e^{ik(N+1)} = v (t e^{ik(N+2)} + u_N)
    A(1, iu(n)) = -v;
    A(1, it) = (E - omega) * std::polar(1.0, k * (n + 1)) -
               v * std::polar(1.0, k * (n + 2));

    // doped-cavity rows: (E - omega) u_j = v (u_{j+1} + u_{j-1}) + g (d_e + d_a)
    for (int j = 1; j <= n; ++j) {
        int row = 1 + j;
        A(row, iu(j)) = E - omega;
        A(row, ia(j)) = -g;
        A(row, ie(j)) = -g;
        if (j + 1 <= n)
            A(row, iu(j + 1)) = -v;
        else
            A(row, it) = -v * std::polar(1.0, k * (n + 1));
        if (j - 1 >= 1) {
            A(row, iu(j - 1)) += -v;
        } else {
            A(row, ir) += -v;
            b(row) += v;
        }
    }

    // atomic rows: (E - omega_e) d_e_j = g u_j,  (E - omega_a) d_a_j = g u_j.
    // Decoupled atoms (g = 0) keep d = 0 even when E coincides with a bare
    // level, where the literal row would be identically zero.
    for (int j = 1; j <= n; ++j) {
        if (g == 0.0) {
            A(1 + n + j, ie(j)) = 1.0;
            A(1 + 2 * n + j, ia(j)) = 1.0;
        } else {
            A(1 + n + j, ie(j)) = E - we;
            A(1 + n + j, iu(j)) = -g;
            A(1 + 2 * n + j, ia(j)) = E - wa;
            A(1 + 2 * n + j, iu(j)) = -g;
        }
    }

    VectorXcd sol = solve_checked(A, b, "solve_full_system");

    InternalState st;
    st.u.resize(n);
    st.d_a.resize(n);
    st.d_e.resize(n);
    for (int j = 1; j <= n; ++j) {
        st.u[j - 1] = sol(iu(j));
        st.d_a[j - 1] = sol(ia(j));
        st.d_e[j - 1] = sol(ie(j));
    }
    st.r = sol(ir);
    st.t = sol(it);
    return st;
}

ReducedSolution solve_reduced_system(double E, const ModelParams& params) {
    const int n = params.n_cells;
    const double v = params.v;
    const double omega = params.omega_c;
    const double k = checked_wavenumber(E, params, "solve_reduced_system");
    const double eps = effective_energy(E, params);
    const cdouble eik = std::polar(1.0, k);

    // unknowns: u_1..u_N, r, t
    const int dim = n + 2;
    const int ir = n;
    const int it = n + 1;

    MatrixXcd A = MatrixXcd::Zero(dim, dim);
    VectorXcd b = VectorXcd::Zero(dim);

    A(0, 0) = -v;
    A(0, ir) = (E - omega) - v * eik;
    b(0) = v / eik - (E - omega);

    A(1, n - 1) = -v;
    A(1, it) = (E - omega) * std::polar(1.0, k * (n + 1)) -
               v * std::polar(1.0, k * (n + 2));

    for (int j = 1; j <= n; ++j) {
        int row = 1 + j;
        A(row, j - 1) = E - omega - eps;
        if (j + 1 <= n)
            A(row, j) = -v;
        else
            A(row, it) = -v * std::polar(1.0, k * (n + 1));
        if (j - 1 >= 1) {
            A(row, j - 2) += -v;
        } else {
            A(row, ir) += -v;
            b(row) += v;
        }
    }

    VectorXcd sol = solve_checked(A, b, "solve_reduced_system");

    ReducedSolution out;
    out.u.assign(sol.data(), sol.data() + n);
    out.r = sol(ir);
    out.t = sol(it);
    return out;
}

std::pair<cdouble, cdouble> solve_transfer_matrix(double E,
                                                  const ModelParams& params) {
    const int n = params.n_cells;
    const double k = checked_wavenumber(E, params, "solve_transfer_matrix");
    const double eps = effective_energy(E, params);
    const double a = (E - params.omega_c - eps) / (2.0 * params.v);
    const cdouble eik = std::polar(1.0, k);

    Eigen::Matrix2d cell;
    cell << 2.0 * a, -1.0, 1.0, 0.0; // det = 1 per cell

    Eigen::Matrix2d prod = Eigen::Matrix2d::Identity();
    double log_scale = 0.0;
    for (int j = 0; j < n; ++j) {
        prod = cell * prod;
        double norm = prod.cwiseAbs().maxCoeff();
        if (norm > 1e300) {
            prod /= norm;
            log_scale += std::log(norm);
        }
    }

    // (u_1, u_0) = P^{-1} (u_{N+1}, u_N) with det P = 1 gives the
    // cancellation-free extraction:
    //   t = 2i sin k e^{-ikN} / (P10 + P11 e^{ik} - P01 - P00 e^{-ik})
    //   r = t e^{ikN} (P00 - P10 e^{ik}) - 1     (scale factor cancels in r)
    cdouble den = prod(1, 0) + prod(1, 1) * eik - prod(0, 1) - prod(0, 0) / eik;
    cdouble t_scaled = cdouble(0.0, 2.0) * std::sin(k) * std::polar(1.0, -k * n) / den;
    cdouble r = t_scaled * std::polar(1.0, k * n) * (prod(0, 0) - prod(1, 0) * eik) - 1.0;
    cdouble t = t_scaled * std::exp(-log_scale);
    return {r, t};
}

} // namespace cca
