#include "trabox/fd_reference.hpp"

#include <stdexcept>

#include "trabox/kernels.hpp"

namespace trabox {

namespace {

// Dimensionless potential at xi = x/L: (L^2/4) V.
double v_dimensionless(const BasisSpec& s, double xi) {
    const double r2 = xi * xi;
    const double w = 1.0 - r2;
    return (s.u0 + s.uL / r2 + s.uR / w + s.u1 * (r2 - 0.5)) / w;
}

// In units of 4/L^2 the eigenproblem on xi in (0, 1) reads
// -(1/8) psi'' + v(xi) psi = eps psi.
std::vector<double> fd_solve(const BasisSpec& s, std::size_t m,
                             std::size_t levels) {
    const double h = 1.0 / static_cast<double>(m + 1);
    TridiagonalSymmetric t(m);
    const double kinetic = 0.25 / (h * h);
    for (std::size_t j = 0; j < m; ++j) {
        const double xi = static_cast<double>(j + 1) * h;
        t.diag[j] = kinetic + v_dimensionless(s, xi);
        if (j + 1 < m) t.offdiag[j] = -0.125 / (h * h);
    }
    return kernels::lowest_eigenvalues(t, static_cast<int>(levels));
}

}  // namespace

std::vector<double> fd_spectrum(const PotentialParams& p, const FdConfig& cfg) {
    if (cfg.grid_points < 100)
        throw std::invalid_argument("fd_spectrum: need at least 100 grid points");
    if (cfg.levels < 1 || cfg.levels > 10)
        throw std::invalid_argument("fd_spectrum: levels must be in [1, 10]");

    const BasisSpec s = to_basis_spec(p);
    std::vector<double> coarse = fd_solve(s, cfg.grid_points, cfg.levels);
    if (!cfg.richardson) return coarse;

    const std::vector<double> fine =
        fd_solve(s, 2 * cfg.grid_points, cfg.levels);
    std::vector<double> out(cfg.levels);
    for (std::size_t i = 0; i < cfg.levels; ++i)
        out[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
    return out;
}

}  // namespace trabox
