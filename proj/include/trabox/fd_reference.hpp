#pragma once

#include <cstddef>
#include <vector>

#include "trabox/model.hpp"

namespace trabox {

/// Settings for the finite-difference reference solver.
struct FdConfig {
    std::size_t grid_points = 16000;  ///< interior points M, M >= 100
    std::size_t levels = 3;           ///< eigenvalues requested, <= 10
    bool richardson = true;           ///< combine M and 2M grids
};

/// Independent reference spectrum: 3-point central differences for
/// -(1/2) psi'' + V psi = E psi on a uniform grid with Dirichlet walls,
/// lowest eigenvalues by Sturm bisection, returned in units of 4/L^2.
/// With richardson the M and 2M results combine as (4 e_{2M} - e_M)/3.
std::vector<double> fd_spectrum(const PotentialParams& p, const FdConfig& cfg);

}  // namespace trabox
