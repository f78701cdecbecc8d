#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "trabox/model.hpp"

namespace trabox {

/// Expansion coefficients P_0..P_{N-1} generated by the three-term energy
/// recursion, normalized so values[0] = 1.
struct RecursionCoeffs {
    double eps = 0.0;
    std::vector<double> values;
};

/// Runs the energy recursion at the given dimensionless energy. The
/// recursion divides by (eps + u1); |eps + u1| < 1e-12 raises
/// std::domain_error (singular energy).
RecursionCoeffs recursion_coeffs(const BasisSpec& s, double eps, std::size_t N);

/// Basis function phi_n(x) = A_n (1-y)^alpha (1+y)^beta P_n^{(mu,nu)}(y)
/// with y = map_y(x). Vanishes at both walls.
double basis_eval(const BasisSpec& s, int n, double x);

enum class ReconstructionMethod { recursion, eigenvector };

struct WavefunctionSamples {
    std::vector<double> xs;
    std::vector<double> psi;
    int level = -1;            ///< energy level when known, else -1
    std::size_t n_used = 0;    ///< truncation N of the sum
    ReconstructionMethod method = ReconstructionMethod::eigenvector;
};

/// Uniform grid of `points` positions spanning [0, L] inclusive.
std::vector<double> uniform_grid(double L, std::size_t points);

/// Pointwise sum psi(x_j) = sum_n coeffs[n] phi_n(x_j); one Jacobi
/// recurrence pass per grid point, points evaluated in parallel.
std::vector<double> sum_basis_on_grid(const BasisSpec& s,
                                      const std::vector<double>& coeffs,
                                      const std::vector<double>& xs);

/// Serial reference for sum_basis_on_grid (identical arithmetic).
std::vector<double> sum_basis_on_grid_serial(const BasisSpec& s,
                                             const std::vector<double>& coeffs,
                                             const std::vector<double>& xs);

/// Un-normalized bound-state reconstruction at energy eps_m, truncated at N.
/// method = recursion uses the energy-recursion coefficients; eigenvector
/// solves the generalized problem at size N and uses the Omega-normalized
/// eigenvector of the level closest to eps_m.
WavefunctionSamples reconstruct(const BasisSpec& s, double eps_m, std::size_t N,
                                const std::vector<double>& xs,
                                ReconstructionMethod method,
                                int level_hint = -1);

/// Truncation-stability scan of the recursion-sum reconstruction.
struct StabilityReport {
    std::size_t n_critical = 0;    ///< first N past the stable window whose
                                   ///< metric exceeds unstable_tol; N_max if
                                   ///< instability never shows
    bool stable_window_found = false;
    bool instability_reached = false;
    std::vector<std::pair<std::size_t, double>> history;  ///< (N, metric)
};

/// metric(N) = ||psi_N - psi_{N+1}||_2 / ||psi_{N+1}||_2 on the grid, after
/// least-squares scale matching. A stable window is a maximal run with
/// metric < stable_tol; N_c is the first later N with metric > unstable_tol.
StabilityReport detect_stability(const BasisSpec& s, double eps_m,
                                 std::size_t N_max,
                                 const std::vector<double>& xs,
                                 double stable_tol = 1e-3,
                                 double unstable_tol = 1e-2);

/// Strict sign changes of psi, ignoring samples below 1e-12 * max|psi|.
int count_nodes(const WavefunctionSamples& samples);

}  // namespace trabox
