#pragma once

#include <cstddef>
#include <vector>

#include "trabox/kernels.hpp"
#include "trabox/model.hpp"
#include "trabox/tridiagonal.hpp"

namespace trabox {

/// Full spectral decomposition of a symmetric tridiagonal matrix.
struct EigenDecomposition {
    std::vector<double> values;  ///< ascending
    DenseMatrix vectors;         ///< column j is the eigenvector of values[j]
};

/// Implicit-shift QL with deterministic Wilkinson shifts (iteration cap
/// 50*N sweeps). Residuals satisfy ||T v - lambda v|| <= 1e-11 ||T||.
EigenDecomposition solve_symmetric_tridiagonal(const TridiagonalSymmetric& t);

/// Lower bidiagonal Cholesky factor G of a positive definite symmetric
/// tridiagonal matrix, omega = G G^T.
struct BidiagonalCholesky {
    std::vector<double> diag;  ///< size N
    std::vector<double> sub;   ///< size N-1
};

/// Throws NumericError("overlap not positive definite") on a pivot <= 0.
BidiagonalCholesky cholesky_tridiagonal(const TridiagonalSymmetric& t);

/// Result of the generalized eigenproblem h f = eps Omega f.
struct SpectrumResult {
    std::vector<double> eps;                   ///< ascending, dimensionless
    std::vector<std::vector<double>> vectors;  ///< Omega-normalized, f[0] > 0
    std::size_t basis_size = 0;
    BasisSpec spec{};
};

/// Solves the symmetric-definite pencil by Cholesky reduction: factor
/// omega = G G^T, solve the dense standard problem G^{-1} h G^{-T},
/// back-transform and Omega-normalize the vectors. The spec field of the
/// result is left default; use solve_spectrum to have it stamped.
SpectrumResult solve_generalized(const TridiagonalSymmetric& h,
                                 const TridiagonalSymmetric& omega);

/// Builds the Hamiltonian/overlap pair for the given basis and solves.
SpectrumResult solve_spectrum(const BasisSpec& spec, std::size_t N);

/// Per-level eigenvalues across basis sizes, plus the count of decimal
/// digits stabilized between consecutive sizes.
struct ConvergenceTable {
    std::vector<std::size_t> sizes;
    std::size_t levels = 0;
    std::vector<std::vector<double>> eps;  ///< eps[level][size_index]
    std::vector<std::vector<int>> stable_digits;  ///< [level][size_index-1]
};

/// Runs solve_spectrum for each size (sizes may repeat but must be
/// non-decreasing; levels <= smallest size). Different sizes run in
/// parallel.
ConvergenceTable convergence_study(const BasisSpec& spec,
                                   const std::vector<std::size_t>& sizes,
                                   std::size_t levels);

}  // namespace trabox
