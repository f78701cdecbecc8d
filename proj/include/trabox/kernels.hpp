#pragma once

#include <cstddef>
#include <vector>

#include "trabox/tridiagonal.hpp"

namespace trabox {

/// Dense square matrix, row-major storage.
struct DenseMatrix {
    std::size_t n = 0;
    std::vector<double> a;

    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t dim) : n(dim), a(dim * dim, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

namespace kernels {

// The functions in this namespace are the OpenMP-parallel compute kernels.
// Parallel loops carry no cross-thread reductions and use static schedules,
// so results are bit-identical to the serial references below for any
// thread count.

/// Householder reduction of a symmetric matrix to tridiagonal form.
/// On entry z holds the matrix; on exit it holds the accumulated orthogonal
/// transform Q with Q^T A Q = tridiag(d, e). Both d and e have size n;
/// e[i] couples d[i] and d[i+1], e[n-1] is zero.
void householder_tridiagonalize(DenseMatrix& z, std::vector<double>& d,
                                std::vector<double>& e);

/// Implicit-shift QL with Wilkinson shifts on tridiag(d, e), e indexed as in
/// householder_tridiagonalize. If z is non-null its columns are rotated
/// along, so on exit column j of z is the eigenvector of d[j]. Eigenvalues
/// are left unsorted. Throws NumericError once the total sweep count
/// exceeds sweep_cap (pass 0 for the default cap of 50*n).
void ql_implicit(std::vector<double>& d, std::vector<double>& e, DenseMatrix* z,
                 int sweep_cap = 0);

/// Number of eigenvalues of t strictly below lambda (Sturm sequence count).
int sturm_count_below(const TridiagonalSymmetric& t, double lambda);

/// The k smallest eigenvalues of t by Sturm bisection, ascending.
/// Bisection runs per level in parallel.
std::vector<double> lowest_eigenvalues(const TridiagonalSymmetric& t, int k);

namespace serial {

// Plain single-threaded implementations kept as the reference the parallel
// kernels are tested and benchmarked against.

void householder_tridiagonalize(DenseMatrix& z, std::vector<double>& d,
                                std::vector<double>& e);
void ql_implicit(std::vector<double>& d, std::vector<double>& e, DenseMatrix* z,
                 int sweep_cap = 0);
std::vector<double> lowest_eigenvalues(const TridiagonalSymmetric& t, int k);

}  // namespace serial

}  // namespace kernels
}  // namespace trabox
