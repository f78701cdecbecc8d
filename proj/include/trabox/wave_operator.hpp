#pragma once

#include <cstddef>

#include "trabox/model.hpp"
#include "trabox/tridiagonal.hpp"

namespace trabox {

/// Diagonal coefficient of the three-term recurrence y q_n = D_n q_{n+1}
/// + C_n q_n + D_{n-1} q_{n-1} in the weight-orthonormalized Jacobi basis:
/// C_n = (nu^2 - mu^2) / ((2n+mu+nu)(2n+mu+nu+2)).
double coupling_diag(int n, const BasisSpec& s);

/// Off-diagonal coefficient of the same recurrence:
/// D_n = 2/(2n+mu+nu+2) * sqrt((n+1)(n+mu+1)(n+nu+1)(n+mu+nu+1)
///                             / ((2n+mu+nu+1)(2n+mu+nu+3))).
/// Strictly positive for mu, nu > -1.
double coupling_offdiag(int n, const BasisSpec& s);

/// Dimensionless Hamiltonian h = (L^2/4) H, the wave operator at eps = 0:
/// diag[n] = (n + (mu+nu+1)/2)^2 + 2 u0 - 1/16 + u1 C_n,
/// offdiag[n] = u1 D_n.
TridiagonalSymmetric build_hamiltonian(const BasisSpec& s, std::size_t N);

/// Overlap (Gram) matrix of the basis:
/// diag[n] = 1 - C_n, offdiag[n] = -D_n.
TridiagonalSymmetric build_overlap(const BasisSpec& s, std::size_t N);

/// Dimensionless wave operator (L^2/4) J at energy eps. Satisfies the pencil
/// identity J(eps) = h - eps * Omega entrywise.
TridiagonalSymmetric build_wave_operator(const BasisSpec& s, std::size_t N,
                                         double eps);

}  // namespace trabox
