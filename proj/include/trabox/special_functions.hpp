#pragma once

#include <vector>

namespace trabox {

/// Exponent pair (mu, nu) of the Jacobi weight (1-y)^mu (1+y)^nu on [-1, 1].
struct JacobiParams {
    double mu;
    double nu;

    JacobiParams(double mu_, double nu_);  // requires mu, nu > -1
};

/// Gaussian quadrature rule for the Jacobi weight on [-1, 1].
struct QuadratureRule {
    std::vector<double> nodes;    ///< ascending, strictly inside (-1, 1)
    std::vector<double> weights;  ///< positive

    int order() const { return static_cast<int>(nodes.size()); }
};

/// ln Gamma(z) for z > 0; throws std::domain_error otherwise.
double log_gamma(double z);

/// Jacobi polynomial P_n^{(mu,nu)}(y) by upward three-term recurrence.
double jacobi_eval(int n, const JacobiParams& p, double y);

/// Normalization constant A_n making the basis weight-orthonormal:
/// A_n^2/(2*sqrt(2)) * Integral (1-y)^mu (1+y)^nu P_n P_m dy = delta_nm.
/// Gamma ratios go through log_gamma, so the value stays finite for large n.
double norm_const(int n, const JacobiParams& p);

/// Total mass of the weight: Integral (1-y)^mu (1+y)^nu dy over [-1, 1],
/// equal to 2^{mu+nu+1} B(mu+1, nu+1).
double jacobi_weight_mass(const JacobiParams& p);

/// k-point Gauss-Jacobi rule by Golub-Welsch: eigen-decomposition of the
/// k x k symmetric recurrence matrix; weights from the squared first
/// eigenvector components times the weight mass.
QuadratureRule gauss_jacobi(int k, const JacobiParams& p);

}  // namespace trabox
