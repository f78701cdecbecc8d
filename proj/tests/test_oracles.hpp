#pragma once

// Independent numerical oracles shared by the unit and acceptance suites.
// Everything here deliberately avoids the closed-form assembly routines it
// is used to check: matrix elements come from Gauss-Jacobi quadrature of
// the defining integrals, moments from their own recursion, and polynomial
// values from the hypergeometric series.

#include <cmath>
#include <vector>

#include "trabox/model.hpp"
#include "trabox/special_functions.hpp"

namespace oracles {

// Moments m_j = Integral y^j (1-y)^mu (1+y)^nu dy by the recursion
// m_{j+1} = ((nu-mu) m_j + j m_{j-1}) / (mu+nu+2+j), m_0 = weight mass.
inline std::vector<double> weight_moments(const trabox::JacobiParams& p,
                                          int count) {
    std::vector<double> m(count);
    m[0] = trabox::jacobi_weight_mass(p);
    for (int j = 0; j + 1 < count; ++j)
        m[j + 1] = ((p.nu - p.mu) * m[j] + (j > 0 ? j * m[j - 1] : 0.0)) /
                   (p.mu + p.nu + 2.0 + j);
    return m;
}

// Terminating hypergeometric series for the Jacobi polynomial.
inline double jacobi_series(int n, const trabox::JacobiParams& p, double y) {
    using trabox::log_gamma;
    const double a = p.mu, b = p.nu;
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double log_term =
            log_gamma(n + a + 1.0) + log_gamma(n + k + a + b + 1.0) -
            log_gamma(a + k + 1.0) - log_gamma(n + a + b + 1.0) -
            log_gamma(k + 1.0) - log_gamma(n - k + 1.0);
        const double z = 0.5 * (y - 1.0);
        sum += std::exp(log_term) * std::pow(z, k);
    }
    return sum;
}

// Quadrature of the overlap integral
// (A_m A_n / (2 sqrt 2)) Integral (1-y)^{mu+1} (1+y)^nu P_m P_n dy.
inline double overlap_entry_quadrature(const trabox::BasisSpec& s, int m,
                                       int n, const trabox::QuadratureRule& q) {
    const trabox::JacobiParams p(s.mu, s.nu);
    double acc = 0.0;
    for (int i = 0; i < q.order(); ++i) {
        const double y = q.nodes[i];
        acc += q.weights[i] * (1.0 - y) * trabox::jacobi_eval(m, p, y) *
               trabox::jacobi_eval(n, p, y);
    }
    return trabox::norm_const(m, p) * trabox::norm_const(n, p) /
           (2.0 * std::sqrt(2.0)) * acc;
}

// Quadrature of the wave-operator integral: the bracket applied to the ket
// index n, including the two 1/(1 +- y) terms that the basis constraints
// cancel. Returns the dimensionless (L^2/4) J_{m,n}.
inline double wave_operator_entry_quadrature(const trabox::BasisSpec& s, int m,
                                             int n, double eps,
                                             const trabox::QuadratureRule& q) {
    const trabox::JacobiParams p(s.mu, s.nu);
    const double shift = n + 0.5 * (s.mu + s.nu + 1.0);
    double acc = 0.0;
    for (int i = 0; i < q.order(); ++i) {
        const double y = q.nodes[i];
        const double bracket =
            0.5 * (s.mu * s.mu - 1.0 - 8.0 * s.uR) / (1.0 - y) +
            0.5 * (s.nu * s.nu - 0.25 - 8.0 * s.uL) / (1.0 + y) +
            eps * (1.0 - y) - s.u1 * y - shift * shift + 1.0 / 16.0 -
            2.0 * s.u0;
        acc += q.weights[i] * bracket * trabox::jacobi_eval(m, p, y) *
               trabox::jacobi_eval(n, p, y);
    }
    return -trabox::norm_const(m, p) * trabox::norm_const(n, p) /
           (2.0 * std::sqrt(2.0)) * acc;
}

// Least-squares slope of log|f| against log(t).
inline double loglog_slope(const std::vector<double>& t,
                           const std::vector<double>& f) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int n = static_cast<int>(t.size());
    for (int i = 0; i < n; ++i) {
        const double lx = std::log(t[i]);
        const double ly = std::log(std::abs(f[i]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline trabox::PotentialParams reference_box() {
    trabox::PotentialParams p;
    p.V0 = -7.0;
    p.V1 = -5.0;
    p.VL = 0.25;
    p.VR = 0.5;
    p.L = 2.0;
    p.unit_mode = trabox::UnitMode::paper_units;
    return p;
}

}  // namespace oracles
