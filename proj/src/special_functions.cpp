#include "trabox/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "trabox/kernels.hpp"

namespace trabox {

JacobiParams::JacobiParams(double mu_, double nu_) : mu(mu_), nu(nu_) {
    if (!(mu > -1.0) || !(nu > -1.0))
        throw std::domain_error("JacobiParams: mu and nu must be > -1");
}

double log_gamma(double z) {
    if (!(z > 0.0))
        throw std::domain_error("log_gamma: argument must be positive");
    return std::lgamma(z);
}

double jacobi_eval(int n, const JacobiParams& p, double y) {
    if (n < 0) throw std::domain_error("jacobi_eval: degree must be >= 0");
    if (std::abs(y) > 1.0 + 1e-12)
        throw std::domain_error("jacobi_eval: y must lie in [-1, 1]");
    y = std::clamp(y, -1.0, 1.0);

    const double mu = p.mu, nu = p.nu;
    if (n == 0) return 1.0;

    double prev = 1.0;
    double cur = 0.5 * ((mu + nu + 2.0) * y + (mu - nu));
    for (int m = 1; m < n; ++m) {
        const double s = 2.0 * m + mu + nu;
        // y P_m = up * P_{m+1} + mid * P_m + down * P_{m-1}
        const double mid = (nu * nu - mu * mu) / (s * (s + 2.0));
        const double down = 2.0 * (m + mu) * (m + nu) / (s * (s + 1.0));
        const double up =
            2.0 * (m + 1.0) * (m + mu + nu + 1.0) / ((s + 1.0) * (s + 2.0));
        const double next = ((y - mid) * cur - down * prev) / up;
        prev = cur;
        cur = next;
    }
    return cur;
}

double norm_const(int n, const JacobiParams& p) {
    if (n < 0) throw std::domain_error("norm_const: degree must be >= 0");
    const double mu = p.mu, nu = p.nu;
    const double lead = 2.0 * n + mu + nu + 1.0;
    if (!(lead > 0.0) || !(n + mu + nu + 1.0 > 0.0))
        throw std::domain_error("norm_const: parameters outside normalizable range");
    const double log_sq = std::log(lead) - (mu + nu - 0.5) * std::numbers::ln2 +
                          log_gamma(n + 1.0) + log_gamma(n + mu + nu + 1.0) -
                          log_gamma(n + nu + 1.0) - log_gamma(n + mu + 1.0);
    return std::exp(0.5 * log_sq);
}

double jacobi_weight_mass(const JacobiParams& p) {
    const double mu = p.mu, nu = p.nu;
    return std::exp((mu + nu + 1.0) * std::numbers::ln2 + log_gamma(mu + 1.0) +
                    log_gamma(nu + 1.0) - log_gamma(mu + nu + 2.0));
}

QuadratureRule gauss_jacobi(int k, const JacobiParams& p) {
    if (k < 1) throw std::domain_error("gauss_jacobi: order must be >= 1");
    const double mu = p.mu, nu = p.nu;

    // Symmetric recurrence matrix of the orthonormal polynomials: diagonal
    // alpha_n, off-diagonal sqrt(beta_n).
    std::vector<double> d(k), e(k, 0.0);
    d[0] = (nu - mu) / (mu + nu + 2.0);
    for (int n = 1; n < k; ++n) {
        const double s = 2.0 * n + mu + nu;
        d[n] = (nu * nu - mu * mu) / (s * (s + 2.0));
        double beta;
        if (n == 1) {
            // (n + mu + nu) cancels against (2n + mu + nu - 1) at n = 1.
            beta = 4.0 * (1.0 + mu) * (1.0 + nu) /
                   ((2.0 + mu + nu) * (2.0 + mu + nu) * (3.0 + mu + nu));
        } else {
            beta = 4.0 * n * (n + mu) * (n + nu) * (n + mu + nu) /
                   (s * s * (s + 1.0) * (s - 1.0));
        }
        e[n - 1] = std::sqrt(beta);
    }

    DenseMatrix z(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) z(i, i) = 1.0;
    kernels::ql_implicit(d, e, &z);

    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });

    const double mass = jacobi_weight_mass(p);
    QuadratureRule rule;
    rule.nodes.resize(k);
    rule.weights.resize(k);
    for (int j = 0; j < k; ++j) {
        rule.nodes[j] = d[idx[j]];
        const double first = z(0, idx[j]);
        rule.weights[j] = mass * first * first;
    }
    return rule;
}

}  // namespace trabox
