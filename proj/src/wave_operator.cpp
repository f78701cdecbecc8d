#include "trabox/wave_operator.hpp"

#include <cmath>
#include <stdexcept>

namespace trabox {

double coupling_diag(int n, const BasisSpec& s) {
    if (n < 0) throw std::domain_error("coupling_diag: index must be >= 0");
    // At n = 0 the factor (mu+nu) cancels exactly against nu^2 - mu^2,
    // which keeps the mu + nu = 0 case finite.
    if (n == 0) return (s.nu - s.mu) / (s.mu + s.nu + 2.0);
    const double t = 2.0 * n + s.mu + s.nu;
    if (t == 0.0)
        throw std::domain_error(
            "coupling_diag: degenerate parameters, 2n+mu+nu vanishes");
    return (s.nu * s.nu - s.mu * s.mu) / (t * (t + 2.0));
}

double coupling_offdiag(int n, const BasisSpec& s) {
    if (n < 0) throw std::domain_error("coupling_offdiag: index must be >= 0");
    const double t = 2.0 * n + s.mu + s.nu;
    const double rad = (n + 1.0) * (n + s.mu + 1.0) * (n + s.nu + 1.0) *
                       (n + s.mu + s.nu + 1.0) / ((t + 1.0) * (t + 3.0));
    if (!(rad > 0.0))
        throw std::domain_error("coupling_offdiag: degenerate parameters");
    return 2.0 / (t + 2.0) * std::sqrt(rad);
}

TridiagonalSymmetric build_hamiltonian(const BasisSpec& s, std::size_t N) {
    TridiagonalSymmetric h(N);
    const double shift = 0.5 * (s.mu + s.nu + 1.0);
    for (std::size_t n = 0; n < N; ++n) {
        const double c = n + shift;
        h.diag[n] = c * c + 2.0 * s.u0 - 1.0 / 16.0 +
                    s.u1 * coupling_diag(static_cast<int>(n), s);
        if (n + 1 < N)
            h.offdiag[n] = s.u1 * coupling_offdiag(static_cast<int>(n), s);
    }
    return h;
}

TridiagonalSymmetric build_overlap(const BasisSpec& s, std::size_t N) {
    TridiagonalSymmetric omega(N);
    for (std::size_t n = 0; n < N; ++n) {
        omega.diag[n] = 1.0 - coupling_diag(static_cast<int>(n), s);
        if (n + 1 < N)
            omega.offdiag[n] = -coupling_offdiag(static_cast<int>(n), s);
    }
    return omega;
}

TridiagonalSymmetric build_wave_operator(const BasisSpec& s, std::size_t N,
                                         double eps) {
    TridiagonalSymmetric j(N);
    const double shift = 0.5 * (s.mu + s.nu + 1.0);
    for (std::size_t n = 0; n < N; ++n) {
        const double c = n + shift;
        j.diag[n] = c * c + 2.0 * s.u0 - eps - 1.0 / 16.0 +
                    (eps + s.u1) * coupling_diag(static_cast<int>(n), s);
        if (n + 1 < N)
            j.offdiag[n] =
                (eps + s.u1) * coupling_offdiag(static_cast<int>(n), s);
    }
    return j;
}

}  // namespace trabox
