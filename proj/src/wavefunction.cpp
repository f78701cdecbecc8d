#include "trabox/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "trabox/eigensolver.hpp"
#include "trabox/special_functions.hpp"
#include "trabox/wave_operator.hpp"

namespace trabox {

namespace {

constexpr double kSingularEnergyTol = 1e-12;

// Coefficient-weighted Jacobi recurrence sweep at a single point:
// returns (1-y)^alpha (1+y)^beta * sum_n weights[n] P_n(y). When partials
// is non-null it receives the truncated sums for N = 1..weights.size(),
// each already carrying the edge factors.
double weighted_sum_at(const BasisSpec& s, const std::vector<double>& weights,
                       double x, double* partials = nullptr) {
    const double y = map_y(x, s.L);
    const std::size_t n_terms = weights.size();
    const double mu = s.mu, nu = s.nu;
    const double edge = std::pow(1.0 - y, s.alpha) * std::pow(1.0 + y, s.beta);

    double prev = 1.0;
    double acc = weights[0];
    if (partials) partials[0] = edge * acc;
    if (n_terms > 1) {
        double cur = 0.5 * ((mu + nu + 2.0) * y + (mu - nu));
        acc += weights[1] * cur;
        if (partials) partials[1] = edge * acc;
        for (std::size_t m = 1; m + 1 < n_terms; ++m) {
            const double t = 2.0 * m + mu + nu;
            const double mid = (nu * nu - mu * mu) / (t * (t + 2.0));
            const double down = 2.0 * (m + mu) * (m + nu) / (t * (t + 1.0));
            const double up = 2.0 * (m + 1.0) * (m + mu + nu + 1.0) /
                              ((t + 1.0) * (t + 2.0));
            const double next = ((y - mid) * cur - down * prev) / up;
            prev = cur;
            cur = next;
            acc += weights[m + 1] * cur;
            if (partials) partials[m + 1] = edge * acc;
        }
    }
    return edge * acc;
}

std::vector<double> normalized_coeffs(const BasisSpec& s,
                                      const std::vector<double>& coeffs) {
    std::vector<double> w(coeffs.size());
    for (std::size_t n = 0; n < coeffs.size(); ++n)
        w[n] = coeffs[n] * norm_const(static_cast<int>(n),
                                      JacobiParams(s.mu, s.nu));
    return w;
}

}  // namespace

RecursionCoeffs recursion_coeffs(const BasisSpec& s, double eps,
                                 std::size_t N) {
    if (N < 1) throw std::invalid_argument("recursion_coeffs: N must be >= 1");
    if (std::abs(eps + s.u1) < kSingularEnergyTol)
        throw std::domain_error(
            "recursion_coeffs: singular energy, eps + u1 vanishes");

    RecursionCoeffs r;
    r.eps = eps;
    r.values.resize(N);
    r.values[0] = 1.0;
    if (N == 1) return r;

    const double shift = 0.5 * (s.mu + s.nu + 1.0);
    const double inv_eu = 1.0 / (eps + s.u1);

    r.values[1] = -(coupling_diag(0, s) +
                    inv_eu * (shift * shift - eps + 2.0 * s.u0 - 1.0 / 16.0)) /
                  coupling_offdiag(0, s);

    for (std::size_t n = 1; n + 1 < N; ++n) {
        const double c = n + shift;
        const double mid =
            inv_eu * (eps - 2.0 * s.u0 + 1.0 / 16.0 - c * c) -
            coupling_diag(static_cast<int>(n), s);
        r.values[n + 1] =
            (mid * r.values[n] -
             coupling_offdiag(static_cast<int>(n) - 1, s) * r.values[n - 1]) /
            coupling_offdiag(static_cast<int>(n), s);
    }
    return r;
}

double basis_eval(const BasisSpec& s, int n, double x) {
    const double y = map_y(x, s.L);
    const JacobiParams p(s.mu, s.nu);
    return norm_const(n, p) * std::pow(1.0 - y, s.alpha) *
           std::pow(1.0 + y, s.beta) * jacobi_eval(n, p, y);
}

std::vector<double> uniform_grid(double L, std::size_t points) {
    if (points < 2) throw std::invalid_argument("uniform_grid: need >= 2 points");
    std::vector<double> xs(points);
    for (std::size_t i = 0; i < points; ++i)
        xs[i] = L * static_cast<double>(i) / static_cast<double>(points - 1);
    return xs;
}

std::vector<double> sum_basis_on_grid(const BasisSpec& s,
                                      const std::vector<double>& coeffs,
                                      const std::vector<double>& xs) {
    if (coeffs.empty())
        throw std::invalid_argument("sum_basis_on_grid: empty coefficients");
    const std::vector<double> w = normalized_coeffs(s, coeffs);
    std::vector<double> out(xs.size());
    const int npts = static_cast<int>(xs.size());
#pragma omp parallel for schedule(static)
    for (int j = 0; j < npts; ++j) out[j] = weighted_sum_at(s, w, xs[j]);
    return out;
}

std::vector<double> sum_basis_on_grid_serial(const BasisSpec& s,
                                             const std::vector<double>& coeffs,
                                             const std::vector<double>& xs) {
    if (coeffs.empty())
        throw std::invalid_argument("sum_basis_on_grid: empty coefficients");
    const std::vector<double> w = normalized_coeffs(s, coeffs);
    std::vector<double> out(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j)
        out[j] = weighted_sum_at(s, w, xs[j]);
    return out;
}

WavefunctionSamples reconstruct(const BasisSpec& s, double eps_m,
                                std::size_t N, const std::vector<double>& xs,
                                ReconstructionMethod method, int level_hint) {
    if (N < 1) throw std::invalid_argument("reconstruct: N must be >= 1");

    WavefunctionSamples out;
    out.xs = xs;
    out.n_used = N;
    out.method = method;
    out.level = level_hint;

    std::vector<double> coeffs;
    if (method == ReconstructionMethod::recursion) {
        coeffs = recursion_coeffs(s, eps_m, N).values;
    } else {
        const SpectrumResult sol = solve_spectrum(s, N);
        std::size_t best = 0;
        for (std::size_t m = 1; m < sol.eps.size(); ++m)
            if (std::abs(sol.eps[m] - eps_m) < std::abs(sol.eps[best] - eps_m))
                best = m;
        coeffs = sol.vectors[best];
        out.level = static_cast<int>(best);
    }
    out.psi = sum_basis_on_grid(s, coeffs, xs);
    return out;
}

StabilityReport detect_stability(const BasisSpec& s, double eps_m,
                                 std::size_t N_max,
                                 const std::vector<double>& xs,
                                 double stable_tol, double unstable_tol) {
    if (N_max < 4)
        throw std::invalid_argument("detect_stability: N_max must be >= 4");

    // psi_N for every N = 1..N_max from a single recurrence pass per point.
    const std::vector<double> w =
        normalized_coeffs(s, recursion_coeffs(s, eps_m, N_max).values);
    const std::size_t npts = xs.size();

    // psi[N-1][j] = truncated sum with N terms at grid point j.
    std::vector<std::vector<double>> psi(N_max, std::vector<double>(npts));
    const int npts_i = static_cast<int>(npts);
#pragma omp parallel for schedule(static)
    for (int j = 0; j < npts_i; ++j) {
        std::vector<double> partials(N_max);
        weighted_sum_at(s, w, xs[j], partials.data());
        for (std::size_t N = 1; N <= N_max; ++N) psi[N - 1][j] = partials[N - 1];
    }

    StabilityReport rep;
    for (std::size_t N = 2; N + 1 <= N_max; ++N) {
        const std::vector<double>& a = psi[N - 1];
        const std::vector<double>& b = psi[N];
        double ab = 0.0, bb = 0.0;
        for (std::size_t j = 0; j < npts; ++j) {
            ab += a[j] * b[j];
            bb += b[j] * b[j];
        }
        double metric = std::numeric_limits<double>::infinity();
        if (bb > 0.0) {
            const double scale = ab / bb;  // least-squares match of b onto a
            if (scale != 0.0) {
                double diff = 0.0, ref = 0.0;
                for (std::size_t j = 0; j < npts; ++j) {
                    const double d = a[j] - scale * b[j];
                    diff += d * d;
                    ref += scale * b[j] * scale * b[j];
                }
                metric = ref > 0.0 ? std::sqrt(diff / ref)
                                   : std::numeric_limits<double>::infinity();
            }
        }
        rep.history.emplace_back(N, metric);
    }

    // Longest run below stable_tol.
    std::size_t best_len = 0, best_end = 0, run = 0;
    for (std::size_t i = 0; i < rep.history.size(); ++i) {
        if (rep.history[i].second < stable_tol) {
            ++run;
            if (run > best_len) {
                best_len = run;
                best_end = i;
            }
        } else {
            run = 0;
        }
    }
    rep.stable_window_found = best_len > 0;
    rep.n_critical = N_max;
    if (rep.stable_window_found) {
        for (std::size_t i = best_end + 1; i < rep.history.size(); ++i) {
            if (rep.history[i].second > unstable_tol) {
                rep.n_critical = rep.history[i].first;
                rep.instability_reached = true;
                break;
            }
        }
    }
    return rep;
}

int count_nodes(const WavefunctionSamples& samples) {
    const std::vector<double>& psi = samples.psi;
    if (psi.size() < 3)
        throw std::invalid_argument("count_nodes: need at least 3 samples");
    double peak = 0.0;
    for (const double v : psi) peak = std::max(peak, std::abs(v));
    const double threshold = 1e-12 * peak;

    int count = 0, prev_sign = 0;
    for (const double v : psi) {
        if (std::abs(v) < threshold || v == 0.0) continue;
        const int sign = v > 0.0 ? 1 : -1;
        if (prev_sign != 0 && sign != prev_sign) ++count;
        prev_sign = sign;
    }
    return count;
}

}  // namespace trabox
