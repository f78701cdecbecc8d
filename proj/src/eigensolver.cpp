#include "trabox/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "trabox/errors.hpp"
#include "trabox/wave_operator.hpp"

namespace trabox {

namespace {

std::vector<int> ascending_order(const std::vector<double>& v) {
    std::vector<int> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return v[a] < v[b]; });
    return idx;
}

double omega_quadratic_form(const TridiagonalSymmetric& omega,
                            const std::vector<double>& f) {
    const std::size_t n = omega.size();
    double q = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        q += omega.diag[i] * f[i] * f[i];
        if (i + 1 < n) q += 2.0 * omega.offdiag[i] * f[i] * f[i + 1];
    }
    return q;
}

}  // namespace

EigenDecomposition solve_symmetric_tridiagonal(const TridiagonalSymmetric& t) {
    const std::size_t n = t.size();
    std::vector<double> d = t.diag;
    std::vector<double> e(n, 0.0);
    std::copy(t.offdiag.begin(), t.offdiag.end(), e.begin());

    DenseMatrix z(n);
    for (std::size_t i = 0; i < n; ++i) z(i, i) = 1.0;
    kernels::ql_implicit(d, e, &z);

    const auto order = ascending_order(d);
    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = DenseMatrix(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = d[order[j]];
        for (std::size_t i = 0; i < n; ++i)
            out.vectors(i, j) = z(i, order[j]);
    }
    return out;
}

BidiagonalCholesky cholesky_tridiagonal(const TridiagonalSymmetric& t) {
    const std::size_t n = t.size();
    BidiagonalCholesky g;
    g.diag.resize(n);
    g.sub.resize(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i < n; ++i) {
        double piv = t.diag[i];
        if (i > 0) {
            g.sub[i - 1] = t.offdiag[i - 1] / g.diag[i - 1];
            piv -= g.sub[i - 1] * g.sub[i - 1];
        }
        if (!(piv > 0.0)) throw NumericError("overlap not positive definite");
        g.diag[i] = std::sqrt(piv);
    }
    return g;
}

SpectrumResult solve_generalized(const TridiagonalSymmetric& h,
                                 const TridiagonalSymmetric& omega) {
    const std::size_t n = h.size();
    if (omega.size() != n)
        throw std::invalid_argument("solve_generalized: dimension mismatch");

    const BidiagonalCholesky g = cholesky_tridiagonal(omega);

    // Dense copy of h.
    DenseMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = h.diag[i];
        if (i + 1 < n) a(i, i + 1) = a(i + 1, i) = h.offdiag[i];
    }

    // W = G^{-1} h by forward substitution, rows top-down.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double v = a(i, j);
            if (i > 0) v -= g.sub[i - 1] * a(i - 1, j);
            a(i, j) = v / g.diag[i];
        }
    }
    // A = W G^{-T}, columns left-right.
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            double v = a(i, j);
            if (j > 0) v -= g.sub[j - 1] * a(i, j - 1);
            a(i, j) = v / g.diag[j];
        }
    }
    // Symmetrize away the substitution roundoff.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            a(i, j) = a(j, i) = 0.5 * (a(i, j) + a(j, i));

    std::vector<double> d, e;
    kernels::householder_tridiagonalize(a, d, e);
    kernels::ql_implicit(d, e, &a);

    // Back-transform each column: solve G^T f = z.
    std::vector<std::vector<double>> vecs(n, std::vector<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double>& f = vecs[j];
        for (std::size_t ii = n; ii-- > 0;) {
            double v = a(ii, j);
            if (ii + 1 < n) v -= g.sub[ii] * f[ii + 1];
            f[ii] = v / g.diag[ii];
        }
    }

    const auto order = ascending_order(d);
    SpectrumResult out;
    out.basis_size = n;
    out.eps.resize(n);
    out.vectors.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.eps[j] = d[order[j]];
        std::vector<double> f = std::move(vecs[order[j]]);

        const double q = omega_quadratic_form(omega, f);
        if (!(q > 0.0))
            throw NumericError("solve_generalized: vector with non-positive norm");
        const double inv = 1.0 / std::sqrt(q);
        for (double& v : f) v *= inv;

        // Sign convention: first significant component positive.
        double lead = 0.0;
        for (const double v : f) {
            if (std::abs(v) > 1e-14) {
                lead = v;
                break;
            }
        }
        if (lead < 0.0)
            for (double& v : f) v = -v;

        out.vectors[j] = std::move(f);
    }
    return out;
}

SpectrumResult solve_spectrum(const BasisSpec& spec, std::size_t N) {
    SpectrumResult r = solve_generalized(build_hamiltonian(spec, N),
                                         build_overlap(spec, N));
    r.spec = spec;
    return r;
}

ConvergenceTable convergence_study(const BasisSpec& spec,
                                   const std::vector<std::size_t>& sizes,
                                   std::size_t levels) {
    if (sizes.empty())
        throw std::invalid_argument("convergence_study: sizes must be non-empty");
    if (!std::is_sorted(sizes.begin(), sizes.end()))
        throw std::invalid_argument("convergence_study: sizes must be ascending");
    if (levels == 0 || levels > sizes.front())
        throw std::invalid_argument(
            "convergence_study: need 1 <= levels <= min(sizes)");

    const int ncols = static_cast<int>(sizes.size());
    std::vector<std::vector<double>> per_size(ncols);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < ncols; ++c) {
        // Exceptions may not leave the parallel region.
        try {
            per_size[c] = solve_spectrum(spec, sizes[c]).eps;
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    ConvergenceTable table;
    table.sizes = sizes;
    table.levels = levels;
    table.eps.assign(levels, std::vector<double>(ncols));
    table.stable_digits.assign(levels, std::vector<int>(ncols > 1 ? ncols - 1 : 0));
    for (std::size_t m = 0; m < levels; ++m) {
        for (int c = 0; c < ncols; ++c) table.eps[m][c] = per_size[c][m];
        for (int c = 0; c + 1 < ncols; ++c) {
            const double delta =
                std::abs(table.eps[m][c + 1] - table.eps[m][c]);
            int digits = 15;
            if (delta > 0.0)
                digits = std::clamp(
                    static_cast<int>(std::floor(-std::log10(delta))), 0, 15);
            table.stable_digits[m][c] = digits;
        }
    }
    return table;
}

}  // namespace trabox
