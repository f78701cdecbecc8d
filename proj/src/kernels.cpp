#include "trabox/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "trabox/errors.hpp"

namespace trabox {

double TridiagonalSymmetric::norm_inf() const {
    const std::size_t n = size();
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = std::abs(diag[i]);
        if (i > 0) row += std::abs(offdiag[i - 1]);
        if (i + 1 < n) row += std::abs(offdiag[i]);
        best = std::max(best, row);
    }
    return best;
}

namespace kernels {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// One Givens rotation acting on columns (i, i+1).
struct Rotation {
    int col;
    double c, s;
};

// Shared QL body. Each iteration's rotation chain is handed to the sink
// once, after the inner loop; the serial and parallel entry points differ
// only in how the sink applies the chain to the accumulated transform.
template <typename Sink>
void ql_implicit_core(std::vector<double>& d, std::vector<double>& e,
                      int sweep_cap, Sink&& sink) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return;
    e[n - 1] = 0.0;
    if (sweep_cap <= 0) sweep_cap = 50 * n;

    std::vector<Rotation> chain;
    int total_sweeps = 0;
    for (int l = 0; l < n; ++l) {
        for (;;) {
            int m = l;
            while (m < n - 1 &&
                   std::abs(e[m]) > kEps * (std::abs(d[m]) + std::abs(d[m + 1])))
                ++m;
            if (m == l) break;
            if (++total_sweeps > sweep_cap)
                throw NumericError("ql_implicit: no convergence at index " +
                                   std::to_string(l) + " after " +
                                   std::to_string(total_sweeps) + " sweeps");

            // Wilkinson shift.
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;

            chain.clear();
            bool underflow = false;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                chain.push_back({i, c, s});
            }
            sink(chain);
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

// Applies a rotation chain to one row, in generation order.
inline void apply_chain_to_row(DenseMatrix& z, std::size_t k,
                               const std::vector<Rotation>& chain) {
    for (const Rotation& r : chain) {
        const double f = z(k, r.col + 1);
        z(k, r.col + 1) = r.s * z(k, r.col) + r.c * f;
        z(k, r.col) = r.c * z(k, r.col) - r.s * f;
    }
}

double bisect_kth(const TridiagonalSymmetric& t, int k, double lo, double hi) {
    double a = lo, b = hi;
    for (int iter = 0; iter < 200; ++iter) {
        const double width = b - a;
        if (width <= 2.0 * kEps * std::max(std::abs(a), std::abs(b)) + 1e-300)
            break;
        const double mid = a + 0.5 * width;
        if (sturm_count_below(t, mid) >= k + 1)
            b = mid;
        else
            a = mid;
    }
    return a + 0.5 * (b - a);
}

void gershgorin(const TridiagonalSymmetric& t, double& lo, double& hi) {
    const std::size_t n = t.size();
    lo = std::numeric_limits<double>::infinity();
    hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(t.offdiag[i - 1]);
        if (i + 1 < n) r += std::abs(t.offdiag[i]);
        lo = std::min(lo, t.diag[i] - r);
        hi = std::max(hi, t.diag[i] + r);
    }
    const double margin = kEps * std::max(std::abs(lo), std::abs(hi)) + 1e-300;
    lo -= margin;
    hi += margin;
}

void check_bisect_args(const TridiagonalSymmetric& t, int k) {
    if (k < 1 || static_cast<std::size_t>(k) > t.size())
        throw std::invalid_argument("lowest_eigenvalues: need 1 <= k <= N");
}

}  // namespace

void householder_tridiagonalize(DenseMatrix& z, std::vector<double>& d,
                                std::vector<double>& e) {
    const int n = static_cast<int>(z.n);
    d.assign(n, 0.0);
    e.assign(n, 0.0);

    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::abs(z(i, k));
            if (scale == 0.0) {
                e[i] = z(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    z(i, k) /= scale;
                    h += z(i, k) * z(i, k);
                }
                double f = z(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                z(i, l) = f - g;

#pragma omp parallel for schedule(static) if (l >= 64)
                for (int j = 0; j <= l; ++j) {
                    z(j, i) = z(i, j) / h;
                    double gj = 0.0;
                    for (int k = 0; k <= j; ++k) gj += z(j, k) * z(i, k);
                    for (int k = j + 1; k <= l; ++k) gj += z(k, j) * z(i, k);
                    e[j] = gj / h;
                }

                f = 0.0;
                for (int j = 0; j <= l; ++j) f += e[j] * z(i, j);
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) e[j] -= hh * z(i, j);

#pragma omp parallel for schedule(static) if (l >= 64)
                for (int j = 0; j <= l; ++j) {
                    const double fj = z(i, j);
                    const double gj = e[j];
                    for (int k = 0; k <= j; ++k)
                        z(j, k) -= fj * e[k] + gj * z(i, k);
                }
            }
        } else {
            e[i] = z(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;

    // Accumulate the transforms.
    for (int i = 0; i < n; ++i) {
        const int l = i - 1;
        if (d[i] != 0.0) {
#pragma omp parallel for schedule(static) if (l >= 64)
            for (int j = 0; j <= l; ++j) {
                double g = 0.0;
                for (int k = 0; k <= l; ++k) g += z(i, k) * z(k, j);
                for (int k = 0; k <= l; ++k) z(k, j) -= g * z(k, i);
            }
        }
        d[i] = z(i, i);
        z(i, i) = 1.0;
        for (int j = 0; j <= l; ++j) z(j, i) = z(i, j) = 0.0;
    }

    // Shift the off-diagonal into the "e[i] couples d[i], d[i+1]" layout.
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
}

void ql_implicit(std::vector<double>& d, std::vector<double>& e, DenseMatrix* z,
                 int sweep_cap) {
    if (z == nullptr) {
        ql_implicit_core(d, e, sweep_cap, [](const std::vector<Rotation>&) {});
        return;
    }
    const int zn = static_cast<int>(z->n);
    ql_implicit_core(d, e, sweep_cap, [&](const std::vector<Rotation>& chain) {
        DenseMatrix& q = *z;
        // Rows are independent, so one region handles the whole chain.
        const bool batch_pays =
            static_cast<long>(chain.size()) * zn >= 16384;
#pragma omp parallel for schedule(static) if (batch_pays)
        for (int k = 0; k < zn; ++k) apply_chain_to_row(q, k, chain);
    });
}

int sturm_count_below(const TridiagonalSymmetric& t, double lambda) {
    const std::size_t n = t.size();
    int count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        double piv = t.diag[i] - lambda;
        if (i > 0) piv -= t.offdiag[i - 1] * t.offdiag[i - 1] / q;
        if (piv == 0.0) piv = -1e-300;
        if (piv < 0.0) ++count;
        q = piv;
    }
    return count;
}

std::vector<double> lowest_eigenvalues(const TridiagonalSymmetric& t, int k) {
    check_bisect_args(t, k);
    double lo, hi;
    gershgorin(t, lo, hi);
    std::vector<double> out(k);
#pragma omp parallel for schedule(static)
    for (int j = 0; j < k; ++j) out[j] = bisect_kth(t, j, lo, hi);
    return out;
}

namespace serial {

void householder_tridiagonalize(DenseMatrix& z, std::vector<double>& d,
                                std::vector<double>& e) {
    const int n = static_cast<int>(z.n);
    d.assign(n, 0.0);
    e.assign(n, 0.0);

    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::abs(z(i, k));
            if (scale == 0.0) {
                e[i] = z(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    z(i, k) /= scale;
                    h += z(i, k) * z(i, k);
                }
                double f = z(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                z(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    z(j, i) = z(i, j) / h;
                    double gj = 0.0;
                    for (int k = 0; k <= j; ++k) gj += z(j, k) * z(i, k);
                    for (int k = j + 1; k <= l; ++k) gj += z(k, j) * z(i, k);
                    e[j] = gj / h;
                    f += e[j] * z(i, j);
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    const double fj = z(i, j);
                    const double gj = e[j] - hh * fj;
                    e[j] = gj;
                    for (int k = 0; k <= j; ++k)
                        z(j, k) -= fj * e[k] + gj * z(i, k);
                }
            }
        } else {
            e[i] = z(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;

    for (int i = 0; i < n; ++i) {
        const int l = i - 1;
        if (d[i] != 0.0) {
            for (int j = 0; j <= l; ++j) {
                double g = 0.0;
                for (int k = 0; k <= l; ++k) g += z(i, k) * z(k, j);
                for (int k = 0; k <= l; ++k) z(k, j) -= g * z(k, i);
            }
        }
        d[i] = z(i, i);
        z(i, i) = 1.0;
        for (int j = 0; j <= l; ++j) z(j, i) = z(i, j) = 0.0;
    }

    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
}

void ql_implicit(std::vector<double>& d, std::vector<double>& e, DenseMatrix* z,
                 int sweep_cap) {
    if (z == nullptr) {
        ql_implicit_core(d, e, sweep_cap, [](const std::vector<Rotation>&) {});
        return;
    }
    const int zn = static_cast<int>(z->n);
    ql_implicit_core(d, e, sweep_cap, [&](const std::vector<Rotation>& chain) {
        for (int k = 0; k < zn; ++k) apply_chain_to_row(*z, k, chain);
    });
}

std::vector<double> lowest_eigenvalues(const TridiagonalSymmetric& t, int k) {
    check_bisect_args(t, k);
    double lo, hi;
    gershgorin(t, lo, hi);
    std::vector<double> out(k);
    for (int j = 0; j < k; ++j) out[j] = bisect_kth(t, j, lo, hi);
    return out;
}

}  // namespace serial

}  // namespace kernels
}  // namespace trabox
