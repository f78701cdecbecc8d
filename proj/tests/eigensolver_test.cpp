#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "trabox/eigensolver.hpp"
#include "trabox/errors.hpp"
#include "trabox/wave_operator.hpp"
#include "test_oracles.hpp"

using namespace trabox;

namespace {

double residual_norm(const TridiagonalSymmetric& t, const double* v,
                     double lambda, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = t.diag[i] * v[i] - lambda * v[i];
        if (i > 0) r += t.offdiag[i - 1] * v[i - 1];
        if (i + 1 < n) r += t.offdiag[i] * v[i + 1];
        acc += r * r;
    }
    return std::sqrt(acc);
}

}  // namespace

TEST_CASE("tridiagonal solver on closed-form cases") {
    SUBCASE("two by two") {
        const EigenDecomposition d =
            solve_symmetric_tridiagonal(TridiagonalSymmetric({2.0, 2.0}, {-1.0}));
        CHECK(d.values[0] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(d.values[1] == doctest::Approx(3.0).epsilon(1e-14));
    }
    SUBCASE("path graph of five vertices") {
        const EigenDecomposition d = solve_symmetric_tridiagonal(
            TridiagonalSymmetric({0, 0, 0, 0, 0}, {1, 1, 1, 1}));
        for (int k = 1; k <= 5; ++k) {
            const double want = 2.0 * std::cos((6 - k) * std::numbers::pi / 6.0);
            CHECK(d.values[k - 1] == doctest::Approx(want).epsilon(1e-13));
        }
    }
    SUBCASE("one by one") {
        const EigenDecomposition d =
            solve_symmetric_tridiagonal(TridiagonalSymmetric({7.0}, {}));
        CHECK(d.values[0] == 7.0);
        CHECK(d.vectors(0, 0) == doctest::Approx(1.0));
    }
}

TEST_CASE("tridiagonal solver residuals and orthogonality") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    const std::size_t n = 60;
    TridiagonalSymmetric t(n);
    for (std::size_t i = 0; i < n; ++i) {
        t.diag[i] = dist(rng);
        if (i + 1 < n) t.offdiag[i] = dist(rng);
    }
    const EigenDecomposition d = solve_symmetric_tridiagonal(t);
    const double scale = t.norm_inf();
    std::vector<double> col(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (j > 0) CHECK(d.values[j] >= d.values[j - 1]);
        for (std::size_t i = 0; i < n; ++i) col[i] = d.vectors(i, j);
        CHECK(residual_norm(t, col.data(), d.values[j], n) <= 1e-11 * scale);
        for (std::size_t k = 0; k <= j; ++k) {
            double dot = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                dot += d.vectors(i, j) * d.vectors(i, k);
            CHECK(std::abs(dot - (j == k ? 1.0 : 0.0)) <= 1e-12);
        }
    }
}

TEST_CASE("cholesky of a tridiagonal matrix") {
    const BidiagonalCholesky g =
        cholesky_tridiagonal(TridiagonalSymmetric({4.0, 5.0}, {2.0}));
    CHECK(g.diag[0] == doctest::Approx(2.0));
    CHECK(g.sub[0] == doctest::Approx(1.0));
    CHECK(g.diag[1] == doctest::Approx(2.0));
    CHECK_THROWS_WITH_AS(
        cholesky_tridiagonal(TridiagonalSymmetric({1.0, 0.2}, {1.0})),
        "overlap not positive definite", NumericError);
}

TEST_CASE("generalized solve with identity overlap matches the standard one") {
    const BasisSpec s = to_basis_spec(oracles::reference_box());
    const TridiagonalSymmetric h = build_hamiltonian(s, 20);
    TridiagonalSymmetric eye(20);
    for (auto& v : eye.diag) v = 1.0;
    const SpectrumResult gen = solve_generalized(h, eye);
    const EigenDecomposition std_d = solve_symmetric_tridiagonal(h);
    for (std::size_t j = 0; j < 20; ++j) {
        CHECK(gen.eps[j] ==
              doctest::Approx(std_d.values[j]).epsilon(1e-12));
        // Vectors agree up to an overall sign; align on the dominant entry.
        std::size_t lead = 0;
        for (std::size_t i = 1; i < 20; ++i)
            if (std::abs(std_d.vectors(i, j)) >
                std::abs(std_d.vectors(lead, j)))
                lead = i;
        const double flip =
            gen.vectors[j][lead] * std_d.vectors(lead, j) < 0.0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < 20; ++i)
            CHECK(gen.vectors[j][i] ==
                  doctest::Approx(flip * std_d.vectors(i, j)).epsilon(1e-9));
    }
}

TEST_CASE("generalized solve reproduces the reference spectrum") {
    const BasisSpec s = to_basis_spec(oracles::reference_box());
    SUBCASE("ground state at N=30") {
        const SpectrumResult r = solve_spectrum(s, 30);
        CHECK(std::abs(r.eps[0] - (-12.5236133022)) <= 1e-9);
    }
    SUBCASE("tenth level at N=15") {
        const SpectrumResult r = solve_spectrum(s, 15);
        CHECK(std::abs(r.eps[9] - 128.2758241174) <= 1e-9);
    }
}

TEST_CASE("dimensionless spectrum is unit-mode invariant") {
    // The reference strengths in units of 4/L^2 with L = 1 correspond to
    // absolute strengths four times larger; eps must come out the same.
    PotentialParams abs_mode;
    abs_mode.V0 = -28.0;
    abs_mode.V1 = -20.0;
    abs_mode.VL = 1.0;
    abs_mode.VR = 2.0;
    abs_mode.L = 1.0;
    abs_mode.unit_mode = UnitMode::absolute;
    const SpectrumResult r = solve_spectrum(to_basis_spec(abs_mode), 30);
    CHECK(std::abs(r.eps[0] - (-12.5236133022)) <= 1e-9);
    CHECK(std::abs(r.eps[5] - 42.0517498468) <= 1e-9);
}

TEST_CASE("generalized solve invariants at N=100") {
    const BasisSpec s = to_basis_spec(oracles::reference_box());
    const std::size_t N = 100;
    const TridiagonalSymmetric h = build_hamiltonian(s, N);
    const TridiagonalSymmetric w = build_overlap(s, N);
    const SpectrumResult r = solve_generalized(h, w);

    const double h_norm = h.norm_inf();
    const double w_norm = w.norm_inf();
    for (std::size_t m = 0; m < N; ++m) {
        if (m > 0) CHECK(r.eps[m] > r.eps[m - 1]);  // strictly ascending
        CHECK(r.vectors[m][0] > 0.0);

        // Residual of the pencil.
        double acc = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            double hv = h.diag[i] * r.vectors[m][i];
            double wv = w.diag[i] * r.vectors[m][i];
            if (i > 0) {
                hv += h.offdiag[i - 1] * r.vectors[m][i - 1];
                wv += w.offdiag[i - 1] * r.vectors[m][i - 1];
            }
            if (i + 1 < N) {
                hv += h.offdiag[i] * r.vectors[m][i + 1];
                wv += w.offdiag[i] * r.vectors[m][i + 1];
            }
            const double res = hv - r.eps[m] * wv;
            acc += res * res;
        }
        CHECK(std::sqrt(acc) <=
              1e-9 * (h_norm + std::abs(r.eps[m]) * w_norm));
    }

    // Omega-normalization and cross-level Omega-orthogonality.
    for (std::size_t m = 0; m < N; ++m) {
        for (std::size_t k = m; k < N; k += 7) {
            double dot = 0.0;
            for (std::size_t i = 0; i < N; ++i) {
                double wv = w.diag[i] * r.vectors[k][i];
                if (i > 0) wv += w.offdiag[i - 1] * r.vectors[k][i - 1];
                if (i + 1 < N) wv += w.offdiag[i] * r.vectors[k][i + 1];
                dot += r.vectors[m][i] * wv;
            }
            if (m == k)
                CHECK(dot == doctest::Approx(1.0).epsilon(1e-12));
            else
                CHECK(std::abs(dot) <= 1e-10);
        }
    }
}

TEST_CASE("generalized solve rejects bad inputs") {
    const BasisSpec s = to_basis_spec(oracles::reference_box());
    const TridiagonalSymmetric h = build_hamiltonian(s, 5);
    CHECK_THROWS_AS(solve_generalized(h, build_overlap(s, 6)),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        solve_generalized(h, TridiagonalSymmetric({1, 1, 1, 1, -1}, {0, 0, 0, 0})),
        NumericError);
}

TEST_CASE("convergence study duplicated sizes give identical columns") {
    const BasisSpec s = to_basis_spec(oracles::reference_box());
    const ConvergenceTable t = convergence_study(s, {20, 20}, 8);
    for (std::size_t m = 0; m < 8; ++m) {
        CHECK(t.eps[m][0] == t.eps[m][1]);
        CHECK(t.stable_digits[m][0] == 15);
    }
}

TEST_CASE("convergence study is variationally monotone") {
    const BasisSpec s = to_basis_spec(oracles::reference_box());
    const ConvergenceTable t = convergence_study(s, {15, 20, 30, 100}, 10);
    for (std::size_t m = 0; m < 10; ++m)
        for (std::size_t c = 0; c + 1 < 4; ++c)
            CHECK(t.eps[m][c + 1] <= t.eps[m][c] + 1e-9);
}

TEST_CASE("convergence study input validation") {
    const BasisSpec s = to_basis_spec(oracles::reference_box());
    CHECK_THROWS_AS(convergence_study(s, {}, 3), std::invalid_argument);
    CHECK_THROWS_AS(convergence_study(s, {20, 15}, 3), std::invalid_argument);
    CHECK_THROWS_AS(convergence_study(s, {15, 20}, 16), std::invalid_argument);
}
