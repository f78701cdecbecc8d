#include <doctest.h>

#include <stdexcept>
#include <cmath>
#include <limits>
#include <random>

#include "trabox/model.hpp"
#include "test_oracles.hpp"

using namespace trabox;

TEST_CASE("to_basis_spec on the reference parameters") {
    const BasisSpec s = to_basis_spec(oracles::reference_box());
    CHECK(s.u0 == -7.0);
    CHECK(s.u1 == -5.0);
    CHECK(s.uL == 0.25);
    CHECK(s.uR == 0.5);
    CHECK(s.mu == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
    CHECK(s.nu == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(2.0 * s.alpha == doctest::Approx(s.mu + 1.0).epsilon(1e-15));
    CHECK(2.0 * s.beta == doctest::Approx(s.nu + 0.5).epsilon(1e-15));
    CHECK(s.eps_scale == doctest::Approx(1.0));
}

TEST_CASE("to_basis_spec with zero strengths") {
    PotentialParams p;
    p.L = 2.0;
    const BasisSpec s = to_basis_spec(p);
    CHECK(s.mu == doctest::Approx(1.0));
    CHECK(s.nu == doctest::Approx(0.5));
}

TEST_CASE("to_basis_spec special left strength gives nu = 1") {
    PotentialParams p;
    p.VL = 3.0 / 32.0;
    p.L = 1.0;
    CHECK(to_basis_spec(p).nu == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("to_basis_spec scale consistency in absolute units") {
    PotentialParams p;
    p.V0 = -3.0;
    p.V1 = 2.0;
    p.VL = 1.0;
    p.VR = 0.5;
    p.L = 1.5;
    p.unit_mode = UnitMode::absolute;
    const BasisSpec a = to_basis_spec(p);
    p.L *= 2.0;
    const BasisSpec b = to_basis_spec(p);
    CHECK(b.u0 == doctest::Approx(4.0 * a.u0).epsilon(1e-14));
    CHECK(b.u1 == doctest::Approx(4.0 * a.u1).epsilon(1e-14));
    CHECK(b.uL == doctest::Approx(4.0 * a.uL).epsilon(1e-14));
    CHECK(b.uR == doctest::Approx(4.0 * a.uR).epsilon(1e-14));
}

TEST_CASE("parameter validation") {
    PotentialParams p;
    p.VL = -0.1;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p.VL = 0.0;
    p.VR = -1.0;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p.VR = 0.0;
    p.L = 0.0;
    CHECK_THROWS_AS(p.validate(), std::domain_error);

    // The extended range admits mildly negative strengths only.
    PotentialParams q;
    q.allow_extended_strengths = true;
    q.VR = -0.1;  // uR = -0.1 >= -1/8
    CHECK_NOTHROW(q.validate());
    q.VR = -0.2;  // below -1/8
    CHECK_THROWS_AS(q.validate(), std::domain_error);
}

TEST_CASE("coordinate map endpoints and midpoint") {
    CHECK(map_y(0.0, 2.0) == -1.0);
    CHECK(map_y(2.0, 2.0) == 1.0);
    CHECK(map_y(1.0, 2.0) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK_THROWS_AS(map_y(-0.1, 2.0), std::domain_error);
    CHECK_THROWS_AS(map_y(2.1, 2.0), std::domain_error);
    CHECK_THROWS_AS(map_x(1.2, 2.0), std::domain_error);
}

TEST_CASE("coordinate map round trip") {
    const double L = 2.0;
    for (int i = 0; i <= 1000; ++i) {
        const double x = L * i / 1000.0;
        CHECK(std::abs(map_x(map_y(x, L), L) - x) <= 1e-13 * L);
    }
}

TEST_CASE("potential_x midpoint value") {
    const PotentialParams p = oracles::reference_box();
    // At (x/L)^2 = 1/4 the bracket is -49/12 and the prefactor 4/3,
    // all in units of 4/L^2 = 1 for L = 2.
    const double want = (4.0 / 3.0) * (-49.0 / 12.0);
    CHECK(potential_x(p, 1.0) == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("potential_x singular walls") {
    const PotentialParams p = oracles::reference_box();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(potential_x(p, 0.0) == inf);
    CHECK(potential_x(p, p.L) == inf);
    CHECK(potential_x(p, p.L * (1.0 - 1e-9)) > 1e10);
    CHECK(potential_x(p, p.L * 1e-9) > 1e10);
    CHECK_THROWS_AS(potential_x(p, -0.5), std::domain_error);
    CHECK_THROWS_AS(potential_x(p, p.L + 0.5), std::domain_error);
}

TEST_CASE("potential_x is finite at the left wall when VL vanishes") {
    PotentialParams p;
    p.V0 = -4.0;
    p.V1 = 5.0;
    p.VR = 3.0;
    p.L = 2.0;
    // V(0) = V0 + VR - V1/2 in units of 4/L^2
    CHECK(potential_x(p, 0.0) ==
          doctest::Approx((-4.0 + 3.0 - 2.5) * 4.0 / (p.L * p.L)).epsilon(1e-14));
}

TEST_CASE("potential_y values") {
    const BasisSpec s = to_basis_spec(oracles::reference_box());
    // y = 0: 2 [u0 + 2uL + 2uR] = 2(-7 + 0.5 + 1) = -11
    CHECK(potential_y(s, 0.0) == doctest::Approx(-11.0).epsilon(1e-14));
    CHECK_THROWS_AS(potential_y(s, 1.0), std::domain_error);
    CHECK_THROWS_AS(potential_y(s, -1.0), std::domain_error);

    PotentialParams zero;
    zero.L = 2.0;
    const BasisSpec z = to_basis_spec(zero);
    for (double y = -0.95; y < 1.0; y += 0.1)
        CHECK(potential_y(z, y) == 0.0);
}

TEST_CASE("potential_x and potential_y agree under the coordinate map") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> strength(-10.0, 10.0);
    std::uniform_real_distribution<double> wall(0.0, 5.0);
    std::uniform_real_distribution<double> width(0.5, 3.0);
    for (int set = 0; set < 10; ++set) {
        PotentialParams p;
        p.V0 = strength(rng);
        p.V1 = strength(rng);
        p.VL = wall(rng);
        p.VR = wall(rng);
        p.L = width(rng);
        const BasisSpec s = to_basis_spec(p);
        for (int i = 1; i < 100; ++i) {
            const double x = p.L * i / 100.0;
            const double via_x = s.eps_scale * potential_x(p, x);
            const double via_y = potential_y(s, map_y(x, p.L));
            CHECK(via_x == doctest::Approx(via_y).epsilon(1e-10));
        }
    }
}
