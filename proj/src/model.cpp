#include "trabox/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace trabox {

namespace {

double dimensionless(double v, const PotentialParams& p) {
    return p.unit_mode == UnitMode::paper_units ? v : v * p.L * p.L / 4.0;
}

}  // namespace

void PotentialParams::validate() const {
    if (!(L > 0.0)) throw std::domain_error("PotentialParams: L must be > 0");
    if (allow_extended_strengths) {
        const double uL = dimensionless(VL, *this);
        const double uR = dimensionless(VR, *this);
        if (1.0 + 8.0 * uR < 0.0 || 0.25 + 8.0 * uL < 0.0)
            throw std::domain_error(
                "PotentialParams: strengths below the representable range "
                "(need uR >= -1/8 and uL >= -1/32)");
        return;
    }
    if (VL < 0.0 || VR < 0.0)
        throw std::domain_error("PotentialParams: VL and VR must be >= 0");
}

BasisSpec to_basis_spec(const PotentialParams& p) {
    p.validate();
    BasisSpec s{};
    s.L = p.L;
    s.eps_scale = p.L * p.L / 4.0;
    s.u0 = dimensionless(p.V0, p);
    s.u1 = dimensionless(p.V1, p);
    s.uL = dimensionless(p.VL, p);
    s.uR = dimensionless(p.VR, p);
    const double mu_sq = 1.0 + 8.0 * s.uR;
    const double nu_sq = 0.25 + 8.0 * s.uL;
    if (mu_sq < 0.0 || nu_sq < 0.0)
        throw std::domain_error("to_basis_spec: strengths violate the basis constraints");
    s.mu = std::sqrt(mu_sq);
    s.nu = std::sqrt(nu_sq);
    s.alpha = 0.5 * (s.mu + 1.0);
    s.beta = 0.5 * (s.nu + 0.5);
    return s;
}

double map_y(double x, double L) {
    if (!(L > 0.0)) throw std::domain_error("map_y: L must be > 0");
    if (x < 0.0 || x > L) throw std::domain_error("map_y: x must lie in [0, L]");
    const double r = x / L;
    return 2.0 * r * r - 1.0;
}

double map_x(double y, double L) {
    if (!(L > 0.0)) throw std::domain_error("map_x: L must be > 0");
    if (y < -1.0 || y > 1.0)
        throw std::domain_error("map_x: y must lie in [-1, 1]");
    return L * std::sqrt(0.5 * (1.0 + y));
}

double potential_x(const PotentialParams& p, double x) {
    if (x < 0.0 || x > p.L)
        throw std::domain_error("potential_x: x must lie in [0, L]");
    const double scale =
        p.unit_mode == UnitMode::paper_units ? 4.0 / (p.L * p.L) : 1.0;
    const double inf = std::numeric_limits<double>::infinity();

    if (x == p.L) return inf;
    if (x == 0.0) {
        if (p.VL != 0.0) return inf;
        return scale * (p.V0 + p.VR - 0.5 * p.V1);
    }

    const double r2 = (x / p.L) * (x / p.L);
    const double w = 1.0 - r2;
    const double bracket =
        p.V0 + p.VL / r2 + p.VR / w + p.V1 * (r2 - 0.5);
    return scale * bracket / w;
}

double potential_y(const BasisSpec& s, double y) {
    if (!(y > -1.0) || !(y < 1.0))
        throw std::domain_error("potential_y: y must lie strictly inside (-1, 1)");
    return 2.0 / (1.0 - y) *
           (s.u0 + 2.0 * s.uL / (1.0 + y) + 2.0 * s.uR / (1.0 - y) +
            0.5 * s.u1 * y);
}

}  // namespace trabox
