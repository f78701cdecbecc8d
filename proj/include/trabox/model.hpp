#pragma once

namespace trabox {

/// Unit convention for the potential strengths: "paper_units" means the
/// inputs are dimensionless multiples of 4/L^2; "absolute" means plain
/// energies (atomic units, hbar = m = 1).
enum class UnitMode { absolute, paper_units };

/// Five-parameter potential box on [0, L] with inverse-square singular walls:
///   V(x) = 1/(1-(x/L)^2) * { V0 + VL/(x/L)^2 + VR/(1-(x/L)^2)
///                            + V1 [(x/L)^2 - 1/2] }.
struct PotentialParams {
    double V0 = 0.0;
    double V1 = 0.0;
    double VL = 0.0;
    double VR = 0.0;
    double L = 1.0;
    UnitMode unit_mode = UnitMode::paper_units;

    /// Admit the mildly negative strengths the square roots still allow
    /// (uR >= -1/8, uL >= -1/32). Off by default; results in that range are
    /// produced but not validated against anything.
    bool allow_extended_strengths = false;

    /// Throws std::domain_error when the constraints are violated.
    void validate() const;
};

/// Dimensionless description of the solver basis derived from the potential.
struct BasisSpec {
    double u0, u1, uL, uR;  ///< strengths in units of 4/L^2
    double mu, nu;          ///< Jacobi exponents, mu^2 = 1+8uR, nu^2 = 1/4+8uL
    double alpha, beta;     ///< edge exponents, 2a = mu+1, 2b = nu+1/2
    double L;               ///< box width
    double eps_scale;       ///< L^2/4; eps = eps_scale * E
};

/// Derives the dimensionless strengths and basis exponents. Positive square
/// roots are taken so the basis decays fastest at the singular walls.
BasisSpec to_basis_spec(const PotentialParams& p);

/// y(x) = 2 (x/L)^2 - 1, mapping [0, L] onto [-1, 1].
double map_y(double x, double L);

/// Inverse map x(y) = L sqrt((1+y)/2).
double map_x(double y, double L);

/// V(x) in absolute energy units. Returns +infinity at the singular walls
/// (x = L always; x = 0 when VL > 0) so plotting code can clip.
double potential_x(const PotentialParams& p, double x);

/// Dimensionless potential (L^2/4) V expressed in the mapped coordinate:
/// [2/(1-y)] [u0 + 2uL/(1+y) + 2uR/(1-y) + (u1/2) y], for y in (-1, 1).
double potential_y(const BasisSpec& s, double y);

}  // namespace trabox
