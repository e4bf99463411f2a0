#pragma once

namespace quotlab {

/// 2 ln 2 - ln 3, the denominator of the square-part exponent. Evaluated,
/// never hard-coded.
double square_part_denominator();

/// Energy-route exponent: -2 ln 2 + c.
double trivial_exponent(double c);

/// Structured-route exponent: -2 H(delta(c)) with delta(c) = c/(2ln2 - ln3).
/// Requires delta(c) in (0, 1).
double structured_exponent(double c);

/// g(c) = trivial_exponent(c) - structured_exponent(c). The quotient-set
/// constant is -2 ln 2 + c* at the root c* of g. Requires 0 < c < 2ln2-ln3.
double crossing_g(double c);

/// max of the two exponents; minimized exactly at the crossing.
double guaranteed_lower_exponent(double c);

struct GammaSolution {
    double root = 0;          // c*
    double delta_at_root = 0; // delta(c*)
    double bracket_lo = 0;
    double bracket_hi = 0;
    double residual = 0; // g(root)
    int iterations = 0;
    double guaranteed_exponent = 0; // -2 ln 2 + c*
};

/// Bisection on [0.05, 0.15] (g is strictly increasing there; the sign
/// change is validated before iterating). Deterministic; |g(root)| <= tol.
GammaSolution solve_gamma(double tol);

} // namespace quotlab
