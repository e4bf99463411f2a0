#include "quotlab/gamma.hpp"

#include <cmath>
#include <stdexcept>

#include "quotlab/arith.hpp"
#include "quotlab/lemmas.hpp"

namespace quotlab {

namespace {
constexpr double kBracketLo = 0.05;
constexpr double kBracketHi = 0.15;
constexpr int kMaxIterations = 200;
} // namespace

double square_part_denominator() {
    return 2.0 * std::log(2.0) - std::log(3.0);
}

double trivial_exponent(double c) {
    if (c < 0) throw std::domain_error("trivial_exponent: requires c >= 0");
    return -2.0 * std::log(2.0) + c;
}

double structured_exponent(double c) {
    const double delta = delta_of_c(c);
    if (!(delta > 0.0 && delta < 1.0))
        throw std::domain_error(
            "structured_exponent: delta(c) must lie in (0, 1)");
    return -2.0 * entropy(delta);
}

double crossing_g(double c) {
    if (!(c > 0.0 && c < square_part_denominator()))
        throw std::domain_error("crossing_g: requires 0 < c < 2 ln 2 - ln 3");
    return trivial_exponent(c) - structured_exponent(c);
}

double guaranteed_lower_exponent(double c) {
    return std::max(trivial_exponent(c), structured_exponent(c));
}

GammaSolution solve_gamma(double tol) {
    if (!(tol > 0)) throw std::domain_error("solve_gamma: tol must be positive");
    double lo = kBracketLo;
    double hi = kBracketHi;
    double g_lo = crossing_g(lo);
    const double g_hi = crossing_g(hi);
    if (!(g_lo < 0.0 && g_hi > 0.0))
        throw std::runtime_error("solve_gamma: no sign change on the bracket");
    GammaSolution solution;
    solution.bracket_lo = lo;
    solution.bracket_hi = hi;
    double mid = lo;
    double g_mid = g_lo;
    int it = 0;
    while (it < kMaxIterations) {
        ++it;
        mid = 0.5 * (lo + hi);
        g_mid = crossing_g(mid);
        if (std::abs(g_mid) <= tol) break;
        if (g_mid < 0.0) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    solution.root = mid;
    solution.residual = g_mid;
    solution.iterations = it;
    solution.delta_at_root = delta_of_c(mid);
    solution.guaranteed_exponent = trivial_exponent(mid);
    return solution;
}

} // namespace quotlab
