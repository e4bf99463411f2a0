#pragma once

#include <cstdint>
#include <string>

#include "quotlab/integer_set.hpp"

namespace quotlab {

enum class RecipeKind {
    Smooth,            // {n <= Q : P+(n) <= y}
    PrimorialDivisors, // divisors of p_1 ... p_k, clipped to [1, Q]
    Interval,          // {1, ..., Q}
    Geometric,         // {1, r, r^2, ...} clipped to [1, Q]
    RandomSubset,      // seeded density subset of [1, Q]
};

struct SetRecipe {
    RecipeKind kind = RecipeKind::Interval;
    std::uint64_t q = 0;
    std::uint64_t smooth_y = 0;  // Smooth
    unsigned primorial_k = 0;    // PrimorialDivisors
    std::uint64_t ratio = 0;     // Geometric
    double density = 0;          // RandomSubset
    std::uint64_t seed = 0;      // RandomSubset
};

/// Deterministic for a fixed recipe (including the seed).
IntegerSet generate(const SetRecipe& recipe);

/// Compact label for CSV rows, e.g. "smooth(y=5)" or "random(d=0.3)".
std::string recipe_label(const SetRecipe& recipe);

/// Normalized exponents of one set against the 2 ln 2 benchmarks. The
/// normalization is ln(value / |A|^2) * ln ln Q / ln Q, so eta_energy >= 0
/// and eta_product, eta_quotient <= 0 by construction.
struct SetMeasurement {
    std::uint64_t set_size = 0;
    std::uint64_t product_size = 0;  // |AA|
    std::uint64_t quotient_size = 0; // |A/A|
    std::uint64_t energy = 0;        // E(A)
    double eta_product = 0;
    double eta_energy = 0;
    double eta_quotient = 0;
    // eta_quotient + eta_energy - 2 ln 2: how far the pair (E, |A/A|) sits
    // from the corollary's "full energy forces full quotient" regime.
    double corollary_gap = 0;
};

/// Requires |A| >= 2 and ambient bound >= 16.
SetMeasurement measure(const IntegerSet& a, unsigned workers = 1);

} // namespace quotlab
