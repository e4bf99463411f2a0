#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "quotlab/integer_set.hpp"

namespace quotlab {

/// A positive rational in lowest terms. Reduction happens at construction,
/// so equality of values is equality of (num, den) pairs.
struct ReducedFraction {
    std::uint64_t num = 1;
    std::uint64_t den = 1;

    ReducedFraction() = default;
    ReducedFraction(std::uint64_t numerator, std::uint64_t denominator);

    friend bool operator==(const ReducedFraction&,
                           const ReducedFraction&) = default;
    // Lexicographic on (num, den); a stable container order, not numeric.
    friend std::strong_ordering operator<=>(const ReducedFraction&,
                                            const ReducedFraction&) = default;
};

struct ProductRep {
    std::uint64_t product = 0;
    std::uint64_t count = 0; // r_{A,B}(product)
};

struct FractionRep {
    ReducedFraction ratio;
    std::uint64_t count = 0;
};

struct EnergyReport {
    std::uint64_t energy = 0;     // E(A,B) = sum_z r(z)^2
    std::uint64_t pair_count = 0; // |A| * |B|
    double collision_factor = 0;  // L, with E = |A||B| L
    // ln(L) ln ln Q / ln Q; present only when Q >= 16.
    std::optional<double> eta;
};

using ProductPair = std::pair<std::uint64_t, std::uint64_t>;

/// AB = {ab : a in A, b in B}, ambient bound Q_A * Q_B.
/// Both sets must be nonempty; an ambient product beyond 64 bits is a
/// capacity error.
IntegerSet product_set(const IntegerSet& a, const IntegerSet& b,
                       unsigned workers = 1);

/// A/B as reduced fractions, deduplicated, sorted by (num, den).
std::vector<ReducedFraction> quotient_set(const IntegerSet& a,
                                          const IntegerSet& b,
                                          unsigned workers = 1);

/// Representation counts r_{A,B}(z) for every z in AB, ascending in z.
std::vector<ProductRep> rep_counts_product(const IntegerSet& a,
                                           const IntegerSet& b,
                                           unsigned workers = 1);

/// Representation counts of reduced ratios over an explicit pair list,
/// sorted by ratio.
std::vector<FractionRep> rep_counts_quotient(std::span<const ProductPair> pairs);

/// Multiplicative energy via sorted product counting. Equals the naive
/// quadruple loop; the equality is enforced by the test suite.
EnergyReport energy(const IntegerSet& a, const IntegerSet& b,
                    unsigned workers = 1);

struct ShnirelmanCheck {
    double lower_bound = 0; // |A|^2 |B|^2 / E(A,B)
    std::uint64_t product_size = 0;
    std::uint64_t quotient_size = 0;
    std::uint64_t energy = 0;
    bool product_ok = false;  // |AB|  >= lower_bound, compared exactly
    bool quotient_ok = false; // |A/B| >= lower_bound, compared exactly
};

/// |AB|, |A/B| >= |A|^2 |B|^2 / E(A,B). The comparisons are done on
/// integers (128-bit cross multiplication), not on the double lower_bound.
ShnirelmanCheck shnirelman_bounds(const IntegerSet& a, const IntegerSet& b,
                                  unsigned workers = 1);

} // namespace quotlab
