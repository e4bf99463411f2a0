#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "quotlab/arith.hpp"
#include "quotlab/setops.hpp"

namespace quotlab {

/// One dyadic band of the product multiset: the z in AB with
/// r(z) in (2^{i-1} L, 2^i L]. Index 0 captures (L/2, L].
struct LevelGroup {
    int index = 0;
    std::vector<std::uint64_t> members; // ascending products
    std::uint64_t rep_sum = 0;          // sum of r(z) over the band
    std::uint64_t rep_square_sum = 0;   // sum of r(z)^2
    std::uint64_t max_rep = 0;
};

/// The level-set split of AB around L = E/(|A||B|): light products with
/// r(z) <= L/2, and a dyadic ladder over the rest. All band membership is
/// decided by exact integer comparisons (r * |A||B| against 2^i * E).
struct LevelSetDecomposition {
    std::uint64_t energy = 0;
    std::uint64_t pair_count = 0;
    double collision_factor = 0; // L
    std::vector<ProductRep> reps;
    std::vector<std::uint64_t> light_products; // r(z) <= L/2
    std::uint64_t light_rep_sum = 0;
    std::uint64_t light_rep_square_sum = 0;
    std::vector<LevelGroup> levels; // nonempty bands, ascending index
    int chosen_index = 0;           // argmax of rep_square_sum, ties lowest
    // c' from 2^{i*} L = exp((2 ln 2 - c') ln Q / ln ln Q); Q >= 16 only.
    std::optional<double> c_prime;
};

LevelSetDecomposition level_sets(const IntegerSet& a, const IntegerSet& b,
                                 unsigned workers = 1);

/// G: the (a, b) pairs whose product lies in the chosen band. Ordered by
/// (a, b) position, deterministic. |G| equals the band's rep_sum.
std::vector<ProductPair> dominant_pairs(const IntegerSet& a,
                                        const IntegerSet& b,
                                        const LevelSetDecomposition& dec);

/// W: deduplicated reduced ratios a/b over the pair list.
std::vector<ReducedFraction> ratio_set(std::span<const ProductPair> pairs);

/// sigma = sum_z r_{A/B,G}(z)^2: ordered pairs of pairs with equal ratio.
std::uint64_t ratio_collisions(std::span<const ProductPair> pairs);

/// The same count through the (t, u, v, s) parametrization: each pair is
/// keyed by (u, v) = (a, b)/gcd(a, b) and multiplicities are squared.
/// Must equal ratio_collisions exactly.
std::uint64_t ratio_collisions_parametrized(std::span<const ProductPair> pairs);

struct AuditStep {
    double lhs = 0;
    double rhs = 0;
    bool pass = false; // decided by exact integer arithmetic, not lhs/rhs
};

/// Per-step exact record of the quotient-set lower-bound chain on one
/// (A, B). Every step is a theorem-level fact; a false anywhere is an
/// implementation bug, never a property of the input.
struct ProofAuditReport {
    std::uint64_t size_a = 0, size_b = 0;
    std::uint64_t product_set_size = 0, quotient_set_size = 0;
    std::uint64_t pair_group_size = 0; // |G|
    std::uint64_t ratio_set_size = 0;  // |W|
    std::uint64_t sigma_value = 0;
    std::uint64_t energy = 0;
    double collision_factor = 0;
    int chosen_index = 0;
    std::size_t level_count = 0;

    // Normalized exponents; present only when Q >= 16.
    std::optional<double> c;       // E = |A||B| exp((2ln2 - c) lnQ/lnlnQ)
    std::optional<double> c_prime; // from the chosen band height
    std::optional<double> eta_energy;
    std::optional<double> eta_quotient;

    AuditStep step_m1;              // sum_{M1} r^2 <= |A||B| L / 2
    AuditStep step_pigeonhole;      // band r^2 sum >= (M2 r^2 sum)/#levels
    AuditStep step_g_size;          // |G| == band rep_sum
    AuditStep step_gcd;             // gcd(a,b) <= l(ab) on all of G
    AuditStep step_cauchy;          // |G|^2 <= |W| sigma
    AuditStep step_parametrization; // sigma via (t,u,v,s) == sigma
    AuditStep step_final;           // |A/B| >= |W| >= |G|^2 / sigma

    // Tightest pair for the gcd step: the (a,b) minimizing l(ab) - gcd(a,b).
    std::uint64_t tightest_gcd = 0;
    std::uint64_t tightest_gcd_bound = 0;

    bool all_pass() const;
};

/// Runs the full level-set / pair-group / ratio-set pipeline and checks
/// every exact step. The sieve must cover max(elements of A, elements of B)
/// so that l(ab) can be assembled from the two factorizations.
ProofAuditReport audit(const IntegerSet& a, const IntegerSet& b,
                       const FactorSieve& sieve, unsigned workers = 1);

} // namespace quotlab
