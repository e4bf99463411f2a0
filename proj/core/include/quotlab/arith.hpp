#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "quotlab/integer_set.hpp"

namespace quotlab {

/// Thrown when a request exceeds a declared resource ceiling (sieve size,
/// enumeration budget). Distinct from std::domain_error, which marks inputs
/// that are outside an operation's mathematical domain.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PrimePower {
    std::uint64_t prime = 0;
    std::uint32_t exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime-exponent decomposition of a positive integer: n = prod p_i^{a_i}
/// with p_1 < p_2 < ... and all a_i >= 1. n = 1 carries no factors.
class Factorization {
public:
    Factorization(std::uint64_t n, std::vector<PrimePower> factors);

    std::uint64_t value() const { return n_; }
    const std::vector<PrimePower>& factors() const { return factors_; }

    /// omega(n): number of distinct prime divisors.
    std::size_t distinct_primes() const { return factors_.size(); }

    /// Number of divisors.
    std::uint64_t tau() const;
    /// Number of divisors <= z.
    std::uint64_t tau_le(std::uint64_t z) const;
    /// Product of the distinct primes dividing n; 1 for n = 1.
    std::uint64_t radical() const;
    /// Moebius function: 0 if any square divides n, else (-1)^omega.
    int mobius() const;
    /// Largest prime divisor; 1 for n = 1.
    std::uint64_t largest_prime_factor() const;
    /// Largest m with m^2 | n, i.e. prod p_i^{floor(a_i / 2)}.
    std::uint64_t square_part_root() const;

    /// All divisors, ascending.
    std::vector<std::uint64_t> divisors() const;
    /// Divisors <= z, ascending.
    std::vector<std::uint64_t> divisors_le(std::uint64_t z) const;

private:
    std::uint64_t n_;
    std::vector<PrimePower> factors_;
};

/// Smallest-prime-factor table covering every integer in [2, limit].
/// Immutable after construction; safe for concurrent reads.
class FactorSieve {
public:
    static constexpr std::uint64_t kDefaultCeiling = 10'000'000;

    /// Builds the table. Requires 2 <= limit <= ceiling; anything else is a
    /// capacity error rather than a silent fallback to trial division.
    explicit FactorSieve(std::uint64_t limit,
                         std::uint64_t ceiling = kDefaultCeiling);

    std::uint64_t limit() const { return limit_; }

    /// Smallest prime dividing n (equals n exactly when n is prime).
    /// Requires 2 <= n <= limit.
    std::uint32_t smallest_prime_factor(std::uint64_t n) const;

    bool is_prime(std::uint64_t n) const;

    /// Requires 1 <= n <= limit.
    Factorization factorize(std::uint64_t n) const;

private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> spf_;
};

std::uint64_t tau(const FactorSieve& sieve, std::uint64_t n);
std::uint64_t tau_le(const FactorSieve& sieve, std::uint64_t n, std::uint64_t z);
std::uint64_t radical(const FactorSieve& sieve, std::uint64_t n);
int mobius(const FactorSieve& sieve, std::uint64_t n);
std::uint64_t largest_prime_factor(const FactorSieve& sieve, std::uint64_t n);
std::uint64_t square_part_root(const FactorSieve& sieve, std::uint64_t n);

/// Primes <= y, ascending.
std::vector<std::uint64_t> primes_upto(std::uint64_t y);

/// k-th prime for k >= 1 (2, 3, 5, ...); returns 1 for k = 0 so that the
/// empty factorization maps onto the y = 1 smoothness bound.
std::uint64_t nth_prime(std::size_t k);

inline constexpr std::uint64_t kDefaultPsiBudget = 100'000'000;
inline constexpr std::uint64_t kDefaultSmoothLimit = 10'000'000;

/// Exact count of y-smooth integers in [1, x], by recursive enumeration of
/// the smooth numbers themselves (never a scan over all n <= x). The budget
/// caps the number of enumeration nodes visited.
std::uint64_t psi_exact(std::uint64_t x, std::uint64_t y,
                        std::uint64_t node_budget = kDefaultPsiBudget);

/// The y-smooth integers in [1, x], sorted, with ambient bound x.
IntegerSet smooth_numbers(std::uint64_t x, std::uint64_t y,
                          std::uint64_t max_count = kDefaultSmoothLimit);

/// Z(x, y) = (ln x / ln y) ln(1 + y/ln x) + (y / ln y) ln(1 + ln x / y),
/// the driver of the log psi(x, y) estimate. Requires x >= y >= 2.
double z_formula(double x, double y);

/// Binary entropy in natural-log units: H(d) = d ln(1/d) + (1-d) ln(1/(1-d)).
/// Requires 0 < d < 1.
double entropy(double d);

/// ln C(m, k) via log-gamma. Requires k <= m.
double binomial_ln(std::uint64_t m, std::uint64_t k);

/// ln(1 + eps) + eps ln(1 + 1/eps): the limiting small-radical divisor
/// exponent of Z(Q, eps ln Q) ln ln Q / ln Q. Requires 0 < eps <= 1.
double c_eps(double eps);

} // namespace quotlab
