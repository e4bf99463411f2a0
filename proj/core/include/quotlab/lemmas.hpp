#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "quotlab/arith.hpp"

namespace quotlab {

/// Divisor relabeling: d = prod p_i^{t_i} over the primes of n, ordered,
/// maps to prod q_i^{t_i} where q_1 = 2, q_2 = 3, ... Injective on the
/// divisors of n and pointwise <= d. Throws std::domain_error if d does not
/// divide ctx.value().
std::uint64_t pi_map(std::uint64_t d, const Factorization& ctx);

struct SmallRadicalCheck {
    std::uint64_t n = 0;
    std::size_t omega = 0;           // s, number of distinct primes of n
    std::uint64_t smooth_bound = 0;  // the s-th prime (1 when s = 0)
    std::uint64_t tau_value = 0;     // left side
    std::uint64_t psi_bound = 0;     // psi(Q, s-th prime), right side
    bool ok = false;
};

/// Exact surrogate for the small-radical divisor bound:
/// tau(n) <= psi(Q, p_(s)) with s = omega(n). Holds for every n <= Q.
SmallRadicalCheck verify_small_radical(std::uint64_t n, std::uint64_t q,
                                       const FactorSieve& sieve);

struct SquarefreeTauCheck {
    std::uint64_t lhs = 0; // tau(n, z)
    std::uint64_t rhs = 0; // sum_{j <= floor(log2 z)} C(omega(n), j)
    bool ok = false;
};

/// For squarefree n: every divisor <= z has at most log2(z) prime factors,
/// so tau(n, z) <= sum_{j=0}^{floor(log2 z)} C(omega(n), j). Exact.
/// Throws std::domain_error when n is not squarefree.
SquarefreeTauCheck tau_le_squarefree_surrogate(std::uint64_t n,
                                               std::uint64_t z,
                                               const FactorSieve& sieve);

/// n = parts[0] * ... * parts[s-1] * tail with every part squarefree and
/// > Q^eps, and rad(tail) <= Q^eps. s = 0 is allowed.
struct RadicalDecomposition {
    std::uint64_t n = 0;
    std::vector<std::uint64_t> parts;
    std::uint64_t tail = 1; // m
    double eps = 0;
    std::uint64_t q = 0;
    double threshold = 0; // Q^eps as evaluated for the comparisons
};

/// Radical-stripping chain: repeatedly peel rad(current) while it exceeds
/// Q^eps. Always terminates; reconstruction is exact.
RadicalDecomposition decompose_radical_chain(std::uint64_t n, double eps,
                                             std::uint64_t q,
                                             const FactorSieve& sieve);

/// True iff d factors as d_1 ... d_s d_m with d_i | parts[i], d_m | tail.
/// Requires d | n (domain error otherwise). Existence only.
bool divisor_split_exists(std::uint64_t d, const RadicalDecomposition& dec,
                          const FactorSieve& sieve);

struct BinomialProductCheck {
    double lhs_ln = 0; // ln prod C(m_i, k_i)
    double rhs_ln = 0; // ln C(sum m_i, sum k_i)
    bool ok = false;   // exact big-integer comparison, not the logs
};

/// prod C(m_i, k_i) <= C(sum m_i, sum k_i), compared exactly.
BinomialProductCheck binomial_product_bound(std::span<const std::uint32_t> m,
                                            std::span<const std::uint32_t> k);

struct TauRatioCheck {
    std::uint64_t tau_n = 0;
    std::uint64_t tau_n_squared = 0;
    double ratio = 0;     // ln tau(n^2) / ln tau(n)
    bool ok = false;      // ratio <= ln 3 / ln 2 + 1e-12
    bool equality = false;
};

/// ln tau(n^2) / ln tau(n) <= ln 3 / ln 2, with equality exactly on
/// squarefree n. tau(n^2) is derived from the factorization of n, so n^2
/// never has to fit in the sieve. Requires n >= 2.
TauRatioCheck tau_ratio_check(std::uint64_t n, const FactorSieve& sieve);

/// tau(n) <= tau(a) tau(b) for any factorization n = a * b.
/// Throws std::domain_error when a * b != n.
bool tau_submultiplicative_check(std::uint64_t n, std::uint64_t a,
                                 std::uint64_t b, const FactorSieve& sieve);

/// delta(c) = c / (2 ln 2 - ln 3), the square-part exponent bound.
/// Requires c >= 0.
double delta_of_c(double c);

/// Dyadic-in-exponent covering of each part: for part i with
/// delta_i = ln n_i / ln Q, the K intervals
/// [Q^{delta_i (j-1)/K}, Q^{delta_i j/K}], j = 1..K, cover [1, n_i].
struct IntervalGrid {
    int subdivisions = 0;              // K
    std::vector<double> part_exponents; // delta_i
    // intervals[i*K + j] for part i, slot j (j = 0-based).
    std::vector<std::pair<double, double>> intervals;
};

IntervalGrid interval_grid(const RadicalDecomposition& dec, int subdivisions);

/// Components of the assembled divisor-count bound for a target exponent
/// delta (divisors <= Q^delta). Reported separately; no pass/fail is
/// attached since the merged bound is asymptotic.
struct TauBoundAssembly {
    double alpha = 0;               // min(1/2, delta (1 + 1/K))
    double big_m = 0;               // ln Q / ln ln Q
    double interval_choices_ln = 0; // s ln K
    double binomial_ln_value = 0;   // ln C(floor(M), floor(alpha M))
    double smooth_tail_exponent = 0; // c_eps(eps) for the tail part
};

/// Requires Q >= 16 (so ln ln Q > 0), 0 < delta, K >= 1.
TauBoundAssembly assemble_tau_bound(const RadicalDecomposition& dec,
                                    int subdivisions, double delta);

} // namespace quotlab
