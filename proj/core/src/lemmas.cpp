#include "quotlab/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace quotlab {
namespace {

using boost::multiprecision::cpp_int;

cpp_int exact_binomial(std::uint64_t m, std::uint64_t k) {
    if (k > m) return 0;
    k = std::min(k, m - k);
    cpp_int result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= m - k + i;
        result /= i; // exact: every prefix is a binomial coefficient
    }
    return result;
}

} // namespace

std::uint64_t pi_map(std::uint64_t d, const Factorization& ctx) {
    if (d == 0 || ctx.value() % d != 0)
        throw std::domain_error("pi_map: d must divide n");
    std::uint64_t image = 1;
    std::uint64_t rest = d;
    std::size_t rank = 1;
    for (const auto& f : ctx.factors()) {
        const std::uint64_t replacement = nth_prime(rank);
        while (rest % f.prime == 0) {
            rest /= f.prime;
            image *= replacement;
        }
        ++rank;
    }
    // rest == 1 is guaranteed by d | n.
    return image;
}

SmallRadicalCheck verify_small_radical(std::uint64_t n, std::uint64_t q,
                                       const FactorSieve& sieve) {
    if (n > q)
        throw std::domain_error("verify_small_radical: requires n <= Q");
    const Factorization fact = sieve.factorize(n);
    SmallRadicalCheck check;
    check.n = n;
    check.omega = fact.distinct_primes();
    check.smooth_bound = nth_prime(check.omega);
    check.tau_value = fact.tau();
    check.psi_bound = psi_exact(q, check.smooth_bound);
    check.ok = check.tau_value <= check.psi_bound;
    return check;
}

SquarefreeTauCheck tau_le_squarefree_surrogate(std::uint64_t n,
                                               std::uint64_t z,
                                               const FactorSieve& sieve) {
    if (z < 1)
        throw std::domain_error("tau_le_squarefree_surrogate: z must be >= 1");
    const Factorization fact = sieve.factorize(n);
    if (fact.mobius() == 0)
        throw std::domain_error(
            "tau_le_squarefree_surrogate: n must be squarefree");
    SquarefreeTauCheck check;
    check.lhs = fact.tau_le(z);
    std::uint64_t max_primes = 0; // floor(log2 z)
    for (std::uint64_t v = z; v > 1; v >>= 1) ++max_primes;
    const std::uint64_t omega = fact.distinct_primes();
    check.rhs = 0;
    for (std::uint64_t j = 0; j <= std::min(max_primes, omega); ++j) {
        const cpp_int c = exact_binomial(omega, j);
        check.rhs += static_cast<std::uint64_t>(c); // omega <= 15, tiny
    }
    check.ok = check.lhs <= check.rhs;
    return check;
}

RadicalDecomposition decompose_radical_chain(std::uint64_t n, double eps,
                                             std::uint64_t q,
                                             const FactorSieve& sieve) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::domain_error("decompose_radical_chain: eps in (0,1)");
    if (n < 1 || n > q)
        throw std::domain_error("decompose_radical_chain: requires 1 <= n <= Q");
    RadicalDecomposition dec;
    dec.n = n;
    dec.eps = eps;
    dec.q = q;
    dec.threshold = std::pow(static_cast<double>(q), eps);
    std::uint64_t current = n;
    for (;;) {
        const std::uint64_t r = sieve.factorize(current).radical();
        if (static_cast<double>(r) <= dec.threshold) break;
        dec.parts.push_back(r);
        current /= r;
    }
    dec.tail = current;
    return dec;
}

namespace {

bool split_search(std::uint64_t d, std::span<const std::uint64_t> parts,
                  std::uint64_t tail, const FactorSieve& sieve) {
    if (parts.empty()) return tail % d == 0;
    for (const std::uint64_t piece : sieve.factorize(parts.front()).divisors()) {
        if (d % piece != 0) continue;
        if (split_search(d / piece, parts.subspan(1), tail, sieve)) return true;
    }
    return false;
}

} // namespace

bool divisor_split_exists(std::uint64_t d, const RadicalDecomposition& dec,
                          const FactorSieve& sieve) {
    if (d == 0 || dec.n % d != 0)
        throw std::domain_error("divisor_split_exists: d must divide n");
    return split_search(d, dec.parts, dec.tail, sieve);
}

BinomialProductCheck binomial_product_bound(std::span<const std::uint32_t> m,
                                            std::span<const std::uint32_t> k) {
    if (m.size() != k.size())
        throw std::domain_error("binomial_product_bound: size mismatch");
    if (m.empty())
        throw std::domain_error("binomial_product_bound: empty input");
    cpp_int lhs = 1;
    std::uint64_t sum_m = 0;
    std::uint64_t sum_k = 0;
    double lhs_ln = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (k[i] > m[i])
            throw std::domain_error("binomial_product_bound: needs k_i <= m_i");
        lhs *= exact_binomial(m[i], k[i]);
        lhs_ln += binomial_ln(m[i], k[i]);
        sum_m += m[i];
        sum_k += k[i];
    }
    const cpp_int rhs = exact_binomial(sum_m, sum_k);
    BinomialProductCheck check;
    check.lhs_ln = lhs_ln;
    check.rhs_ln = binomial_ln(sum_m, sum_k);
    check.ok = lhs <= rhs;
    return check;
}

TauRatioCheck tau_ratio_check(std::uint64_t n, const FactorSieve& sieve) {
    if (n < 2) throw std::domain_error("tau_ratio_check: requires n > 1");
    const Factorization fact = sieve.factorize(n);
    TauRatioCheck check;
    check.tau_n = fact.tau();
    check.tau_n_squared = 1;
    for (const auto& f : fact.factors())
        check.tau_n_squared *= 2 * static_cast<std::uint64_t>(f.exponent) + 1;
    check.ratio = std::log(static_cast<double>(check.tau_n_squared)) /
                  std::log(static_cast<double>(check.tau_n));
    const double limit = std::log(3.0) / std::log(2.0);
    constexpr double kTol = 1e-12;
    check.ok = check.ratio <= limit + kTol;
    check.equality = std::abs(check.ratio - limit) <= kTol;
    return check;
}

bool tau_submultiplicative_check(std::uint64_t n, std::uint64_t a,
                                 std::uint64_t b, const FactorSieve& sieve) {
    if (a == 0 || b == 0 || a * b != n)
        throw std::domain_error("tau_submultiplicative_check: needs n = a*b");
    return tau(sieve, n) <= tau(sieve, a) * tau(sieve, b);
}

double delta_of_c(double c) {
    if (c < 0) throw std::domain_error("delta_of_c: requires c >= 0");
    const double denominator = 2.0 * std::log(2.0) - std::log(3.0);
    return c / denominator;
}

IntervalGrid interval_grid(const RadicalDecomposition& dec, int subdivisions) {
    if (subdivisions < 1)
        throw std::domain_error("interval_grid: K must be >= 1");
    if (dec.q < 2)
        throw std::domain_error("interval_grid: requires Q >= 2");
    IntervalGrid grid;
    grid.subdivisions = subdivisions;
    const double ln_q = std::log(static_cast<double>(dec.q));
    for (const std::uint64_t part : dec.parts) {
        const double delta = std::log(static_cast<double>(part)) / ln_q;
        grid.part_exponents.push_back(delta);
        for (int j = 1; j <= subdivisions; ++j) {
            const double lo = std::exp(delta * (j - 1) / subdivisions * ln_q);
            const double hi = std::exp(delta * j / subdivisions * ln_q);
            grid.intervals.emplace_back(lo, hi);
        }
    }
    return grid;
}

TauBoundAssembly assemble_tau_bound(const RadicalDecomposition& dec,
                                    int subdivisions, double delta) {
    if (subdivisions < 1)
        throw std::domain_error("assemble_tau_bound: K must be >= 1");
    if (!(delta > 0))
        throw std::domain_error("assemble_tau_bound: delta must be positive");
    if (dec.q < 16)
        throw std::domain_error("assemble_tau_bound: requires Q >= 16");
    TauBoundAssembly assembly;
    assembly.alpha = std::min(0.5, delta * (1.0 + 1.0 / subdivisions));
    const double ln_q = std::log(static_cast<double>(dec.q));
    assembly.big_m = ln_q / std::log(ln_q);
    assembly.interval_choices_ln =
        static_cast<double>(dec.parts.size()) * std::log(subdivisions);
    const auto m = static_cast<std::uint64_t>(assembly.big_m);
    const auto am = static_cast<std::uint64_t>(assembly.alpha * assembly.big_m);
    assembly.binomial_ln_value = binomial_ln(m, std::min(am, m));
    assembly.smooth_tail_exponent = c_eps(std::min(dec.eps, 1.0));
    return assembly;
}

} // namespace quotlab
