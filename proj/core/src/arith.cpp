#include "quotlab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace quotlab {
namespace {

std::string bad_n(std::uint64_t n, std::uint64_t limit) {
    return "n = " + std::to_string(n) + " outside [1, " +
           std::to_string(limit) + "]";
}

} // namespace

Factorization::Factorization(std::uint64_t n, std::vector<PrimePower> factors)
    : n_(n), factors_(std::move(factors)) {
    if (n == 0) throw std::domain_error("Factorization: n must be positive");
}

std::uint64_t Factorization::tau() const {
    std::uint64_t t = 1;
    for (const auto& f : factors_) t *= f.exponent + 1;
    return t;
}

std::uint64_t Factorization::radical() const {
    std::uint64_t r = 1;
    for (const auto& f : factors_) r *= f.prime;
    return r;
}

int Factorization::mobius() const {
    for (const auto& f : factors_)
        if (f.exponent >= 2) return 0;
    return factors_.size() % 2 == 0 ? 1 : -1;
}

std::uint64_t Factorization::largest_prime_factor() const {
    return factors_.empty() ? 1 : factors_.back().prime;
}

std::uint64_t Factorization::square_part_root() const {
    std::uint64_t m = 1;
    for (const auto& f : factors_)
        for (std::uint32_t i = 0; i < f.exponent / 2; ++i) m *= f.prime;
    return m;
}

std::vector<std::uint64_t> Factorization::divisors() const {
    return divisors_le(n_);
}

std::vector<std::uint64_t> Factorization::divisors_le(std::uint64_t z) const {
    std::vector<std::uint64_t> out;
    if (z == 0) return out;
    out.push_back(1);
    for (const auto& f : factors_) {
        const std::size_t base = out.size();
        std::uint64_t pw = 1;
        for (std::uint32_t e = 1; e <= f.exponent; ++e) {
            pw *= f.prime;
            for (std::size_t i = 0; i < base; ++i) {
                // out[i] * pw <= n always fits: both divide n.
                const std::uint64_t d = out[i] * pw;
                if (d <= z) out.push_back(d);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t Factorization::tau_le(std::uint64_t z) const {
    if (z >= n_) return tau();
    return divisors_le(z).size();
}

FactorSieve::FactorSieve(std::uint64_t limit, std::uint64_t ceiling)
    : limit_(limit) {
    if (limit < 2)
        throw capacity_error("FactorSieve: limit must be at least 2");
    if (limit > ceiling)
        throw capacity_error("FactorSieve: limit " + std::to_string(limit) +
                             " exceeds ceiling " + std::to_string(ceiling));
    spf_.assign(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] != 0) continue;
        for (std::uint64_t j = i; j <= limit; j += i)
            if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
}

std::uint32_t FactorSieve::smallest_prime_factor(std::uint64_t n) const {
    if (n < 2 || n > limit_)
        throw std::domain_error("smallest_prime_factor: " + bad_n(n, limit_));
    return spf_[n];
}

bool FactorSieve::is_prime(std::uint64_t n) const {
    if (n < 2) return false;
    return smallest_prime_factor(n) == n;
}

Factorization FactorSieve::factorize(std::uint64_t n) const {
    if (n < 1 || n > limit_)
        throw std::domain_error("factorize: " + bad_n(n, limit_));
    std::vector<PrimePower> factors;
    std::uint64_t m = n;
    while (m > 1) {
        const std::uint32_t p = spf_[m];
        std::uint32_t e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        factors.push_back({p, e});
    }
    return Factorization(n, std::move(factors));
}

std::uint64_t tau(const FactorSieve& sieve, std::uint64_t n) {
    return sieve.factorize(n).tau();
}

std::uint64_t tau_le(const FactorSieve& sieve, std::uint64_t n, std::uint64_t z) {
    return sieve.factorize(n).tau_le(z);
}

std::uint64_t radical(const FactorSieve& sieve, std::uint64_t n) {
    return sieve.factorize(n).radical();
}

int mobius(const FactorSieve& sieve, std::uint64_t n) {
    return sieve.factorize(n).mobius();
}

std::uint64_t largest_prime_factor(const FactorSieve& sieve, std::uint64_t n) {
    return sieve.factorize(n).largest_prime_factor();
}

std::uint64_t square_part_root(const FactorSieve& sieve, std::uint64_t n) {
    return sieve.factorize(n).square_part_root();
}

std::vector<std::uint64_t> primes_upto(std::uint64_t y) {
    std::vector<std::uint64_t> primes;
    if (y < 2) return primes;
    std::vector<bool> composite(y + 1, false);
    for (std::uint64_t i = 2; i <= y; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= y; j += i) composite[j] = true;
    }
    return primes;
}

std::uint64_t nth_prime(std::size_t k) {
    // omega(n) <= 15 for any 64-bit n, so the table covers every caller in
    // this codebase; the sieve below is a cold path for larger k.
    static constexpr std::uint64_t kSmallPrimes[] = {
        2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,  37,  41,  43,  47,  53,
        59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131};
    if (k == 0) return 1;
    if (k <= std::size(kSmallPrimes)) return kSmallPrimes[k - 1];
    std::uint64_t bound = 256;
    for (;;) {
        auto primes = primes_upto(bound);
        if (primes.size() >= k) return primes[k - 1];
        bound *= 2;
    }
}

namespace {

class SmoothEnumerator {
public:
    SmoothEnumerator(std::uint64_t y, std::uint64_t budget)
        : primes_(primes_upto(y)), budget_(budget) {}

    std::uint64_t count(std::uint64_t x) { return count_from(0, x); }

    void collect(std::uint64_t x, std::vector<std::uint64_t>& out) {
        collect_from(0, x, 1, out);
    }

private:
    void charge() {
        if (nodes_++ >= budget_)
            throw capacity_error("smooth enumeration budget exceeded");
    }

    std::uint64_t count_from(std::size_t i, std::uint64_t x) {
        charge();
        std::uint64_t total = 1; // the empty product
        for (std::size_t j = i; j < primes_.size() && primes_[j] <= x; ++j) {
            const std::uint64_t p = primes_[j];
            for (std::uint64_t pw = p;; pw *= p) {
                total += count_from(j + 1, x / pw);
                if (pw > x / p) break;
            }
        }
        return total;
    }

    void collect_from(std::size_t i, std::uint64_t x, std::uint64_t value,
                      std::vector<std::uint64_t>& out) {
        charge();
        out.push_back(value);
        for (std::size_t j = i; j < primes_.size() && primes_[j] <= x; ++j) {
            const std::uint64_t p = primes_[j];
            for (std::uint64_t pw = p;; pw *= p) {
                collect_from(j + 1, x / pw, value * pw, out);
                if (pw > x / p) break;
            }
        }
    }

    std::vector<std::uint64_t> primes_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
};

} // namespace

std::uint64_t psi_exact(std::uint64_t x, std::uint64_t y,
                        std::uint64_t node_budget) {
    if (x < 1 || y < 1) throw std::domain_error("psi_exact: x, y must be >= 1");
    if (y >= x) return x; // every n <= x is x-smooth
    SmoothEnumerator enumerator(y, node_budget);
    return enumerator.count(x);
}

IntegerSet smooth_numbers(std::uint64_t x, std::uint64_t y,
                          std::uint64_t max_count) {
    if (x < 1 || y < 1)
        throw std::domain_error("smooth_numbers: x, y must be >= 1");
    std::vector<std::uint64_t> out;
    if (y >= x) {
        if (x > max_count)
            throw capacity_error("smooth_numbers: result exceeds max_count");
        out.resize(x);
        for (std::uint64_t n = 1; n <= x; ++n) out[n - 1] = n;
    } else {
        SmoothEnumerator enumerator(y, max_count);
        enumerator.collect(x, out);
        std::sort(out.begin(), out.end());
    }
    return IntegerSet(std::move(out), x);
}

double z_formula(double x, double y) {
    if (!(x >= y && y >= 2))
        throw std::domain_error("z_formula: requires x >= y >= 2");
    const double lx = std::log(x);
    const double ly = std::log(y);
    return (lx / ly) * std::log1p(y / lx) + (y / ly) * std::log1p(lx / y);
}

double entropy(double d) {
    if (!(d > 0.0 && d < 1.0))
        throw std::domain_error("entropy: requires 0 < d < 1");
    return d * std::log(1.0 / d) + (1.0 - d) * std::log(1.0 / (1.0 - d));
}

double binomial_ln(std::uint64_t m, std::uint64_t k) {
    if (k > m) throw std::domain_error("binomial_ln: requires k <= m");
    return std::lgamma(static_cast<double>(m) + 1.0) -
           std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(m - k) + 1.0);
}

double c_eps(double eps) {
    if (!(eps > 0.0 && eps <= 1.0))
        throw std::domain_error("c_eps: requires 0 < eps <= 1");
    return std::log1p(eps) + eps * std::log1p(1.0 / eps);
}

} // namespace quotlab
