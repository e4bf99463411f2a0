#include "quotlab/setops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "quotlab/arith.hpp"
#include "quotlab/parallel.hpp"

namespace quotlab {
namespace {

void require_nonempty(const IntegerSet& a, const IntegerSet& b,
                      const char* op) {
    if (a.empty() || b.empty())
        throw std::domain_error(std::string(op) + ": sets must be nonempty");
}

std::uint64_t checked_ambient_product(const IntegerSet& a,
                                      const IntegerSet& b) {
    const std::uint64_t qa = a.ambient_bound();
    const std::uint64_t qb = b.ambient_bound();
    if (qa != 0 && qb > std::numeric_limits<std::uint64_t>::max() / qa)
        throw capacity_error(
            "product ambient bound exceeds the 64-bit element range");
    return qa * qb;
}

// All pairwise products of a x b, sorted, possibly with repeats.
// Chunked over rows of a; chunks are concatenated in index order before the
// final sort, so the result is independent of scheduling.
std::vector<std::uint64_t> sorted_products(const IntegerSet& a,
                                           const IntegerSet& b,
                                           unsigned workers) {
    const auto chunks = split_range(a.size(), workers);
    std::vector<std::vector<std::uint64_t>> parts(chunks.size());
    run_chunks(chunks.size(), workers, [&](std::size_t c) {
        auto& out = parts[c];
        out.reserve((chunks[c].second - chunks[c].first) * b.size());
        for (std::size_t i = chunks[c].first; i < chunks[c].second; ++i) {
            const std::uint64_t av = a.elements()[i];
            for (const std::uint64_t bv : b.elements()) out.push_back(av * bv);
        }
    });
    std::vector<std::uint64_t> products;
    products.reserve(a.size() * b.size());
    for (auto& part : parts)
        products.insert(products.end(), part.begin(), part.end());
    std::sort(products.begin(), products.end());
    return products;
}

std::optional<double> eta_from(std::uint64_t q, double ln_ratio) {
    if (q < 16) return std::nullopt;
    const double lq = std::log(static_cast<double>(q));
    return ln_ratio * std::log(lq) / lq;
}

} // namespace

IntegerSet::IntegerSet(std::vector<std::uint64_t> elements,
                       std::uint64_t ambient_bound)
    : elements_(std::move(elements)), ambient_bound_(ambient_bound) {
    if (ambient_bound_ < 1)
        throw std::domain_error("IntegerSet: ambient bound must be positive");
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()),
                    elements_.end());
    if (!elements_.empty()) {
        if (elements_.front() < 1)
            throw std::domain_error("IntegerSet: elements must be positive");
        if (elements_.back() > ambient_bound_)
            throw std::domain_error(
                "IntegerSet: element " + std::to_string(elements_.back()) +
                " exceeds ambient bound " + std::to_string(ambient_bound_));
    }
}

IntegerSet IntegerSet::range(std::uint64_t q) {
    if (q < 1) throw std::domain_error("IntegerSet::range: q must be >= 1");
    std::vector<std::uint64_t> v(q);
    std::iota(v.begin(), v.end(), std::uint64_t{1});
    return IntegerSet(std::move(v), q);
}

IntegerSet IntegerSet::with_inferred_bound(std::vector<std::uint64_t> elements) {
    std::uint64_t q = 1;
    for (const std::uint64_t e : elements) q = std::max(q, e);
    return IntegerSet(std::move(elements), q);
}

ReducedFraction::ReducedFraction(std::uint64_t numerator,
                                 std::uint64_t denominator) {
    if (numerator == 0 || denominator == 0)
        throw std::domain_error("ReducedFraction: parts must be positive");
    const std::uint64_t g = std::gcd(numerator, denominator);
    num = numerator / g;
    den = denominator / g;
}

IntegerSet product_set(const IntegerSet& a, const IntegerSet& b,
                       unsigned workers) {
    require_nonempty(a, b, "product_set");
    const std::uint64_t q = checked_ambient_product(a, b);
    auto products = sorted_products(a, b, workers);
    products.erase(std::unique(products.begin(), products.end()),
                   products.end());
    return IntegerSet(std::move(products), q);
}

std::vector<ReducedFraction> quotient_set(const IntegerSet& a,
                                          const IntegerSet& b,
                                          unsigned workers) {
    require_nonempty(a, b, "quotient_set");
    const auto chunks = split_range(a.size(), workers);
    std::vector<std::vector<ReducedFraction>> parts(chunks.size());
    run_chunks(chunks.size(), workers, [&](std::size_t c) {
        auto& out = parts[c];
        out.reserve((chunks[c].second - chunks[c].first) * b.size());
        for (std::size_t i = chunks[c].first; i < chunks[c].second; ++i)
            for (const std::uint64_t bv : b.elements())
                out.emplace_back(a.elements()[i], bv);
    });
    std::vector<ReducedFraction> fractions;
    fractions.reserve(a.size() * b.size());
    for (auto& part : parts)
        fractions.insert(fractions.end(), part.begin(), part.end());
    std::sort(fractions.begin(), fractions.end());
    fractions.erase(std::unique(fractions.begin(), fractions.end()),
                    fractions.end());
    return fractions;
}

std::vector<ProductRep> rep_counts_product(const IntegerSet& a,
                                           const IntegerSet& b,
                                           unsigned workers) {
    require_nonempty(a, b, "rep_counts_product");
    checked_ambient_product(a, b);
    const auto products = sorted_products(a, b, workers);
    std::vector<ProductRep> reps;
    for (std::size_t i = 0; i < products.size();) {
        std::size_t j = i;
        while (j < products.size() && products[j] == products[i]) ++j;
        reps.push_back({products[i], j - i});
        i = j;
    }
    return reps;
}

std::vector<FractionRep> rep_counts_quotient(
    std::span<const ProductPair> pairs) {
    if (pairs.empty())
        throw std::domain_error("rep_counts_quotient: empty pair list");
    std::vector<ReducedFraction> ratios;
    ratios.reserve(pairs.size());
    for (const auto& [a, b] : pairs) ratios.emplace_back(a, b);
    std::sort(ratios.begin(), ratios.end());
    std::vector<FractionRep> reps;
    for (std::size_t i = 0; i < ratios.size();) {
        std::size_t j = i;
        while (j < ratios.size() && ratios[j] == ratios[i]) ++j;
        reps.push_back({ratios[i], j - i});
        i = j;
    }
    return reps;
}

EnergyReport energy(const IntegerSet& a, const IntegerSet& b,
                    unsigned workers) {
    require_nonempty(a, b, "energy");
    const auto reps = rep_counts_product(a, b, workers);
    unsigned __int128 e = 0;
    for (const auto& rep : reps)
        e += static_cast<unsigned __int128>(rep.count) * rep.count;
    if (e > std::numeric_limits<std::uint64_t>::max())
        throw capacity_error("energy exceeds 64-bit range");
    EnergyReport report;
    report.energy = static_cast<std::uint64_t>(e);
    report.pair_count = a.size() * b.size();
    report.collision_factor =
        static_cast<double>(report.energy) / static_cast<double>(report.pair_count);
    report.eta = eta_from(std::max(a.ambient_bound(), b.ambient_bound()),
                          std::log(report.collision_factor));
    return report;
}

ShnirelmanCheck shnirelman_bounds(const IntegerSet& a, const IntegerSet& b,
                                  unsigned workers) {
    require_nonempty(a, b, "shnirelman_bounds");
    ShnirelmanCheck check;
    const EnergyReport e = energy(a, b, workers);
    check.energy = e.energy;
    check.product_size = product_set(a, b, workers).size();
    check.quotient_size = quotient_set(a, b, workers).size();
    const unsigned __int128 numerator =
        static_cast<unsigned __int128>(a.size()) * a.size() *
        static_cast<unsigned __int128>(b.size()) * b.size();
    check.lower_bound = static_cast<double>(numerator) /
                        static_cast<double>(e.energy);
    check.product_ok =
        static_cast<unsigned __int128>(check.product_size) * e.energy >=
        numerator;
    check.quotient_ok =
        static_cast<unsigned __int128>(check.quotient_size) * e.energy >=
        numerator;
    return check;
}

} // namespace quotlab
