#include "quotlab/extremal.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "quotlab/arith.hpp"
#include "quotlab/setops.hpp"

namespace quotlab {
namespace {

std::vector<std::uint64_t> primorial_divisors(unsigned k, std::uint64_t q) {
    // Subset products of the first k primes, pruned at q; pruning keeps
    // every intermediate product within 64 bits.
    std::vector<std::uint64_t> out{1};
    for (unsigned i = 1; i <= k; ++i) {
        const std::uint64_t p = nth_prime(i);
        if (p > q) break;
        const std::size_t base = out.size();
        for (std::size_t j = 0; j < base; ++j) {
            if (out[j] > q / p) continue;
            out.push_back(out[j] * p);
        }
    }
    return out;
}

} // namespace

IntegerSet generate(const SetRecipe& recipe) {
    if (recipe.q < 1)
        throw std::domain_error("generate: recipe needs Q >= 1");
    switch (recipe.kind) {
        case RecipeKind::Smooth: {
            if (recipe.smooth_y < 2)
                throw std::domain_error("generate: smooth recipe needs y >= 2");
            return smooth_numbers(recipe.q, recipe.smooth_y);
        }
        case RecipeKind::PrimorialDivisors: {
            if (recipe.primorial_k < 1)
                throw std::domain_error("generate: primorial recipe needs k >= 1");
            return IntegerSet(primorial_divisors(recipe.primorial_k, recipe.q),
                              recipe.q);
        }
        case RecipeKind::Interval:
            return IntegerSet::range(recipe.q);
        case RecipeKind::Geometric: {
            if (recipe.ratio < 2)
                throw std::domain_error("generate: geometric recipe needs ratio >= 2");
            std::vector<std::uint64_t> out;
            for (std::uint64_t v = 1;; v *= recipe.ratio) {
                out.push_back(v);
                if (v > recipe.q / recipe.ratio) break;
            }
            while (!out.empty() && out.back() > recipe.q) out.pop_back();
            return IntegerSet(std::move(out), recipe.q);
        }
        case RecipeKind::RandomSubset: {
            if (!(recipe.density > 0.0 && recipe.density <= 1.0))
                throw std::domain_error(
                    "generate: random recipe needs density in (0, 1]");
            std::mt19937_64 rng(recipe.seed);
            std::vector<std::uint64_t> out;
            for (std::uint64_t n = 1; n <= recipe.q; ++n) {
                // Explicit bit arithmetic; the standard distributions are
                // not pinned across implementations.
                const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                if (u < recipe.density) out.push_back(n);
            }
            return IntegerSet(std::move(out), recipe.q);
        }
    }
    throw std::domain_error("generate: unknown recipe kind");
}

std::string recipe_label(const SetRecipe& recipe) {
    switch (recipe.kind) {
        case RecipeKind::Smooth:
            return "smooth(y=" + std::to_string(recipe.smooth_y) + ")";
        case RecipeKind::PrimorialDivisors:
            return "primorial(k=" + std::to_string(recipe.primorial_k) + ")";
        case RecipeKind::Interval:
            return "interval";
        case RecipeKind::Geometric:
            return "geometric(r=" + std::to_string(recipe.ratio) + ")";
        case RecipeKind::RandomSubset: {
            char buf[64];
            std::snprintf(buf, sizeof buf, "random(d=%g)", recipe.density);
            return buf;
        }
    }
    return "unknown";
}

SetMeasurement measure(const IntegerSet& a, unsigned workers) {
    if (a.size() < 2)
        throw std::domain_error("measure: requires |A| >= 2");
    if (a.ambient_bound() < 16)
        throw std::domain_error("measure: requires ambient bound >= 16");
    SetMeasurement m;
    m.set_size = a.size();
    m.product_size = product_set(a, a, workers).size();
    m.quotient_size = quotient_set(a, a, workers).size();
    m.energy = energy(a, a, workers).energy;

    const double lq = std::log(static_cast<double>(a.ambient_bound()));
    const double scale = std::log(lq) / lq;
    const double sz2 = static_cast<double>(m.set_size) *
                       static_cast<double>(m.set_size);
    m.eta_product = std::log(static_cast<double>(m.product_size) / sz2) * scale;
    m.eta_energy = std::log(static_cast<double>(m.energy) / sz2) * scale;
    m.eta_quotient =
        std::log(static_cast<double>(m.quotient_size) / sz2) * scale;
    m.corollary_gap = m.eta_quotient + m.eta_energy - 2.0 * std::log(2.0);
    return m;
}

} // namespace quotlab
