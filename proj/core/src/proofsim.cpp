#include "quotlab/proofsim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace quotlab {
namespace {

using u128 = unsigned __int128;

// Smallest i >= 0 with r <= 2^i L, given r > L/2; band membership in exact
// integer arithmetic: r * pairs <= 2^i * energy.
int band_index(std::uint64_t rep, std::uint64_t pairs, std::uint64_t energy) {
    const u128 lhs = static_cast<u128>(rep) * pairs;
    u128 rhs = energy;
    int i = 0;
    while (lhs > rhs) {
        rhs <<= 1;
        ++i;
    }
    return i;
}

std::optional<double> scaled_exponent(std::uint64_t q, double ln_value) {
    if (q < 16) return std::nullopt;
    const double lq = std::log(static_cast<double>(q));
    return ln_value * std::log(lq) / lq;
}

// l(a*b) from the two factorizations: merge exponents, halve, multiply out.
std::uint64_t square_part_root_of_product(const Factorization& fa,
                                          const Factorization& fb) {
    std::uint64_t l = 1;
    std::size_t ia = 0, ib = 0;
    const auto& xs = fa.factors();
    const auto& ys = fb.factors();
    while (ia < xs.size() || ib < ys.size()) {
        std::uint64_t prime;
        std::uint32_t exponent;
        if (ib == ys.size() || (ia < xs.size() && xs[ia].prime < ys[ib].prime)) {
            prime = xs[ia].prime;
            exponent = xs[ia].exponent;
            ++ia;
        } else if (ia == xs.size() || ys[ib].prime < xs[ia].prime) {
            prime = ys[ib].prime;
            exponent = ys[ib].exponent;
            ++ib;
        } else {
            prime = xs[ia].prime;
            exponent = xs[ia].exponent + ys[ib].exponent;
            ++ia;
            ++ib;
        }
        for (std::uint32_t i = 0; i < exponent / 2; ++i) l *= prime;
    }
    return l;
}

} // namespace

LevelSetDecomposition level_sets(const IntegerSet& a, const IntegerSet& b,
                                 unsigned workers) {
    if (a.empty() || b.empty())
        throw std::domain_error("level_sets: sets must be nonempty");
    LevelSetDecomposition dec;
    dec.reps = rep_counts_product(a, b, workers);
    dec.pair_count = a.size() * b.size();
    u128 e = 0;
    for (const auto& rep : dec.reps)
        e += static_cast<u128>(rep.count) * rep.count;
    if (e > std::numeric_limits<std::uint64_t>::max())
        throw capacity_error("level_sets: energy exceeds 64-bit range");
    dec.energy = static_cast<std::uint64_t>(e);
    dec.collision_factor = static_cast<double>(dec.energy) /
                           static_cast<double>(dec.pair_count);

    std::unordered_map<int, std::size_t> slot_of_index;
    for (const auto& rep : dec.reps) {
        // r <= L/2 exactly when 2 r |A||B| <= E.
        if (static_cast<u128>(2) * rep.count * dec.pair_count <= dec.energy) {
            dec.light_products.push_back(rep.product);
            dec.light_rep_sum += rep.count;
            dec.light_rep_square_sum += rep.count * rep.count;
            continue;
        }
        const int idx = band_index(rep.count, dec.pair_count, dec.energy);
        auto [it, inserted] = slot_of_index.try_emplace(idx, dec.levels.size());
        if (inserted) {
            dec.levels.emplace_back();
            dec.levels.back().index = idx;
        }
        LevelGroup& group = dec.levels[it->second];
        group.members.push_back(rep.product);
        group.rep_sum += rep.count;
        group.rep_square_sum += rep.count * rep.count;
        group.max_rep = std::max(group.max_rep, rep.count);
    }
    std::sort(dec.levels.begin(), dec.levels.end(),
              [](const LevelGroup& x, const LevelGroup& y) {
                  return x.index < y.index;
              });

    dec.chosen_index = 0;
    std::uint64_t best = 0;
    for (const auto& group : dec.levels) {
        if (group.rep_square_sum > best) {
            best = group.rep_square_sum;
            dec.chosen_index = group.index;
        }
    }

    const std::uint64_t q = std::max(a.ambient_bound(), b.ambient_bound());
    const double ln_band_top = dec.chosen_index * std::log(2.0) +
                               std::log(dec.collision_factor);
    if (const auto scaled = scaled_exponent(q, ln_band_top))
        dec.c_prime = 2.0 * std::log(2.0) - *scaled;
    return dec;
}

std::vector<ProductPair> dominant_pairs(const IntegerSet& a,
                                        const IntegerSet& b,
                                        const LevelSetDecomposition& dec) {
    if (dec.pair_count != a.size() * b.size())
        throw std::domain_error(
            "dominant_pairs: decomposition does not match the sets");
    const LevelGroup* chosen = nullptr;
    for (const auto& group : dec.levels)
        if (group.index == dec.chosen_index) chosen = &group;
    if (chosen == nullptr)
        throw std::domain_error("dominant_pairs: chosen band not found");
    std::vector<ProductPair> pairs;
    pairs.reserve(chosen->rep_sum);
    for (const std::uint64_t av : a.elements())
        for (const std::uint64_t bv : b.elements())
            if (std::binary_search(chosen->members.begin(),
                                   chosen->members.end(), av * bv))
                pairs.emplace_back(av, bv);
    return pairs;
}

std::vector<ReducedFraction> ratio_set(std::span<const ProductPair> pairs) {
    std::vector<ReducedFraction> ratios;
    ratios.reserve(pairs.size());
    for (const auto& [a, b] : pairs) ratios.emplace_back(a, b);
    std::sort(ratios.begin(), ratios.end());
    ratios.erase(std::unique(ratios.begin(), ratios.end()), ratios.end());
    return ratios;
}

std::uint64_t ratio_collisions(std::span<const ProductPair> pairs) {
    std::uint64_t sigma = 0;
    for (const auto& rep : rep_counts_quotient(pairs))
        sigma += rep.count * rep.count;
    return sigma;
}

std::uint64_t ratio_collisions_parametrized(std::span<const ProductPair> pairs) {
    if (pairs.empty())
        throw std::domain_error("ratio_collisions_parametrized: empty G");
    // a = t u, b = t v with t = gcd(a, b), gcd(u, v) = 1; pairs sharing the
    // key (u, v) are exactly the pairs with equal ratio.
    std::unordered_map<std::uint64_t, std::unordered_map<std::uint64_t, std::uint64_t>>
        counts;
    counts.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        const std::uint64_t t = std::gcd(a, b);
        ++counts[a / t][b / t];
    }
    std::uint64_t sigma = 0;
    for (const auto& [u, row] : counts)
        for (const auto& [v, c] : row) sigma += c * c;
    return sigma;
}

bool ProofAuditReport::all_pass() const {
    return step_m1.pass && step_pigeonhole.pass && step_g_size.pass &&
           step_gcd.pass && step_cauchy.pass && step_parametrization.pass &&
           step_final.pass;
}

ProofAuditReport audit(const IntegerSet& a, const IntegerSet& b,
                       const FactorSieve& sieve, unsigned workers) {
    if (a.empty() || b.empty())
        throw std::domain_error("audit: sets must be nonempty");
    ProofAuditReport report;
    report.size_a = a.size();
    report.size_b = b.size();

    const LevelSetDecomposition dec = level_sets(a, b, workers);
    report.energy = dec.energy;
    report.collision_factor = dec.collision_factor;
    report.chosen_index = dec.chosen_index;
    report.level_count = dec.levels.size();
    report.c_prime = dec.c_prime;
    report.product_set_size = dec.reps.size();

    const auto quotients = quotient_set(a, b, workers);
    report.quotient_set_size = quotients.size();

    const std::uint64_t q = std::max(a.ambient_bound(), b.ambient_bound());
    if (const auto eta = scaled_exponent(q, std::log(dec.collision_factor))) {
        report.eta_energy = *eta;
        report.c = 2.0 * std::log(2.0) - *eta;
    }
    report.eta_quotient = scaled_exponent(
        q, std::log(static_cast<double>(report.quotient_set_size) /
                    static_cast<double>(dec.pair_count)));

    // Step: sum_{M1} r^2 <= |A||B| L / 2 = E / 2, i.e. 2 * sum <= E.
    report.step_m1.lhs = static_cast<double>(dec.light_rep_square_sum);
    report.step_m1.rhs = static_cast<double>(dec.energy) / 2.0;
    report.step_m1.pass =
        static_cast<u128>(2) * dec.light_rep_square_sum <= dec.energy;

    // Step: the chosen band carries at least its pigeonhole share of the
    // heavy mass.
    std::uint64_t heavy_square_sum = 0;
    const LevelGroup* chosen = nullptr;
    for (const auto& group : dec.levels) {
        heavy_square_sum += group.rep_square_sum;
        if (group.index == dec.chosen_index) chosen = &group;
    }
    report.step_pigeonhole.lhs =
        chosen ? static_cast<double>(chosen->rep_square_sum) : 0.0;
    report.step_pigeonhole.rhs =
        dec.levels.empty()
            ? 0.0
            : static_cast<double>(heavy_square_sum) /
                  static_cast<double>(dec.levels.size());
    report.step_pigeonhole.pass =
        chosen != nullptr &&
        static_cast<u128>(chosen->rep_square_sum) * dec.levels.size() >=
            heavy_square_sum;

    const auto pair_group = dominant_pairs(a, b, dec);
    report.pair_group_size = pair_group.size();

    // Step: |G| equals the band's representation sum.
    report.step_g_size.lhs = static_cast<double>(pair_group.size());
    report.step_g_size.rhs = chosen ? static_cast<double>(chosen->rep_sum) : 0.0;
    report.step_g_size.pass =
        chosen != nullptr && pair_group.size() == chosen->rep_sum;

    // Step: gcd(a1, b1) <= l(a1 b1) for every pair. l(ab) is assembled from
    // the factorizations of a and b, so ab itself never needs the sieve.
    report.step_gcd.pass = true;
    bool first_pair = true;
    std::int64_t worst_margin = 0;
    for (const auto& [av, bv] : pair_group) {
        const std::uint64_t g = std::gcd(av, bv);
        const std::uint64_t l =
            square_part_root_of_product(sieve.factorize(av), sieve.factorize(bv));
        if (g > l) report.step_gcd.pass = false;
        const std::int64_t margin =
            static_cast<std::int64_t>(l) - static_cast<std::int64_t>(g);
        if (first_pair || margin < worst_margin) {
            first_pair = false;
            worst_margin = margin;
            report.tightest_gcd = g;
            report.tightest_gcd_bound = l;
        }
    }
    report.step_gcd.lhs = static_cast<double>(report.tightest_gcd);
    report.step_gcd.rhs = static_cast<double>(report.tightest_gcd_bound);

    const auto ratios = ratio_set(pair_group);
    report.ratio_set_size = ratios.size();
    report.sigma_value = ratio_collisions(pair_group);

    // Step: Cauchy-Schwarz, |G|^2 <= |W| sigma.
    report.step_cauchy.lhs = static_cast<double>(pair_group.size()) *
                             static_cast<double>(pair_group.size());
    report.step_cauchy.rhs = static_cast<double>(ratios.size()) *
                             static_cast<double>(report.sigma_value);
    report.step_cauchy.pass =
        static_cast<u128>(pair_group.size()) * pair_group.size() <=
        static_cast<u128>(ratios.size()) * report.sigma_value;

    // Step: the (t, u, v, s) route reproduces sigma exactly.
    const std::uint64_t sigma_param = ratio_collisions_parametrized(pair_group);
    report.step_parametrization.lhs = static_cast<double>(sigma_param);
    report.step_parametrization.rhs = static_cast<double>(report.sigma_value);
    report.step_parametrization.pass = sigma_param == report.sigma_value;

    // Step: |A/B| >= |W| >= |G|^2 / sigma.
    report.step_final.lhs = static_cast<double>(report.quotient_set_size);
    report.step_final.rhs =
        static_cast<double>(report.step_cauchy.lhs) /
        static_cast<double>(report.sigma_value);
    report.step_final.pass =
        report.quotient_set_size >= ratios.size() &&
        static_cast<u128>(ratios.size()) * report.sigma_value >=
            static_cast<u128>(pair_group.size()) * pair_group.size();

    return report;
}

} // namespace quotlab
