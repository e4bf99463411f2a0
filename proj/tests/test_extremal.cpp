#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "quotlab/extremal.hpp"
#include "quotlab/setops.hpp"

using namespace quotlab;

TEST_CASE("smooth recipe") {
    SetRecipe recipe;
    recipe.kind = RecipeKind::Smooth;
    recipe.q = 100;
    recipe.smooth_y = 5;
    const auto set = generate(recipe);
    CHECK(set.size() == 34);
    CHECK(set.ambient_bound() == 100);
    CHECK(recipe_label(recipe) == "smooth(y=5)");
}

TEST_CASE("primorial divisors recipe") {
    SetRecipe recipe;
    recipe.kind = RecipeKind::PrimorialDivisors;
    recipe.q = 30;
    recipe.primorial_k = 3;
    const auto set = generate(recipe);
    CHECK(set.elements() ==
          std::vector<std::uint64_t>{1, 2, 3, 5, 6, 10, 15, 30});
    // Clipping: same primes, smaller window.
    recipe.q = 10;
    CHECK(generate(recipe).elements() ==
          std::vector<std::uint64_t>{1, 2, 3, 5, 6, 10});
}

TEST_CASE("interval and geometric recipes") {
    SetRecipe interval;
    interval.kind = RecipeKind::Interval;
    interval.q = 10;
    CHECK(generate(interval).elements() ==
          std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});

    SetRecipe geometric;
    geometric.kind = RecipeKind::Geometric;
    geometric.q = 100;
    geometric.ratio = 2;
    CHECK(generate(geometric).elements() ==
          std::vector<std::uint64_t>{1, 2, 4, 8, 16, 32, 64});
    geometric.ratio = 1;
    CHECK_THROWS_AS(generate(geometric), std::domain_error);
}

TEST_CASE("random recipe is seed-deterministic") {
    SetRecipe recipe;
    recipe.kind = RecipeKind::RandomSubset;
    recipe.q = 500;
    recipe.density = 0.3;
    recipe.seed = 42;
    const auto first = generate(recipe);
    const auto second = generate(recipe);
    CHECK(first.elements() == second.elements());
    for (const auto n : first.elements()) CHECK(n <= 500);

    recipe.seed = 43;
    CHECK(generate(recipe).elements() != first.elements());

    recipe.density = 0.0;
    CHECK_THROWS_AS(generate(recipe), std::domain_error);
}

TEST_CASE("measure on the interval is far from extremal") {
    const auto m = measure(IntegerSet::range(500));
    CHECK(m.set_size == 500);
    // Frozen by exhaustive enumeration.
    CHECK(m.energy == 1'768'544);
    CHECK(m.eta_energy == doctest::Approx(0.57514).epsilon(1e-3));
    CHECK(m.eta_energy < 2.0 * std::log(2.0) - 0.5);
    CHECK(m.eta_product <= 0.0);
    CHECK(m.eta_quotient <= 0.0);
    CHECK(m.eta_energy >= 0.0);
    CHECK(m.corollary_gap ==
          doctest::Approx(m.eta_quotient + m.eta_energy - 2.0 * std::log(2.0))
              .epsilon(1e-12));
}

TEST_CASE("primorial divisors beat a same-size interval on energy") {
    SetRecipe recipe;
    recipe.kind = RecipeKind::PrimorialDivisors;
    recipe.q = 30'030;
    recipe.primorial_k = 6;
    const auto divisors = generate(recipe);
    REQUIRE(divisors.size() == 64);
    const auto primorial_measure = measure(divisors);
    // Frozen by exhaustive enumeration: E = 6^6, |AA| = |A/A| = 3^6.
    CHECK(primorial_measure.energy == 46'656);
    CHECK(primorial_measure.product_size == 729);
    CHECK(primorial_measure.quotient_size == 729);
    CHECK(primorial_measure.eta_energy == doctest::Approx(0.55053).epsilon(1e-3));

    // An interval of the same cardinality inside the same ambient window.
    std::vector<std::uint64_t> v(64);
    for (std::uint64_t i = 0; i < 64; ++i) v[i] = i + 1;
    const auto interval_measure = measure(IntegerSet(std::move(v), 30'030));
    CHECK(interval_measure.eta_energy == doctest::Approx(0.34790).epsilon(1e-3));
    CHECK(primorial_measure.eta_energy > interval_measure.eta_energy);
}

TEST_CASE("quotient never falls below the energy bound") {
    SetRecipe recipe;
    recipe.kind = RecipeKind::Smooth;
    recipe.q = 200;
    recipe.smooth_y = 7;
    const auto set = generate(recipe);
    const auto m = measure(set);
    // |A/A| >= |A|^4 / E, Shnirel'man with B = A.
    const unsigned __int128 lhs =
        static_cast<unsigned __int128>(m.quotient_size) * m.energy;
    unsigned __int128 rhs = 1;
    for (int i = 0; i < 4; ++i) rhs *= m.set_size;
    CHECK(lhs >= rhs);
}

TEST_CASE("measure validates its domain") {
    CHECK_THROWS_AS(measure(IntegerSet({5}, 20)), std::domain_error);
    CHECK_THROWS_AS(measure(IntegerSet({1, 2}, 4)), std::domain_error);
}
