// quotlab: exact product/quotient set experiments from the command line.
//
// Subcommands: stats, verify-lemmas, audit, gamma, extremal. JSON (or CSV)
// goes to stdout; diagnostics go to stderr. Exit status is 0 exactly when
// every assertion-level check passed.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quotlab/arith.hpp"
#include "quotlab/extremal.hpp"
#include "quotlab/gamma.hpp"
#include "quotlab/io.hpp"
#include "quotlab/lemmas.hpp"
#include "quotlab/parallel.hpp"
#include "quotlab/proofsim.hpp"
#include "quotlab/setops.hpp"

namespace {

using namespace quotlab;

struct CommonOptions {
    std::string input;
    std::string input_b;
    std::uint64_t q_override = 0;
    std::uint64_t sieve_limit = 0;
    std::string format = "json";
    std::uint64_t seed = 1;
    double tol = 1e-9;
    unsigned parallel = 1;
};

std::optional<std::uint64_t> maybe(std::uint64_t v) {
    if (v == 0) return std::nullopt;
    return v;
}

struct LoadedSets {
    IntegerSet a;
    IntegerSet b;
};

LoadedSets load_sets(const CommonOptions& opt) {
    IntegerSet a = read_integer_set(opt.input, maybe(opt.q_override));
    if (opt.input_b.empty()) return {a, a};
    IntegerSet b = read_integer_set(opt.input_b, maybe(opt.q_override));
    return {std::move(a), std::move(b)};
}

int run_stats(const CommonOptions& opt) {
    const LoadedSets sets = load_sets(opt);
    const EnergyReport e = energy(sets.a, sets.b, opt.parallel);
    const ShnirelmanCheck check =
        shnirelman_bounds(sets.a, sets.b, opt.parallel);
    if (opt.format == "csv") {
        std::cout << "size_a,size_b,product_set_size,quotient_set_size,energy,"
                     "collision_factor,eta,shnirelman_lower,product_ok,"
                     "quotient_ok\n";
        std::cout << sets.a.size() << ',' << sets.b.size() << ','
                  << check.product_size << ',' << check.quotient_size << ','
                  << e.energy << ',' << format_real(e.collision_factor) << ','
                  << (e.eta ? format_real(*e.eta) : "") << ','
                  << format_real(check.lower_bound) << ','
                  << (check.product_ok ? "true" : "false") << ','
                  << (check.quotient_ok ? "true" : "false") << '\n';
    } else {
        JsonWriter w(std::cout);
        w.begin_object();
        w.field("size_a", static_cast<std::uint64_t>(sets.a.size()));
        w.field("size_b", static_cast<std::uint64_t>(sets.b.size()));
        w.field("product_set_size", check.product_size);
        w.field("quotient_set_size", check.quotient_size);
        w.field("energy", e.energy);
        w.field("collision_factor", e.collision_factor);
        if (e.eta)
            w.field("eta", *e.eta);
        else
            w.null_field("eta");
        w.field("shnirelman_lower", check.lower_bound);
        w.field("product_ok", check.product_ok);
        w.field("quotient_ok", check.quotient_ok);
        w.end_object();
        w.finish();
    }
    return check.product_ok && check.quotient_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify-lemmas

struct Counterexample {
    std::uint64_t a = 0; // n, or first operand
    std::uint64_t b = 0; // z / second operand when applicable
    double lhs = 0;
    double rhs = 0;
};

struct SuiteResult {
    std::string lemma;
    std::string range;
    std::uint64_t checked = 0;
    std::vector<Counterexample> counterexamples;
    // The tightest case seen: smallest rhs - lhs margin.
    Counterexample tightest;
    bool has_tightest = false;
};

void note_case(SuiteResult& suite, std::uint64_t a, std::uint64_t b,
               double lhs, double rhs, bool ok) {
    ++suite.checked;
    if (!ok && suite.counterexamples.size() < 20)
        suite.counterexamples.push_back({a, b, lhs, rhs});
    if (!suite.has_tightest || rhs - lhs < suite.tightest.rhs - suite.tightest.lhs) {
        suite.tightest = {a, b, lhs, rhs};
        suite.has_tightest = true;
    }
}

void merge_chunks(SuiteResult& total, std::vector<SuiteResult>& chunks) {
    for (auto& part : chunks) {
        total.checked += part.checked;
        for (const auto& ce : part.counterexamples)
            if (total.counterexamples.size() < 20)
                total.counterexamples.push_back(ce);
        if (part.has_tightest &&
            (!total.has_tightest ||
             part.tightest.rhs - part.tightest.lhs <
                 total.tightest.rhs - total.tightest.lhs)) {
            total.tightest = part.tightest;
            total.has_tightest = true;
        }
    }
}

SuiteResult suite_tau_ratio(std::uint64_t max_n, const FactorSieve& sieve,
                            unsigned workers) {
    SuiteResult total{"tau_ratio", "2.." + std::to_string(max_n), 0, {}, {}, false};
    const auto chunks = split_range(max_n - 1, workers);
    std::vector<SuiteResult> parts(chunks.size());
    run_chunks(chunks.size(), workers, [&](std::size_t c) {
        for (std::size_t i = chunks[c].first; i < chunks[c].second; ++i) {
            const std::uint64_t n = 2 + i;
            const TauRatioCheck check = tau_ratio_check(n, sieve);
            const bool squarefree = mobius(sieve, n) != 0;
            const bool ok = check.ok && (check.equality == squarefree);
            note_case(parts[c], n, 0, check.ratio, std::log(3.0) / std::log(2.0),
                      ok);
        }
    });
    merge_chunks(total, parts);
    return total;
}

SuiteResult suite_gcd_square_part(std::uint64_t max_ab,
                                  const FactorSieve& sieve, unsigned workers) {
    SuiteResult total{"gcd_square_part", "a,b<=" + std::to_string(max_ab), 0,
                      {}, {}, false};
    const auto chunks = split_range(max_ab, workers);
    std::vector<SuiteResult> parts(chunks.size());
    run_chunks(chunks.size(), workers, [&](std::size_t c) {
        for (std::size_t i = chunks[c].first; i < chunks[c].second; ++i) {
            const std::uint64_t a = 1 + i;
            for (std::uint64_t b = 1; b <= max_ab; ++b) {
                const std::uint64_t g = std::gcd(a, b);
                const std::uint64_t l = square_part_root(sieve, a * b);
                note_case(parts[c], a, b, static_cast<double>(g),
                          static_cast<double>(l), g <= l);
            }
        }
    });
    merge_chunks(total, parts);
    return total;
}

SuiteResult suite_radical_chain(std::uint64_t max_n, double eps,
                                const FactorSieve& sieve, unsigned workers) {
    std::ostringstream label;
    label << "n<=" << max_n << ",eps=" << eps;
    SuiteResult total{"radical_chain", label.str(), 0, {}, {}, false};
    const std::uint64_t q = max_n;
    const auto chunks = split_range(max_n, workers);
    std::vector<SuiteResult> parts(chunks.size());
    run_chunks(chunks.size(), workers, [&](std::size_t c) {
        for (std::size_t i = chunks[c].first; i < chunks[c].second; ++i) {
            const std::uint64_t n = 1 + i;
            const RadicalDecomposition dec =
                decompose_radical_chain(n, eps, q, sieve);
            std::uint64_t rebuilt = dec.tail;
            bool ok = true;
            std::uint64_t previous = 0;
            for (const std::uint64_t part : dec.parts) {
                rebuilt *= part;
                if (mobius(sieve, part) == 0) ok = false;
                if (!(static_cast<double>(part) > dec.threshold)) ok = false;
                if (previous != 0 && previous % part != 0) ok = false;
                previous = part;
            }
            if (rebuilt != n) ok = false;
            const std::uint64_t tail_radical = radical(sieve, dec.tail);
            if (!(static_cast<double>(tail_radical) <= dec.threshold)) ok = false;
            note_case(parts[c], n, 0, static_cast<double>(rebuilt),
                      static_cast<double>(n), ok);
        }
    });
    merge_chunks(total, parts);
    return total;
}

SuiteResult suite_squarefree_tau(std::uint64_t max_n, std::uint64_t z,
                                 const FactorSieve& sieve, unsigned workers) {
    std::ostringstream label;
    label << "squarefree n<=" << max_n << ",z=" << z;
    SuiteResult total{"squarefree_tau", label.str(), 0, {}, {}, false};
    const auto chunks = split_range(max_n, workers);
    std::vector<SuiteResult> parts(chunks.size());
    run_chunks(chunks.size(), workers, [&](std::size_t c) {
        for (std::size_t i = chunks[c].first; i < chunks[c].second; ++i) {
            const std::uint64_t n = 1 + i;
            if (mobius(sieve, n) == 0) continue;
            const SquarefreeTauCheck check =
                tau_le_squarefree_surrogate(n, z, sieve);
            note_case(parts[c], n, z, static_cast<double>(check.lhs),
                      static_cast<double>(check.rhs), check.ok);
        }
    });
    merge_chunks(total, parts);
    return total;
}

SuiteResult suite_binomial_product(std::uint64_t trials, std::uint64_t seed) {
    SuiteResult total{"binomial_product", std::to_string(trials) + " tuples",
                      0, {}, {}, false};
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::vector<std::uint32_t> m(5), k(5);
        for (std::size_t i = 0; i < m.size(); ++i) {
            m[i] = static_cast<std::uint32_t>(rng() % 40) + 1;
            k[i] = static_cast<std::uint32_t>(rng() % (m[i] + 1));
        }
        const BinomialProductCheck check = binomial_product_bound(m, k);
        note_case(total, t, 0, check.lhs_ln, check.rhs_ln, check.ok);
    }
    return total;
}

SuiteResult suite_tau_submultiplicative(std::uint64_t max_n,
                                        const FactorSieve& sieve,
                                        unsigned workers) {
    SuiteResult total{"tau_submultiplicative", "n<=" + std::to_string(max_n),
                      0, {}, {}, false};
    const auto chunks = split_range(max_n, workers);
    std::vector<SuiteResult> parts(chunks.size());
    run_chunks(chunks.size(), workers, [&](std::size_t c) {
        for (std::size_t i = chunks[c].first; i < chunks[c].second; ++i) {
            const std::uint64_t n = 1 + i;
            for (const std::uint64_t a : sieve.factorize(n).divisors()) {
                const std::uint64_t b = n / a;
                const bool ok = tau_submultiplicative_check(n, a, b, sieve);
                note_case(parts[c], n, a, static_cast<double>(tau(sieve, n)),
                          static_cast<double>(tau(sieve, a) * tau(sieve, b)),
                          ok);
            }
        }
    });
    merge_chunks(total, parts);
    return total;
}

SuiteResult suite_small_radical(std::uint64_t max_n, const FactorSieve& sieve,
                                unsigned workers) {
    SuiteResult total{"small_radical",
                      "n<=" + std::to_string(max_n) + ",Q=" +
                          std::to_string(max_n),
                      0, {}, {}, false};
    const auto chunks = split_range(max_n, workers);
    std::vector<SuiteResult> parts(chunks.size());
    run_chunks(chunks.size(), workers, [&](std::size_t c) {
        for (std::size_t i = chunks[c].first; i < chunks[c].second; ++i) {
            const std::uint64_t n = 1 + i;
            const SmallRadicalCheck check =
                verify_small_radical(n, max_n, sieve);
            note_case(parts[c], n, 0, static_cast<double>(check.tau_value),
                      static_cast<double>(check.psi_bound), check.ok);
        }
    });
    merge_chunks(total, parts);
    return total;
}

void write_suite(JsonWriter& w, const SuiteResult& suite) {
    w.begin_object_element();
    w.field("lemma", suite.lemma);
    w.field("range", suite.range);
    w.field("checked", suite.checked);
    w.begin_array("counterexamples");
    for (const auto& ce : suite.counterexamples) {
        w.begin_object_element();
        w.field("a", ce.a);
        w.field("b", ce.b);
        w.field("lhs", ce.lhs);
        w.field("rhs", ce.rhs);
        w.end_object();
    }
    w.end_array();
    if (suite.has_tightest) {
        w.begin_array("tightest");
        w.begin_object_element();
        w.field("a", suite.tightest.a);
        w.field("b", suite.tightest.b);
        w.field("lhs", suite.tightest.lhs);
        w.field("rhs", suite.tightest.rhs);
        w.end_object();
        w.end_array();
    }
    w.end_object();
}

int run_verify_lemmas(std::uint64_t max_n, const CommonOptions& opt) {
    const std::uint64_t small_range = std::min<std::uint64_t>(max_n, 10'000);
    const FactorSieve sieve(std::max<std::uint64_t>(
        opt.sieve_limit, std::max<std::uint64_t>(max_n, 300 * 300)));
    std::vector<SuiteResult> suites;
    suites.push_back(suite_tau_ratio(max_n, sieve, opt.parallel));
    suites.push_back(suite_gcd_square_part(300, sieve, opt.parallel));
    suites.push_back(suite_radical_chain(small_range, 0.1, sieve, opt.parallel));
    suites.push_back(suite_radical_chain(small_range, 0.3, sieve, opt.parallel));
    for (const std::uint64_t z : {2ull, 10ull, 100ull})
        suites.push_back(suite_squarefree_tau(max_n, z, sieve, opt.parallel));
    suites.push_back(suite_binomial_product(1000, opt.seed));
    suites.push_back(
        suite_tau_submultiplicative(small_range, sieve, opt.parallel));
    suites.push_back(suite_small_radical(small_range, sieve, opt.parallel));

    std::uint64_t failures = 0;
    for (const auto& suite : suites) failures += suite.counterexamples.size();

    JsonWriter w(std::cout);
    w.begin_object();
    w.field("max_n", max_n);
    w.field("seed", opt.seed);
    w.begin_array("suites");
    for (const auto& suite : suites) write_suite(w, suite);
    w.end_array();
    w.field("total_counterexamples", failures);
    w.end_object();
    w.finish();
    return failures == 0 ? 0 : 1;
}

SetRecipe build_recipe(const std::string& name, const CommonOptions& opt,
                       std::uint64_t y, unsigned k, std::uint64_t ratio,
                       double density) {
    SetRecipe recipe;
    recipe.q = opt.q_override ? opt.q_override : 1000;
    recipe.smooth_y = y;
    recipe.primorial_k = k;
    recipe.ratio = ratio;
    recipe.density = density;
    recipe.seed = opt.seed;
    if (name == "smooth")
        recipe.kind = RecipeKind::Smooth;
    else if (name == "primorial")
        recipe.kind = RecipeKind::PrimorialDivisors;
    else if (name == "interval")
        recipe.kind = RecipeKind::Interval;
    else if (name == "geometric")
        recipe.kind = RecipeKind::Geometric;
    else if (name == "random")
        recipe.kind = RecipeKind::RandomSubset;
    else
        throw std::runtime_error("unknown recipe: " + name);
    return recipe;
}

int run_audit(const CommonOptions& opt, const std::string& recipe_name,
              std::uint64_t y, unsigned k, std::uint64_t ratio,
              double density) {
    LoadedSets sets =
        !recipe_name.empty()
            ? [&] {
                  if (!opt.input.empty())
                      throw std::runtime_error(
                          "audit takes --input or --recipe, not both");
                  const IntegerSet generated = generate(
                      build_recipe(recipe_name, opt, y, k, ratio, density));
                  return LoadedSets{generated, generated};
              }()
            : load_sets(opt);
    std::uint64_t needed = 1;
    for (const auto v : sets.a.elements()) needed = std::max(needed, v);
    for (const auto v : sets.b.elements()) needed = std::max(needed, v);
    needed = std::max<std::uint64_t>(needed, 2);
    if (opt.sieve_limit != 0 && opt.sieve_limit < needed)
        throw std::runtime_error("--sieve-limit below the largest element");
    const FactorSieve sieve(opt.sieve_limit ? opt.sieve_limit : needed);
    const ProofAuditReport report = audit(sets.a, sets.b, sieve, opt.parallel);
    if (opt.format == "csv")
        std::cout << audit_report_csv_header() << '\n'
                  << audit_report_csv_row(report) << '\n';
    else
        std::cout << audit_report_json(report);
    return report.all_pass() ? 0 : 1;
}

int run_gamma(const CommonOptions& opt) {
    const GammaSolution solution = solve_gamma(opt.tol);
    const double reference_residual = crossing_g(0.098);
    std::cout << gamma_solution_json(solution, reference_residual);
    std::cerr << "crossing root c* = " << format_real(solution.root)
              << "; any gamma <= c* is admissible, and gamma = 0.098 "
              << (reference_residual < 0.0 ? "is" : "is NOT") << " admissible\n";
    return 0;
}

int run_extremal(const std::vector<std::string>& recipe_names,
                 const CommonOptions& opt, std::uint64_t y, unsigned k,
                 std::uint64_t ratio, double density) {
    std::vector<SetRecipe> recipes;
    for (const std::string& name : recipe_names)
        recipes.push_back(build_recipe(name, opt, y, k, ratio, density));
    if (opt.format == "json") {
        JsonWriter w(std::cout);
        w.begin_object();
        w.begin_array("sets");
        for (const auto& recipe : recipes) {
            const IntegerSet set = generate(recipe);
            const SetMeasurement m = measure(set, opt.parallel);
            w.begin_object_element();
            w.field("recipe", recipe_label(recipe));
            w.field("Q", recipe.q);
            w.field("seed", recipe.seed);
            w.field("size", m.set_size);
            w.field("product_size", m.product_size);
            w.field("quotient_size", m.quotient_size);
            w.field("energy", m.energy);
            w.field("eta_product", m.eta_product);
            w.field("eta_energy", m.eta_energy);
            w.field("eta_quotient", m.eta_quotient);
            w.field("corollary_gap", m.corollary_gap);
            w.end_object();
        }
        w.end_array();
        w.end_object();
        w.finish();
    } else {
        std::cout << measurement_csv_header() << '\n';
        for (const auto& recipe : recipes) {
            const IntegerSet set = generate(recipe);
            const SetMeasurement m = measure(set, opt.parallel);
            std::cout << measurement_csv_row(recipe_label(recipe), recipe.q,
                                             recipe.seed, m)
                      << '\n';
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact experiments on product sets, quotient sets and "
                 "multiplicative energy"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::uint64_t max_n = 100'000;
    std::vector<std::string> recipe_names;
    std::uint64_t recipe_y = 5;
    unsigned recipe_k = 3;
    std::uint64_t recipe_ratio = 2;
    double recipe_density = 0.5;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        auto* input = cmd->add_option("--input", opt.input,
                                      "set A: one integer per line, or a "
                                      "JSON array");
        if (needs_input) input->required();
        cmd->add_option("--input-b", opt.input_b,
                        "set B (defaults to A when omitted)");
        cmd->add_option("--Q", opt.q_override,
                        "ambient bound override (default: max element)");
        cmd->add_option("--sieve-limit", opt.sieve_limit,
                        "smallest-prime-factor table size");
        cmd->add_option("--format", opt.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--seed", opt.seed, "seed for randomized suites");
        cmd->add_option("--tol", opt.tol, "root-finder tolerance");
        cmd->add_option("--parallel", opt.parallel, "worker threads");
    };

    CLI::App* stats = app.add_subcommand(
        "stats", "sizes, energy and the Shnirel'man bound for one pair");
    add_common(stats, true);

    CLI::App* verify = app.add_subcommand(
        "verify-lemmas", "exhaustive lemma surrogates; lists counterexamples");
    add_common(verify, false);
    verify->add_option("--max-n", max_n, "upper end of the exhaustive ranges");

    std::string audit_recipe;
    CLI::App* audit_cmd = app.add_subcommand(
        "audit", "exact step-by-step audit of the lower-bound pipeline");
    add_common(audit_cmd, false);
    audit_cmd->add_option(
        "--recipe", audit_recipe,
        "audit a generated set instead of a file (see extremal)");
    audit_cmd->add_option("--y", recipe_y, "smoothness bound");
    audit_cmd->add_option("--k", recipe_k, "number of primorial primes");
    audit_cmd->add_option("--ratio", recipe_ratio, "geometric ratio");
    audit_cmd->add_option("--density", recipe_density, "random density");

    CLI::App* gamma_cmd = app.add_subcommand(
        "gamma", "solve the crossing equation for the improvement constant");
    add_common(gamma_cmd, false);

    CLI::App* extremal_cmd = app.add_subcommand(
        "extremal", "generate structured sets and tabulate their exponents");
    add_common(extremal_cmd, false);
    extremal_cmd
        ->add_option("--recipe", recipe_names,
                     "smooth|primorial|interval|geometric|random (repeatable)")
        ->required();
    extremal_cmd->add_option("--y", recipe_y, "smoothness bound");
    extremal_cmd->add_option("--k", recipe_k, "number of primorial primes");
    extremal_cmd->add_option("--ratio", recipe_ratio, "geometric ratio");
    extremal_cmd->add_option("--density", recipe_density, "random density");

    CLI11_PARSE(app, argc, argv);

    try {
        if (stats->parsed()) return run_stats(opt);
        if (verify->parsed()) return run_verify_lemmas(max_n, opt);
        if (audit_cmd->parsed()) {
            if (opt.input.empty() && audit_recipe.empty())
                throw std::runtime_error("audit needs --input or --recipe");
            return run_audit(opt, audit_recipe, recipe_y, recipe_k,
                             recipe_ratio, recipe_density);
        }
        if (gamma_cmd->parsed()) return run_gamma(opt);
        if (extremal_cmd->parsed()) {
            if (extremal_cmd->count("--format") == 0) opt.format = "csv";
            return run_extremal(recipe_names, opt, recipe_y, recipe_k,
                                recipe_ratio, recipe_density);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
