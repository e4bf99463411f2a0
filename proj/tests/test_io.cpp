#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "quotlab/io.hpp"

using namespace quotlab;

namespace {

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << contents;
    return path;
}

} // namespace

TEST_CASE("parse plain-text sets with comments and blanks") {
    const auto set = parse_integer_set("3\n1\n\n# comment\n8 5\n", std::nullopt);
    CHECK(set.elements() == std::vector<std::uint64_t>{1, 3, 5, 8});
    CHECK(set.ambient_bound() == 8); // inferred
    const auto bounded = parse_integer_set("3\n1\n", std::uint64_t{100});
    CHECK(bounded.ambient_bound() == 100);
}

TEST_CASE("parse JSON array sets") {
    const auto set = parse_integer_set("  [4, 1, 9]\n", std::nullopt);
    CHECK(set.elements() == std::vector<std::uint64_t>{1, 4, 9});
    CHECK_THROWS(parse_integer_set("[1, -2]", std::nullopt));
    CHECK_THROWS(parse_integer_set("{\"a\": 1}", std::nullopt));
}

TEST_CASE("parse rejects malformed text") {
    CHECK_THROWS(parse_integer_set("12x\n", std::nullopt));
    CHECK_THROWS(parse_integer_set("0\n", std::nullopt));      // not positive
    CHECK_THROWS(parse_integer_set("-3\n", std::nullopt));     // stoull wraps
    CHECK_THROWS(parse_integer_set("5\n", std::uint64_t{2}));  // above Q
    CHECK_THROWS(parse_integer_set("99999999999999999999999\n", std::nullopt));
}

TEST_CASE("read_integer_set round-trips through a file") {
    const auto path = write_temp("quotlab_io_test.txt", "2\n7\n3\n");
    const auto set = read_integer_set(path.string(), std::nullopt);
    CHECK(set.elements() == std::vector<std::uint64_t>{2, 3, 7});
    std::filesystem::remove(path);
    CHECK_THROWS(read_integer_set("/nonexistent/quotlab.txt", std::nullopt));
}

TEST_CASE("format_real pins 12 significant digits") {
    CHECK(format_real(0.1) == "0.1");
    CHECK(format_real(2.0) == "2");
    CHECK(format_real(0.6931471805599453) == "0.69314718056");
    CHECK(format_real(-1.2829364155221) == "-1.28293641552");
}

TEST_CASE("JsonWriter emits parseable ordered JSON") {
    std::ostringstream out;
    JsonWriter w(out);
    w.begin_object();
    w.field("alpha", std::uint64_t{3});
    w.field("beta", 0.5);
    w.field("name", "thing");
    w.begin_array("items");
    w.element(std::uint64_t{1});
    w.element(std::uint64_t{2});
    w.end_array();
    w.field("ok", true);
    w.end_object();
    w.finish();

    const auto text = out.str();
    CHECK(text.find("\"alpha\"") < text.find("\"beta\""));
    CHECK(text.find("\"beta\"") < text.find("\"items\""));
    const auto parsed = nlohmann::json::parse(text);
    CHECK(parsed["alpha"] == 3);
    CHECK(parsed["beta"] == 0.5);
    CHECK(parsed["items"].size() == 2);
    CHECK(parsed["ok"] == true);
}

TEST_CASE("audit report serialization is valid JSON with frozen keys") {
    const FactorSieve sieve(16);
    const IntegerSet four({1, 2, 3, 4}, 4);
    const auto report = audit(four, four, sieve);
    const auto text = audit_report_json(report);
    const auto parsed = nlohmann::json::parse(text);
    CHECK(parsed["pair_group_size"] == 10);
    CHECK(parsed["ratio_set_size"] == 8);
    CHECK(parsed["sigma"] == 14);
    CHECK(parsed["all_pass"] == true);
    CHECK(parsed["c"].is_null()); // Q < 16
    REQUIRE(parsed["steps"].size() == 7);
    CHECK(parsed["steps"][0]["step"] == "m1");
    CHECK(parsed["steps"][6]["step"] == "final");

    const auto csv = audit_report_csv_row(report);
    std::size_t commas = 0;
    for (const char c : csv) commas += c == ',';
    std::size_t header_commas = 0;
    for (const char c : audit_report_csv_header()) header_commas += c == ',';
    CHECK(commas == header_commas);
}

TEST_CASE("gamma solution serialization") {
    GammaSolution solution;
    solution.root = 0.0989672954675;
    solution.residual = 1e-10;
    solution.bracket_lo = 0.05;
    solution.bracket_hi = 0.15;
    solution.delta_at_root = 0.344;
    solution.iterations = 28;
    solution.guaranteed_exponent = -1.2873;
    const auto text = gamma_solution_json(solution, -0.0053);
    const auto parsed = nlohmann::json::parse(text);
    CHECK(parsed["reference_gamma_admissible"] == true);
    CHECK(parsed["bracket"].size() == 2);
    CHECK(parsed["root"].get<double>() == doctest::Approx(0.0989672954675));
}

TEST_CASE("measurement CSV row shape") {
    SetMeasurement m;
    m.set_size = 10;
    m.product_size = 40;
    m.quotient_size = 50;
    m.energy = 150;
    m.eta_product = -0.25;
    m.eta_energy = 0.5;
    m.eta_quotient = -0.125;
    m.corollary_gap = -1.0;
    const auto row = measurement_csv_row("interval", 100, 7, m);
    CHECK(row == "interval,100,7,10,40,50,150,-0.25,0.5,-0.125,-1");
    std::size_t commas = 0;
    for (const char c : row) commas += c == ',';
    std::size_t header_commas = 0;
    for (const char c : measurement_csv_header()) header_commas += c == ',';
    CHECK(commas == header_commas);
}
