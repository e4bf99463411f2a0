#include "quotlab/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace quotlab {
namespace {

IntegerSet from_values(std::vector<std::uint64_t> values,
                       std::optional<std::uint64_t> ambient_override) {
    if (ambient_override) return IntegerSet(std::move(values), *ambient_override);
    return IntegerSet::with_inferred_bound(std::move(values));
}

} // namespace

IntegerSet parse_integer_set(const std::string& text,
                             std::optional<std::uint64_t> ambient_override) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    std::vector<std::uint64_t> values;
    if (i < text.size() && text[i] == '[') {
        const auto parsed = nlohmann::json::parse(text);
        if (!parsed.is_array())
            throw std::runtime_error("set input: JSON payload is not an array");
        for (const auto& item : parsed) {
            if (!item.is_number_unsigned())
                throw std::runtime_error(
                    "set input: JSON array must hold positive integers");
            values.push_back(item.get<std::uint64_t>());
        }
        return from_values(std::move(values), ambient_override);
    }
    std::istringstream lines(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string token;
        while (fields >> token) {
            std::uint64_t value = 0;
            try {
                // stoull would wrap "-3" around instead of failing.
                if (token.find('-') != std::string::npos)
                    throw std::invalid_argument(token);
                std::size_t used = 0;
                value = std::stoull(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                throw std::runtime_error("set input: line " +
                                         std::to_string(line_no) +
                                         ": not a positive integer: " + token);
            }
            values.push_back(value);
        }
    }
    return from_values(std::move(values), ambient_override);
}

IntegerSet read_integer_set(const std::string& path,
                            std::optional<std::uint64_t> ambient_override) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_integer_set(buffer.str(), ambient_override);
}

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

void JsonWriter::comma_and_indent() {
    if (needs_comma_) out_ << ",";
    out_ << "\n";
    for (int i = 0; i < depth_; ++i) out_ << "  ";
}

std::string JsonWriter::quoted(std::string_view s) {
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

void JsonWriter::key_prefix(std::string_view key) {
    comma_and_indent();
    out_ << quoted(key) << ": ";
}

JsonWriter& JsonWriter::begin_object() {
    if (depth_ > 0) comma_and_indent();
    out_ << "{";
    ++depth_;
    needs_comma_ = false;
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    --depth_;
    out_ << "\n";
    for (int i = 0; i < depth_; ++i) out_ << "  ";
    out_ << "}";
    needs_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::begin_array(std::string_view key) {
    key_prefix(key);
    out_ << "[";
    ++depth_;
    needs_comma_ = false;
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    --depth_;
    out_ << "\n";
    for (int i = 0; i < depth_; ++i) out_ << "  ";
    out_ << "]";
    needs_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::field(std::string_view key, double value) {
    key_prefix(key);
    out_ << format_real(value);
    needs_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::field(std::string_view key, std::uint64_t value) {
    key_prefix(key);
    out_ << value;
    needs_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::field(std::string_view key, std::int64_t value) {
    key_prefix(key);
    out_ << value;
    needs_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::field(std::string_view key, int value) {
    return field(key, static_cast<std::int64_t>(value));
}

JsonWriter& JsonWriter::field(std::string_view key, bool value) {
    key_prefix(key);
    out_ << (value ? "true" : "false");
    needs_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::field(std::string_view key, std::string_view value) {
    key_prefix(key);
    out_ << quoted(value);
    needs_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::null_field(std::string_view key) {
    key_prefix(key);
    out_ << "null";
    needs_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::element(double value) {
    comma_and_indent();
    out_ << format_real(value);
    needs_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::element(std::uint64_t value) {
    comma_and_indent();
    out_ << value;
    needs_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::element(std::string_view value) {
    comma_and_indent();
    out_ << quoted(value);
    needs_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::begin_object_element() {
    comma_and_indent();
    out_ << "{";
    ++depth_;
    needs_comma_ = false;
    return *this;
}

void JsonWriter::finish() { out_ << "\n"; }

namespace {

void write_step(JsonWriter& w, const AuditStep& step) {
    w.field("lhs", step.lhs);
    w.field("rhs", step.rhs);
    w.field("pass", step.pass);
}

void optional_field(JsonWriter& w, std::string_view key,
                    const std::optional<double>& value) {
    if (value)
        w.field(key, *value);
    else
        w.null_field(key);
}

} // namespace

void write_audit_report(JsonWriter& w, const ProofAuditReport& report) {
    w.begin_object();
    w.field("size_a", report.size_a);
    w.field("size_b", report.size_b);
    w.field("product_set_size", report.product_set_size);
    w.field("quotient_set_size", report.quotient_set_size);
    w.field("pair_group_size", report.pair_group_size);
    w.field("ratio_set_size", report.ratio_set_size);
    w.field("sigma", report.sigma_value);
    w.field("energy", report.energy);
    w.field("collision_factor", report.collision_factor);
    w.field("chosen_level", report.chosen_index);
    w.field("level_count", static_cast<std::uint64_t>(report.level_count));
    optional_field(w, "c", report.c);
    optional_field(w, "c_prime", report.c_prime);
    optional_field(w, "eta_energy", report.eta_energy);
    optional_field(w, "eta_quotient", report.eta_quotient);
    const std::pair<const char*, const AuditStep*> steps[] = {
        {"m1", &report.step_m1},
        {"pigeonhole", &report.step_pigeonhole},
        {"g_size", &report.step_g_size},
        {"gcd", &report.step_gcd},
        {"cauchy", &report.step_cauchy},
        {"parametrization", &report.step_parametrization},
        {"final", &report.step_final},
    };
    w.begin_array("steps");
    for (const auto& [name, step] : steps) {
        w.begin_object_element();
        w.field("step", name);
        write_step(w, *step);
        w.end_object();
    }
    w.end_array();
    w.field("tightest_gcd", report.tightest_gcd);
    w.field("tightest_gcd_bound", report.tightest_gcd_bound);
    w.field("all_pass", report.all_pass());
    w.end_object();
}

std::string audit_report_json(const ProofAuditReport& report) {
    std::ostringstream out;
    JsonWriter writer(out);
    write_audit_report(writer, report);
    writer.finish();
    return out.str();
}

std::string audit_report_csv_header() {
    return "size_a,size_b,product_set_size,quotient_set_size,pair_group_size,"
           "ratio_set_size,sigma,energy,collision_factor,chosen_level,"
           "level_count,c,c_prime,all_pass";
}

std::string audit_report_csv_row(const ProofAuditReport& report) {
    std::ostringstream out;
    out << report.size_a << ',' << report.size_b << ','
        << report.product_set_size << ',' << report.quotient_set_size << ','
        << report.pair_group_size << ',' << report.ratio_set_size << ','
        << report.sigma_value << ',' << report.energy << ','
        << format_real(report.collision_factor) << ',' << report.chosen_index
        << ',' << report.level_count << ','
        << (report.c ? format_real(*report.c) : "") << ','
        << (report.c_prime ? format_real(*report.c_prime) : "") << ','
        << (report.all_pass() ? "true" : "false");
    return out.str();
}

void write_gamma_solution(JsonWriter& w, const GammaSolution& solution,
                          double reference_gamma_residual) {
    w.begin_object();
    w.field("root", solution.root);
    w.field("residual", solution.residual);
    w.begin_array("bracket");
    w.element(solution.bracket_lo);
    w.element(solution.bracket_hi);
    w.end_array();
    w.field("delta_at_root", solution.delta_at_root);
    w.field("iterations", solution.iterations);
    w.field("guaranteed_exponent", solution.guaranteed_exponent);
    w.field("reference_gamma", 0.098);
    w.field("reference_gamma_residual", reference_gamma_residual);
    w.field("reference_gamma_admissible", reference_gamma_residual < 0.0);
    w.end_object();
}

std::string gamma_solution_json(const GammaSolution& solution,
                                double reference_gamma_residual) {
    std::ostringstream out;
    JsonWriter writer(out);
    write_gamma_solution(writer, solution, reference_gamma_residual);
    writer.finish();
    return out.str();
}

std::string measurement_csv_header() {
    return "recipe,Q,seed,size,product_size,quotient_size,energy,"
           "eta_product,eta_energy,eta_quotient,corollary_gap";
}

std::string measurement_csv_row(const std::string& label, std::uint64_t q,
                                std::uint64_t seed, const SetMeasurement& m) {
    std::ostringstream out;
    out << label << ',' << q << ',' << seed << ',' << m.set_size << ','
        << m.product_size << ',' << m.quotient_size << ',' << m.energy << ','
        << format_real(m.eta_product) << ',' << format_real(m.eta_energy)
        << ',' << format_real(m.eta_quotient) << ','
        << format_real(m.corollary_gap);
    return out.str();
}

} // namespace quotlab
