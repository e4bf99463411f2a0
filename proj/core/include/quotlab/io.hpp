#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "quotlab/extremal.hpp"
#include "quotlab/gamma.hpp"
#include "quotlab/integer_set.hpp"
#include "quotlab/proofsim.hpp"
#include "quotlab/setops.hpp"

namespace quotlab {

/// Reads a set from plain text (one positive integer per line, blank lines
/// and '#' comments skipped) or a JSON array of integers; the two are told
/// apart by the first non-space byte. The ambient bound is the override
/// when given, otherwise the maximum element.
IntegerSet read_integer_set(const std::string& path,
                            std::optional<std::uint64_t> ambient_override);

IntegerSet parse_integer_set(const std::string& text,
                             std::optional<std::uint64_t> ambient_override);

/// Fixed 12-significant-digit rendering used for every real in reports,
/// so identical runs emit identical bytes.
std::string format_real(double value);

/// Minimal streaming JSON emitter: keys stay in insertion order and reals
/// go through format_real. Two-space indentation.
class JsonWriter {
public:
    explicit JsonWriter(std::ostream& out) : out_(out) {}

    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array(std::string_view key);
    JsonWriter& end_array();

    JsonWriter& field(std::string_view key, double value);
    JsonWriter& field(std::string_view key, std::uint64_t value);
    JsonWriter& field(std::string_view key, std::int64_t value);
    JsonWriter& field(std::string_view key, int value);
    JsonWriter& field(std::string_view key, bool value);
    JsonWriter& field(std::string_view key, std::string_view value);
    // Prevents string literals from decaying into the bool overload.
    JsonWriter& field(std::string_view key, const char* value) {
        return field(key, std::string_view(value));
    }
    JsonWriter& null_field(std::string_view key);

    JsonWriter& element(double value);
    JsonWriter& element(std::uint64_t value);
    JsonWriter& element(std::string_view value);
    JsonWriter& begin_object_element();

    void finish(); // trailing newline

private:
    void comma_and_indent();
    void key_prefix(std::string_view key);
    static std::string quoted(std::string_view s);

    std::ostream& out_;
    int depth_ = 0;
    bool needs_comma_ = false;
};

void write_audit_report(JsonWriter& writer, const ProofAuditReport& report);
std::string audit_report_json(const ProofAuditReport& report);
std::string audit_report_csv_row(const ProofAuditReport& report);
std::string audit_report_csv_header();

void write_gamma_solution(JsonWriter& writer, const GammaSolution& solution,
                          double reference_gamma_residual);
std::string gamma_solution_json(const GammaSolution& solution,
                                double reference_gamma_residual);

std::string measurement_csv_header();
std::string measurement_csv_row(const std::string& label, std::uint64_t q,
                                std::uint64_t seed, const SetMeasurement& m);

} // namespace quotlab
