#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "crystalk/report.hpp"

// Deterministic report documents for the CLI: fixed key order, divisors and
// degrees ascending, exact rationals as "p/q" strings, integers as JSON
// numbers when they fit in 64 bits and as decimal strings otherwise.

namespace crystalk {

using Json = nlohmann::ordered_json;

struct InputSpec {
    std::optional<std::pair<long, long>> cyclotomic;            // (m, k)
    std::optional<std::pair<long, IntegerMatrix>> explicit_input;  // (m, T)
    ReportOptions options;
    enum class Format { text, json } format = Format::text;
};

// Parses {"cyclotomic": {"m":..,"k":..}} or {"m":.., "matrix": [[..],..]}.
InputSpec parse_input_json(const nlohmann::json& j);

CyclicLattice realize(const InputSpec& spec);

Json report_document(const InputSpec& spec);
Json census_document(const InputSpec& spec);
Json cohomology_document(const InputSpec& spec);
Json validate_document(const InputSpec& spec);

struct GridRow {
    long m = 0, k = 0, n = 0;
    std::string status;  // "pass" | "fail" | "skipped"
    std::string s0, s1;
    std::vector<std::string> failed_checks;
};

struct GridResult {
    std::vector<GridRow> rows;
    bool all_pass = true;  // skipped rows do not fail the run
};

GridResult run_grid(const std::vector<long>& m_list, const std::vector<long>& k_list,
                    const ReportOptions& options);
Json grid_document(const GridResult& grid);

// Generic indented key/value rendering of a document; deterministic.
std::string render_text(const Json& doc);

Json int_to_json(const Int& value);
std::string rat_to_string(const Rat& value);

}  // namespace crystalk
