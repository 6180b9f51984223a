#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "crossfam/natural.hpp"

namespace crossfam {

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

/// One machine-readable run report. Everything except timing_ms is
/// deterministic for a fixed command and input.
struct Report {
    int schema_version = 1;
    std::string command;
    nlohmann::json instance = nullptr;  // {n, ks} echo, or null
    nlohmann::json results = nlohmann::json::object();
    std::vector<Check> checks;
    long long timing_ms = 0;

    nlohmann::json to_json() const;
    bool all_ok() const;
};

/// Decimal-string JSON value for an exact integer.
nlohmann::json to_json(const Natural& n);

std::string emit_json(const Report& rep);
std::string emit_csv(const Report& rep);
std::string emit_text(const Report& rep);
std::string emit(const Report& rep, const std::string& format);

/// Minimal structural JSON-schema checker covering the subset used by
/// report.schema.json: type (single or list), properties, required, items,
/// enum, additionalProperties.
bool validate_against_schema(const nlohmann::json& value,
                             const nlohmann::json& schema, std::string* error);

}  // namespace crossfam
