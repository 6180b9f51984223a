#include "crossfam/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace crossfam {

nlohmann::json to_json(const Natural& n) { return n.str(); }

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["schema_version"] = schema_version;
    j["command"] = command;
    j["instance"] = instance;
    j["results"] = results;
    nlohmann::json cks = nlohmann::json::array();
    for (const Check& c : checks)
        cks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    j["checks"] = cks;
    j["timing_ms"] = timing_ms;
    return j;
}

bool Report::all_ok() const {
    for (const Check& c : checks)
        if (!c.ok) return false;
    return true;
}

std::string emit_json(const Report& rep) {
    return rep.to_json().dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& raw) {
    bool need = raw.find_first_of(",\"\r\n") != std::string::npos;
    if (!need) return raw;
    std::string out = "\"";
    for (char c : raw) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string scalar_to_string(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_null()) return "";
    return v.dump();
}

void flatten(const std::string& prefix, const nlohmann::json& v,
             std::vector<std::pair<std::string, std::string>>& out) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it)
            flatten(prefix.empty() ? it.key() : prefix + "." + it.key(),
                    it.value(), out);
    } else if (v.is_array()) {
        for (std::size_t p = 0; p < v.size(); ++p)
            flatten(prefix + "[" + std::to_string(p) + "]", v[p], out);
    } else {
        out.emplace_back(prefix, scalar_to_string(v));
    }
}

}  // namespace

std::string emit_csv(const Report& rep) {
    std::ostringstream os;
    if (rep.results.contains("rows") && rep.results["rows"].is_array() &&
        !rep.results["rows"].empty() && rep.results["rows"][0].is_object()) {
        const auto& rows = rep.results["rows"];
        std::vector<std::string> headers;
        for (auto it = rows[0].begin(); it != rows[0].end(); ++it)
            headers.push_back(it.key());
        for (std::size_t c = 0; c < headers.size(); ++c)
            os << (c ? "," : "") << csv_field(headers[c]);
        os << "\r\n";
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < headers.size(); ++c)
                os << (c ? "," : "")
                   << csv_field(scalar_to_string(row.value(headers[c],
                                                           nlohmann::json())));
            os << "\r\n";
        }
        return os.str();
    }
    os << "key,value\r\n";
    std::vector<std::pair<std::string, std::string>> flat;
    flatten("", rep.results, flat);
    for (const auto& [k, v] : flat)
        os << csv_field(k) << "," << csv_field(v) << "\r\n";
    for (const Check& c : rep.checks)
        os << csv_field("check." + c.name) << ","
           << csv_field(c.ok ? "pass" : "fail") << "\r\n";
    return os.str();
}

std::string emit_text(const Report& rep) {
    std::ostringstream os;
    os << "command: " << rep.command << "\n";
    if (!rep.instance.is_null()) os << "instance: " << rep.instance.dump() << "\n";
    std::vector<std::pair<std::string, std::string>> flat;
    flatten("", rep.results, flat);
    std::size_t width = 0;
    for (const auto& [k, v] : flat) width = std::max(width, k.size());
    for (const auto& [k, v] : flat)
        os << "  " << k << std::string(width - k.size() + 2, ' ') << v << "\n";
    for (const Check& c : rep.checks) {
        os << (c.ok ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
    }
    return os.str();
}

std::string emit(const Report& rep, const std::string& format) {
    if (format == "json") return emit_json(rep);
    if (format == "csv") return emit_csv(rep);
    if (format == "text") return emit_text(rep);
    throw std::invalid_argument("unknown format: " + format);
}

namespace {

bool type_matches(const nlohmann::json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    return false;
}

}  // namespace

bool validate_against_schema(const nlohmann::json& value,
                             const nlohmann::json& schema, std::string* error) {
    auto fail = [&](const std::string& msg) {
        if (error) *error = msg;
        return false;
    };
    if (schema.contains("type")) {
        const auto& t = schema["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(value, t.get<std::string>());
        } else {
            for (const auto& alt : t)
                if (type_matches(value, alt.get<std::string>())) {
                    ok = true;
                    break;
                }
        }
        if (!ok) return fail("type mismatch: " + schema["type"].dump() +
                             " vs " + value.dump().substr(0, 80));
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& alt : schema["enum"])
            if (alt == value) {
                ok = true;
                break;
            }
        if (!ok) return fail("enum mismatch at " + value.dump().substr(0, 80));
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>()))
                    return fail("missing required key " + key.get<std::string>());
        const bool closed = schema.value("additionalProperties", true) == false;
        for (auto it = value.begin(); it != value.end(); ++it) {
            if (schema.contains("properties") &&
                schema["properties"].contains(it.key())) {
                if (!validate_against_schema(it.value(),
                                             schema["properties"][it.key()],
                                             error))
                    return false;
            } else if (closed) {
                return fail("unexpected key " + it.key());
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (const auto& elem : value)
            if (!validate_against_schema(elem, schema["items"], error))
                return false;
    }
    if (error) error->clear();
    return true;
}

}  // namespace crossfam
