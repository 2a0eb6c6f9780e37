#pragma once

// CSV tables and JSON reports, with parsers for round-trip checks.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "harmonic/error.hpp"
#include "harmonic/uncertainty.hpp"
#include "harmonic/verdict.hpp"

namespace harmonic::io {

using json = nlohmann::ordered_json;

/// 17 significant digits; non-finite values as inf, -inf, nan.
inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline double parse_double(const std::string& s) {
    if (s == "nan") return NAN;
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw invalid_parameter("not a number: '" + s + "'");
    }
    if (used != s.size()) throw invalid_parameter("not a number: '" + s + "'");
    return v;
}

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string config_hash(const json& config) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, fnv1a(config.dump()));
    return buf;
}

struct Table {
    std::map<std::string, std::string> header;  // space, operation, config
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

inline std::string write_csv(const Table& t) {
    std::string out = "#";
    for (const auto& [k, v] : t.header) out += " " + k + "=" + v;
    out += "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
    out += "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_double(row[i]);
        out += "\n";
    }
    return out;
}

inline Table parse_csv(const std::string& text) {
    Table t;
    std::istringstream in(text);
    std::string line;
    bool have_columns = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream fields(line.substr(1));
            std::string kv;
            while (fields >> kv) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos) throw invalid_parameter("csv header field without '=': " + kv);
                t.header[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!have_columns) {
            t.columns = cells;
            have_columns = true;
            continue;
        }
        if (cells.size() != t.columns.size()) throw invalid_parameter("csv row width differs from header");
        std::vector<double> row;
        for (const auto& c : cells) row.push_back(parse_double(c));
        t.rows.push_back(std::move(row));
    }
    if (!have_columns) throw invalid_parameter("csv has no column line");
    return t;
}

/// JSON numbers cannot hold inf or nan; those become strings.
inline json number(double v) {
    if (std::isfinite(v)) return v;
    return format_double(v);
}

inline double number_from(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return parse_double(j.get<std::string>());
    throw invalid_parameter("expected a number in JSON report");
}

inline json report_json(const ConvergenceReport& r) {
    json j;
    j["ladder"] = r.ladder;
    json pv = json::array(), lpv = json::array();
    for (double v : r.partial_values) pv.push_back(number(v));
    for (double v : r.log_partial_values) lpv.push_back(number(v));
    j["partial_values"] = pv;
    j["log_partial_values"] = lpv;
    j["classification"] = to_string(r.classification);
    j["value"] = r.stabilized_value ? number(*r.stabilized_value) : json(nullptr);
    return j;
}

inline ConvergenceReport report_from_json(const json& j) {
    ConvergenceReport r;
    r.ladder = j.at("ladder").get<std::vector<double>>();
    for (const auto& v : j.at("partial_values")) r.partial_values.push_back(number_from(v));
    for (const auto& v : j.at("log_partial_values")) r.log_partial_values.push_back(number_from(v));
    const auto c = j.at("classification").get<std::string>();
    if (c == "converged") r.classification = Classification::converged;
    else if (c == "diverging") r.classification = Classification::diverging;
    else if (c == "inconclusive") r.classification = Classification::inconclusive;
    else throw invalid_parameter("unknown classification '" + c + "'");
    if (!j.at("value").is_null()) r.stabilized_value = number_from(j.at("value"));
    return r;
}

inline json verdict_json(const Verdict& v) {
    json j;
    j["verdict"] = to_string(v.outcome);
    j["cited_case"] = v.cited_case;
    if (v.outcome == Outcome::heat_derivative) {
        json ks = json::array();
        for (const auto& k : v.ktypes) ks.push_back({k.p, k.q});
        j["ktypes"] = ks;
        j["deg_bound"] = v.deg_bound;
    }
    return j;
}

inline Verdict verdict_from_json(const json& j) {
    Verdict v;
    const auto name = j.at("verdict").get<std::string>();
    bool known = false;
    for (auto o : {Outcome::zero, Outcome::heat_kernel_multiple, Outcome::heat_derivative, Outcome::not_determined})
        if (name == to_string(o)) {
            v.outcome = o;
            known = true;
        }
    if (!known) throw invalid_parameter("unknown verdict '" + name + "'");
    v.cited_case = j.at("cited_case").get<std::string>();
    if (j.contains("ktypes"))
        for (const auto& k : j["ktypes"]) v.ktypes.push_back({k.at(0).get<int>(), k.at(1).get<int>()});
    if (j.contains("deg_bound")) v.deg_bound = j["deg_bound"].get<double>();
    return v;
}

}  // namespace harmonic::io
