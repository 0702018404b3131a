#pragma once

// Report bundle and serializers. Bodies are bit-stable: fixed column order,
// sorted JSON keys, and no timestamps or timings (timing lives in a separate
// sidecar), so identical runs produce byte-identical output.

#include <json.hpp>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "symtopo/errors.hpp"
#include "symtopo/verdict.hpp"

namespace symtopo {

struct ExperimentResult {
    std::string name;    // e.g. "03-hh_scan"
    std::string kind;
    std::string target;  // resolved target id ("" for corpus experiments)
    std::vector<Verdict> rows;
    std::vector<std::pair<std::string, std::string>> notes;
    double ms = 0.0;     // excluded from report bodies
};

struct ReportBundle {
    std::string config_hash;
    std::vector<ExperimentResult> results;
};

/// 0: everything verified/contained; 1: some counterexample;
/// 2: some inconclusive result and no counterexample.
inline int exit_code(const ReportBundle& bundle) {
    bool inconclusive = false;
    for (const auto& res : bundle.results)
        for (const auto& v : res.rows) {
            if (v.status == Status::counterexample) return 1;
            if (v.status == Status::inconclusive) inconclusive = true;
        }
    return inconclusive ? 2 : 0;
}

namespace detail {

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string opt_num(long long v) { return v < 0 ? std::string() : std::to_string(v); }

}  // namespace detail

inline std::string emit_csv(const ReportBundle& bundle) {
    std::ostringstream os;
    os << "experiment,target,a,r,d,status,witness\n";
    for (const auto& res : bundle.results)
        for (const auto& v : res.rows)
            os << detail::csv_escape(res.name) << ',' << detail::csv_escape(v.target) << ','
               << detail::opt_num(v.a) << ',' << detail::opt_num(v.r) << ','
               << detail::opt_num(v.d) << ',' << status_name(v.status) << ','
               << detail::csv_escape(v.witness_text) << '\n';
    return os.str();
}

inline std::string emit_md(const ReportBundle& bundle) {
    std::ostringstream os;
    os << "# symtopo report\n\nconfig hash: `" << bundle.config_hash << "`\n";
    for (const auto& res : bundle.results) {
        os << "\n## " << res.name;
        if (!res.target.empty()) os << " — target `" << res.target << "`";
        os << "\n\n";
        if (!res.rows.empty()) {
            os << "| target | a | r | d | status | witness | note |\n";
            os << "|--------|--:|--:|--:|--------|---------|------|\n";
            for (const auto& v : res.rows)
                os << "| " << v.target << " | " << detail::opt_num(v.a) << " | "
                   << detail::opt_num(v.r) << " | " << detail::opt_num(v.d) << " | "
                   << status_name(v.status) << " | " << v.witness_text << " | " << v.note
                   << " |\n";
        }
        for (const auto& [k, val] : res.notes) os << "- " << k << ": " << val << "\n";
    }
    return os.str();
}

inline std::string emit_json(const ReportBundle& bundle) {
    nlohmann::json j;
    j["config_hash"] = bundle.config_hash;
    j["results"] = nlohmann::json::array();
    for (const auto& res : bundle.results) {
        nlohmann::json r;
        r["name"] = res.name;
        r["kind"] = res.kind;
        if (!res.target.empty()) r["target"] = res.target;
        r["rows"] = nlohmann::json::array();
        for (const auto& v : res.rows) {
            nlohmann::json row;
            row["target"] = v.target;
            row["status"] = status_name(v.status);
            if (v.a >= 0) row["a"] = v.a;
            if (v.r >= 0) row["r"] = v.r;
            if (v.d >= 0) row["d"] = v.d;
            if (!v.witness_text.empty()) row["witness"] = v.witness_text;
            if (!v.note.empty()) row["note"] = v.note;
            r["rows"].push_back(std::move(row));
        }
        nlohmann::json notes = nlohmann::json::object();
        for (const auto& [k, val] : res.notes) notes[k] = val;
        r["notes"] = std::move(notes);
        j["results"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
}

/// Timing sidecar; the only place durations appear.
inline std::string emit_timing_json(const ReportBundle& bundle) {
    nlohmann::json j;
    j["experiments"] = nlohmann::json::array();
    double total = 0.0;
    for (const auto& res : bundle.results) {
        j["experiments"].push_back({{"name", res.name}, {"ms", res.ms}});
        total += res.ms;
    }
    j["total_ms"] = total;
    return j.dump(2) + "\n";
}

inline std::string emit(const ReportBundle& bundle, const std::string& format) {
    if (format == "csv") return emit_csv(bundle);
    if (format == "md") return emit_md(bundle);
    if (format == "json") return emit_json(bundle);
    fail(errc::invalid_parameter, "unknown report format '" + format + "'");
}

}  // namespace symtopo
