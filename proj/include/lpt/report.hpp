#ifndef LPT_REPORT_HPP
#define LPT_REPORT_HPP

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lpt/checks.hpp"
#include "lpt/errors.hpp"

namespace lpt {

inline constexpr const char* kReportSchema = "lpt-report/1";
inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr const char* kCsvHeader = "instance,n,m,kind,ell,lpt_exact,S_size,branch,bound,margin,ms";

struct RunReport {
    std::string command;
    nlohmann::ordered_json arguments = nlohmann::ordered_json::object();
    nlohmann::ordered_json instance = nlohmann::ordered_json::object();
    nlohmann::ordered_json result = nlohmann::ordered_json::object();
    CheckLog log;
    std::vector<std::string> errors;  // exceptions that aborted part of the run
    std::optional<double> timing_ms;
    bool include_records = false;

    bool passed() const { return log.failures() == 0 && errors.empty(); }
};

inline nlohmann::ordered_json record_json(const CheckRecord& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["inputs_digest"] = hex64(r.inputs_digest);
    j["value"] = r.value;
    j["bound"] = r.bound;
    j["relation"] = to_string(r.relation);
    j["margin"] = r.margin();
    j["pass"] = r.pass;
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

inline nlohmann::ordered_json to_json(const RunReport& rep) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["engine_version"] = kEngineVersion;
    j["command"] = rep.command;
    j["arguments"] = rep.arguments;
    j["instance"] = rep.instance;
    j["pass"] = rep.passed();
    j["result"] = rep.result;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& [id, s] : rep.log.summarize()) {
        nlohmann::ordered_json c;
        c["id"] = id;
        c["count"] = s.count;
        c["failures"] = s.failures;
        c["min_margin"] = s.min_margin;
        c["digest"] = hex64(s.digest);
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const auto& r : rep.log.records())
        if (!r.pass) failures.push_back(record_json(r));
    j["failures"] = std::move(failures);
    j["errors"] = rep.errors;
    if (rep.include_records) {
        nlohmann::ordered_json all = nlohmann::ordered_json::array();
        for (const auto& r : rep.log.records()) all.push_back(record_json(r));
        j["records"] = std::move(all);
    }
    if (rep.timing_ms) j["timing_ms"] = *rep.timing_ms;
    return j;
}

inline std::string dump_report(const RunReport& rep) { return to_json(rep).dump(2) + "\n"; }

// Schema check on read; unknown fields are ignored.
inline nlohmann::json parse_report(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw InputError("report is not a JSON object");
    if (j.value("schema", "") != kReportSchema) throw InputError("unsupported report schema");
    return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

}  // namespace lpt

#endif  // LPT_REPORT_HPP
