#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "quermass/numeric.hpp"

namespace quermass {

// One verification outcome. lhs/rhs are either 17-digit numbers or canonical
// polynomial strings; statistical checks carry their standard error, and
// checks with a closed-form residual attach it as an exact pi-scalar string.
// Verdicts: "pass", "fail", and "discrepancy-documented" — the last is legal
// only for configurations registered in the known-discrepancy ledger and
// separates "the transcription disagrees with geometry, as recorded" from
// "something is broken".
struct CheckReport {
    std::string check_id;
    std::map<std::string, std::string> config;
    std::string lhs;
    std::string rhs;
    double abs_error = 0.0;
    double rel_error = 0.0;
    std::optional<double> standard_error;
    std::optional<std::string> residual_exact;
    std::string verdict;
};

inline std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

// One report per line, fixed key order, 17 significant digits throughout.
inline std::string to_jsonl(const CheckReport& r) {
    std::string out = "{\"check_id\":\"" + json_escape(r.check_id) + "\",\"config\":{";
    bool first = true;
    for (const auto& [k, v] : r.config) {
        if (!first) out += ",";
        first = false;
        out += "\"" + json_escape(k) + "\":\"" + json_escape(v) + "\"";
    }
    out += "},\"lhs\":\"" + json_escape(r.lhs) + "\",\"rhs\":\"" + json_escape(r.rhs) + "\"";
    out += ",\"abs_error\":" + format_g17(r.abs_error);
    out += ",\"rel_error\":" + format_g17(r.rel_error);
    if (r.standard_error) out += ",\"standard_error\":" + format_g17(*r.standard_error);
    if (r.residual_exact) out += ",\"residual_exact\":\"" + json_escape(*r.residual_exact) + "\"";
    out += ",\"verdict\":\"" + json_escape(r.verdict) + "\"}";
    return out;
}

inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

inline std::string config_hash(const std::map<std::string, std::string>& config) {
    std::string flat;
    for (const auto& [k, v] : config) flat += k + "=" + v + ";";
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(flat)));
    return buf;
}

inline std::string csv_header() { return "check_id,config_hash,verdict,rel_error"; }

inline std::string to_csv_row(const CheckReport& r) {
    return r.check_id + "," + config_hash(r.config) + "," + r.verdict + "," +
           format_g17(r.rel_error);
}

}  // namespace quermass
