#include "dumont/report.hpp"

#include <sstream>

#include <json.hpp>

namespace dumont {

bool VerificationReport::check_series(const std::string& location, const QSeries& lhs,
                                      const QSeries& rhs) {
    auto diff = first_difference(lhs, rhs);
    if (!diff) return true;
    fail(Discrepancy{location, diff->exponent, std::move(diff->lhs), std::move(diff->rhs)});
    return false;
}

namespace {

nlohmann::ordered_json report_body(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["check"] = r.check_name;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["parameters"] = std::move(params);
    j["pass"] = r.pass;
    if (r.first_discrepancy) {
        const Discrepancy& d = *r.first_discrepancy;
        nlohmann::ordered_json fd;
        fd["location"] = d.location;
        fd["exponent"] = d.exponent;
        fd["lhs_coefficient"] = d.lhs.str();
        fd["rhs_coefficient"] = d.rhs.str();
        j["first_discrepancy"] = std::move(fd);
    } else {
        j["first_discrepancy"] = nullptr;
    }
    return j;
}

std::string params_compact(const VerificationReport& r) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : r.parameters) {
        if (!first) os << ";";
        os << k << "=" << v;
        first = false;
    }
    return os.str();
}

}  // namespace

std::string to_json_line(const VerificationReport& report) {
    return report_body(report).dump();
}

std::string to_meta_json_line(const VerificationReport& report) {
    nlohmann::ordered_json meta;
    meta["check"] = report.check_name;
    meta["elapsed_ms"] = report.elapsed_ms;
    nlohmann::ordered_json j;
    j["meta"] = std::move(meta);
    return j.dump();
}

std::string to_tsv_line(const VerificationReport& report) {
    std::ostringstream os;
    os << report.check_name << "\t" << params_compact(report) << "\t"
       << (report.pass ? "true" : "false") << "\t";
    if (report.first_discrepancy) {
        const Discrepancy& d = *report.first_discrepancy;
        os << d.location << " exponent=" << d.exponent << " lhs=" << d.lhs.str()
           << " rhs=" << d.rhs.str();
    } else {
        os << "-";
    }
    return os.str();
}

std::string to_human_line(const VerificationReport& report) {
    std::ostringstream os;
    os << (report.pass ? "PASS" : "FAIL") << "  " << report.check_name;
    const std::string params = params_compact(report);
    if (!params.empty()) os << "  [" << params << "]";
    os << "  (" << report.elapsed_ms << " ms)";
    if (report.first_discrepancy) {
        const Discrepancy& d = *report.first_discrepancy;
        os << "  first discrepancy at " << d.location << ", exponent " << d.exponent
           << ": lhs " << d.lhs.str() << " vs rhs " << d.rhs.str();
    }
    return os.str();
}

}  // namespace dumont
