#include "coverlab/cli/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace coverlab::cli {

ReportSummary VerificationReport::summary() const {
    ReportSummary s;
    for (const auto& r : records) {
        switch (r.status) {
        case CheckStatus::Pass: ++s.pass; break;
        case CheckStatus::Fail: ++s.fail; break;
        case CheckStatus::Skipped: ++s.skipped; break;
        }
    }
    return s;
}

const char* status_name(CheckStatus status) {
    switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

namespace {

std::string format_ms(double ms) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << ms;
    return os.str();
}

std::string emit_csv(const VerificationReport& report) {
    std::string out = "theorem,params,expected,computed,status,ms\n";
    for (const auto& r : report.records) {
        out += csv_field(r.theorem) + ',' + csv_field(r.params) + ',' + csv_field(r.expected) + ',' +
               csv_field(r.computed) + ',' + status_name(r.status) + ',' + (r.ms ? format_ms(*r.ms) : "") + '\n';
    }
    return out;
}

std::string emit_json(const VerificationReport& report) {
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& r : report.records) {
        nlohmann::ordered_json rec;
        rec["theorem"] = r.theorem;
        rec["params"] = r.params;
        rec["expected"] = r.expected;
        rec["computed"] = r.computed;
        rec["status"] = status_name(r.status);
        rec["ms"] = r.ms ? nlohmann::ordered_json(*r.ms) : nlohmann::ordered_json(nullptr);
        records.push_back(std::move(rec));
    }
    const auto s = report.summary();
    nlohmann::ordered_json doc;
    doc["records"] = std::move(records);
    doc["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}};
    return doc.dump(2) + "\n";
}

std::string emit_text(const VerificationReport& report) {
    std::string out;
    for (const auto& r : report.records) {
        out += std::string(status_name(r.status)) + "  " + r.theorem + "  " + r.params;
        if (r.status == CheckStatus::Pass && r.computed.size() <= 24) out += "  = " + r.computed;
        if (r.ms) out += "  (" + format_ms(*r.ms) + " ms)";
        out += '\n';
        if (r.status == CheckStatus::Fail)
            out += "    expected: " + r.expected + "\n    computed: " + r.computed + '\n';
    }
    const auto s = report.summary();
    out += std::to_string(s.pass) + " passed, " + std::to_string(s.fail) + " failed, " +
           std::to_string(s.skipped) + " skipped\n";
    return out;
}

} // namespace

std::string report_emit(const VerificationReport& report, OutputFormat format) {
    switch (format) {
    case OutputFormat::Csv: return emit_csv(report);
    case OutputFormat::Json: return emit_json(report);
    case OutputFormat::Text: return emit_text(report);
    }
    return {};
}

} // namespace coverlab::cli
