#ifndef COVERLAB_CLI_REPORT_HPP
#define COVERLAB_CLI_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace coverlab::cli {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckRecord {
    std::string theorem;
    std::string params;
    std::string expected;
    std::string computed;
    CheckStatus status = CheckStatus::Skipped;
    std::optional<double> ms; // absent with --no-timing
};

struct ReportSummary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;
};

struct VerificationReport {
    std::vector<CheckRecord> records;

    ReportSummary summary() const;
    bool ok() const { return summary().fail == 0; }
};

enum class OutputFormat { Text, Json, Csv };

const char* status_name(CheckStatus status);

/// CSV columns: theorem,params,expected,computed,status,ms. JSON carries the
/// same fields per record plus a summary object.
std::string report_emit(const VerificationReport& report, OutputFormat format);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& value);

} // namespace coverlab::cli

#endif
