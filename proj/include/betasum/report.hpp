#ifndef BETASUM_REPORT_HPP
#define BETASUM_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "betasum/identities.hpp"
#include "betasum/quadrature.hpp"

namespace betasum {

enum class ReportFormat { text, json, csv };

ReportFormat parse_report_format(const std::string& name);

/// One row of suite output, format-agnostic. Exact values arrive as "num/den"
/// strings, floating-point values as shortest round-trip decimals.
struct ReportRow {
    std::string identity;
    std::string variant;
    std::vector<std::pair<std::string, std::string>> params;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    std::string note;
    bool counts_toward_failure = true;
};

ReportRow to_row(const IdentityReport& r);
ReportRow to_row(const NumericReport& r);

/// Renders rows in the requested format. Output is byte-identical for
/// identical inputs: rows are stable-sorted by identity name first, floats
/// use shortest round-trip decimals, rationals exact strings, LF endings.
std::string render_report(std::vector<ReportRow> rows, ReportFormat format);

}  // namespace betasum

#endif
