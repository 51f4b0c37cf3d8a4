#include "betasum/report.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "betasum/num_format.hpp"

namespace betasum {

ReportFormat parse_report_format(const std::string& name) {
    if (name == "text") {
        return ReportFormat::text;
    }
    if (name == "json") {
        return ReportFormat::json;
    }
    if (name == "csv") {
        return ReportFormat::csv;
    }
    throw std::invalid_argument("unknown report format '" + name + "' (expected text, json or csv)");
}

ReportRow to_row(const IdentityReport& r) {
    ReportRow row;
    row.identity = r.identity;
    row.variant = variant_name(r.variant);
    row.params = r.params;
    row.lhs = r.lhs.str();
    row.rhs = r.rhs.str();
    row.pass = r.pass;
    row.note = r.note;
    row.counts_toward_failure = r.counts_toward_failure;
    return row;
}

ReportRow to_row(const NumericReport& r) {
    ReportRow row;
    row.identity = r.check;
    row.variant = r.variant;
    row.params = r.params;
    row.lhs = format_double(r.lhs);
    row.rhs = format_double(r.rhs);
    row.pass = r.pass;
    row.note = r.note.empty() ? "tolerance " + format_double(r.tolerance)
                              : r.note + "; tolerance " + format_double(r.tolerance);
    row.counts_toward_failure = true;
    return row;
}

namespace {

std::string params_inline(const ReportRow& row) {
    std::string s;
    for (const auto& [k, v] : row.params) {
        if (!s.empty()) {
            s += ";";
        }
        s += k + "=" + v;
    }
    return s;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out += c;
        }
    }
    out += "\"";
    return out;
}

std::string cell(const std::string& value, std::size_t limit = 48) {
    if (value.size() <= limit) {
        return value;
    }
    return value.substr(0, limit - 3) + "...";
}

std::string render_text(const std::vector<ReportRow>& rows) {
    const std::vector<std::string> header{"identity", "variant", "params", "lhs", "rhs", "verdict", "note"};
    std::vector<std::vector<std::string>> table;
    table.reserve(rows.size());
    for (const auto& r : rows) {
        table.push_back({r.identity, r.variant, cell(params_inline(r)), cell(r.lhs), cell(r.rhs),
                         r.pass ? "pass" : "fail", cell(r.note, 72)});
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : table) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    const auto emit = [&width](const std::vector<std::string>& row) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) {
                line.append(width[c] - row[c].size() + 2, ' ');
            }
        }
        line += "\n";
        return line;
    };
    std::string out = emit(header);
    std::string rule;
    for (std::size_t c = 0; c < width.size(); ++c) {
        rule.append(width[c], '-');
        if (c + 1 < width.size()) {
            rule.append(2, ' ');
        }
    }
    out += rule + "\n";
    for (const auto& row : table) {
        out += emit(row);
    }
    return out;
}

std::string render_json(const std::vector<ReportRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.params) {
            params[k] = v;
        }
        arr.push_back({{"identity", r.identity},
                       {"variant", r.variant},
                       {"params", std::move(params)},
                       {"lhs", r.lhs},
                       {"rhs", r.rhs},
                       {"verdict", r.pass ? "pass" : "fail"},
                       {"note", r.note}});
    }
    return arr.dump(2) + "\n";
}

std::string render_csv(const std::vector<ReportRow>& rows) {
    std::string out = "identity,variant,params,lhs,rhs,verdict,note\n";
    for (const auto& r : rows) {
        out += csv_quote(r.identity) + "," + csv_quote(r.variant) + "," + csv_quote(params_inline(r)) + "," +
               csv_quote(r.lhs) + "," + csv_quote(r.rhs) + "," + (r.pass ? "pass" : "fail") + "," +
               csv_quote(r.note) + "\n";
    }
    return out;
}

}  // namespace

std::string render_report(std::vector<ReportRow> rows, ReportFormat format) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const ReportRow& a, const ReportRow& b) { return a.identity < b.identity; });
    switch (format) {
        case ReportFormat::text:
            return render_text(rows);
        case ReportFormat::json:
            return render_json(rows);
        case ReportFormat::csv:
            return render_csv(rows);
    }
    throw std::logic_error("render_report: unreachable format");
}

}  // namespace betasum
