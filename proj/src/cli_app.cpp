#include "betasum/cli_app.hpp"

#include <fstream>
#include <iostream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "betasum/report.hpp"

namespace betasum::cli {

namespace {

std::string render_catalog(ReportFormat format) {
    if (format == ReportFormat::json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& e : catalog()) {
            arr.push_back({{"name", e.name},
                           {"kind", catalog_kind_name(e.kind)},
                           {"corrected_form", e.has_corrected_form},
                           {"description", e.description},
                           {"note", e.note}});
        }
        return arr.dump(2) + "\n";
    }
    if (format == ReportFormat::csv) {
        std::string out = "name,kind,corrected_form,description,note\n";
        for (const auto& e : catalog()) {
            const auto quote = [](const std::string& f) {
                if (f.find_first_of(",\"\n") == std::string::npos) {
                    return f;
                }
                std::string q = "\"";
                for (const char c : f) {
                    q += (c == '"') ? std::string("\"\"") : std::string(1, c);
                }
                return q + "\"";
            };
            out += quote(e.name) + "," + catalog_kind_name(e.kind) + "," +
                   (e.has_corrected_form ? "yes" : "no") + "," + quote(e.description) + "," +
                   quote(e.note) + "\n";
        }
        return out;
    }
    std::string out;
    for (const auto& e : catalog()) {
        out += e.name + " [" + catalog_kind_name(e.kind) + "]";
        if (e.has_corrected_form) {
            out += " (paper-form + corrected-form)";
        }
        out += "\n    " + e.description + "\n";
        if (!e.note.empty()) {
            out += "    " + e.note + "\n";
        }
    }
    return out;
}

std::vector<std::string> all_identity_names() {
    std::vector<std::string> names;
    for (const auto& e : catalog()) {
        if (e.kind == CatalogKind::identity) {
            names.push_back(e.name);
        }
    }
    return names;
}

}  // namespace

int run(int argc, const char* const* argv) {
    RunConfig cfg;
    std::string format_name = "text";

    CLI::App app{"exact and numerical verification of inverse binomial coefficient identities"};
    app.add_option("--n-max", cfg.n_max, "largest n in the identity parameter grids");
    app.add_option("--m-max", cfg.m_max, "largest power m in the identity parameter grids");
    app.add_option("--tol", cfg.tolerance, "tolerance for the sine-power series comparison");
    app.add_option("--samples", cfg.samples, "Monte Carlo sample count");
    app.add_option("--seed", cfg.seed, "seed for randomized grids and sampling");
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", cfg.out_path, "write the report to this file instead of stdout");
    app.add_flag("--strict-paper", cfg.strict_paper, "count documented paper-form misprints as failures");
    app.add_option("--instances", cfg.instances, "seeded random instances for the method check");
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list", "list the catalog, misprint ledger included");
    auto* verify_cmd = app.add_subcommand("verify", "verify named identities over their parameter grids");
    std::vector<std::string> names;
    verify_cmd->add_option("names", names, "identity names, as shown by list");
    auto* method_cmd = app.add_subcommand("method-check", "run the coefficient-level method checks");
    auto* numeric_cmd = app.add_subcommand("numeric", "run the floating-point validation checks");
    auto* all_cmd = app.add_subcommand("report-all", "run every identity, method and numeric check");
    for (auto* sub : {list_cmd, verify_cmd, method_cmd, numeric_cmd, all_cmd}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const ReportFormat format = parse_report_format(format_name);
        std::string output;
        bool failed = false;

        if (list_cmd->parsed()) {
            output = render_catalog(format);
        } else {
            const SuiteConfig suite{cfg.n_max, cfg.m_max, cfg.seed, cfg.instances};
            std::vector<ReportRow> rows;
            const auto add_identity_rows = [&rows, &suite](const std::vector<std::string>& sel) {
                for (const auto& r : run_suite(sel, suite)) {
                    rows.push_back(to_row(r));
                }
            };
            const auto add_method_rows = [&rows, &suite]() {
                for (const auto& r : run_method_checks(suite)) {
                    rows.push_back(to_row(r));
                }
            };
            const auto add_numeric_rows = [&rows, &cfg]() {
                for (const auto& r : run_numeric_checks({cfg.tolerance, cfg.samples, cfg.seed})) {
                    rows.push_back(to_row(r));
                }
            };

            if (verify_cmd->parsed()) {
                add_identity_rows(names);
            } else if (method_cmd->parsed()) {
                add_method_rows();
            } else if (numeric_cmd->parsed()) {
                add_numeric_rows();
            } else {
                add_identity_rows(all_identity_names());
                add_method_rows();
                add_numeric_rows();
            }

            for (const auto& row : rows) {
                if (!row.pass && (row.counts_toward_failure || cfg.strict_paper)) {
                    failed = true;
                }
            }
            output = render_report(std::move(rows), format);
        }

        if (cfg.out_path) {
            std::ofstream ofs(*cfg.out_path, std::ios::binary);
            if (!ofs) {
                std::cerr << "error: cannot open '" << *cfg.out_path << "' for writing\n";
                return 2;
            }
            ofs << output;
        } else {
            std::cout << output;
        }
        return failed ? 1 : 0;
    } catch (const unknown_identity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace betasum::cli
