#include "bnc/render.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace bnc {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_line(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) {
            line += ",";
        }
        line += cells[i];
    }
    return line + "\n";
}

std::string markdown_row(const std::vector<std::string>& cells) {
    std::string line = "|";
    for (const std::string& cell : cells) {
        line += " " + cell + " |";
    }
    return line + "\n";
}

std::string markdown_separator(std::size_t columns) {
    std::vector<std::string> dashes(columns, "---");
    return markdown_row(dashes);
}

// Right-aligned fixed-width columns; cells stay whitespace-free so the
// table splits back into the same tokens as the csv cells.
std::string aligned_table(const std::vector<std::string>& header,
                          const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
    }
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    std::ostringstream out;
    const auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c > 0) {
                out << "  ";
            }
            out << std::setw(static_cast<int>(width[c])) << cells[c];
        }
        out << "\n";
    };
    emit(header);
    for (const auto& row : rows) {
        emit(row);
    }
    return out.str();
}

ordered_json invariants_object(const InvariantSet& inv) {
    ordered_json obj;
    const auto& names = invariant_columns();
    const auto values = invariant_row(inv);
    for (std::size_t i = 0; i < names.size(); ++i) {
        obj[names[i]] = values[i];
    }
    return obj;
}

ordered_json failure_object(const CheckResult& result) {
    ordered_json obj;
    obj["a"] = result.a.get_str();
    obj["lhs"] = result.lhs;
    obj["rhs"] = result.rhs;
    obj["message"] = result.message;
    return obj;
}

ordered_json witness_object(const CheckResult& result) {
    ordered_json obj;
    obj["a"] = result.a.get_str();
    obj["lhs"] = result.lhs;
    obj["rhs"] = result.rhs;
    obj["passed"] = result.passed;
    obj["message"] = result.message;
    return obj;
}

std::string elapsed_string(double elapsed_ms) {
    return std::to_string(static_cast<std::int64_t>(elapsed_ms + 0.5));
}

std::size_t failure_count(const VerificationReport& report) {
    std::size_t failures = 0;
    for (const CheckReport& check : report.checks) {
        failures += check.failures.size();
    }
    return failures;
}

std::size_t passing_check_count(const VerificationReport& report) {
    std::size_t passing = 0;
    for (const CheckReport& check : report.checks) {
        if (check.failures.empty()) {
            passing += 1;
        }
    }
    return passing;
}

std::string summary_line(const VerificationReport& report) {
    std::ostringstream out;
    out << passing_check_count(report) << "/" << report.checks.size()
        << " checks, " << failure_count(report) << " failures";
    return out.str();
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "markdown") return OutputFormat::markdown;
    if (name == "plain") return OutputFormat::plain;
    throw std::invalid_argument("unknown format '" + name +
                                "'; valid formats: json, csv, markdown, plain");
}

const std::vector<std::string>& invariant_columns() {
    static const std::vector<std::string> columns = {
        "a",     "g", "genus_W", "exponent", "deg_gamma",
        "alpha", "beta", "m",    "dim_Z",    "rho"};
    return columns;
}

std::vector<std::string> invariant_row(const InvariantSet& inv) {
    return {inv.params.a.get_str(), inv.params.g.get_str(),
            inv.genus_w.get_str(),  inv.exponent.get_str(),
            inv.deg_gamma.get_str(), inv.alpha.get_str(),
            inv.beta.get_str(),     inv.m.get_str(),
            inv.dim_z.get_str(),    inv.rho.get_str()};
}

std::string render_invariants(const InvariantSet& inv, OutputFormat format) {
    const auto& names = invariant_columns();
    const auto values = invariant_row(inv);
    switch (format) {
        case OutputFormat::json:
            return invariants_object(inv).dump() + "\n";
        case OutputFormat::csv:
            return csv_line(names) + csv_line(values);
        case OutputFormat::markdown:
            return markdown_row(names) + markdown_separator(names.size()) +
                   markdown_row(values);
        case OutputFormat::plain: {
            std::string out;
            for (std::size_t i = 0; i < names.size(); ++i) {
                out += names[i] + " = " + values[i] + "\n";
            }
            return out;
        }
    }
    return {};
}

std::string render_table(const std::vector<InvariantSet>& rows,
                         OutputFormat format) {
    const auto& names = invariant_columns();
    switch (format) {
        case OutputFormat::json: {
            ordered_json array = ordered_json::array();
            for (const InvariantSet& inv : rows) {
                array.push_back(invariants_object(inv));
            }
            return array.dump() + "\n";
        }
        case OutputFormat::csv: {
            std::string out = csv_line(names);
            for (const InvariantSet& inv : rows) {
                out += csv_line(invariant_row(inv));
            }
            return out;
        }
        case OutputFormat::markdown: {
            std::string out = markdown_row(names) +
                              markdown_separator(names.size());
            for (const InvariantSet& inv : rows) {
                out += markdown_row(invariant_row(inv));
            }
            return out;
        }
        case OutputFormat::plain: {
            std::vector<std::vector<std::string>> cells;
            for (const InvariantSet& inv : rows) {
                cells.push_back(invariant_row(inv));
            }
            return aligned_table(names, cells);
        }
    }
    return {};
}

std::string render_report(const VerificationReport& report,
                          OutputFormat format) {
    switch (format) {
        case OutputFormat::json: {
            ordered_json obj;
            obj["range"] = {{"a_min", report.a_min.get_str()},
                            {"a_max", report.a_max.get_str()}};
            ordered_json checks = ordered_json::array();
            for (const CheckReport& check : report.checks) {
                ordered_json entry;
                entry["name"] = check.spec.name;
                entry["passes"] = std::to_string(check.passes);
                ordered_json failures = ordered_json::array();
                for (const CheckResult& failure : check.failures) {
                    failures.push_back(failure_object(failure));
                }
                entry["failures"] = failures;
                if (check.witness) {
                    entry["witness"] = witness_object(*check.witness);
                }
                checks.push_back(entry);
            }
            obj["checks"] = checks;
            obj["all_passed"] = report.all_passed;
            obj["elapsed_ms"] = elapsed_string(report.elapsed_ms);
            return obj.dump() + "\n";
        }
        case OutputFormat::csv: {
            std::string out = csv_line({"check", "passes", "failures"});
            for (const CheckReport& check : report.checks) {
                out += csv_line({check.spec.name, std::to_string(check.passes),
                                 std::to_string(check.failures.size())});
            }
            return out;
        }
        case OutputFormat::markdown: {
            std::string out = markdown_row({"check", "passes", "failures"}) +
                              markdown_separator(3);
            for (const CheckReport& check : report.checks) {
                out += markdown_row({check.spec.name,
                                     std::to_string(check.passes),
                                     std::to_string(check.failures.size())});
            }
            return out;
        }
        case OutputFormat::plain: {
            std::ostringstream out;
            out << "checks over a in [" << report.a_min.get_str() << ", "
                << report.a_max.get_str() << "]\n";
            for (const CheckReport& check : report.checks) {
                out << "  " << check.spec.name << ": " << check.passes
                    << " passed, " << check.failures.size() << " failed\n";
            }
            for (const CheckReport& check : report.checks) {
                for (const CheckResult& failure : check.failures) {
                    out << "  FAIL " << failure.check << " at a = "
                        << failure.a.get_str() << ": lhs " << failure.lhs
                        << ", rhs " << failure.rhs;
                    if (!failure.message.empty()) {
                        out << " (" << failure.message << ")";
                    }
                    out << "\n";
                }
            }
            out << summary_line(report) << "\n";
            out << "elapsed: " << elapsed_string(report.elapsed_ms) << " ms\n";
            return out.str();
        }
    }
    return {};
}

std::string render_example(const std::string& name,
                           const std::vector<ExampleComparison>& rows,
                           OutputFormat format) {
    bool all_match = true;
    for (const ExampleComparison& row : rows) {
        all_match = all_match && row.match;
    }
    switch (format) {
        case OutputFormat::json: {
            ordered_json obj;
            obj["example"] = name;
            ordered_json array = ordered_json::array();
            for (const ExampleComparison& row : rows) {
                ordered_json entry;
                entry["label"] = row.label;
                entry["computed"] = row.computed;
                entry["expected"] = row.expected;
                entry["match"] = row.match;
                array.push_back(entry);
            }
            obj["rows"] = array;
            obj["all_match"] = all_match;
            return obj.dump() + "\n";
        }
        case OutputFormat::csv: {
            std::string out = csv_line({"label", "computed", "expected",
                                        "match"});
            for (const ExampleComparison& row : rows) {
                out += csv_line({row.label, row.computed, row.expected,
                                 row.match ? "true" : "false"});
            }
            return out;
        }
        case OutputFormat::markdown: {
            std::string out = markdown_row({"label", "computed", "expected",
                                            "match"}) +
                              markdown_separator(4);
            for (const ExampleComparison& row : rows) {
                out += markdown_row({row.label, row.computed, row.expected,
                                     row.match ? "ok" : "MISMATCH"});
            }
            return out;
        }
        case OutputFormat::plain: {
            std::ostringstream out;
            out << name << " example\n";
            for (const ExampleComparison& row : rows) {
                out << "  " << row.label << ": computed " << row.computed
                    << ", expected " << row.expected << ", "
                    << (row.match ? "ok" : "MISMATCH") << "\n";
            }
            out << (all_match ? "all values match" : "MISMATCHES FOUND")
                << "\n";
            return out.str();
        }
    }
    return {};
}

}  // namespace bnc
