// bncalc: exact invariants of the Brill-Noether curve W^1_{a+2}(C) of a
// general curve of genus 2a+1, plus a verifier for the identities that
// hold among them. Exit codes: 0 success / all checks pass, 1 a check or
// example comparison failed, 2 usage error.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bnc/invariants.hpp"
#include "bnc/render.hpp"
#include "bnc/verify.hpp"

namespace {

bnc::Nat parse_nat(const std::string& text, const std::string& flag) {
    if (text.empty() ||
        text.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument(flag + " expects a non-negative integer, "
                                    "got '" + text + "'");
    }
    return bnc::Nat(text);
}

bnc::Nat parse_parameter(const std::string& text, const std::string& flag) {
    bnc::Nat value = parse_nat(text, flag);
    if (value < 2) {
        throw std::invalid_argument("a must be >= 2");
    }
    return value;
}

int run_invariants(const std::string& a_text, const std::string& format_text) {
    const bnc::OutputFormat format = bnc::parse_format(format_text);
    const bnc::Nat a = parse_parameter(a_text, "--a");
    std::cout << bnc::render_invariants(bnc::full_invariants(a), format);
    return 0;
}

int run_table(const std::string& min_text, const std::string& max_text,
              const std::string& format_text) {
    const bnc::OutputFormat format = bnc::parse_format(format_text);
    const bnc::Nat a_min = parse_parameter(min_text, "--a-min");
    const bnc::Nat a_max = parse_parameter(max_text, "--a-max");
    if (a_min > a_max) {
        throw std::invalid_argument("invalid range: --a-min exceeds --a-max");
    }
    std::vector<bnc::InvariantSet> rows;
    for (bnc::Nat a = a_min; a <= a_max; a += 1) {
        rows.push_back(bnc::full_invariants(a));
    }
    std::cout << bnc::render_table(rows, format);
    return 0;
}

int run_verify(const std::string& min_text, const std::string& max_text,
               const std::vector<std::string>& checks,
               const std::string& format_text) {
    const bnc::OutputFormat format = bnc::parse_format(format_text);
    // Check names are validated first so an unknown name is reported with
    // the list of valid ones even when the range flags are missing.
    bnc::validate_check_names(checks);
    if (min_text.empty() || max_text.empty()) {
        throw std::invalid_argument("--a-min and --a-max are required");
    }
    const bnc::Nat a_min = parse_parameter(min_text, "--a-min");
    const bnc::Nat a_max = parse_parameter(max_text, "--a-max");
    const bnc::VerificationReport report =
        bnc::run_checks(a_min, a_max, checks);
    std::cout << bnc::render_report(report, format);
    return report.all_passed ? 0 : 1;
}

int run_example(const std::string& name, const std::string& format_text) {
    const bnc::OutputFormat format = bnc::parse_format(format_text);
    const auto rows = bnc::reproduce_example(name);
    std::cout << bnc::render_example(name, rows, format);
    for (const bnc::ExampleComparison& row : rows) {
        if (!row.match) {
            return 1;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of the Brill-Noether curve W^1_{a+2}(C) "
                 "of a general genus-(2a+1) curve"};
    app.require_subcommand(1);

    std::string a_text;
    std::string a_min_text;
    std::string a_max_text;
    std::string format_text = "plain";
    std::string example_name;
    std::vector<std::string> checks;

    CLI::App* invariants =
        app.add_subcommand("invariants", "compute the invariants for one a");
    invariants->add_option("--a", a_text, "parameter a (>= 2)")->required();
    invariants->add_option("--format", format_text,
                           "json|csv|markdown|plain (default plain)");

    CLI::App* table =
        app.add_subcommand("table", "one row per a over a range");
    table->add_option("--a-min", a_min_text, "first a (>= 2)")->required();
    table->add_option("--a-max", a_max_text, "last a")->required();
    table->add_option("--format", format_text,
                      "json|csv|markdown|plain (default plain)");

    CLI::App* verify =
        app.add_subcommand("verify", "run the identity checks over a range");
    verify->add_option("--a-min", a_min_text, "first a (>= 2), required");
    verify->add_option("--a-max", a_max_text, "last a, required");
    verify->add_option("--check", checks,
                       "check name, repeatable (default: all checks)");
    verify->add_option("--format", format_text,
                       "json|csv|markdown|plain (default plain)");

    CLI::App* example =
        app.add_subcommand("example", "reproduce a worked example");
    example->add_option("name", example_name, "genus7 or genus9")->required();
    example->add_option("--format", format_text,
                        "json|csv|markdown|plain (default plain)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::CallForAllHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        std::cerr << err.what() << "\n";
        return 2;
    }

    try {
        if (invariants->parsed()) {
            return run_invariants(a_text, format_text);
        }
        if (table->parsed()) {
            return run_table(a_min_text, a_max_text, format_text);
        }
        if (verify->parsed()) {
            return run_verify(a_min_text, a_max_text, checks, format_text);
        }
        return run_example(example_name, format_text);
    } catch (const bnc::NonIntegralResult& err) {
        std::cerr << err.what() << "\n";
        return 1;
    } catch (const bnc::InternalInconsistency& err) {
        std::cerr << err.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& err) {
        std::cerr << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << err.what() << "\n";
        return 2;
    }
}
