#pragma once

#include <string>
#include <vector>

#include "bnc/invariants.hpp"
#include "bnc/verify.hpp"

namespace bnc {

enum class OutputFormat { json, csv, markdown, plain };

/// Parses "json" | "csv" | "markdown" | "plain"; throws std::invalid_argument
/// otherwise.
OutputFormat parse_format(const std::string& name);

/// Fixed column order shared by every output format. Values are emitted as
/// decimal strings everywhere so arbitrary-precision integers survive any
/// consumer.
const std::vector<std::string>& invariant_columns();

/// The row for one invariant set, in column order.
std::vector<std::string> invariant_row(const InvariantSet& inv);

std::string render_invariants(const InvariantSet& inv, OutputFormat format);
std::string render_table(const std::vector<InvariantSet>& rows,
                         OutputFormat format);
std::string render_report(const VerificationReport& report,
                          OutputFormat format);
std::string render_example(const std::string& name,
                           const std::vector<ExampleComparison>& rows,
                           OutputFormat format);

}  // namespace bnc
