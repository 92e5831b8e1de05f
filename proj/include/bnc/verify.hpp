#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bnc/invariants.hpp"

namespace bnc {

class UnknownCheckName : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnknownExampleName : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The formula surface the checks evaluate. Virtual so a test can swap in a
/// deliberately wrong formula and confirm the suite catches it; the default
/// implementation forwards to the invariant operations.
class InvariantOps {
public:
    virtual ~InvariantOps() = default;

    virtual Nat exponent(const Nat& a) const { return bnc::exponent(a); }
    virtual Nat genus_w(const Nat& a) const { return bnc::genus_w(a); }
    virtual Nat deg_gamma_sum(const Nat& a) const {
        return bnc::deg_gamma_sum(a);
    }
    virtual Nat deg_gamma_closed(const Nat& a) const {
        return bnc::deg_gamma_closed(a);
    }
    virtual Int alpha(const Nat& a) const { return bnc::alpha(a); }
    virtual Int beta(const Nat& a) const { return bnc::beta(a); }
    virtual Nat total_degree_m(const Nat& a) const {
        return bnc::total_degree_m(a);
    }
    virtual DivisorClassExpr gamma_class(const Nat& a) const {
        return bnc::gamma_class(a);
    }
    virtual DivisorClassExpr secant_sum_class(const Nat& a) const {
        return bnc::secant_sum_class(a);
    }
    virtual Nat dim_z(const Nat& a) const { return bnc::dim_z(a); }
    virtual Int rho(const Nat& g, const Nat& r, const Nat& d) const {
        return bnc::rho(g, r, d);
    }
    virtual NormEndoPoly norm_endo_poly(const Nat& e) const {
        return bnc::norm_endo_poly(e);
    }
};

const InvariantOps& default_invariant_ops();

/// A named identity over the parameter a.
struct CheckSpec {
    std::string name;         // stable identifier, e.g. "lemma-rel"
    std::string description;  // one-line statement
    std::string reference;    // the identity in symbols
};

/// Outcome of one check at one parameter value. For equality checks,
/// passed means lhs and rhs render identically; lhs and rhs are exact
/// decimal strings, never rounded.
struct CheckResult {
    std::string check;
    Nat a;
    bool passed = false;
    std::string lhs;
    std::string rhs;
    std::string message;
};

/// Aggregate for one check over a range: the pass count is always
/// reported, failures keep full detail, and the witness holds the last
/// evaluated result whether it passed or not.
struct CheckReport {
    CheckSpec spec;
    std::uint64_t passes = 0;
    std::vector<CheckResult> failures;  // ascending in a
    std::optional<CheckResult> witness;
};

struct VerificationReport {
    Nat a_min;
    Nat a_max;
    std::vector<CheckReport> checks;  // ordered by check name
    bool all_passed = true;
    double elapsed_ms = 0.0;
};

/// The registry, ordered by check name. Every identity of the invariant
/// set has exactly one entry.
const std::vector<CheckSpec>& check_specs();

/// Throws UnknownCheckName, listing the valid names, unless every entry
/// names a registered check.
void validate_check_names(const std::vector<std::string>& names);

/// Evaluates the selected checks (all when empty) at every a in
/// [a_min, a_max] with 2 <= a_min <= a_max. A NonIntegralResult raised by
/// a formula becomes a failing result, never a crash. The report does not
/// depend on evaluation order.
VerificationReport run_checks(const Nat& a_min, const Nat& a_max,
                              const std::vector<std::string>& selected = {},
                              const InvariantOps& ops = default_invariant_ops());

/// One row of a worked-example comparison.
struct ExampleComparison {
    std::string label;
    std::string computed;
    std::string expected;
    bool match = false;
};

/// Recomputes a worked example ("genus7" or "genus9") and compares every
/// value against its known result.
std::vector<ExampleComparison> reproduce_example(const std::string& name);

}  // namespace bnc
