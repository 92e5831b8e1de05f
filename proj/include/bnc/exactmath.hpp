#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace bnc {

// Arbitrary-precision integers (GMP). Nat marks values that are
// non-negative by contract; the alias documents intent at interfaces,
// producers are responsible for upholding it.
using Int = mpz_class;
using Nat = mpz_class;

/// Thrown when a division that must come out exact leaves a remainder.
/// Every integrality claim in the invariant formulas funnels through an
/// exact division, so arithmetic drift fails loudly instead of rounding.
class NonIntegralResult : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// n!, memoized. The cache only grows and may be shared across threads.
/// Call qualified: gmpxx also exports a ::factorial for its expression
/// templates, and that one does not memoize.
Nat factorial(const Nat& n);

/// C(n, k); 0 when k < 0 or k > n.
Nat binomial(const Nat& n, const Int& k);

/// p/q for q != 0. Throws NonIntegralResult unless q divides p.
Int exact_div(const Int& p, const Int& q);

/// Reduced fraction of arbitrary-precision integers. Canonical form is an
/// invariant: gcd(numerator, denominator) = 1 and denominator > 0, so equal
/// values always have identical representations.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(const Int& n) : value_(n) {}
    Rational(const Int& num, const Int& den);

    Int numerator() const { return value_.get_num(); }
    Nat denominator() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    /// The exact integer value; throws NonIntegralResult otherwise.
    Int to_integer() const;

    /// "p/q", or plain "p" when the value is integral.
    std::string str() const;

    friend Rational operator+(const Rational& x, const Rational& y) {
        return Rational(mpq_class(x.value_ + y.value_), canonical_tag{});
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return Rational(mpq_class(x.value_ - y.value_), canonical_tag{});
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return Rational(mpq_class(x.value_ * y.value_), canonical_tag{});
    }
    friend Rational operator/(const Rational& x, const Rational& y);
    friend Rational operator-(const Rational& x) {
        return Rational(mpq_class(-x.value_), canonical_tag{});
    }

    Rational& operator+=(const Rational& x) { value_ += x.value_; return *this; }
    Rational& operator-=(const Rational& x) { value_ -= x.value_; return *this; }
    Rational& operator*=(const Rational& x) { value_ *= x.value_; return *this; }
    Rational& operator/=(const Rational& x) { return *this = *this / x; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.value_ == y.value_;
    }
    friend bool operator!=(const Rational& x, const Rational& y) {
        return x.value_ != y.value_;
    }
    friend bool operator<(const Rational& x, const Rational& y) {
        return x.value_ < y.value_;
    }
    friend bool operator<=(const Rational& x, const Rational& y) {
        return x.value_ <= y.value_;
    }
    friend bool operator>(const Rational& x, const Rational& y) {
        return x.value_ > y.value_;
    }
    friend bool operator>=(const Rational& x, const Rational& y) {
        return x.value_ >= y.value_;
    }

private:
    // mpq arithmetic keeps canonical inputs canonical.
    struct canonical_tag {};
    Rational(const mpq_class& v, canonical_tag) : value_(v) {}

    mpq_class value_;  // kept canonical by construction
};

}  // namespace bnc
