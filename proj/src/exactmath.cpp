#include "bnc/exactmath.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>

namespace bnc {

namespace {

// Monotonically growing factorial table, fact_cache[n] = n!. Settled
// entries are immutable, so lookups share the lock and only extensions
// take it exclusively.
std::shared_mutex fact_mutex;
std::deque<mpz_class> fact_cache;

unsigned long to_index(const Nat& n, const char* who) {
    if (n < 0) {
        throw std::invalid_argument(std::string(who) +
                                    ": negative argument " + n.get_str());
    }
    if (!n.fits_ulong_p()) {
        throw std::overflow_error(std::string(who) + ": argument " +
                                  n.get_str() + " is too large");
    }
    return n.get_ui();
}

// Extends the table through n and returns n!. Copies out under the lock:
// a concurrent extension may touch the deque's bookkeeping.
mpz_class factorial_locked(unsigned long n) {
    {
        std::shared_lock<std::shared_mutex> read(fact_mutex);
        if (n < fact_cache.size()) {
            return fact_cache[n];
        }
    }
    std::unique_lock<std::shared_mutex> write(fact_mutex);
    if (fact_cache.empty()) {
        fact_cache.emplace_back(1);  // 0! = 1
    }
    while (fact_cache.size() <= n) {
        const mpz_class& last = fact_cache.back();
        fact_cache.push_back(last *
                             static_cast<unsigned long>(fact_cache.size()));
    }
    return fact_cache[n];
}

}  // namespace

Nat factorial(const Nat& n) {
    return factorial_locked(to_index(n, "factorial"));
}

Nat binomial(const Nat& n, const Int& k) {
    to_index(n, "binomial");
    if (k < 0 || k > n) {
        return 0;
    }
    Nat result = bnc::factorial(n);
    const Nat lower = bnc::factorial(k);
    const Nat upper = bnc::factorial(Nat(n - k));
    // k! (n-k)! divides n!, so both divisions are exact.
    mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), lower.get_mpz_t());
    mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), upper.get_mpz_t());
    return result;
}

Int exact_div(const Int& p, const Int& q) {
    if (q == 0) {
        throw std::invalid_argument("exact_div: division by zero");
    }
    if (!mpz_divisible_p(p.get_mpz_t(), q.get_mpz_t())) {
        throw NonIntegralResult("exact_div: " + q.get_str() +
                                " does not divide " + p.get_str());
    }
    Int result;
    mpz_divexact(result.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    return result;
}

Rational::Rational(const Int& num, const Int& den) : value_(num, den) {
    if (den == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    value_.canonicalize();
}

Int Rational::to_integer() const {
    if (!is_integer()) {
        throw NonIntegralResult("non-integral value " + str());
    }
    return numerator();
}

std::string Rational::str() const {
    if (is_integer()) {
        return numerator().get_str();
    }
    return numerator().get_str() + "/" + denominator().get_str();
}

Rational operator/(const Rational& x, const Rational& y) {
    if (y.value_ == 0) {
        throw std::invalid_argument("Rational: division by zero");
    }
    return Rational(mpq_class(x.value_ / y.value_),
                    Rational::canonical_tag{});
}

}  // namespace bnc
