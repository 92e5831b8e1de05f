#include "bnc/invariants.hpp"

#include <sstream>

namespace bnc {

namespace {

void require_a(const Nat& a, long minimum, const char* who) {
    if (a < minimum) {
        std::ostringstream msg;
        msg << who << ": a must be >= " << minimum << ", got " << a.get_str();
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

CurveParams CurveParams::for_parameter(const Nat& a) {
    require_a(a, 2, "CurveParams");
    CurveParams p;
    p.a = a;
    p.g = 2 * a + 1;
    p.deg_omega = 4 * a;
    p.deg_l = a + 2;
    p.deg_m = 3 * a - 2;
    return p;
}

bool operator==(const BasisGenerator& x, const BasisGenerator& y) {
    return x.name == y.name && x.degree == y.degree;
}

std::string DivisorClassExpr::str() const {
    return gen1.name + "^" + exp1.get_str() + " * " + gen2.name + "^" +
           exp2.get_str();
}

bool operator==(const DivisorClassExpr& x, const DivisorClassExpr& y) {
    return x.gen1 == y.gen1 && x.gen2 == y.gen2 && x.exp1 == y.exp1 &&
           x.exp2 == y.exp2;
}

Int NormEndoPoly::eval(const Int& x) const {
    return coefficients[0] * x * x + coefficients[1] * x + coefficients[2];
}

Int rho(const Nat& g, const Nat& r, const Nat& d) {
    return g - (r + 1) * (g - d + r);
}

Nat exponent(const Nat& a) {
    require_a(a, 1, "exponent");
    return exact_div(bnc::factorial(Nat(2 * a)),
                     bnc::factorial(a) * bnc::factorial(Nat(a + 1)));
}

Nat genus_w(const Nat& a) {
    require_a(a, 2, "genus_w");
    const Nat g = 2 * a + 1;
    const Rational value = Rational(a, a + 2) *
                           Rational(2 * bnc::factorial(g),
                                    bnc::factorial(a) *
                                        bnc::factorial(Nat(a + 1))) +
                           Rational(1);
    return value.to_integer();
}

std::vector<Int> castelnuovo_terms(const Nat& a) {
    require_a(a, 2, "castelnuovo_terms");
    std::vector<Int> terms;
    bool negative = false;
    for (Nat i = 0; i <= a - 2; i += 1) {
        Int term = binomial(a, a - 2 - i) * binomial(2 * a - i, a - 1 - i);
        terms.push_back(negative ? Int(-term) : term);
        negative = !negative;
    }
    return terms;
}

Nat deg_gamma_sum(const Nat& a) {
    Int sum = 0;
    for (const Int& term : castelnuovo_terms(a)) {
        sum += term;
    }
    // The 1/(a+2) factor is applied once, after the alternating sum.
    return Rational(sum, a + 2).to_integer();
}

Nat deg_gamma_closed(const Nat& a) {
    require_a(a, 2, "deg_gamma_closed");
    return 1 + exact_div(exponent(a) * (2 * a + 1) * (a - 2), a + 2);
}

Int alpha(const Nat& a) {
    require_a(a, 2, "alpha");
    const Int bracket = genus_w(a) - 1 - exponent(a) * (2 * a);
    return (Rational(a + 2, 4 * a) * Rational(bracket)).to_integer();
}

Int beta(const Nat& a) {
    require_a(a, 2, "beta");
    return 1 - exponent(a);
}

Nat total_degree_m(const Nat& a) {
    require_a(a, 2, "total_degree_m");
    return (a + 2) * deg_gamma_sum(a);
}

DivisorClassExpr gamma_class(const Nat& a) {
    const CurveParams p = CurveParams::for_parameter(a);
    return DivisorClassExpr{{"omega", p.deg_omega}, {"L", p.deg_l},
                            alpha(a), beta(a)};
}

DivisorClassExpr secant_sum_class(const Nat& a) {
    const CurveParams p = CurveParams::for_parameter(a);
    const Nat e = exponent(a);
    return DivisorClassExpr{{"M", p.deg_m}, {"omega", p.deg_omega},
                            deg_gamma_sum(a) - (e - 1), (e - 1) - alpha(a)};
}

DivisorClassExpr to_m_omega_basis(const DivisorClassExpr& expr,
                                  const CurveParams& params) {
    if (expr.gen1.name != "omega" || expr.gen2.name != "L") {
        throw std::invalid_argument(
            "to_m_omega_basis: expression is not in the (omega, L) basis");
    }
    // omega^x L^y = omega^(x+y) M^(-y) under L = omega (x) M^-1.
    return DivisorClassExpr{{"M", params.deg_m}, {"omega", params.deg_omega},
                            -expr.exp2, expr.exp1 + expr.exp2};
}

Nat dim_z(const Nat& a) {
    require_a(a, 2, "dim_z");
    const Nat e = exponent(a);
    return exact_div((e - 1) * genus_w(a) + deg_gamma_sum(a), e);
}

bool contradiction_guard(const Nat& a) {
    require_a(a, 2, "contradiction_guard");
    return (exponent(a) - 2) * genus_w(a) != -2 * deg_gamma_sum(a);
}

bool class_coefficient_identity(const Nat& a) {
    require_a(a, 2, "class_coefficient_identity");
    return Rational(1, bnc::factorial(a) * bnc::factorial(Nat(a + 1))) ==
           Rational(exponent(a), bnc::factorial(Nat(2 * a)));
}

NormEndoPoly norm_endo_poly(const Nat& e) {
    if (e < 2) {
        throw std::invalid_argument("norm_endo_poly: e must be >= 2, got " +
                                    e.get_str());
    }
    return NormEndoPoly{e, {Int(1), e - 2, -(e - 1)}, {Int(1), 1 - e}};
}

namespace {

void require_identity(const char* label, const Int& lhs, const Int& rhs,
                      const Nat& a) {
    if (lhs != rhs) {
        throw InternalInconsistency("full_invariants(a=" + a.get_str() +
                                    "): " + label + ": " + lhs.get_str() +
                                    " != " + rhs.get_str());
    }
}

}  // namespace

InvariantSet full_invariants(const Nat& a) {
    InvariantSet inv;
    inv.params = CurveParams::for_parameter(a);
    inv.genus_w = genus_w(a);
    inv.exponent = exponent(a);
    inv.deg_gamma = deg_gamma_sum(a);
    inv.alpha = alpha(a);
    inv.beta = beta(a);
    inv.m = total_degree_m(a);
    inv.dim_p = inv.params.g;
    inv.dim_z = dim_z(a);
    inv.rho = rho(inv.params.g, 1, inv.params.deg_l);

    const Nat& g = inv.params.g;
    const Nat& e = inv.exponent;
    require_identity("g(W) - deg(gamma) = e g",
                     inv.genus_w - inv.deg_gamma, e * g, a);
    require_identity("deg(gamma) sum = closed form",
                     inv.deg_gamma, deg_gamma_closed(a), a);
    require_identity("2 alpha = e (a-1)", 2 * inv.alpha, e * (a - 1), a);
    require_identity("alpha deg(omega) + beta deg(L) = m",
                     inv.alpha * inv.params.deg_omega +
                         inv.beta * inv.params.deg_l,
                     inv.m, a);
    require_identity("secant-sum degree = (2a-4) deg(gamma)",
                     secant_sum_class(a).degree(),
                     (2 * a - 4) * inv.deg_gamma, a);
    require_identity("dim Z = g(W) - g", inv.dim_z, inv.genus_w - g, a);
    require_identity("e dim Z = (e-1) g(W) + deg(gamma)",
                     e * inv.dim_z, (e - 1) * inv.genus_w + inv.deg_gamma, a);
    if ((e - 2) * inv.genus_w == -2 * inv.deg_gamma) {
        throw InternalInconsistency("full_invariants(a=" + a.get_str() +
                                    "): (e-2) g(W) = -2 deg(gamma)");
    }
    if (!class_coefficient_identity(a)) {
        throw InternalInconsistency("full_invariants(a=" + a.get_str() +
                                    "): 1/(a!(a+1)!) != e/(2a)!");
    }
    require_identity("rho = 1", inv.rho, 1, a);
    require_identity("(a+2) C(a+1) = 2 (2a+1) C(a)",
                     (a + 2) * exponent(a + 1), 2 * (2 * a + 1) * e, a);
    const NormEndoPoly poly = norm_endo_poly(e);
    require_identity("p(1) = 0", poly.eval(poly.roots[0]), 0, a);
    require_identity("p(1-e) = 0", poly.eval(poly.roots[1]), 0, a);
    return inv;
}

}  // namespace bnc
