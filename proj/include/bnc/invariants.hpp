#pragma once

#include <array>
#include <string>
#include <vector>

#include "bnc/exactmath.hpp"

namespace bnc {

/// Thrown by full_invariants when a cross-identity among the computed
/// fields fails. Signals an implementation bug, never bad input.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Derived degrees for a general curve of genus g = 2a+1 carrying a pencil
/// L of degree a+2 and the residual series M = omega - L of degree 3a-2.
struct CurveParams {
    Nat a;
    Nat g;          // 2a + 1
    Nat deg_omega;  // 2g - 2 = 4a
    Nat deg_l;      // a + 2
    Nat deg_m;      // 3a - 2

    /// Builds the parameter set for a >= 2.
    static CurveParams for_parameter(const Nat& a);
};

/// One generator of a rank-two divisor class basis.
struct BasisGenerator {
    std::string name;
    Int degree;
};

bool operator==(const BasisGenerator& x, const BasisGenerator& y);

/// Formal Z-linear combination gen1^exp1 (x) gen2^exp2 in a fixed ordered
/// basis. The degree is always evaluated from the exponents, never stored.
struct DivisorClassExpr {
    BasisGenerator gen1;
    BasisGenerator gen2;
    Int exp1;
    Int exp2;

    Int degree() const { return exp1 * gen1.degree + exp2 * gen2.degree; }
    /// Rendering such as "omega^5 * L^-4".
    std::string str() const;
};

bool operator==(const DivisorClassExpr& x, const DivisorClassExpr& y);

/// The monic quadratic x^2 + (e-2) x - (e-1) satisfied by the endomorphism
/// induced by a fixed-point-free symmetric correspondence of exponent e.
/// It factors as (x - 1)(x - (1 - e)).
struct NormEndoPoly {
    Nat e;
    std::array<Int, 3> coefficients;  // leading coefficient first
    std::array<Int, 2> roots;         // {1, 1 - e}

    Int eval(const Int& x) const;
};

/// Every numerical invariant attached to the Brill-Noether curve
/// W^1_{a+2}(C) of a general curve C of genus 2a+1.
struct InvariantSet {
    CurveParams params;
    Nat genus_w;    // genus of W^1_{a+2}(C)
    Nat exponent;   // Prym-Tyurin exponent, the a-th Catalan number
    Nat deg_gamma;  // degree of the secant correspondence
    Int alpha;      // omega-exponent of the correspondence class
    Int beta;       // L-exponent of the correspondence class, 1 - e
    Nat m;          // total degree (a+2) deg(gamma)
    Nat dim_p;      // dimension of the Prym-Tyurin subvariety, = g
    Nat dim_z;      // dimension of the complementary subvariety
    Int rho;        // Brill-Noether number rho(g, 1, a+2), = 1
};

/// Brill-Noether number rho(g, r, d) = g - (r+1)(g - d + r).
Int rho(const Nat& g, const Nat& r, const Nat& d);

/// The a-th Catalan number (2a)! / (a! (a+1)!), for a >= 1. This is the
/// exponent of the Prym-Tyurin variety attached to W^1_{a+2}(C).
Nat exponent(const Nat& a);

/// Genus of the Brill-Noether curve,
///     g(W) = a/(a+2) * 2 (2a+1)! / (a! (a+1)!) + 1.
/// The middle factor reads 2*(g!) and not (2g)!; the two known cases
/// (a=2 -> 11, a=4 -> 169) pin that reading down, see the tests.
Nat genus_w(const Nat& a);

/// The signed terms (-1)^i C(a, a-2-i) C(2a-i, a-1-i) for i = 0..a-2,
/// before the common 1/(a+2) factor is applied.
std::vector<Int> castelnuovo_terms(const Nat& a);

/// Degree of the secant correspondence as the Castelnuovo count
///     C(a-1, 3a-2, 2a+1) = sum_{i=0}^{a-2} (-1)^i/(a+2)
///                          * C(a, a-2-i) * C(2a-i, a-1-i),
/// summed exactly and certified integral.
Nat deg_gamma_sum(const Nat& a);

/// Independent closed form 1 + e (2a+1)(a-2)/(a+2) for the same count,
/// with the division enforced exact.
Nat deg_gamma_closed(const Nat& a);

/// alpha = (a+2)/(4a) * (g(W) - 1 - e (g-1)), certified integral.
Int alpha(const Nat& a);

/// beta = 1 - e.
Int beta(const Nat& a);

/// m = (a+2) deg(gamma), the degree of the product of the deg(gamma)
/// line bundles in the correspondence image.
Nat total_degree_m(const Nat& a);

/// The class omega^alpha (x) L^(1-e) of the product over gamma(L).
DivisorClassExpr gamma_class(const Nat& a);

/// The class of the sum of all secant divisors, in the (M, omega) basis:
/// M^(deg(gamma) - (e-1)) (x) omega^((e-1) - alpha). Its degree is
/// (2a-4) deg(gamma), the total degree of the secant divisors.
DivisorClassExpr secant_sum_class(const Nat& a);

/// Rewrites an expression over (omega, L) in the (M, omega) basis by
/// substituting L = omega (x) M^-1. Degrees are preserved.
DivisorClassExpr to_m_omega_basis(const DivisorClassExpr& expr,
                                  const CurveParams& params);

/// dim Z = ((e-1) g(W) + deg(gamma)) / e, the dimension of the
/// complementary abelian subvariety; the division is enforced exact.
Nat dim_z(const Nat& a);

/// True iff (e-2) g(W) != -2 deg(gamma). Equality would force the
/// degenerate case ruled out by e >= 2 and deg(gamma) > 0.
bool contradiction_guard(const Nat& a);

/// True iff 1/(a! (a+1)!) = e/(2a)! as exact rationals.
bool class_coefficient_identity(const Nat& a);

/// The norm-endomorphism quadratic for exponent e >= 2.
NormEndoPoly norm_endo_poly(const Nat& e);

/// Computes the complete invariant set for one parameter value and
/// cross-checks every identity among the fields before returning.
InvariantSet full_invariants(const Nat& a);

}  // namespace bnc
