#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <thread>

#include "bnc/invariants.hpp"

using bnc::Int;
using bnc::Nat;

namespace {

// Castelnuovo count evaluated term by term, kept independent of
// deg_gamma_sum: binomials from a Pascal triangle, one final division.
Nat castelnuovo_oracle(unsigned long a) {
    std::vector<std::vector<Nat>> triangle(2 * a + 1);
    for (std::size_t n = 0; n < triangle.size(); ++n) {
        triangle[n].assign(n + 1, 1);
        for (std::size_t k = 1; k < n; ++k) {
            triangle[n][k] = triangle[n - 1][k - 1] + triangle[n - 1][k];
        }
    }
    Int sum = 0;
    for (unsigned long i = 0; i + 2 <= a; ++i) {
        const Int term = triangle[a][a - 2 - i] * triangle[2 * a - i][a - 1 - i];
        sum += (i % 2 == 0) ? term : -term;
    }
    return bnc::exact_div(sum, a + 2);
}

}  // namespace

TEST_CASE("curve parameters") {
    const auto p = bnc::CurveParams::for_parameter(4);
    CHECK(p.g == 9);
    CHECK(p.deg_omega == 16);
    CHECK(p.deg_l == 6);
    CHECK(p.deg_m == 10);
    CHECK(p.deg_omega == p.deg_l + p.deg_m);
    CHECK_THROWS_AS(bnc::CurveParams::for_parameter(1), std::invalid_argument);
}

TEST_CASE("brill-noether number") {
    CHECK(bnc::rho(5, 1, 4) == 1);
    CHECK(bnc::rho(4, 1, 3) == 0);
    for (unsigned long a = 2; a <= 50; ++a) {
        CHECK(bnc::rho(2 * a + 1, 1, a + 2) == 1);
    }
}

TEST_CASE("exponent is the Catalan number") {
    CHECK(bnc::exponent(1) == 1);
    CHECK(bnc::exponent(2) == 2);
    CHECK(bnc::exponent(3) == 5);
    CHECK(bnc::exponent(4) == 14);
    CHECK(bnc::exponent(5) == 42);
    CHECK_THROWS_AS(bnc::exponent(0), std::invalid_argument);

    // (a+2) C(a+1) = 2 (2a+1) C(a)
    for (unsigned long a = 1; a <= 200; ++a) {
        CHECK((a + 2) * bnc::exponent(a + 1) ==
              2 * (2 * a + 1) * bnc::exponent(a));
    }
}

TEST_CASE("genus of the Brill-Noether curve") {
    CHECK(bnc::genus_w(2) == 11);
    CHECK(bnc::genus_w(4) == 169);
    // cross-checked two ways: the formula and e g + deg(gamma)
    CHECK(bnc::genus_w(3) == 43);
    CHECK(bnc::genus_w(3) == bnc::exponent(3) * 7 + bnc::deg_gamma_sum(3));
    CHECK_THROWS_AS(bnc::genus_w(1), std::invalid_argument);
}

TEST_CASE("castelnuovo terms are inspectable") {
    // a=5: 2100 - 840 + 140 - 7, then divided by 7
    const auto terms = bnc::castelnuovo_terms(5);
    REQUIRE(terms.size() == 4);
    CHECK(terms[0] == 2100);
    CHECK(terms[1] == -840);
    CHECK(terms[2] == 140);
    CHECK(terms[3] == -7);
    CHECK(bnc::deg_gamma_sum(5) == 199);
}

TEST_CASE("secant correspondence degree") {
    CHECK(bnc::deg_gamma_sum(2) == 1);
    CHECK(bnc::deg_gamma_sum(3) == 8);
    CHECK(bnc::deg_gamma_sum(4) == 43);
    for (unsigned long a = 2; a <= 40; ++a) {
        CHECK(bnc::deg_gamma_sum(a) == castelnuovo_oracle(a));
    }
}

TEST_CASE("closed form agrees with the alternating sum") {
    CHECK(bnc::deg_gamma_closed(2) == 1);
    CHECK(bnc::deg_gamma_closed(3) == 8);
    CHECK(bnc::deg_gamma_closed(4) == 43);
    for (unsigned long a = 2; a <= 120; ++a) {
        CHECK(bnc::deg_gamma_closed(a) == bnc::deg_gamma_sum(a));
    }
}

TEST_CASE("alpha and beta") {
    CHECK(bnc::alpha(2) == 1);
    CHECK(bnc::alpha(3) == 5);
    CHECK(bnc::alpha(4) == 21);
    CHECK(bnc::beta(2) == -1);
    CHECK(bnc::beta(3) == -4);
    CHECK(bnc::beta(4) == -13);
    // alpha = e (a-1)/2 in closed form
    for (unsigned long a = 2; a <= 120; ++a) {
        CHECK(2 * bnc::alpha(a) == bnc::exponent(a) * (a - 1));
    }
}

TEST_CASE("total degree m") {
    CHECK(bnc::total_degree_m(2) == 4);
    CHECK(bnc::total_degree_m(3) == 40);
    CHECK(bnc::total_degree_m(4) == 258);
}

TEST_CASE("gamma class") {
    const auto expr = bnc::gamma_class(3);
    CHECK(expr.str() == "omega^5 * L^-4");
    CHECK(expr.degree() == 40);
    CHECK(bnc::gamma_class(4).str() == "omega^21 * L^-13");
    CHECK(bnc::gamma_class(4).degree() == 258);
    // a=2 is the involution L -> omega (x) L^-1
    CHECK(bnc::gamma_class(2).str() == "omega^1 * L^-1");
    CHECK(bnc::gamma_class(2).degree() == 4);
}

TEST_CASE("secant sum class") {
    CHECK(bnc::secant_sum_class(4).str() == "M^30 * omega^-8");
    CHECK(bnc::secant_sum_class(4).degree() == 172);
    CHECK(bnc::secant_sum_class(3).str() == "M^4 * omega^-1");
    CHECK(bnc::secant_sum_class(3).degree() == 16);
    CHECK(bnc::secant_sum_class(2).str() == "M^0 * omega^0");
    CHECK(bnc::secant_sum_class(2).degree() == 0);
    for (unsigned long a = 2; a <= 60; ++a) {
        CHECK(bnc::secant_sum_class(a).degree() ==
              (2 * a - 4) * bnc::deg_gamma_sum(a));
    }
}

TEST_CASE("basis conversion ties the two class presentations together") {
    for (unsigned long a = 2; a <= 60; ++a) {
        const auto params = bnc::CurveParams::for_parameter(a);
        const auto gamma = bnc::gamma_class(a);
        const auto converted = bnc::to_m_omega_basis(gamma, params);
        CHECK(converted.degree() == gamma.degree());

        // secant sum = M^deg(gamma) (x) gamma-class^-1
        const auto secant = bnc::secant_sum_class(a);
        CHECK(secant.exp1 == bnc::deg_gamma_sum(a) - converted.exp1);
        CHECK(secant.exp2 == -converted.exp2);
    }
    CHECK_THROWS_AS(
        bnc::to_m_omega_basis(bnc::secant_sum_class(3),
                              bnc::CurveParams::for_parameter(3)),
        std::invalid_argument);
}

TEST_CASE("dimension of the complementary subvariety") {
    CHECK(bnc::dim_z(2) == 6);
    CHECK(bnc::dim_z(3) == 36);
    CHECK(bnc::dim_z(4) == 160);
    for (unsigned long a = 2; a <= 60; ++a) {
        CHECK(bnc::dim_z(a) == bnc::genus_w(a) - (2 * a + 1));
    }
}

TEST_CASE("contradiction guard") {
    CHECK(bnc::contradiction_guard(2));
    CHECK(bnc::contradiction_guard(3));
    CHECK(bnc::contradiction_guard(4));
}

TEST_CASE("class coefficient identity") {
    CHECK(bnc::class_coefficient_identity(2));
    CHECK(bnc::class_coefficient_identity(3));
    CHECK(bnc::class_coefficient_identity(10));
}

TEST_CASE("norm endomorphism quadratic") {
    const auto p2 = bnc::norm_endo_poly(2);
    CHECK(p2.coefficients == std::array<Int, 3>{1, 0, -1});
    CHECK(p2.roots == std::array<Int, 2>{1, -1});

    const auto p5 = bnc::norm_endo_poly(5);
    CHECK(p5.coefficients == std::array<Int, 3>{1, 3, -4});
    CHECK(p5.roots == std::array<Int, 2>{1, -4});

    const auto p14 = bnc::norm_endo_poly(14);
    CHECK(p14.coefficients == std::array<Int, 3>{1, 12, -13});
    CHECK(p14.roots == std::array<Int, 2>{1, -13});

    for (unsigned long e = 2; e <= 40; ++e) {
        const auto poly = bnc::norm_endo_poly(e);
        CHECK(poly.eval(poly.roots[0]) == 0);
        CHECK(poly.eval(poly.roots[1]) == 0);
        // expanding (x - 1)(x - (1-e)) gives the stored coefficients
        CHECK(poly.coefficients[1] == -(poly.roots[0] + poly.roots[1]));
        CHECK(poly.coefficients[2] == poly.roots[0] * poly.roots[1]);
    }
    CHECK_THROWS_AS(bnc::norm_endo_poly(1), std::invalid_argument);
}

TEST_CASE("full invariants for the worked cases") {
    const auto inv2 = bnc::full_invariants(2);
    CHECK(inv2.params.g == 5);
    CHECK(inv2.genus_w == 11);
    CHECK(inv2.exponent == 2);
    CHECK(inv2.deg_gamma == 1);
    CHECK(inv2.alpha == 1);
    CHECK(inv2.beta == -1);
    CHECK(inv2.m == 4);
    CHECK(inv2.dim_p == 5);
    CHECK(inv2.dim_z == 6);
    CHECK(inv2.rho == 1);

    const auto inv3 = bnc::full_invariants(3);
    CHECK(inv3.params.g == 7);
    CHECK(inv3.genus_w == 43);
    CHECK(inv3.exponent == 5);
    CHECK(inv3.deg_gamma == 8);
    CHECK(inv3.alpha == 5);
    CHECK(inv3.beta == -4);
    CHECK(inv3.m == 40);
    CHECK(inv3.dim_z == 36);
    CHECK(inv3.rho == 1);

    const auto inv4 = bnc::full_invariants(4);
    CHECK(inv4.params.g == 9);
    CHECK(inv4.genus_w == 169);
    CHECK(inv4.exponent == 14);
    CHECK(inv4.deg_gamma == 43);
    CHECK(inv4.alpha == 21);
    CHECK(inv4.beta == -13);
    CHECK(inv4.m == 258);
    CHECK(inv4.dim_z == 160);
    CHECK(inv4.rho == 1);

    CHECK_THROWS_AS(bnc::full_invariants(1), std::invalid_argument);
}

TEST_CASE("concurrent sweeps agree with the sequential result") {
    // Past every factorial the earlier cases touched, so the interleaved
    // workers race on extending the shared cache, not just on reads.
    constexpr unsigned long first = 450;
    constexpr unsigned long last = 506;
    constexpr unsigned workers = 4;
    std::vector<bnc::InvariantSet> parallel(last - first + 1);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (unsigned long a = first + w; a <= last; a += workers) {
                parallel[a - first] = bnc::full_invariants(a);
            }
        });
    }
    for (auto& thread : pool) {
        thread.join();
    }

    for (unsigned long a = first; a <= last; ++a) {
        const auto sequential = bnc::full_invariants(a);
        const auto& computed = parallel[a - first];
        CHECK(computed.genus_w == sequential.genus_w);
        CHECK(computed.exponent == sequential.exponent);
        CHECK(computed.deg_gamma == sequential.deg_gamma);
        CHECK(computed.alpha == sequential.alpha);
        CHECK(computed.dim_z == sequential.dim_z);
    }
}
