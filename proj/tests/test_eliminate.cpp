#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polarsamp/circuit.hpp"
#include "polarsamp/eliminate.hpp"

using namespace polarsamp;

namespace {

Rat Q(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

DensePoly dense_of(const std::string& text, int n) {
    return expand_to_dense(parse_expression(text, n), 0, 64);
}

EliminationBasis saturated(const std::string& text, int n, int i, const CoordinateChange& ch) {
    return saturate_by_delta(polar_system(dense_of(text, n), i, ch), {});
}

}  // namespace

TEST_CASE("lex Groebner basis of a simple zero-dimensional ideal") {
    auto gb = groebner_basis({dense_of("x1^2+x2^2-1", 2), dense_of("x1", 2)});
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == dense_of("x2^2-1", 2));
    CHECK(gb[1] == dense_of("x1", 2));
    CHECK(normal_form(dense_of("x1^3 + x2^4", 2), gb) == dense_of("1", 2));
    CHECK(normal_form(dense_of("x1*x2", 2), gb).is_zero());
}

TEST_CASE("Groebner basis detects the unit ideal") {
    auto gb = groebner_basis({dense_of("x1", 2), dense_of("x1 - 1", 2)});
    REQUIRE(gb.size() == 1);
    CHECK(gb[0].is_constant());
}

TEST_CASE("standard monomials of a box ideal") {
    auto gb = groebner_basis({dense_of("x1^2 - 2", 2), dense_of("x2^3 - x2", 2)});
    auto sm = standard_monomials(gb);
    CHECK(sm.size() == 6);  // {1, x2, x2^2} x {1, x1}
}

TEST_CASE("circle saturation is zero-dimensional with two points") {
    EliminationBasis b = saturated("x1^2+x2^2-1", 2, 1, identity_change(2, 1));
    CHECK(b.saturated);
    CHECK(dimension_verdict(b) == DimensionVerdict::ZeroDimensional);
    CHECK(standard_monomials(b.generators).size() == 2);
}

TEST_CASE("hyperbola with identity coordinates is empty") {
    // {x1*x2 - 1, x2} is inconsistent
    EliminationBasis b = saturated("x1*x2-1", 2, 1, identity_change(2, 1));
    CHECK(dimension_verdict(b) == DimensionVerdict::Empty);
}

TEST_CASE("sphere polar variety at i = 1 is a curve") {
    EliminationBasis b = saturated("x1^2+x2^2+x3^2-1", 3, 1, identity_change(3, 1));
    CHECK(dimension_verdict(b) == DimensionVerdict::PositiveDimensional);
}

TEST_CASE("saturation removes the complex nodes of two tangent circles") {
    // f = ((x1-2)^2+x2^2-1)((x1+2)^2+x2^2-1) has gradient zero at (0, +-i*sqrt(3));
    // without saturation those nodes survive, with saturation six points drop to four.
    std::string f = "((x1-2)^2+x2^2-1)*((x1+2)^2+x2^2-1)";
    PolarSystem sys = polar_system(dense_of(f, 2), 1, identity_change(2, 1));
    auto plain = groebner_basis(sys.equations);
    EliminationBasis sat = saturate_by_delta(sys);
    CHECK(dimension_verdict(sat) == DimensionVerdict::ZeroDimensional);
    EliminationBasis plain_b{plain, false};
    auto rad_plain = radicalize(plain_b);
    CHECK(standard_monomials(rad_plain.generators).size() == 6);
    CHECK(standard_monomials(radicalize(sat).generators).size() == 4);
}

TEST_CASE("extract circle representation with identity coordinates") {
    PolarSystem sys = polar_system(dense_of("x1^2+x2^2-1", 2), 1, identity_change(2, 1));
    UnivariateRepresentation rep = extract_representation(saturate_by_delta(sys), sys);
    CHECK(rep.q == UPoly{Q(-1), Q(0), Q(1)});
    REQUIRE(rep.p.size() == 2);
    CHECK(rep.p[0].is_zero());
    CHECK(rep.p[1] == UPoly::variable());
    CHECK(rep.discriminant == Q(4));
}

TEST_CASE("extract ellipsoid representation with identity coordinates") {
    PolarSystem sys = polar_system(dense_of("x1^2+2*x2^2+3*x3^2-1", 3), 2, identity_change(3, 2));
    UnivariateRepresentation rep = extract_representation(saturate_by_delta(sys), sys);
    CHECK(rep.q == UPoly{Q(-1, 3), Q(0), Q(1)});
    CHECK(rep.p[0].is_zero());
    CHECK(rep.p[1].is_zero());
    CHECK(rep.p[2] == UPoly::variable());
}

TEST_CASE("degenerate projection raises ShapePositionFailure") {
    // all four critical points of the two circles share x2 = 0
    std::string f = "((x1-2)^2+x2^2-1)*((x1+2)^2+x2^2-1)";
    PolarSystem sys = polar_system(dense_of(f, 2), 1, identity_change(2, 1));
    EliminationBasis b = saturate_by_delta(sys);
    CHECK_THROWS_AS(extract_representation(b, sys), ShapePositionFailure);
}

TEST_CASE("generic coordinates give the two-circles a degree-4 representation") {
    std::string f = "((x1-2)^2+x2^2-1)*((x1+2)^2+x2^2-1)";
    DensePoly d = dense_of(f, 2);
    for (uint64_t seed = 1;; ++seed) {
        REQUIRE(seed < 6);
        CoordinateChange ch = sample_coordinate_change(2, 1, seed, 5);
        PolarSystem sys = polar_system(d, 1, ch);
        EliminationBasis b = saturate_by_delta(sys);
        REQUIRE(dimension_verdict(b) == DimensionVerdict::ZeroDimensional);
        UnivariateRepresentation rep;
        try {
            rep = extract_representation(b, sys);
        } catch (const ShapePositionFailure&) {
            continue;
        }
        CHECK(rep.q.degree() == 4);
        CHECK(verify_representation(rep, sys).ok());
        break;
    }
}

TEST_CASE("verification accepts the circle and rejects a corrupted parametrization") {
    PolarSystem sys = polar_system(dense_of("x1^2+x2^2-1", 2), 1, identity_change(2, 1));
    UnivariateRepresentation rep = extract_representation(saturate_by_delta(sys), sys);
    VerificationReport ok = verify_representation(rep, sys);
    CHECK(ok.equations_vanish);
    CHECK(ok.delta_coprime);
    CHECK(ok.jacobian_unit);
    CHECK(ok.separable);
    CHECK(ok.ok());

    UnivariateRepresentation bad = rep;
    bad.p[1] = bad.p[1] + UPoly::constant(Q(1));
    VerificationReport rej = verify_representation(bad, sys);
    CHECK_FALSE(rej.equations_vanish);
    CHECK_FALSE(rej.ok());
    CHECK_FALSE(rej.failures.empty());
}

TEST_CASE("radicalize is idempotent on a radical basis") {
    EliminationBasis b = saturated("x1^2+x2^2-1", 2, 1, identity_change(2, 1));
    EliminationBasis r = radicalize(b);
    CHECK(standard_monomials(r.generators).size() == standard_monomials(b.generators).size());
    EliminationBasis rr = radicalize(r);
    CHECK(r.generators == rr.generators);
}

TEST_CASE("bezout bound") {
    CHECK(bezout_bound(2, 2) == 2);
    CHECK(bezout_bound(4, 2) == 12);
    CHECK(bezout_bound(2, 3) == 2);
    CHECK(bezout_bound(4, 3) == 36);
    CHECK(bezout_bound(3, 4) == 24);
}

TEST_CASE("polar degrees of the circle") {
    DensePoly f = dense_of("x1^2+x2^2-1", 2);
    CHECK(polar_degree(f, 1, 7) == 2);
    CHECK(polar_degree(f, 0, 7) == 2);
}

TEST_CASE("polar degree of the two circles stays below the bound") {
    DensePoly f = dense_of("((x1-2)^2+x2^2-1)*((x1+2)^2+x2^2-1)", 2);
    long d1 = polar_degree(f, 1, 3, 5);
    CHECK(d1 == 4);
    CHECK(Int(d1) <= bezout_bound(4, 2));
}

TEST_CASE("polar degrees respect the Bezout bound on random quadrics") {
    for (uint64_t seed = 0; seed < 3; ++seed) {
        DensePoly f = dense_of("x1^2+2*x2^2+3*x3^2-1", 3);
        for (int i = 0; i < 3; ++i) {
            long d = polar_degree(f, i, seed, 10);
            CHECK(d >= 1);
            CHECK(Int(d) <= bezout_bound(2, 3));
        }
    }
}
