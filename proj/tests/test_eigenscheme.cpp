#include <doctest.h>

#include "curves/catalog.hpp"
#include "curves/eigenscheme.hpp"

using namespace curves;

namespace {
Polynomial zpow(int k) { return Polynomial::term(Monomial::var(2, k), Rational(1)); }
}  // namespace

TEST_CASE("derivations") {
    Derivation e = Derivation::euler();
    CHECK(e.degree() == 1);
    CHECK(e.primitive());
    Polynomial f = parse("x^4+y^4+z^4");
    CHECK_FALSE(e.annihilates(f));

    Derivation t = Derivation::tangent(f);
    CHECK(t.a == parse("4y^3"));
    CHECK(t.b == parse("-4x^3"));
    CHECK(t.c.is_zero());
    CHECK(t.annihilates(f));
    // The tangent derivation annihilates every member of the z^d pencil.
    CHECK(t.annihilates(f + zpow(4) * Rational(7, 3)));
    CHECK_THROWS(Derivation{parse("x"), parse("y^2"), parse("z")}.degree());
}

TEST_CASE("eigenscheme ideal minors") {
    Derivation theta{parse("y"), parse("x"), Polynomial::zero()};
    EigenschemeIdeal ideal = eigenscheme_ideal(theta);
    CHECK(ideal.minors[0] == parse("-zx"));       // y*c - z*b
    CHECK(ideal.minors[1] == parse("zy"));        // z*a - x*c
    CHECK(ideal.minors[2] == parse("x^2 - y^2")); // x*b - y*a
}

TEST_CASE("zero-dimensionality detection") {
    Engine eng;
    // All minors share the factor z: a whole line of eigenpoints.
    Derivation bad{parse("x"), parse("y"), Polynomial::zero()};
    CHECK_FALSE(is_zero_dimensional(eigenscheme_ideal(bad), eng));
    // A generic diagonal derivation has the three coordinate points only.
    Derivation good{parse("x"), parse("2y"), parse("3z")};
    CHECK(is_zero_dimensional(eigenscheme_ideal(good), eng));
}

TEST_CASE("derivation criterion classifies the free member") {
    Engine eng;
    Polynomial f = named_curve("Cb").projective;
    JacobianTriple j = jacobian_triple(f);
    auto ker = syzygy_kernel(j, mdr(j, eng), eng);
    REQUIRE_FALSE(ker.empty());
    Derivation theta{ker[0][0], ker[0][1], ker[0][2]};
    DerivationCriterion crit = derivation_classify(f, theta, eng);
    CHECK(crit.label.has(CurveClass::Free));
    CHECK(crit.label.find(CurveClass::Free)->params == std::vector<long>{4, 5});
    CHECK(crit.profile.verdict == QuotientProfile::Verdict::WholeRing);
}

TEST_CASE("derivation criterion on a nearly free union") {
    // C0p u Lz is free (5,5); its mdr syzygy must certify that too.
    Engine eng;
    Polynomial f = named_curve("C0p_Lz").projective;
    JacobianTriple j = jacobian_triple(f);
    auto ker = syzygy_kernel(j, 5, eng);
    REQUIRE_FALSE(ker.empty());
    Derivation theta{ker[0][0], ker[0][1], ker[0][2]};
    DerivationCriterion crit = derivation_classify(f, theta, eng);
    CHECK(crit.label.has(CurveClass::Free));
}

namespace {
// Membership of z^e in the ideal of the first two partials, the homogenized
// form of a Bezout identity a*g_x + b*g_y = 1 for the affine polynomial.
bool z_power_in_partials(const Polynomial& f, int e) {
    JacobianTriple j = jacobian_triple(f);
    MapMatrix m = multiplication_map({j.fx, j.fy}, e);
    return image_membership(m, poly_to_vec(zpow(e), e)).member;
}
}  // namespace

TEST_CASE("pencil membership certificates for the first polynomial") {
    Polynomial f0 = named_curve("C0").projective;
    EigenschemeIdeal ideal = eigenscheme_ideal(Derivation::tangent(f0));
    CHECK(ideal_membership(ideal, f0 * f0).member);
    CHECK(ideal_membership(ideal, zpow(10) * f0).member);
    CHECK(ideal_membership(ideal, zpow(20)).member);
    // The degree-5 Bezout coefficients make z^14 a combination of the two
    // partials; z^13 is not one, so 14 is sharp, and z^15 = z*z^14 lands in
    // the minors ideal.
    CHECK(z_power_in_partials(f0, 14));
    CHECK_FALSE(z_power_in_partials(f0, 13));
    CHECK(ideal_membership(ideal, zpow(15)).member);
    CHECK_FALSE(ideal_membership(ideal, zpow(14)).member);
}

TEST_CASE("pencil membership certificates for the second polynomial") {
    Polynomial f0p = named_curve("C0p").projective;
    EigenschemeIdeal ideal = eigenscheme_ideal(Derivation::tangent(f0p));
    CHECK(ideal_membership(ideal, f0p * f0p).member);
    CHECK(ideal_membership(ideal, zpow(10) * f0p).member);
    CHECK(ideal_membership(ideal, zpow(20)).member);
    CHECK(z_power_in_partials(f0p, 17));
    CHECK_FALSE(z_power_in_partials(f0p, 16));
    CHECK(ideal_membership(ideal, zpow(18)).member);
}

TEST_CASE("membership fails with a separating functional on a non-free curve") {
    Polynomial f = parse("x^4+y^4+z^4");
    EigenschemeIdeal ideal = eigenscheme_ideal(Derivation::tangent(f));
    MembershipResult r = ideal_membership(ideal, f);
    CHECK_FALSE(r.member);
    CHECK_FALSE(r.functional.empty());
}

TEST_CASE("free pencil arrangements") {
    Engine eng;
    PencilSpec spec;
    spec.f = named_curve("C0").projective;
    spec.members = {{Rational(1), Rational(0)}, {Rational(1), Rational(16, 9)}};
    SUBCASE("two members give a free curve (9,10)") {
        ArrangementVerdict v = free_arrangement_check(pencil_arrangement(spec), eng);
        CHECK(v.applies);
        CHECK(v.positive);
        CHECK(v.exponents == std::vector<int>{9, 10});
    }
    SUBCASE("adding the line shifts the second exponent") {
        spec.include_line = true;
        ArrangementVerdict v = free_arrangement_check(pencil_arrangement(spec), eng);
        CHECK(v.positive);
        CHECK(v.exponents == std::vector<int>{9, 11});
    }
    SUBCASE("a single member does not qualify") {
        spec.members.pop_back();
        ArrangementVerdict v = free_arrangement_check(pencil_arrangement(spec), eng);
        CHECK_FALSE(v.applies);
    }
    SUBCASE("repeated members are rejected") {
        spec.members.push_back({Rational(1), Rational(0)});
        CHECK_THROWS_AS(pencil_arrangement(spec), PreconditionError);
    }
}

TEST_CASE("mpog pencil arrangements from the b=5/8 member") {
    Engine eng;
    Polynomial f58 = named_curve("C0b58").projective;
    PencilSpec spec;
    spec.f = f58;
    SUBCASE("explicit two-member product") {
        spec.explicit_products.push_back(f58 * f58 + zpow(20));
        ArrangementVerdict v = mpog_arrangement_check(pencil_arrangement(spec), eng);
        CHECK(v.applies);
        CHECK(v.positive);
        CHECK(v.exponents == std::vector<int>{9, 11, 12});
    }
    SUBCASE("with the line included") {
        spec.explicit_products.push_back(f58 * f58 + zpow(20));
        spec.include_line = true;
        ArrangementVerdict v = mpog_arrangement_check(pencil_arrangement(spec), eng);
        CHECK(v.positive);
        CHECK(v.exponents == std::vector<int>{9, 12, 13});
    }
    SUBCASE("the free check is negative here") {
        spec.explicit_products.push_back(f58 * f58 + zpow(20));
        ArrangementVerdict v = free_arrangement_check(pencil_arrangement(spec), eng);
        CHECK(v.applies);
        CHECK_FALSE(v.positive);
    }
}

TEST_CASE("quotient generators match the recorded forms up to scale") {
    Engine eng;
    Polynomial f58 = named_curve("C0b58").projective;
    Polynomial F2 = f58 * f58 + zpow(20);
    EigenschemeIdeal ideal = eigenscheme_ideal(Derivation::tangent(f58));
    QuotientProfile q = quotient_profile(ideal, F2, eng, 7);
    REQUIRE(q.verdict == QuotientProfile::Verdict::Proper);
    CHECK(q.e == 2);
    Polynomial ell = parse("793202173x + 3698829360y - 1039006968z");
    CHECK(q.ell.normalized() == ell.normalized());
    // The quadratic generator is only defined modulo ell*S_1: check mutual
    // containment of the spans {h, ell*x, ell*y, ell*z} and {q2, ell*...}.
    Polynomial q2 = parse("106288200y^2 - 23416645yz - 11726872z^2");
    QEchelon span(graded_dim(2));
    span.add(poly_to_vec(q.h, 2));
    for (const char* v : {"x", "y", "z"}) span.add(poly_to_vec(q.ell * parse(v), 2));
    CHECK(span.coords(poly_to_vec(q2, 2)).has_value());
    QEchelon span2(graded_dim(2));
    span2.add(poly_to_vec(q2, 2));
    for (const char* v : {"x", "y", "z"}) span2.add(poly_to_vec(q.ell * parse(v), 2));
    CHECK(span2.coords(poly_to_vec(q.h, 2)).has_value());
}

TEST_CASE("determinant certificate") {
    Engine eng;
    Polynomial f = parse("xyz");
    JacobianTriple j = jacobian_triple(f);
    auto ker = syzygy_kernel(j, 1, eng);
    REQUIRE(ker.size() == 2);
    Derivation t1{ker[0][0], ker[0][1], ker[0][2]};
    Derivation t2{ker[1][0], ker[1][1], ker[1][2]};
    Polynomial c = det_certificate(t1, t2, f);
    CHECK(c.is_constant());
    CHECK_FALSE(c.is_zero());
}
