#include <doctest.h>

#include "curves/classify.hpp"

using namespace curves;

TEST_CASE("tau bounds at known points") {
    TauBounds b = tau_bounds(10, 5);
    CHECK(b.tau_min == 36);   // (d-1)(d-r-1)
    CHECK(b.tau_max == 61);   // (d-1)^2 - r(d-r-1)
    REQUIRE(b.tau_max_prime.has_value());
    CHECK(*b.tau_max_prime == 60);  // 2r = d: one pair removed

    TauBounds c = tau_bounds(10, 4);
    CHECK(c.tau_min == 45);
    CHECK(c.tau_max == 61);
    CHECK_FALSE(c.tau_max_prime.has_value());  // 2r < d

    TauBounds e = tau_bounds(15, 8);
    CHECK(e.tau_max == 148);
    REQUIRE(e.tau_max_prime.has_value());
    CHECK(*e.tau_max_prime == 145);
}

TEST_CASE("tau bounds sandwich over a degree grid") {
    for (int d = 3; d <= 40; ++d) {
        for (int r = 1; r <= d - 1; ++r) {
            TauBounds b = tau_bounds(d, r);
            CHECK(b.tau_min >= 0);
            CHECK(b.tau_min <= b.tau_max);
            if (b.tau_max_prime) {
                CHECK(*b.tau_max_prime <= b.tau_max);
                CHECK(b.tau_min <= *b.tau_max_prime);
            }
        }
    }
    CHECK_THROWS(tau_bounds(2, 1));
    CHECK_THROWS(tau_bounds(10, 0));
    CHECK_THROWS(tau_bounds(10, 10));
}

TEST_CASE("classification from tau") {
    CHECK(classify_from_tau(10, 4, 61).has(CurveClass::Free));
    CHECK(classify_from_tau(10, 4, 60).has(CurveClass::NearlyFree));
    CHECK(classify_from_tau(10, 5, 59).has(CurveClass::MPOG));
    CHECK(classify_from_tau(10, 5, 60).has(CurveClass::MaxTjurina));  // tau = tau_max'
    CHECK(classify_from_tau(10, 4, 50).has(CurveClass::General));
    CHECK(classify_from_tau(10, 4, 61).str() == "free(4,5)");
    // Out of the admissible range: contradiction, not a classification.
    CHECK_THROWS_AS(classify_from_tau(10, 4, 62), InternalError);
    CHECK_THROWS_AS(classify_from_tau(10, 4, 44), InternalError);
    CHECK_THROWS_AS(classify_from_tau(10, 5, 61), InternalError);  // above tau_max'
}

TEST_CASE("classification from exponents") {
    CHECK(classify_from_exponents(10, {4, 5}).has(CurveClass::Free));
    CHECK(classify_from_exponents(10, {5, 5, 5}).has(CurveClass::NearlyFree));
    CHECK(classify_from_exponents(10, {5, 5, 6}).has(CurveClass::MPOG));
    ClassificationLabel pog = classify_from_exponents(12, {5, 7, 9});
    CHECK(pog.has(CurveClass::PlusOneGenerated));
    const Facet* f = pog.find(CurveClass::PlusOneGenerated);
    REQUIRE(f != nullptr);
    CHECK(f->params == std::vector<long>{5, 7, 9, 2});  // delta = d3 - d2

    ClassificationLabel t = classify_from_exponents(10, std::vector<int>(11, 9));
    CHECK(t.str() == "type(10,9,11,0)");
    CHECK(classify_from_exponents(4, {3, 3, 3}).str() == "type(4,3,3,2)");
    // Nothing matches: keep the raw exponents.
    ClassificationLabel g = classify_from_exponents(7, {2, 3, 4});
    CHECK(g.has(CurveClass::General));
}

TEST_CASE("analyze cross-checks on small canonical curves") {
    Engine eng;
    SUBCASE("triangle of lines is free (1,1)") {
        CurveReport rep = analyze(parse("xyz"), eng);
        // The equal-exponent facet type(3,1,2,0) legitimately coexists here.
        CHECK(rep.label.str().find("free(1,1)") == 0);
        CHECK(rep.tau == 3);
        CHECK(rep.nu == 0);
        CHECK(rep.consistent);
    }
    SUBCASE("smooth quartic") {
        CurveReport rep = analyze(parse("x^4+y^4+z^4"), eng);
        CHECK(rep.tau == 0);
        CHECK(rep.r == 3);
        CHECK(rep.exponents == std::vector<int>{3, 3, 3});
        CHECK(rep.consistent);
    }
    SUBCASE("nodal cubic") {
        CurveReport rep = analyze(parse("y^2z - x^2(x+z)"), eng);
        CHECK(rep.tau == 1);
        CHECK(rep.consistent);
    }
    SUBCASE("cuspidal cubic is nearly free") {
        CurveReport rep = analyze(parse("y^2z - x^3"), eng);
        CHECK(rep.tau == 2);
        CHECK(rep.label.has(CurveClass::NearlyFree));
        CHECK(rep.consistent);
    }
    SUBCASE("tampering with tau breaks the cross-check") {
        CurveReport rep = analyze(parse("xyz"), eng);
        rep.tau -= 1;
        CHECK_FALSE(cross_check(rep).pass);
    }
}
