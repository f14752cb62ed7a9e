#include <doctest.h>

#include "curves/polynomial.hpp"

using namespace curves;

namespace {
const Polynomial x = Polynomial::variable(0);
const Polynomial y = Polynomial::variable(1);
const Polynomial z = Polynomial::variable(2);
}  // namespace

TEST_CASE("parser accepts the standard notation") {
    CHECK(parse("x^2 + 2*x*y + y^2") == (x + y) * (x + y));
    CHECK(parse("x^2+2xy+y^2") == (x + y) * (x + y));       // juxtaposition
    CHECK(parse("19/3x^3y^2z^5").leading_coeff() == Rational(19, 3));
    CHECK(parse("2(x+y)") == Polynomial::constant(2) * (x + y));
    CHECK(parse("-x + y") == -x + y);
    CHECK(parse("x/2") == x * Rational(1, 2));
}

TEST_CASE("parser rejects malformed input with positions") {
    CHECK_THROWS_AS(parse("x^2+("), ParseError);
    CHECK_THROWS_AS(parse("x/0"), ParseError);
    CHECK_THROWS_AS(parse("x/(y+1)"), ParseError);  // non-constant divisor
    CHECK_THROWS_AS(parse("w^2"), ParseError);      // outside alphabet
    CHECK_THROWS_AS(parse("x^"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("round trip through the canonical text form") {
    Polynomial f = parse("x^6y^4+4x^5y^3z^2-19/3x^3y^2z^5+yz^9-z^10");
    CHECK(parse(f.str()) == f);
    CHECK(parse(Polynomial::zero().str()) == Polynomial::zero());
}

TEST_CASE("arithmetic basics") {
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x + y).pow(3) == parse("x^3+3x^2y+3xy^2+y^3"));
    CHECK(-(x - y) == y - x);
    Polynomial f = parse("x^2y - z^3");
    CHECK(f.mono_mul(Monomial::var(1, 2), Rational(3)) == parse("3x^2y^3 - 3y^2z^3"));
    CHECK(f.degree() == 3);
    CHECK(f.degree_in(1) == 1);
    CHECK(f.is_homogeneous());
    CHECK_FALSE((f + x).is_homogeneous());
}

TEST_CASE("differentiation and the Euler identity") {
    Polynomial f = parse("x^4 + y^4 + z^4 + x^2y^2 - 3xyz^2");
    Polynomial euler = x * f.differentiate(0) + y * f.differentiate(1) + z * f.differentiate(2);
    CHECK(euler == f * Rational(4));
}

TEST_CASE("homogenization and dehomogenization") {
    Polynomial aff = parse("xy + 1");
    CHECK(aff.homogenize(2, 2) == parse("xy + z^2"));
    CHECK(aff.homogenize(3, 2) == parse("xyz + z^3"));
    CHECK_THROWS(parse("x^3").homogenize(2, 2));
    CHECK(parse("xy+z^2").set_var(2, Rational(1)) == aff);
}

TEST_CASE("substitution") {
    Polynomial f = parse("x^2 + yz");
    CHECK(f.substitute(0, y + z) == parse("y^2 + 2yz + z^2 + yz"));
    CHECK(f.set_var(1, Rational(0)) == parse("x^2"));
    CHECK(f.evaluate({Rational(1), Rational(2), Rational(3), Rational(0)}) == Rational(7));
}

TEST_CASE("gcd and normalization") {
    CHECK(gcd(parse("x^2-y^2"), parse("x-y")) == parse("x-y"));
    CHECK(gcd(parse("x^2"), parse("y^2")) == Polynomial::constant(1));
    CHECK(gcd(parse("2x"), Polynomial::zero()) == parse("x"));
    Polynomial f = parse("4/6x^2 - 2/6y^2");
    CHECK(f.rational_content() == Rational(1, 3));
    CHECK(f.normalized() == parse("2x^2 - y^2"));
}

TEST_CASE("exact division") {
    Polynomial f = parse("x^3 - y^3");
    CHECK(exact_divide(f, parse("x - y")) == parse("x^2 + xy + y^2"));
    CHECK_THROWS(exact_divide(f, parse("x + z")));
}

TEST_CASE("resultants") {
    // res_x(x^2 + y^2, x + y) = f(-y) up to the standard convention.
    CHECK(resultant(parse("x^2+y^2"), parse("x+y"), 0) == parse("2y^2"));
    // Shared root forces a zero resultant.
    CHECK(resultant(parse("x^2-y^2"), parse("x-y"), 0).is_zero());
    // Multiplicativity in the first argument.
    Polynomial a = parse("x+y"), b = parse("x+2y"), g = parse("x^2+yx+y^2");
    CHECK(resultant(a * b, g, 0) == resultant(a, g, 0) * resultant(b, g, 0));
    CHECK_THROWS(resultant(Polynomial::zero(), a, 0));
    CHECK_THROWS(resultant(parse("y"), parse("y^2"), 0));
}

TEST_CASE("3x3 determinant") {
    std::array<std::array<Polynomial, 3>, 3> m = {{{x, y, z},
                                                   {Polynomial::constant(1), Polynomial::zero(),
                                                    Polynomial::zero()},
                                                   {Polynomial::zero(), Polynomial::constant(1),
                                                    Polynomial::zero()}}};
    CHECK(det3(m) == z);
}

TEST_CASE("squarefreeness detection") {
    CHECK(bool(is_squarefree(parse("xyz"))));
    CHECK(bool(is_squarefree(parse("x^4+y^4+z^4"))));
    SquarefreeResult bad = is_squarefree(parse("x^2y + x^2z"));  // x^2 (y+z)
    CHECK_FALSE(bool(bad));
    SUBCASE("exact route carries the repeated factor as a witness") {
        if (bad.route == "exact-gcd") {
            REQUIRE(bad.witness.has_value());
            CHECK_FALSE(bad.witness->is_constant());
        }
    }
}
