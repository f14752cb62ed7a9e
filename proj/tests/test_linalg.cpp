#include <doctest.h>

#include "curves/jacobian.hpp"
#include "curves/linalg.hpp"

using namespace curves;

TEST_CASE("graded dimensions and bases") {
    CHECK(graded_dim(0) == 1);
    CHECK(graded_dim(1) == 3);
    CHECK(graded_dim(4) == 15);
    CHECK(graded_dim(10) == 66);
    for (int k = 0; k <= 8; ++k) {
        const auto& basis = GradedBasis::of(k);
        REQUIRE(long(basis.size()) == graded_dim(k));
        for (std::size_t i = 0; i < basis.size(); ++i)
            CHECK(GradedBasis::index(basis[i]) == int(i));
    }
}

TEST_CASE("polynomial/vector round trip") {
    Polynomial f = parse("x^2 + 2xy - 7/3z^2");
    auto v = poly_to_vec(f, 2);
    REQUIRE(long(v.size()) == graded_dim(2));
    CHECK(vec_to_poly(v, 2) == f);
}

TEST_CASE("multiplication map ranks") {
    // (x,y) in degree 2 spans everything except z^2.
    MapMatrix m = multiplication_map({parse("x"), parse("y")}, 2);
    CHECK(m.rows == 6);
    CHECK(m.col_count() == 6);
    CHECK(exact_rank(m).rank == 5);
    PrimeGen pg(42);
    RankWitness w = modular_rank(m, pg);
    CHECK(w.rank == 5);
    for (auto p : w.primes) CHECK(p > (std::uint64_t(1) << 61));
}

TEST_CASE("exact kernel with duplicated generators") {
    MapMatrix m = multiplication_map({parse("x"), parse("x")}, 1);
    PrimeGen pg(1);
    KernelResult k = exact_kernel(m, pg);
    CHECK(k.witness.rank == 1);
    CHECK(k.basis.size() == 1);  // (1,-1) up to scale
    REQUIRE(k.basis[0].size() == 2);
    CHECK(k.basis[0][0] == -k.basis[0][1]);
    CHECK(k.witness.certified);
}

TEST_CASE("Koszul kernel of a smooth quartic") {
    // For a smooth curve the degree-(d-1) syzygies are exactly the three
    // Koszul relations.
    JacobianTriple j = jacobian_triple(parse("x^4+y^4+z^4"));
    MapMatrix m = syzygy_matrix(j, 3);
    PrimeGen pg(7);
    KernelResult k = exact_kernel(m, pg);
    CHECK(k.basis.size() == 3);
    for (const auto& col : k.basis) {
        // Fold and confirm a*fx + b*fy + c*fz == 0.
        long n = graded_dim(3);
        std::vector<Rational> a(col.begin(), col.begin() + n);
        std::vector<Rational> b(col.begin() + n, col.begin() + 2 * n);
        std::vector<Rational> c(col.begin() + 2 * n, col.end());
        Polynomial res = vec_to_poly(a, 3) * j.fx + vec_to_poly(b, 3) * j.fy +
                         vec_to_poly(c, 3) * j.fz;
        CHECK(res.is_zero());
    }
    SUBCASE("no syzygies below degree d-1 on a smooth curve") {
        for (int deg = 0; deg < 3; ++deg) {
            KernelResult low = exact_kernel(syzygy_matrix(j, deg), pg);
            CHECK(low.basis.empty());
        }
    }
}

TEST_CASE("image membership with verified certificates") {
    MapMatrix m = multiplication_map({parse("x^2"), parse("y^2"), parse("xy")}, 2);
    SUBCASE("member comes with coefficients") {
        MembershipResult r = image_membership(m, poly_to_vec(parse("x^2 + 3xy - y^2"), 2));
        REQUIRE(r.member);
        REQUIRE(r.coeffs.size() == std::size_t(m.col_count()));
        std::vector<Rational> acc(std::size_t(m.rows), Rational(0));
        for (std::size_t jcol = 0; jcol < r.coeffs.size(); ++jcol) {
            auto col = m.dense_col(jcol);
            for (std::size_t i = 0; i < col.size(); ++i) acc[i] += r.coeffs[jcol] * col[i];
        }
        CHECK(acc == poly_to_vec(parse("x^2 + 3xy - y^2"), 2));
    }
    SUBCASE("non-member comes with a separating functional") {
        auto target = poly_to_vec(parse("z^2"), 2);
        MembershipResult r = image_membership(m, target);
        REQUIRE_FALSE(r.member);
        REQUIRE(r.functional.size() == std::size_t(m.rows));
        Rational on_target(0);
        for (std::size_t i = 0; i < target.size(); ++i) on_target += r.functional[i] * target[i];
        CHECK(on_target != 0);
        for (long jcol = 0; jcol < m.col_count(); ++jcol) {
            auto col = m.dense_col(std::size_t(jcol));
            Rational dot(0);
            for (std::size_t i = 0; i < col.size(); ++i) dot += r.functional[i] * col[i];
            CHECK(dot == 0);
        }
    }
}

TEST_CASE("incremental exact echelon") {
    QEchelon ech(3);
    CHECK(ech.add({Rational(1), Rational(0), Rational(1)}));
    CHECK(ech.add({Rational(0), Rational(1), Rational(1)}));
    CHECK_FALSE(ech.add({Rational(1), Rational(1), Rational(2)}));  // dependent
    CHECK(ech.dim() == 2);
    auto c = ech.coords({Rational(2), Rational(3), Rational(5)});
    REQUIRE(c.has_value());
    // 2*(1,0,1) + 3*(0,1,1) = (2,3,5); the dependent add contributes nothing.
    CHECK((*c)[0] == 2);
    CHECK((*c)[1] == 3);
    CHECK_FALSE(ech.coords({Rational(0), Rational(0), Rational(1)}).has_value());
}

TEST_CASE("modular and exact ranks agree on jacobian evaluation maps") {
    for (const char* eq : {"x^4+y^4+z^4", "x^5+y^5+z^5+x^2y^2z", "xyz"}) {
        JacobianTriple j = jacobian_triple(parse(eq));
        for (int k = 1; k <= 4; ++k) {
            MapMatrix m = syzygy_matrix(j, k);
            PrimeGen pg(99);
            CHECK(exact_rank(m).rank == modular_rank(m, pg).rank);
        }
    }
}

TEST_CASE("prime stream produces distinct 62-bit primes") {
    PrimeGen pg(2024);
    std::uint64_t a = pg.next(), b = pg.next();
    CHECK(a != b);
    CHECK(a > (std::uint64_t(1) << 61));
    CHECK(is_prime_u64(a));
    CHECK(is_prime_u64(b));
}
