#include "curves/catalog.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace curves {

namespace {

const int X = 0, Y = 1, Z = 2, T = 3;

Polynomial var(int v, int k = 1) { return Polynomial::variable(v, k); }
Polynomial cst(const Rational& c) { return Polynomial::constant(c); }

// Homogenize an affine polynomial in x,y to the given degree using z.
Polynomial homog(const Polynomial& affine, int d) { return affine.homogenize(d, Z); }

}  // namespace

BrianconBasis briancon_basis() {
    BrianconBasis b;
    b.s = var(X) * var(Y) + cst(1);
    b.p = var(X) * b.s + cst(1);
    b.u = b.s * b.s + var(Y);
    return b;
}

Polynomial build_g_b(const Rational& b) {
    auto [s, p, u] = briancon_basis();
    return p * p * u - cst(Rational(5, 3)) * p * s + cst(b) * s;
}

Polynomial build_g_bc(const Rational& b, const Rational& c) { return build_g_b(b) - cst(c); }

Polynomial build_g() { return build_g_b(Rational(-1, 3)); }

Polynomial build_g_prime() {
    auto [s, p, u] = briancon_basis();
    return p * p * u - cst(Rational(7, 9)) * p * s + cst(Rational(1, 9)) * s;
}

Polynomial build_gn(const GnSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("build_gn: n must be >= 1");
    if (spec.a.size() != std::size_t(spec.n) + 1)
        throw std::invalid_argument("build_gn: expected n+1 coefficients");
    auto [s, p, u] = briancon_basis();
    Polynomial tail;
    Polynomial pj = cst(1);
    for (int j = 0; j <= 2 * spec.n - 1; ++j) {
        if (j <= spec.n)
            tail += cst(spec.a[std::size_t(j)]) * pj;
        else
            tail += pj;
        pj = pj * p;
    }
    // pj is now p^{2n}
    return pj * u + s * tail;
}

namespace {

// Divide out the largest power of t, leaving a polynomial with a nonzero
// constant term in t.
Polynomial strip_t_power(const Polynomial& f) {
    int k = -1;
    for (const auto& [m, c] : f.terms()) {
        int e = m[T];
        k = (k < 0 || e < k) ? e : k;
    }
    if (k <= 0) return f;
    return exact_divide(f, Polynomial::term(Monomial::var(T, k), Rational(1)));
}

// Discriminant-in-w of f with the monomial t-power removed, normalized.
Polynomial reduced_discriminant(const Polynomial& f, int w) {
    Polynomial disc = resultant(f, f.differentiate(w), w);
    return strip_t_power(disc).normalized();
}

Polynomial f0_curve() { return homog(build_g(), 10); }
Polynomial f0p_curve() { return homog(build_g_prime(), 10); }

}  // namespace

Polynomial special_line_cubic() {
    // Restrict f0 to the lines x = t z (in the chart z = 1), then take the
    // discriminant of the resulting quartic in y.
    Polynomial q = f0_curve().substitute(X, var(T)).set_var(Z, Rational(1));
    Polynomial c = reduced_discriminant(q, Y);
    return c.substitute(T, var(X)).homogenize(3, Z);
}

Polynomial special_line_quintic() {
    // Restrict f0 to the lines y = t x (chart z = 1); discriminant in x.
    Polynomial q = f0_curve().substitute(Y, var(T) * var(X)).set_var(Z, Rational(1));
    Polynomial c = reduced_discriminant(q, X);
    return c.substitute(T, var(Y)).homogenize(5, X);
}

bool verify_unit_identity(char which) {
    if (which == 'g') {
        Polynomial g = build_g();
        Polynomial a = parse("4x^4y + 4x^3 + x^2");
        Polynomial b = parse("6x^3y^2 + 8x^2y + 2x - 1");
        return a * g.differentiate(X) - b * g.differentiate(Y) == cst(1);
    }
    if (which == 'p') {
        Polynomial gp = build_g_prime();
        Polynomial a = parse("48x^6y^2 + 96x^5y + 72x^4y + 48x^4 + 88/3x^3 + 15x^2");
        Polynomial b = parse(
            "72x^5y^3 + 168x^4y^2 + 90x^3y^2 + 120x^3y + 44x^2y + 24x^2 - 10/3x + 1");
        return cst(-1) * a * gp.differentiate(X) + b * gp.differentiate(Y) == cst(1);
    }
    throw std::invalid_argument("verify_unit_identity: expected 'g' or 'p'");
}

namespace {

ExpectedReport expect(std::vector<int> exps, std::optional<long> tau, std::optional<long> nu,
                      std::string label) {
    ExpectedReport e;
    e.exponents = std::move(exps);
    e.tau = tau;
    e.nu = nu;
    e.label = std::move(label);
    return e;
}

using Registry = std::map<std::string, CatalogEntry>;

void add(Registry& r, const std::string& name, std::optional<Polynomial> affine,
         Polynomial projective, ExpectedReport exp, std::string note) {
    CatalogEntry e;
    e.name = name;
    e.affine = std::move(affine);
    e.projective = std::move(projective);
    e.degree = e.projective.degree();
    e.expected = std::move(exp);
    e.note = std::move(note);
    r.emplace(name, std::move(e));
}

Registry build_registry() {
    Registry r;
    const Polynomial x = var(X), y = var(Y), z = var(Z);

    // --- Degree 10: fibers of the two critical-point-free polynomials. ---
    const Polynomial g = build_g(), gp = build_g_prime();
    const Polynomial f0 = homog(g, 10);
    const Polynomial f0p = homog(gp, 10);
    const Polynomial fb = f0 + Polynomial::term(Monomial::var(Z, 10), Rational(16, 9));
    const Polynomial f1 = f0 - Polynomial::term(Monomial::var(Z, 10), Rational(1));
    const Polynomial fbp = f0p + Polynomial::term(Monomial::var(Z, 10), Rational(64, 81));
    const Polynomial f1p = f0p - Polynomial::term(Monomial::var(Z, 10), Rational(1));

    add(r, "C0", g, f0, expect({5, 5, 6}, 59, 2, "mpog(5,5,6)"),
        "closure of the zero fiber of the first degree-10 polynomial");
    add(r, "Cb", g + cst(Rational(16, 9)), fb, expect({4, 5}, 61, 0, "free(4,5)"),
        "closure of the atypical fiber at -16/9 of the first polynomial");
    add(r, "C1", g - cst(1), f1, expect({5, 5, 6}, 59, 2, "mpog(5,5,6)"),
        "closure of a generic fiber of the first polynomial");
    add(r, "C0p", gp, f0p, expect({5, 5, 5}, 60, 1, "nearly-free(5,5)"),
        "closure of the zero fiber of the second degree-10 polynomial");
    add(r, "Cbp", gp + cst(Rational(64, 81)), fbp, expect({5, 5, 5}, 60, 1, "nearly-free(5,5)"),
        "closure of the atypical fiber at -64/81 of the second polynomial");
    add(r, "C1p", gp - cst(1), f1p, expect({5, 5, 6}, 59, 2, "mpog(5,5,6)"),
        "closure of a generic fiber of the second polynomial");

    // --- Degree 11/13: unions with coordinate lines. ---
    add(r, "C0_Lz", std::nullopt, z * f0, expect({5, 6, 6}, 74, 1, "nearly-free(5,6)"),
        "C0 with the line z=0 added");
    add(r, "C1_Lz", std::nullopt, z * f1, expect({5, 6, 6}, 74, 1, "nearly-free(5,6)"),
        "C1 with the line z=0 added");
    add(r, "Cb_Lz", std::nullopt, z * fb, expect({4, 6}, 76, 0, "free(4,6)"),
        "Cb with the line z=0 added");
    add(r, "C0p_Lz", std::nullopt, z * f0p, expect({5, 5}, 75, 0, "free(5,5)"),
        "C0p with the line z=0 added");
    add(r, "Cbp_Lz", std::nullopt, z * fbp, expect({5, 5}, 75, 0, "free(5,5)"),
        "Cbp with the line z=0 added");
    add(r, "C1p_Lz", std::nullopt, z * f1p, expect({5, 6, 6}, 74, 1, "nearly-free(5,6)"),
        "C1p with the line z=0 added");
    add(r, "C0_Lx", std::nullopt, x * f0, expect({5, 6, 6}, 74, 1, "nearly-free(5,6)"),
        "C0 with the line x=0 added");
    add(r, "C0_Ly", std::nullopt, y * f0,
        expect({6, 6, 6, 6}, 73, std::nullopt, "type(11,6,4,0)"),
        "C0 with the line y=0 added");
    add(r, "C0p_Lx", std::nullopt, x * f0p, expect({5, 5}, 75, 0, "free(5,5)"),
        "C0p with the line x=0 added");
    add(r, "C0p_Ly", std::nullopt, y * f0p, expect({5, 6, 6}, 74, 1, "nearly-free(5,6)"),
        "C0p with the line y=0 added");
    add(r, "C0_LxLyLz", std::nullopt, x * y * z * f0,
        expect({7, 7, 7, 7}, 106, std::nullopt, "type(13,7,4,0)"),
        "C0 with all three coordinate lines added");
    add(r, "C0p_LxLyLz", std::nullopt, x * y * z * f0p,
        expect({6, 7, 7}, 107, 1, "nearly-free(6,7)"),
        "C0p with all three coordinate lines added");

    // --- Degree 20/21: unions of two pencil members. ---
    add(r, "C0_Cb", std::nullopt, f0 * fb, expect({9, 10}, 271, 0, "free(9,10)"),
        "union of the two special fibers of the first polynomial");
    add(r, "C0_Cb_Lz", std::nullopt, z * f0 * fb, expect({9, 11}, 301, 0, "free(9,11)"),
        "the same union with the line z=0 added");
    add(r, "C0p_Cbp", std::nullopt, f0p * fbp, expect({9, 10}, 271, 0, "free(9,10)"),
        "union of the two special fibers of the second polynomial");
    add(r, "C0p_Cbp_Lz", std::nullopt, z * f0p * fbp, expect({9, 11}, 301, 0, "free(9,11)"),
        "the same union with the line z=0 added");

    // --- Supersolvable non-free examples built on C0. ---
    const Polynomial h3 = special_line_cubic();
    const Polynomial h5 = special_line_quintic();
    add(r, "D0", std::nullopt, x * z * h3 * f0,
        expect({8, 8, 8, 8}, 145, 2, "type(15,8,4,0)"),
        "C0 with the five special lines through its multiplicity-6 point");
    add(r, "D0p", std::nullopt, x * y * h5 * f0,
        expect({10, 11, 11, 11, 11}, std::nullopt, 13, ""),
        "C0 with the seven special lines through an external point");

    // --- One-parameter variants g(b). ---
    add(r, "C0b0", build_g_b(0), homog(build_g_b(0), 10),
        expect({5, 5, 5}, 60, 1, "nearly-free(5,5)"), "parameter value b=0");
    add(r, "C0b58", build_g_b(Rational(5, 8)), homog(build_g_b(Rational(5, 8)), 10),
        expect({5, 5, 5}, 60, 1, "nearly-free(5,5)"), "parameter value b=5/8");
    add(r, "C0bm13", build_g_b(Rational(-1, 3)), homog(build_g_b(Rational(-1, 3)), 10),
        expect({5, 5, 6}, 59, 2, "mpog(5,5,6)"), "parameter value b=-1/3 (equals C0)");

    // --- Equal-exponent curves built on the b=5/8 member. ---
    const Polynomial f58 = homog(build_g_b(Rational(5, 8)), 10);
    add(r, "T_x10", std::nullopt, f58 - Polynomial::term(Monomial::var(X, 10), Rational(1)),
        expect({9, 9, 9, 9, 9, 9, 9, 9, 9, 9, 9}, std::nullopt, std::nullopt,
               "type(10,9,11,0)"),
        "b=5/8 member minus x^10");
    add(r, "T_x9z", std::nullopt,
        f58 - Polynomial::term(Monomial::var(X, 9) * Monomial::var(Z, 1), Rational(1)),
        expect({9, 9, 9, 9, 9, 9, 9, 9, 9, 9, 9}, std::nullopt, std::nullopt,
               "type(10,9,11,0)"),
        "b=5/8 member minus x^9 z");
    add(r, "T_x4z6", std::nullopt,
        f58 - Polynomial::term(Monomial::var(X, 4) * Monomial::var(Z, 6), Rational(1)),
        expect({7, 7, 7, 7, 7, 7}, std::nullopt, std::nullopt, "type(10,7,6,1)"),
        "b=5/8 member minus x^4 z^6");
    add(r, "T_xyz", std::nullopt,
        x * y * z * (f58 - Polynomial::term(Monomial::var(X, 10), Rational(1))),
        expect({11, 11, 11, 11, 11, 11, 11, 11, 11, 11}, std::nullopt, std::nullopt,
               "type(13,11,10,2)"),
        "coordinate triangle added to the x^10 variant");

    // --- Free members of the two-parameter family g(5/8, c). ---
    add(r, "F58p", build_g_bc(Rational(5, 8), Rational(-25, 27)),
        homog(build_g_bc(Rational(5, 8), Rational(-25, 27)), 10),
        expect({4, 5}, 61, 0, "free(4,5)"), "b=5/8 member plus 25/27 z^10");
    add(r, "F58m", build_g_bc(Rational(5, 8), Rational(163, 180)),
        homog(build_g_bc(Rational(5, 8), Rational(163, 180)), 10),
        expect({4, 5}, 61, 0, "free(4,5)"), "b=5/8 member minus 163/180 z^10");

    // --- Degree 16 family (n = 2), first coefficient choice. ---
    GnSpec case1{2, {Rational(-1, 5), Rational(-3, 5), Rational(-11, 5)}};
    const Polynomial g2 = build_gn(case1);
    const Polynomial f0pp = homog(g2, 16);
    const Polynomial fbpp = f0pp + Polynomial::term(Monomial::var(Z, 16), Rational(64, 25));
    const Polynomial f1pp = f0pp - Polynomial::term(Monomial::var(Z, 16), Rational(1));
    add(r, "C0pp", g2, f0pp, expect({8, 8, 9}, 167, 2, "mpog(8,8,9)"),
        "zero fiber of the degree-16 polynomial, first coefficient choice");
    add(r, "Cbpp", g2 + cst(Rational(64, 25)), fbpp, expect({7, 8}, 169, 0, "free(7,8)"),
        "atypical fiber at -64/25 of the degree-16 polynomial");
    add(r, "C1pp", g2 - cst(1), f1pp, expect({8, 8, 9}, 167, 2, "mpog(8,8,9)"),
        "generic fiber of the degree-16 polynomial");
    add(r, "C0pp_Lz", std::nullopt, z * f0pp, expect({8, 9, 9}, 191, 1, "nearly-free(8,9)"),
        "C0pp with the line z=0 added");
    add(r, "Cbpp_Lz", std::nullopt, z * fbpp, expect({7, 9}, 193, 0, "free(7,9)"),
        "Cbpp with the line z=0 added");
    add(r, "C1pp_Lz", std::nullopt, z * f1pp, expect({8, 9, 9}, 191, 1, "nearly-free(8,9)"),
        "C1pp with the line z=0 added");
    add(r, "C0pp_Cbpp", std::nullopt, f0pp * fbpp, expect({15, 16}, 721, 0, "free(15,16)"),
        "union of the two special degree-16 fibers");
    add(r, "C0pp_Cbpp_Lz", std::nullopt, z * f0pp * fbpp,
        expect({15, 17}, 769, 0, "free(15,17)"),
        "the same union with the line z=0 added");

    // --- Second coefficient choice for each n (free zero fibers). ---
    GnSpec alt2{2, {Rational(-1, 125), Rational(17, 125), Rational(-91, 125)}};
    add(r, "C20p", build_gn(alt2), homog(build_gn(alt2), 16),
        expect({7, 8}, 169, 0, "free(7,8)"),
        "zero fiber of the degree-16 polynomial, second coefficient choice");
    GnSpec alt3{3, {Rational(1, 2401), Rational(-31, 2401), Rational(353, 2401),
                    Rational(-1695, 2401)}};
    add(r, "C30p", build_gn(alt3), homog(build_gn(alt3), 22),
        expect({7, 14}, 343, 0, "free(7,14)"),
        "zero fiber of the degree-22 polynomial");
    const Rational N(59049);
    GnSpec alt4{4, {Rational(-1) / N, Rational(49) / N, Rational(-951) / N,
                    Rational(9049) / N, Rational(-40951) / N}};
    add(r, "C40p", build_gn(alt4), homog(build_gn(alt4), 28),
        expect({7, 20}, 589, 0, "free(7,20)"),
        "zero fiber of the degree-28 polynomial");

    // --- Explicit multi-member products from the b=5/8 pencil. ---
    add(r, "P2", std::nullopt, f58 * f58 + Polynomial::term(Monomial::var(Z, 20), Rational(1)),
        expect({9, 11, 12}, std::nullopt, std::nullopt, "mpog(9,11,12)"),
        "two distinct members of the b=5/8 pencil multiplied together");
    add(r, "P2_Lz", std::nullopt,
        z * (f58 * f58 + Polynomial::term(Monomial::var(Z, 20), Rational(1))),
        expect({9, 12, 13}, std::nullopt, std::nullopt, "mpog(9,12,13)"),
        "the same product with the line z=0 added");
    add(r, "P3", std::nullopt,
        f58 * f58 * f58 + Polynomial::term(Monomial::var(Z, 30), Rational(1)),
        expect({9, 21, 22}, std::nullopt, std::nullopt, "mpog(9,21,22)"),
        "three distinct members of the b=5/8 pencil multiplied together");
    r.at("P3").pencil_only = true;

    return r;
}

const Registry& registry() {
    static const Registry r = build_registry();
    return r;
}

}  // namespace

const CatalogEntry& named_curve(const std::string& name) {
    const auto& r = registry();
    auto it = r.find(name);
    if (it == r.end()) throw std::out_of_range("unknown catalog curve: " + name);
    return it->second;
}

bool has_curve(const std::string& name) { return registry().count(name) != 0; }

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : registry()) out.push_back(k);
    return out;
}

}  // namespace curves
