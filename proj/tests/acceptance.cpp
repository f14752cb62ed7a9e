// Acceptance gate: one line per criterion, exit 0 iff all pass.
//
// Every numeric expectation here is an exact integer; the fixtures are the
// built-in catalog curves. Curves of degree >= 15 are run with the modular
// (certified) backend, smaller ones with the exact backend.

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "curves/catalog.hpp"
#include "curves/classify.hpp"
#include "curves/eigenscheme.hpp"
#include "curves/jacobian.hpp"
#include "curves/linalg.hpp"
#include "curves/modular.hpp"
#include "curves/polynomial.hpp"

using namespace curves;

namespace {

std::map<std::string, CurveReport> g_cache;

const CurveReport& report(const std::string& name) {
    auto it = g_cache.find(name);
    if (it != g_cache.end()) return it->second;
    const CatalogEntry& e = named_curve(name);
    Engine eng(e.degree >= 15 ? Backend::Modular : Backend::Auto);
    return g_cache.emplace(name, analyze(e.projective, eng)).first->second;
}

struct Checker {
    bool ok = true;
    std::ostringstream log;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << (log.tellp() > 0 ? "; " : "") << what;
        }
    }

    void curve(const std::string& name, const std::string& label, std::vector<int> exps,
               long tau = -1, long nu = -1) {
        try {
            const CurveReport& rep = report(name);
            expect(rep.label.str().find(label) != std::string::npos,
                   name + " label " + rep.label.str() + " lacks " + label);
            if (!exps.empty())
                expect(rep.exponents == exps, name + " exponents mismatch");
            if (tau >= 0) expect(rep.tau == tau, name + " tau " + std::to_string(rep.tau));
            if (nu >= 0) expect(rep.nu == nu, name + " nu " + std::to_string(rep.nu));
            expect(rep.consistent, name + " cross-check: " + rep.consistency_detail);
        } catch (const std::exception& ex) {
            expect(false, name + " threw: " + ex.what());
        }
    }
};

using Criterion = void (*)(Checker&);

// 1. Degree-10 family.
void c1(Checker& c) {
    c.curve("C0", "mpog(5,5,6)", {5, 5, 6}, 59);
    c.curve("C1", "mpog(5,5,6)", {5, 5, 6}, 59);
    c.curve("Cb", "free(4,5)", {4, 5}, 61);
}

// 2. Second degree-10 family.
void c2(Checker& c) {
    c.curve("C1p", "mpog(5,5,6)", {5, 5, 6}, 59);
    c.curve("C0p", "nearly-free(5,5)", {5, 5, 5}, 60);
    c.curve("Cbp", "nearly-free(5,5)", {5, 5, 5}, 60);
}

// 3. Line arrangements on both families.
void c3(Checker& c) {
    c.curve("C0_Lz", "nearly-free(5,6)", {5, 6, 6}, 74);
    c.curve("C1_Lz", "nearly-free(5,6)", {5, 6, 6}, 74);
    c.curve("Cb_Lz", "free(4,6)", {4, 6}, 76);
    c.curve("C0p_Lz", "free(5,5)", {5, 5}, 75);
    c.curve("Cbp_Lz", "free(5,5)", {5, 5}, 75);
    c.curve("C1p_Lz", "nearly-free(5,6)", {5, 6, 6}, 74);
    c.curve("C0_Lx", "nearly-free(5,6)", {5, 6, 6}, 74);
    c.curve("C0p_Lx", "free(5,5)", {5, 5}, 75);
    c.curve("C0p_Ly", "nearly-free(5,6)", {5, 6, 6}, 74);
    c.curve("C0_Ly", "type(11,6,4,0)", {6, 6, 6, 6});
    c.curve("C0_Ly", "max-tjurina(11,6)", {});
    c.curve("C0_LxLyLz", "type(13,7,4,0)", {7, 7, 7, 7});
    c.curve("C0_LxLyLz", "max-tjurina(13,7)", {});
    c.curve("C0p_LxLyLz", "nearly-free(6,7)", {6, 7, 7});
}

// 4. Pencil unions by the direct syzygy path and the membership path.
void c4(Checker& c) {
    c.curve("C0_Cb", "free(9,10)", {9, 10}, 271);
    c.curve("C0_Cb_Lz", "free(9,11)", {9, 11}, 301);
    c.curve("C0p_Cbp", "free(9,10)", {9, 10}, 271);
    c.curve("C0p_Cbp_Lz", "free(9,11)", {9, 11}, 301);

    Engine eng;
    auto pencil_free = [&](const std::string& base, const Rational& t, bool line,
                           std::vector<int> exps) {
        PencilSpec spec;
        spec.f = named_curve(base).projective;
        spec.members = {{Rational(1), Rational(0)}, {Rational(1), t}};
        spec.include_line = line;
        ArrangementVerdict v = free_arrangement_check(pencil_arrangement(spec), eng);
        c.expect(v.applies && v.positive,
                 base + " membership path not positive: " + v.detail);
        c.expect(v.exponents == exps, base + " membership path exponents mismatch");
    };
    pencil_free("C0", Rational(16, 9), false, {9, 10});
    pencil_free("C0", Rational(16, 9), true, {9, 11});
    pencil_free("C0p", Rational(64, 81), false, {9, 10});
    pencil_free("C0p", Rational(64, 81), true, {9, 11});

    // Agreement between the two paths.
    c.expect(report("C0_Cb").exponents == std::vector<int>{9, 10} &&
                 report("C0p_Cbp").exponents == std::vector<int>{9, 10},
             "paths disagree on the degree-20 exponents");
}

// 5. Supersolvable non-free counter-examples.
void c5(Checker& c) {
    c.curve("D0", "type(15,8,4,0)", {8, 8, 8, 8}, -1, 2);
    c.curve("D0", "max-tjurina(15,8)", {});
    c.curve("D0p", "", {10, 11, 11, 11, 11}, -1, 13);
    c.expect(report("D0p").exponents.size() == 5, "D0p generator count");
    c.expect(special_line_cubic().normalized() ==
                 parse("32768x^3-768x^2z+1824xz^2-243z^3").normalized(),
             "special-line cubic mismatch");
    c.expect(special_line_quintic().normalized() ==
                 parse("282429536481y^5+276496482330144xy^4+2414080421160192x^2y^3"
                       "+16059343010660352x^3y^2+2540256075186176x^4y+91534343012352x^5")
                     .normalized(),
             "special-line quintic mismatch");
}

// 6. One-parameter family special values and equal-exponent curves.
void c6(Checker& c) {
    c.curve("C0b0", "nearly-free(5,5)", {5, 5, 5}, 60);
    c.curve("C0b58", "nearly-free(5,5)", {5, 5, 5}, 60);
    c.curve("C0bm13", "mpog(5,5,6)", {5, 5, 6}, 59);
    c.expect(report("C0bm13").exponents == report("C0").exponents &&
                 report("C0bm13").tau == report("C0").tau,
             "b=-1/3 disagrees with C0");
    c.curve("T_x10", "type(10,9,11,0)", std::vector<int>(11, 9));
    c.curve("T_x9z", "type(10,9,11,0)", std::vector<int>(11, 9));
    c.curve("T_x4z6", "type(10,7,6,1)", std::vector<int>(6, 7));
    c.curve("T_xyz", "type(13,11,10,2)", std::vector<int>(10, 11));
    c.curve("F58p", "free(4,5)", {4, 5}, 61);
    c.curve("F58m", "free(4,5)", {4, 5}, 61);
}

// 7. Degree-16 family, its unions, and the higher-degree free fibers.
void c7(Checker& c) {
    c.curve("C0pp", "mpog(8,8,9)", {8, 8, 9}, 167);
    c.curve("C1pp", "mpog(8,8,9)", {8, 8, 9}, 167);
    c.curve("Cbpp", "free(7,8)", {7, 8}, 169);
    c.curve("Cbpp_Lz", "free(7,9)", {7, 9}, 193);
    c.curve("C0pp_Lz", "nearly-free(8,9)", {8, 9, 9}, 191);
    c.curve("C1pp_Lz", "nearly-free(8,9)", {8, 9, 9}, 191);
    c.curve("C0pp_Cbpp", "free(15,16)", {15, 16}, 721);
    c.curve("C0pp_Cbpp_Lz", "free(15,17)", {15, 17}, 769);
    c.curve("C20p", "free(7,8)", {7, 8}, 169);
    c.curve("C30p", "free(7,14)", {7, 14}, 343);
    c.curve("C40p", "free(7,20)", {7, 20}, 589);
}

// 8. Eigenscheme memberships and quotient structure.
void c8(Checker& c) {
    auto zpow = [](int k) { return Polynomial::term(Monomial::var(2, k), Rational(1)); };
    Polynomial f0 = named_curve("C0").projective;
    Polynomial f0p = named_curve("C0p").projective;
    EigenschemeIdeal id0 = eigenscheme_ideal(Derivation::tangent(f0));
    EigenschemeIdeal id0p = eigenscheme_ideal(Derivation::tangent(f0p));
    c.expect(ideal_membership(id0, f0 * f0).member, "f0^2 membership");
    c.expect(ideal_membership(id0, zpow(10) * f0).member, "z^10 f0 membership");
    c.expect(ideal_membership(id0, zpow(20)).member, "z^20 membership (first)");
    c.expect(ideal_membership(id0p, f0p * f0p).member, "f0p^2 membership");
    c.expect(ideal_membership(id0p, zpow(10) * f0p).member, "z^10 f0p membership");
    c.expect(ideal_membership(id0p, zpow(20)).member, "z^20 membership (second)");
    // Homogenized Bezout identities: z^14 (resp. z^17) is a combination of the
    // first two partials, hence z^15 (resp. z^18) lies in the minors ideal.
    auto z_power_in_partials = [&](const Polynomial& f, int e) {
        JacobianTriple j = jacobian_triple(f);
        MapMatrix m = multiplication_map({j.fx, j.fy}, e);
        return image_membership(m, poly_to_vec(zpow(e), e)).member;
    };
    c.expect(z_power_in_partials(f0, 14), "z^14 partials membership");
    c.expect(ideal_membership(id0, zpow(15)).member, "z^15 membership");
    c.expect(z_power_in_partials(f0p, 17), "z^17 partials membership");
    c.expect(ideal_membership(id0p, zpow(18)).member, "z^18 membership");

    Engine eng;
    Polynomial f58 = named_curve("C0b58").projective;
    Polynomial F2 = f58 * f58 + zpow(20);
    EigenschemeIdeal id58 = eigenscheme_ideal(Derivation::tangent(f58));
    QuotientProfile q = quotient_profile(id58, F2, eng, 7);
    c.expect(q.verdict == QuotientProfile::Verdict::Proper && q.e == 2,
             "quotient of the two-member product is not (linear, quadratic)");
    if (q.verdict == QuotientProfile::Verdict::Proper) {
        Polynomial ell = parse("793202173x + 3698829360y - 1039006968z");
        c.expect(q.ell.normalized() == ell.normalized(), "linear quotient generator mismatch");
        Polynomial q2 = parse("106288200y^2 - 23416645yz - 11726872z^2");
        QEchelon span(graded_dim(2));
        span.add(poly_to_vec(q.h, 2));
        for (const char* v : {"x", "y", "z"}) span.add(poly_to_vec(q.ell * parse(v), 2));
        c.expect(span.coords(poly_to_vec(q2, 2)).has_value(),
                 "quadratic quotient generator mismatch");
    }

    auto mpog_product = [&](const Polynomial& prod, bool line, std::vector<int> exps,
                            const std::string& what) {
        PencilSpec spec;
        spec.f = f58;
        spec.explicit_products.push_back(prod);
        spec.include_line = line;
        ArrangementVerdict v = mpog_arrangement_check(pencil_arrangement(spec), eng);
        c.expect(v.applies && v.positive, what + " not positive: " + v.detail);
        c.expect(v.exponents == exps, what + " exponents mismatch");
    };
    mpog_product(F2, false, {9, 11, 12}, "two-member product");
    mpog_product(F2, true, {9, 12, 13}, "two-member product with line");
    mpog_product(f58 * f58 * f58 + zpow(30), false, {9, 21, 22}, "three-member product");
}

// 9. Property sweep: whole catalog plus 50 random curves of degree <= 8.
void c9(Checker& c) {
    auto properties = [&](const std::string& what, const Polynomial& f, const CurveReport& rep) {
        // Euler relation.
        JacobianTriple j = jacobian_triple(f);
        c.expect(parse("x") * j.fx + parse("y") * j.fy + parse("z") * j.fz ==
                     f * Rational(j.d),
                 what + " Euler relation");
        // Bounds sandwich and the freeness equivalence.
        long cap = rep.bounds.tau_max_prime ? *rep.bounds.tau_max_prime : rep.bounds.tau_max;
        c.expect(rep.tau >= rep.bounds.tau_min && rep.tau <= cap, what + " tau bounds");
        c.expect(rep.label.has(CurveClass::Free) == (rep.tau == rep.bounds.tau_max),
                 what + " freeness/tau_max equivalence");
        // Defect relations.
        if (2 * rep.r < rep.d)
            c.expect(rep.nu == rep.bounds.tau_max - rep.tau, what + " defect relation");
        if (2 * rep.r == rep.d)
            c.expect(rep.nu == 3 * long(rep.r) * rep.r - 3 * rep.r + 1 - rep.tau,
                     what + " midpoint defect relation");
        // Exponent/tau path agreement was checked inside analyze.
        c.expect(rep.consistent, what + " cross-check: " + rep.consistency_detail);
        // Saito check on every free curve.
        if (rep.label.has(CurveClass::Free)) {
            c.expect(rep.profile.certificate == "determinant", what + " free without Saito");
            if (rep.profile.generators.size() == 2) {
                Derivation t1{rep.profile.generators[0][0], rep.profile.generators[0][1],
                              rep.profile.generators[0][2]};
                Derivation t2{rep.profile.generators[1][0], rep.profile.generators[1][1],
                              rep.profile.generators[1][2]};
                Polynomial det = det_certificate(t1, t2, f);
                c.expect(det.is_constant() && !det.is_zero(), what + " Saito certificate");
            }
        }
    };

    for (const auto& name : catalog_names()) {
        const CatalogEntry& e = named_curve(name);
        if (e.pencil_only) continue;
        try {
            properties(name, e.projective, report(name));
        } catch (const std::exception& ex) {
            c.expect(false, name + " threw: " + ex.what());
        }
    }

    // Deterministic random curves.
    std::uint64_t state = 20260826u;
    auto next = [&]() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    int accepted = 0, attempts = 0;
    Engine eng;
    while (accepted < 50 && attempts < 400) {
        ++attempts;
        int d = 3 + int(next() % 6);
        Polynomial f;
        for (const auto& m : GradedBasis::of(d)) {
            long coeff = long(next() % 7) - 3;
            if (coeff != 0) f.add_term(m, Rational(coeff));
        }
        CurveReport rep;
        try {
            rep = analyze(f, eng);
        } catch (const PreconditionError&) {
            continue;
        } catch (const std::exception& ex) {
            c.expect(false, std::string("random curve threw: ") + ex.what());
            continue;
        }
        ++accepted;
        properties("random#" + std::to_string(accepted), f, rep);
    }
    c.expect(accepted == 50, "only " + std::to_string(accepted) + " random curves accepted");

    // Modular-vs-exact rank agreement with two fresh >=2^60 primes.
    for (const char* name : {"C0", "Cb", "C0p"}) {
        JacobianTriple j = jacobian_triple(named_curve(name).projective);
        for (int k = 3; k <= 5; ++k) {
            MapMatrix m = syzygy_matrix(j, k);
            PrimeGen pg(next());
            RankWitness w = modular_rank(m, pg);
            c.expect(w.rank == exact_rank(m).rank,
                     std::string(name) + " rank agreement at degree " + std::to_string(k));
            for (auto p : w.primes)
                c.expect(p > (std::uint64_t(1) << 60), "prime below 2^60");
        }
    }
}

}  // namespace

int main() {
    const std::pair<const char*, Criterion> criteria[] = {
        {"degree-10 family classifications", c1},
        {"second degree-10 family classifications", c2},
        {"coordinate-line arrangements", c3},
        {"pencil unions by two independent paths", c4},
        {"supersolvable non-free counter-examples", c5},
        {"one-parameter special values and equal-exponent curves", c6},
        {"degree-16 family and higher-degree free fibers", c7},
        {"eigenscheme memberships and quotient structure", c8},
        {"property sweep over the catalog and random curves", c9},
    };
    int failures = 0;
    int idx = 0;
    for (const auto& [desc, fn] : criteria) {
        ++idx;
        Checker c;
        try {
            fn(c);
        } catch (const std::exception& ex) {
            c.expect(false, std::string("uncaught: ") + ex.what());
        }
        std::cout << "CRITERION " << idx << " (" << desc << "): "
                  << (c.ok ? "PASS" : "FAIL") << "\n";
        if (!c.ok) {
            std::cout << "  " << c.log.str() << "\n";
            ++failures;
        }
        std::cout.flush();
    }
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
