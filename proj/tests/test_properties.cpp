#include <doctest.h>

#include <cstdint>

#include "curves/classify.hpp"
#include "curves/eigenscheme.hpp"

using namespace curves;

namespace {

// Small deterministic generator for reproducible random curves.
struct Rng {
    std::uint64_t s;
    std::uint64_t next() {
        s += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long pick(long lo, long hi) { return lo + long(next() % std::uint64_t(hi - lo + 1)); }
};

Polynomial random_curve(Rng& rng, int d) {
    Polynomial f;
    for (const auto& m : GradedBasis::of(d)) {
        long c = rng.pick(-3, 3);
        if (c != 0) f.add_term(m, Rational(c));
    }
    return f;
}

}  // namespace

TEST_CASE("property sweep over random curves of degree at most 8") {
    Rng rng{20260826u};
    Engine eng;
    int accepted = 0;
    int attempts = 0;
    while (accepted < 50 && attempts < 400) {
        ++attempts;
        int d = int(rng.pick(3, 8));
        Polynomial f = random_curve(rng, d);
        JacobianTriple j;
        try {
            j = jacobian_triple(f);
        } catch (const PreconditionError&) {
            continue;  // non-reduced or cone draws are discarded
        }
        ++accepted;
        INFO("curve #", accepted, ": ", f.str());

        CurveReport rep = analyze(f, eng);

        // Every internal consistency gate (exponent/tau label agreement,
        // tau bounds, defect relations) must have passed.
        CHECK(rep.consistent);

        // Bounds sandwich.
        CHECK(rep.tau >= rep.bounds.tau_min);
        long cap = rep.bounds.tau_max_prime ? *rep.bounds.tau_max_prime : rep.bounds.tau_max;
        CHECK(rep.tau <= cap);

        // Freeness is equivalent to tau reaching tau_max.
        CHECK(rep.label.has(CurveClass::Free) == (rep.tau == rep.bounds.tau_max));

        // Defect relations below and at the midpoint.
        if (2 * rep.r < rep.d) CHECK(rep.nu == rep.bounds.tau_max - rep.tau);
        if (2 * rep.r == rep.d)
            CHECK(rep.nu == 3 * long(rep.r) * rep.r - 3 * rep.r + 1 - rep.tau);

        // Exponent bookkeeping.
        REQUIRE_FALSE(rep.exponents.empty());
        CHECK(rep.exponents.front() == rep.r);
        long dim_sum = 0;
        for (int e : rep.exponents) dim_sum += e;
        CHECK(dim_sum >= rep.d - 1);  // d1 + d2 >= d - 1 and the rest are positive

        // Every free verdict is backed by the determinant certificate.
        if (rep.label.has(CurveClass::Free)) {
            CHECK(rep.profile.certificate == "determinant");
            REQUIRE(rep.profile.generators.size() == 2);
            Derivation t1{rep.profile.generators[0][0], rep.profile.generators[0][1],
                          rep.profile.generators[0][2]};
            Derivation t2{rep.profile.generators[1][0], rep.profile.generators[1][1],
                          rep.profile.generators[1][2]};
            Polynomial c = det_certificate(t1, t2, f);
            CHECK(c.is_constant());
            CHECK_FALSE(c.is_zero());
        }
    }
    REQUIRE(accepted == 50);
}

TEST_CASE("modular and exact backends agree on random syzygy ranks") {
    Rng rng{7u};
    int done = 0, attempts = 0;
    while (done < 10 && attempts < 100) {
        ++attempts;
        int d = int(rng.pick(3, 6));
        Polynomial f = random_curve(rng, d);
        JacobianTriple j;
        try {
            j = jacobian_triple(f);
        } catch (const PreconditionError&) {
            continue;
        }
        ++done;
        for (int k = 1; k <= d; ++k) {
            MapMatrix m = syzygy_matrix(j, k);
            PrimeGen pg(rng.next());
            RankWitness mw = modular_rank(m, pg);
            CHECK(mw.rank == exact_rank(m).rank);
            for (auto p : mw.primes) CHECK(p > (std::uint64_t(1) << 60));
        }
    }
    REQUIRE(done == 10);
}
