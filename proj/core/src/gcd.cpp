#include <random>

#include "curves/polynomial.hpp"
#include "univar.hpp"

namespace curves {
namespace {

using detail::UPoly;

// f specialized to a univariate polynomial in v at an integer point for
// the remaining variables.
UPoly specialize(const Polynomial& f, int v, const std::array<long, kNumVars>& pt) {
    UPoly out(std::size_t(f.degree_in(v)) + 1, Rational(0));
    for (const auto& [m, c] : f.terms()) {
        Rational val = c;
        for (int i = 0; i < kNumVars; ++i) {
            if (i == v) continue;
            for (int k = 0; k < m[i]; ++k) val *= pt[i];
        }
        out[std::size_t(m[v])] += val;
    }
    detail::utrim(out);
    return out;
}

// Certified coprimality: if for every variable shared by f and g there is
// a specialization preserving both v-degrees whose univariate gcd is
// constant, then no nonconstant common divisor exists.
bool certified_coprime(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) return false;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<long> pick(-19, 19);
    for (int v = 0; v < kNumVars; ++v) {
        int df = f.degree_in(v), dg = g.degree_in(v);
        if (df == 0 || dg == 0) continue; // v cannot occur in a common divisor
        bool certified = false;
        for (int attempt = 0; attempt < 12 && !certified; ++attempt) {
            std::array<long, kNumVars> pt{};
            for (int i = 0; i < kNumVars; ++i) pt[i] = pick(rng);
            UPoly uf = specialize(f, v, pt), ug = specialize(g, v, pt);
            if (detail::udeg(uf) != df || detail::udeg(ug) != dg) continue;
            if (detail::udeg(detail::ugcd(uf, ug)) == 0) certified = true;
        }
        if (!certified) return false;
    }
    return true;
}

// Pseudo-remainder of a by b with respect to v (deg_v a >= deg_v b >= 1).
Polynomial pseudo_rem(const Polynomial& a, const Polynomial& b, int v) {
    std::vector<Polynomial> ra = a.coeffs_in(v);
    std::vector<Polynomial> rb = b.coeffs_in(v);
    const Polynomial& lb = rb.back();
    int da = int(ra.size()) - 1, db = int(rb.size()) - 1;
    for (int step = da; step >= db; --step) {
        // multiply the remainder by lb, then cancel the top coefficient
        Polynomial top = ra[std::size_t(step)];
        for (auto& c : ra) c = c * lb;
        if (!top.is_zero())
            for (int i = 0; i <= db; ++i)
                ra[std::size_t(step - db + i)] -= top * rb[std::size_t(i)];
        ra.pop_back();
        if (ra.empty()) break;
    }
    Polynomial out;
    for (std::size_t i = 0; i < ra.size(); ++i)
        out += ra[i] * Polynomial::variable(v, int(i));
    return out;
}

Polynomial content_in(const std::vector<Polynomial>& coeffs) {
    Polynomial c;
    for (const auto& p : coeffs) {
        if (p.is_zero()) continue;
        c = c.is_zero() ? p.normalized() : gcd(c, p);
        if (c.is_constant()) break;
    }
    return c.is_zero() ? Polynomial::zero() : c;
}

} // namespace

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero()) return g.normalized();
    if (g.is_zero()) return f.normalized();
    if (f.is_constant() || g.is_constant()) return Polynomial(Rational(1));
    if (certified_coprime(f, g)) return Polynomial(Rational(1));

    // main variable: one occurring in both, of minimal combined degree
    int v = -1;
    long best = -1;
    for (int i = 0; i < kNumVars; ++i) {
        int df = f.degree_in(i), dg = g.degree_in(i);
        if (df == 0 || dg == 0) continue;
        long score = long(df) + dg;
        if (v < 0 || score < best) {
            v = i;
            best = score;
        }
    }
    // no shared variable: a common divisor would need one
    if (v < 0) return Polynomial(Rational(1));

    Polynomial cf = content_in(f.coeffs_in(v)), cg = content_in(g.coeffs_in(v));
    Polynomial a = exact_divide(f, cf), b = exact_divide(g, cg);
    Polynomial c = gcd(cf, cg);

    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    while (!b.is_zero() && b.degree_in(v) > 0) {
        Polynomial r = pseudo_rem(a, b, v);
        if (!r.is_zero()) {
            Polynomial rc = content_in(r.coeffs_in(v));
            r = exact_divide(r, rc);
        }
        a = std::move(b);
        b = std::move(r);
    }
    if (!b.is_zero()) return c.normalized(); // last nonzero remainder is a unit in v
    return (c * a).normalized();
}

SquarefreeResult is_squarefree(const Polynomial& f, int trials) {
    if (f.is_zero() || !f.is_homogeneous() || f.uses_var(3))
        throw std::invalid_argument("is_squarefree: expects a nonzero homogeneous polynomial in x,y,z");
    if (f.degree() == 0) return {true, "constant", std::nullopt};

    // A restriction f(P + u*Q) of full degree that is squarefree proves f
    // squarefree: a repeated factor would survive with its full degree.
    std::mt19937_64 rng(0xa076'1d64'78bd'642full);
    std::uniform_int_distribution<long> pick(-13, 13);
    for (int t = 0; t < trials; ++t) {
        std::array<long, kNumVars> P{pick(rng), pick(rng), pick(rng), 0};
        std::array<long, kNumVars> Q{pick(rng), pick(rng), pick(rng), 0};
        UPoly p(std::size_t(f.degree()) + 1, Rational(0));
        for (const auto& [m, c] : f.terms()) {
            // expand prod_i (P_i + u Q_i)^{e_i} by convolution
            UPoly acc{c};
            for (int i = 0; i < 3; ++i) {
                for (int k = 0; k < m[i]; ++k) {
                    UPoly next(acc.size() + 1, Rational(0));
                    for (std::size_t j = 0; j < acc.size(); ++j) {
                        next[j] += acc[j] * P[std::size_t(i)];
                        next[j + 1] += acc[j] * Q[std::size_t(i)];
                    }
                    acc = std::move(next);
                }
            }
            for (std::size_t j = 0; j < acc.size(); ++j) p[j] += acc[j];
        }
        detail::utrim(p);
        if (detail::udeg(p) != f.degree()) continue; // degree dropped; line unusable
        if (detail::usquarefree(p)) return {true, "line-restriction", std::nullopt};
    }

    Polynomial g = gcd(gcd(f.differentiate(0), f.differentiate(1)), f.differentiate(2));
    g = gcd(g, f);
    if (g.is_constant()) return {true, "exact-gcd", std::nullopt};
    return {false, "exact-gcd", g};
}

} // namespace curves
