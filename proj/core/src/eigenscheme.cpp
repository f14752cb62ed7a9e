#include "curves/eigenscheme.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace curves {

namespace {

const Polynomial kX = Polynomial::variable(0);
const Polynomial kY = Polynomial::variable(1);
const Polynomial kZ = Polynomial::variable(2);

long span_rank(const MapMatrix& m, Engine& eng) {
    if (m.rows <= 220 && m.col_count() <= 220) return exact_rank(m).rank;
    return modular_rank(m, eng.pg).rank;
}

} // namespace

int Derivation::degree() const {
    int deg = kDegreeOfZero;
    for (const Polynomial* p : {&a, &b, &c}) {
        if (p->is_zero()) continue;
        if (!p->is_homogeneous()) throw std::invalid_argument("derivation coefficients must be homogeneous");
        if (deg != kDegreeOfZero && p->degree() != deg)
            throw std::invalid_argument("derivation coefficients have mixed degrees");
        deg = p->degree();
    }
    if (deg == kDegreeOfZero) throw std::invalid_argument("zero derivation has no degree");
    return deg;
}

bool Derivation::primitive() const {
    if (is_zero()) return false;
    return gcd(gcd(a, b), c).is_constant();
}

Derivation Derivation::tangent(const Polynomial& f) {
    return {f.differentiate(1), -f.differentiate(0), Polynomial()};
}

bool Derivation::annihilates(const Polynomial& f) const {
    return (a * f.differentiate(0) + b * f.differentiate(1) + c * f.differentiate(2)).is_zero();
}

EigenschemeIdeal eigenscheme_ideal(const Derivation& theta) {
    if (theta.is_zero()) throw std::invalid_argument("eigenscheme of the zero derivation");
    EigenschemeIdeal ideal;
    ideal.minors[0] = kY * theta.c - kZ * theta.b;
    ideal.minors[1] = kZ * theta.a - kX * theta.c;
    ideal.minors[2] = kX * theta.b - kY * theta.a;
    ideal.source = theta;
    return ideal;
}

namespace {

std::vector<Polynomial> nonzero_minors(const EigenschemeIdeal& ideal) {
    std::vector<Polynomial> gens;
    for (const auto& m : ideal.minors)
        if (!m.is_zero()) gens.push_back(m);
    return gens;
}

} // namespace

bool is_zero_dimensional(const EigenschemeIdeal& ideal, Engine& eng) {
    auto gens = nonzero_minors(ideal);
    if (gens.empty()) throw std::invalid_argument("all minors vanish");
    Polynomial g = gens[0];
    for (std::size_t i = 1; i < gens.size(); ++i) g = gcd(g, gens[i]);
    if (!g.is_constant()) return false;
    int r1 = ideal.minors[0].is_zero() ? gens[0].degree() : ideal.minors[0].degree();
    long prev = -1;
    for (int k = 3 * r1; k <= 6 * r1 + 6; ++k) {
        MapMatrix m = multiplication_map(gens, k);
        long hv = graded_dim(k) - span_rank(m, eng);
        if (hv == prev) return hv > 0;
        prev = hv;
    }
    throw InternalError("eigenscheme Hilbert function did not stabilize");
}

MembershipResult ideal_membership(const EigenschemeIdeal& ideal, const Polynomial& g) {
    if (g.is_zero() || !g.is_homogeneous())
        throw std::invalid_argument("membership target must be nonzero homogeneous");
    MapMatrix m = multiplication_map(nonzero_minors(ideal), g.degree());
    return image_membership(m, poly_to_vec(g, g.degree()));
}

namespace {

// dim { h in S_k : h*f in I_{k+d} } = dim S_k - (rank [M_I | M_f] - rank M_I).
long quotient_dim(const std::vector<Polynomial>& gens, const Polynomial& f, int k, Engine& eng) {
    if (k < 0) return 0;
    int target = k + f.degree();
    MapMatrix ionly = multiplication_map(gens, target);
    std::vector<Polynomial> both = gens;
    both.push_back(f);
    MapMatrix combined = multiplication_map(both, target);
    return graded_dim(k) - (span_rank(combined, eng) - span_rank(ionly, eng));
}

// Exact basis of the degree-k piece of the quotient ideal.
std::vector<Polynomial> quotient_basis(const std::vector<Polynomial>& gens, const Polynomial& f,
                                       int k, Engine& eng) {
    std::vector<Polynomial> both = gens;
    both.push_back(f);
    int fsource = int(gens.size());
    MapMatrix combined = multiplication_map(both, k + f.degree());
    KernelResult kr = exact_kernel(combined, eng.pg);
    QEchelon ech(graded_dim(k));
    std::vector<Polynomial> basis;
    for (const auto& v : kr.basis) {
        Polynomial h;
        for (std::size_t j = 0; j < combined.cols.size(); ++j) {
            if (v[j] == 0 || combined.cols[j].source != fsource) continue;
            h.add_term(combined.cols[j].shift, v[j]);
        }
        if (h.is_zero()) continue;
        if (ech.add(poly_to_vec(h, k))) basis.push_back(h);
    }
    return basis;
}

} // namespace

QuotientProfile quotient_profile(const EigenschemeIdeal& ideal, const Polynomial& f, Engine& eng,
                                 int k_max) {
    if (f.is_zero() || !f.is_homogeneous() || f.uses_var(3))
        throw std::invalid_argument("quotient divisor must be homogeneous in x,y,z");
    auto gens = nonzero_minors(ideal);
    if (gens.empty()) throw std::invalid_argument("all minors vanish");
    QuotientProfile qp;
    int cap = k_max > 0 ? k_max : std::max(8, f.degree());

    qp.dims[0] = quotient_dim(gens, f, 0, eng);
    if (qp.dims[0] == 1) {
        qp.verdict = QuotientProfile::Verdict::WholeRing;
        return qp;
    }
    qp.dims[1] = quotient_dim(gens, f, 1, eng);
    if (qp.dims[1] < 1) {
        for (int k = 2; k <= std::min(cap, 4); ++k) qp.dims[k] = quotient_dim(gens, f, k, eng);
        qp.verdict = QuotientProfile::Verdict::Other;
        return qp;
    }
    auto linear = quotient_basis(gens, f, 1, eng);
    if (linear.empty() || long(linear.size()) != qp.dims[1])
        throw InternalError("quotient extraction disagrees with the dimension count");
    qp.ell = linear[0];

    int e = -1;
    if (qp.dims[1] >= 2) {
        e = 1;
        qp.h = linear[1];
    } else {
        for (int k = 2; k <= cap; ++k) {
            qp.dims[k] = quotient_dim(gens, f, k, eng);
            if (qp.dims[k] > graded_dim(k - 1)) {
                e = k;
                break;
            }
        }
        if (e < 0) {
            qp.verdict = QuotientProfile::Verdict::Other;
            return qp;
        }
        // second generator: a degree-e element outside ell*S_{e-1}
        auto ke = quotient_basis(gens, f, e, eng);
        QEchelon ech(graded_dim(e));
        for (const Monomial& m : GradedBasis::of(e - 1))
            ech.add(poly_to_vec(qp.ell.mono_mul(m), e));
        for (const auto& h : ke)
            if (ech.add(poly_to_vec(h, e))) {
                qp.h = h;
                break;
            }
        if (qp.h.is_zero()) throw InternalError("missing second quotient generator");
    }
    qp.e = e;

    // complete-intersection Hilbert verification through e+5
    for (int k = 0; k <= e + 5; ++k) {
        if (!qp.dims.count(k)) qp.dims[k] = quotient_dim(gens, f, k, eng);
        long expect = graded_dim(k - 1) + graded_dim(k - e) - graded_dim(k - e - 1);
        if (qp.dims[k] != expect) {
            qp.verdict = QuotientProfile::Verdict::Other;
            return qp;
        }
    }
    qp.verdict = QuotientProfile::Verdict::Proper;
    return qp;
}

DerivationCriterion derivation_classify(const Polynomial& f, const Derivation& theta, Engine& eng) {
    if (!theta.annihilates(f)) throw PreconditionError("derivation is not a syzygy of the curve");
    int r = theta.degree();
    int d = f.degree();
    if (2 * r > d - 1) throw PreconditionError("hypothesis 2r <= d-1 unmet");
    EigenschemeIdeal ideal = eigenscheme_ideal(theta);
    if (!is_zero_dimensional(ideal, eng)) throw PreconditionError("eigenscheme is not finite");
    DerivationCriterion out;
    out.profile = quotient_profile(ideal, f, eng);
    std::ostringstream cert;
    switch (out.profile.verdict) {
        case QuotientProfile::Verdict::WholeRing:
            out.label = classify_from_exponents(d, {r, d - r - 1});
            cert << "curve lies in the minor ideal; free with exponents (" << r << "," << d - r - 1
                 << ")";
            break;
        case QuotientProfile::Verdict::Proper: {
            int e = out.profile.e;
            out.label = classify_from_exponents(d, {r, d - r, d - r - 1 + e});
            cert << "quotient generated by a linear form and a degree-" << e << " form";
            break;
        }
        case QuotientProfile::Verdict::Other:
            out.label.facets.push_back({CurveClass::General, {}});
            cert << "quotient structure unresolved";
            break;
    }
    out.certificate = cert.str();
    return out;
}

Polynomial det_certificate(const Derivation& theta, const Derivation& eta, const Polynomial& f) {
    if (!theta.annihilates(f) || !eta.annihilates(f))
        throw PreconditionError("determinant certificate needs two syzygies of the curve");
    Polynomial det = det3({{{kX, kY, kZ},
                            {theta.a, theta.b, theta.c},
                            {eta.a, eta.b, eta.c}}});
    if (det.is_zero()) throw InternalError("determinant vanished; derivations are dependent");
    try {
        return exact_divide(det, f);
    } catch (const std::exception&) {
        throw InternalError("determinant is not divisible by the curve equation");
    }
}

namespace {

Polynomial zpow(int d) { return Polynomial::variable(2, d); }

} // namespace

PencilArrangement pencil_arrangement(const PencilSpec& spec) {
    const Polynomial& f = spec.f;
    if (f.is_zero() || !f.is_homogeneous() || f.uses_var(3))
        throw PreconditionError("pencil base must be homogeneous in x,y,z");
    int d = f.degree();
    if (!gcd(f.differentiate(0), f.differentiate(1)).is_constant())
        throw PreconditionError("partials with respect to x and y share a factor");
    if (f.set_var(2, Rational(0)).is_zero())
        throw PreconditionError("the line z=0 is a component of the base member");

    std::set<std::pair<std::string, std::string>> seen;
    Polynomial F = Polynomial(Rational(1));
    int k = 0;
    for (const auto& [alpha, beta] : spec.members) {
        if (alpha == 0 && beta == 0) throw PreconditionError("member (0:0) is not a projective point");
        Rational na = alpha, nb = beta;
        if (nb != 0) {
            na /= nb;
            nb = 1;
        } else {
            na = 1;
        }
        if (!seen.insert({to_string(na), to_string(nb)}).second)
            throw PreconditionError("duplicate pencil member");
        Polynomial member = na * f + nb * zpow(d);
        if (member.is_zero() || member.degree() != d)
            throw PreconditionError("degenerate pencil member");
        if (!is_squarefree(member)) throw PreconditionError("pencil member is not reduced");
        F = F * member;
        ++k;
    }
    for (const Polynomial& p : spec.explicit_products) {
        if (p.is_zero() || !p.is_homogeneous() || p.degree() % d != 0)
            throw PreconditionError("explicit product degree is not a multiple of d");
        int kk = p.degree() / d;
        // must be a combination of f^i * z^(d(kk-i)) — a binary form in the pencil
        QEchelon ech(graded_dim(p.degree()));
        std::vector<Polynomial> pows;
        for (int i = 0; i <= kk; ++i) pows.push_back(f.pow(i) * zpow(d * (kk - i)));
        for (const auto& q : pows) ech.add(poly_to_vec(q, p.degree()));
        if (!ech.coords(poly_to_vec(p, p.degree())))
            throw PreconditionError("explicit product does not lie in the pencil");
        if (!is_squarefree(p))
            throw PreconditionError("explicit product has a repeated or non-reduced member");
        F = F * p;
        k += kk;
    }
    if (k == 0) throw PreconditionError("empty arrangement");
    if (spec.include_line) F = F * Polynomial::variable(2);
    if (!is_squarefree(F)) throw PreconditionError("arrangement members are not distinct");

    PencilArrangement arr;
    arr.F = F;
    arr.delta = Derivation::tangent(f);
    arr.k = k;
    arr.d = d;
    arr.with_line = spec.include_line;
    if (!arr.delta.annihilates(F)) throw InternalError("tangent derivation failed to annihilate");
    return arr;
}

ArrangementVerdict free_arrangement_check(const PencilArrangement& arr, Engine& eng) {
    (void)eng;
    ArrangementVerdict v;
    if (arr.k < 2) {
        v.detail = "needs at least two pencil members";
        return v;
    }
    v.applies = true;
    EigenschemeIdeal ideal = eigenscheme_ideal(arr.delta);
    MembershipResult mem = ideal_membership(ideal, arr.F);
    v.positive = mem.member;
    int shift = arr.with_line ? 1 : 0;
    v.exponents = {arr.d - 1, (arr.k - 1) * arr.d + shift};
    v.detail = mem.member ? "product lies in the minor ideal" : "product is not in the minor ideal";
    return v;
}

ArrangementVerdict mpog_arrangement_check(const PencilArrangement& arr, Engine& eng) {
    ArrangementVerdict v;
    if (arr.k < 2) {
        v.detail = "needs at least two pencil members";
        return v;
    }
    v.applies = true;
    EigenschemeIdeal ideal = eigenscheme_ideal(arr.delta);
    QuotientProfile qp = quotient_profile(ideal, arr.F, eng, 7);
    v.positive = qp.verdict == QuotientProfile::Verdict::Proper && qp.e == 2;
    int shift = arr.with_line ? 1 : 0;
    v.exponents = {arr.d - 1, (arr.k - 1) * arr.d + 1 + shift, (arr.k - 1) * arr.d + 2 + shift};
    std::ostringstream os;
    if (qp.verdict == QuotientProfile::Verdict::WholeRing) os << "quotient is the whole ring (free case)";
    else if (qp.verdict == QuotientProfile::Verdict::Proper) os << "quotient proper with e=" << qp.e;
    else os << "quotient structure unresolved";
    v.detail = os.str();
    return v;
}

} // namespace curves
