#include "curves/jacobian.hpp"

#include <algorithm>

namespace curves {

namespace {

const Polynomial kX = Polynomial::variable(0);
const Polynomial kY = Polynomial::variable(1);
const Polynomial kZ = Polynomial::variable(2);

std::vector<Rational> stacked(const SyzygyTriple& t, int k) {
    std::vector<Rational> v;
    long n = graded_dim(k);
    v.reserve(std::size_t(3 * n));
    for (int i = 0; i < 3; ++i) {
        auto part = poly_to_vec(t[std::size_t(i)], k);
        v.insert(v.end(), part.begin(), part.end());
    }
    return v;
}

SyzygyTriple fold_kernel(const MapMatrix& m, const std::vector<Rational>& v) {
    SyzygyTriple t{Polynomial(), Polynomial(), Polynomial()};
    for (std::size_t j = 0; j < m.cols.size(); ++j) {
        if (v[j] == 0) continue;
        t[std::size_t(m.cols[j].source)].add_term(m.cols[j].shift, v[j]);
    }
    return t;
}

long certified_rank(const MapMatrix& m, PrimeGen& pg) {
    return exact_kernel(m, pg).witness.rank;
}

std::uint64_t rat_residue(const Rational& q, const Mont64& f) {
    std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), f.p);
    if (den == 0) throw BadPrime();
    std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), f.p);
    return f.mul(f.to(num), f.inv(f.to(den)));
}

} // namespace

JacobianTriple jacobian_triple(const Polynomial& f) {
    if (f.is_zero() || !f.is_homogeneous()) throw PreconditionError("input is not homogeneous");
    if (f.uses_var(3)) throw PreconditionError("input must live in x,y,z");
    int d = f.degree();
    if (d < 3) throw PreconditionError("degree must be at least 3");
    auto sq = is_squarefree(f);
    if (!sq) throw PreconditionError("curve is not reduced (route: " + sq.route + ")");
    JacobianTriple j;
    j.f = f;
    j.fx = f.differentiate(0);
    j.fy = f.differentiate(1);
    j.fz = f.differentiate(2);
    j.d = d;
    Polynomial euler = kX * j.fx + kY * j.fy + kZ * j.fz - Rational(d) * f;
    if (!euler.is_zero()) throw InternalError("Euler identity failed");
    // a cone has a constant-coefficient relation among the partials
    QEchelon ech(graded_dim(d - 1));
    int indep = 0;
    for (const Polynomial* p : {&j.fx, &j.fy, &j.fz})
        if (!p->is_zero() && ech.add(poly_to_vec(*p, d - 1))) ++indep;
    if (indep < 3) throw PreconditionError("cone detected (partials linearly dependent)");
    return j;
}

MapMatrix syzygy_matrix(const JacobianTriple& j, int k) {
    if (k < 0) {
        MapMatrix m;
        m.row_degree = k + j.d - 1;
        m.rows = graded_dim(m.row_degree);
        return m;
    }
    return multiplication_map({j.fx, j.fy, j.fz}, k + j.d - 1);
}

std::vector<SyzygyTriple> syzygy_kernel(const JacobianTriple& j, int k, Engine& eng) {
    MapMatrix m = syzygy_matrix(j, k);
    KernelResult kr = exact_kernel(m, eng.pg);
    std::vector<SyzygyTriple> out;
    out.reserve(kr.basis.size());
    for (const auto& v : kr.basis) out.push_back(fold_kernel(m, v));
    return out;
}

namespace {

bool saito_certificate(const JacobianTriple& j, const SyzygyTriple& g1, const SyzygyTriple& g2) {
    Polynomial det = det3({{{kX, kY, kZ}, {g1[0], g1[1], g1[2]}, {g2[0], g2[1], g2[2]}}});
    if (det.is_zero()) return false;
    try {
        Polynomial q = exact_divide(det, j.f);
        return q.is_constant() && !q.is_zero();
    } catch (const std::exception&) {
        return false;
    }
}

// True span dimension of `vecs` equals `expect` certified by a single prime
// (a modular span dimension is a lower bound). Returns false if the prime
// fell short and the exact path must decide.
bool modular_span_matches(const std::vector<std::vector<Rational>>& vecs, long ambient, long expect,
                          PrimeGen& pg) {
    for (int attempt = 0; attempt < 6; ++attempt) {
        Mont64 f(pg.next());
        try {
            ModEchelon ech(f, int(ambient));
            for (const auto& v : vecs) {
                std::vector<std::uint64_t> mv(v.size());
                for (std::size_t i = 0; i < v.size(); ++i)
                    mv[i] = v[i] == 0 ? 0 : rat_residue(v[i], f);
                ech.add(std::move(mv));
            }
            return ech.dim() == expect;
        } catch (const BadPrime&) {
            continue;
        }
    }
    return false;
}

} // namespace

SyzygyProfile syzygy_profile(const JacobianTriple& j, Engine& eng, int k_max) {
    // Generator degrees are bounded by 2d-4, so 2d+2 leaves room for the
    // 5-degree quiet window past the last generator; the floor of 12 keeps
    // that true for very small d. Completed scans exit early regardless.
    int cap = k_max > 0 ? k_max : std::max(2 * j.d + 2, 12);
    SyzygyProfile prof;
    prof.dims[0] = 0;
    std::vector<SyzygyTriple> prev;
    int window = 0;
    for (int k = 1; k <= cap; ++k) {
        MapMatrix m = syzygy_matrix(j, k);
        KernelResult kr = exact_kernel(m, eng.pg);
        long dimk = long(kr.basis.size());
        prof.dims[k] = dimk;
        if (dimk == 0) {
            prev.clear();
            continue;
        }
        if (prof.mdr < 0) prof.mdr = k;
        std::vector<SyzygyTriple> basis;
        basis.reserve(kr.basis.size());
        for (const auto& v : kr.basis) basis.push_back(fold_kernel(m, v));

        long ambient = 3 * graded_dim(k);
        std::vector<std::vector<Rational>> products;
        products.reserve(prev.size() * 3);
        for (const auto& t : prev)
            for (int v = 0; v < 3; ++v) {
                Polynomial mono = Polynomial::variable(v);
                products.push_back(stacked({t[0] * mono, t[1] * mono, t[2] * mono}, k));
            }

        long newgens = 0;
        if (products.empty() || !modular_span_matches(products, ambient, dimk, eng.pg)) {
            QEchelon ech(ambient);
            for (auto& p : products) ech.add(std::move(p));
            for (const auto& t : basis)
                if (ech.add(stacked(t, k))) {
                    prof.generators.push_back(t);
                    prof.generator_degrees.push_back(k);
                    ++newgens;
                }
        }
        window = newgens > 0 ? 0 : window + 1;

        if (prof.generator_degrees.size() == 2 &&
            prof.generator_degrees[0] + prof.generator_degrees[1] == j.d - 1 &&
            saito_certificate(j, prof.generators[0], prof.generators[1])) {
            prof.complete = true;
            prof.certificate = "determinant";
            break;
        }
        // The syzygy module has rank 2, so a single generator can never be a
        // complete set no matter how long the scan stays quiet; free curves
        // with widely spaced exponents (d1, d-1-d1) otherwise stop early.
        if (prof.generator_degrees.size() >= 2 && window >= 5) {
            prof.complete = true;
            prof.certificate = "window";
            break;
        }
        prev = std::move(basis);
    }
    return prof;
}

int mdr(const JacobianTriple& j, Engine& eng) {
    for (int k = 1; k <= j.d - 1; ++k) {
        MapMatrix m = syzygy_matrix(j, k);
        if (exact_kernel(m, eng.pg).basis.size() > 0) return k;
    }
    throw InternalError("no syzygy up to degree d-1");
}

long milnor_hilbert(const JacobianTriple& j, int k, Engine& eng) {
    if (k < 0) throw std::invalid_argument("milnor_hilbert: negative degree");
    if (k - j.d + 1 < 0) return graded_dim(k);
    MapMatrix m = multiplication_map({j.fx, j.fy, j.fz}, k);
    long rank = eng.resolve(j.d) == Backend::Exact ? certified_rank(m, eng.pg)
                                                   : modular_rank(m, eng.pg).rank;
    return graded_dim(k) - rank;
}

long total_tjurina(const JacobianTriple& j, Engine& eng, TjurinaRecord* rec) {
    int start = 3 * j.d - 6;
    long prev = -1;
    int prev_k = -1;
    for (int k = start; k <= 4 * j.d; ++k) {
        long mh = milnor_hilbert(j, k, eng);
        if (rec) rec->milnor[k] = mh;
        if (mh == prev) {
            if (rec) {
                rec->tau = mh;
                rec->stabilization_degree = prev_k;
                if (rec->route.empty()) rec->route = "scan";
            }
            return mh;
        }
        prev = mh;
        prev_k = k;
    }
    throw InternalError("Milnor Hilbert function did not stabilize by 4d");
}

long total_tjurina_free(const JacobianTriple& j, int d1, int d2, TjurinaRecord* rec) {
    auto value = [&](int k) {
        int km = k - j.d + 1;
        return graded_dim(k) - 3 * graded_dim(km) + graded_dim(km - d1) + graded_dim(km - d2);
    };
    int start = 3 * j.d - 6;
    long a = value(start), b = value(start + 1), c = value(start + 2);
    if (a != b || b != c) throw InternalError("free resolution Hilbert value not stable");
    if (rec) {
        rec->tau = a;
        rec->stabilization_degree = start;
        rec->route = "free-resolution";
        rec->milnor[start] = a;
        rec->milnor[start + 1] = b;
    }
    return a;
}

long jacobian_dim(const JacobianTriple& j, int k, Engine& eng) {
    if (k < 0) return 0;
    return graded_dim(k) - milnor_hilbert(j, k, eng);
}

namespace {

// Row-reduced basis of a subspace of S_deg over F_p.
struct SubspaceRref {
    int deg = 0;
    long dim = 0;
    std::vector<int> pivots;
    ModMatrix m; // rows = dim, fully reduced
};

SubspaceRref rref_of_rows(int deg, ModMatrix&& mm) {
    SubspaceRref s;
    s.deg = deg;
    s.pivots = mod_rref(mm);
    s.dim = long(s.pivots.size());
    ModMatrix compact;
    compact.f = mm.f;
    compact.rows = int(s.dim);
    compact.cols = mm.cols;
    compact.a.assign(std::size_t(compact.rows) * std::size_t(compact.cols), 0);
    for (int r = 0; r < compact.rows; ++r)
        std::copy(mm.row(r), mm.row(r) + mm.cols, compact.row(r));
    s.m = std::move(compact);
    return s;
}

SubspaceRref jacobian_span(const JacobianTriple& j, int deg, const Mont64& f) {
    MapMatrix map = multiplication_map({j.fx, j.fy, j.fz}, deg);
    ModMatrix mm;
    mm.f = f;
    mm.rows = int(map.col_count());
    mm.cols = int(map.rows);
    mm.a.assign(std::size_t(mm.rows) * std::size_t(mm.cols), 0);
    for (int r = 0; r < mm.rows; ++r)
        for (const auto& [row, c] : map.cols[std::size_t(r)].entries)
            mm.row(r)[row] = rat_residue(c, f);
    return rref_of_rows(deg, std::move(mm));
}

// One saturation descent step: from U at degree deg to
// { h in S_{deg-1} : x h, y h, z h all lie in U }.
SubspaceRref descend(const SubspaceRref& u, const Mont64& f) {
    int hi = u.deg, lo = u.deg - 1;
    long nh = graded_dim(hi), nl = graded_dim(lo);
    long q = nh - u.dim; // quotient dimension
    std::vector<long> qcoord(std::size_t(nh), -1);
    std::vector<long> pivrow(std::size_t(nh), -1);
    for (std::size_t i = 0; i < u.pivots.size(); ++i) pivrow[std::size_t(u.pivots[i])] = long(i);
    long qi = 0;
    for (long i = 0; i < nh; ++i)
        if (pivrow[std::size_t(i)] < 0) qcoord[std::size_t(i)] = qi++;

    ModMatrix mm;
    mm.f = f;
    mm.rows = int(3 * q);
    mm.cols = int(nl);
    mm.a.assign(std::size_t(mm.rows) * std::size_t(mm.cols), 0);
    const auto& lo_basis = GradedBasis::of(lo);
    for (long c = 0; c < nl; ++c)
        for (int v = 0; v < 3; ++v) {
            long i = GradedBasis::index(lo_basis[std::size_t(c)] * Monomial::var(v));
            long block = long(v) * q;
            if (pivrow[std::size_t(i)] < 0) {
                if (q > 0) mm.row(int(block + qcoord[std::size_t(i)]))[c] = f.one;
            } else {
                const std::uint64_t* row = u.m.row(int(pivrow[std::size_t(i)]));
                for (long w = 0; w < nh; ++w) {
                    if (row[std::size_t(w)] == 0 || qcoord[std::size_t(w)] < 0) continue;
                    mm.row(int(block + qcoord[std::size_t(w)]))[c] = f.sub(0, row[std::size_t(w)]);
                }
            }
        }
    auto pivots = mod_rref(mm);
    auto kernel = mod_kernel_from_rref(mm, pivots);
    ModMatrix basis;
    basis.f = f;
    basis.rows = int(kernel.size());
    basis.cols = int(nl);
    basis.a.assign(std::size_t(basis.rows) * std::size_t(basis.cols), 0);
    for (std::size_t r = 0; r < kernel.size(); ++r)
        std::copy(kernel[r].begin(), kernel[r].end(), basis.row(int(r)));
    return rref_of_rows(lo, std::move(basis));
}

// Saturation dimensions at every degree in [0, k_top], descending from a start
// degree T; entry k reflects exponent N = T - k.
std::vector<long> sat_sweep(const JacobianTriple& j, int T, int k_top, const Mont64& f) {
    SubspaceRref u = jacobian_span(j, T, f);
    std::vector<long> dims(std::size_t(k_top) + 1, 0);
    if (T <= k_top) dims[std::size_t(T)] = u.dim;
    for (int deg = T; deg > 0; --deg) {
        u = descend(u, f);
        if (u.deg <= k_top) dims[std::size_t(u.deg)] = u.dim;
    }
    return dims;
}

std::vector<long> stable_sat_dims(const JacobianTriple& j, int k_top, const Mont64& f) {
    std::vector<long> prev;
    for (int T = k_top + 1; T <= k_top + 3 * j.d; ++T) {
        std::vector<long> cur = sat_sweep(j, T, k_top, f);
        if (!prev.empty() && cur == prev) return cur;
        prev = std::move(cur);
    }
    throw InternalError("saturation sweep did not stabilize");
}

} // namespace

long saturation_dim(const JacobianTriple& j, int k, Engine& eng) {
    if (k < 0) throw std::invalid_argument("saturation_dim: negative degree");
    long agreed = -1;
    int agreements = 0;
    for (int attempt = 0; attempt < 12 && agreements < 2; ++attempt) {
        Mont64 f(eng.pg.next());
        try {
            long prev = -1;
            long result = -1;
            for (int T = k + 1; T <= k + 3 * j.d; ++T) {
                SubspaceRref u = jacobian_span(j, T, f);
                for (int deg = T; deg > k; --deg) u = descend(u, f);
                if (u.dim == prev) {
                    result = u.dim;
                    break;
                }
                prev = u.dim;
            }
            if (result < 0) throw InternalError("saturation exponent cap breached");
            if (result == agreed) ++agreements;
            else {
                agreed = result;
                agreements = 1;
            }
        } catch (const BadPrime&) {
            continue;
        }
    }
    if (agreements < 2) throw InternalError("saturation_dim: prime agreement failed");
    return agreed;
}

namespace {

long syzygy_dim_at(const JacobianTriple& j, int k, Engine& eng, std::map<int, long>& cache) {
    if (k < 0) return 0;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    MapMatrix m = syzygy_matrix(j, k);
    long rank = eng.resolve(j.d) == Backend::Exact ? certified_rank(m, eng.pg)
                                                   : modular_rank(m, eng.pg).rank;
    long dim = m.col_count() - rank;
    cache[k] = dim;
    return dim;
}

} // namespace

TjurinaRecord freeness_defect(const JacobianTriple& j, Engine& eng, const SyzygyProfile* profile) {
    TjurinaRecord rec;
    int d = j.d;
    // below degree 22 the scan and descent are cheap, so even certified-free
    // curves take the generic routes and keep the tau/exponent comparison an
    // actual cross-check
    if (d >= 22 && profile && profile->complete && profile->generator_degrees.size() == 2 &&
        profile->generator_degrees[0] + profile->generator_degrees[1] == d - 1) {
        total_tjurina_free(j, profile->generator_degrees[0], profile->generator_degrees[1], &rec);
        rec.nu = 0;
        return rec;
    }
    int k_top = 3 * d - 6;
    if (d <= 13) {
        total_tjurina(j, eng, &rec);
        rec.route = "saturation";
        std::vector<long> n_agreed;
        int agreements = 0;
        for (int attempt = 0; attempt < 12 && agreements < 2; ++attempt) {
            Mont64 f(eng.pg.next());
            try {
                std::vector<long> sat = stable_sat_dims(j, k_top, f);
                std::vector<long> n(sat.size());
                for (int k = 0; k <= k_top; ++k) {
                    SubspaceRref jac = jacobian_span(j, k, f);
                    n[std::size_t(k)] = sat[std::size_t(k)] - jac.dim;
                }
                if (!n_agreed.empty() && n == n_agreed) ++agreements;
                else {
                    n_agreed = std::move(n);
                    agreements = 1;
                }
            } catch (const BadPrime&) {
                continue;
            }
        }
        if (agreements < 2) throw InternalError("freeness defect: prime agreement failed");
        rec.nu = 0;
        for (int k = 0; k <= k_top; ++k) {
            long nk = n_agreed[std::size_t(k)];
            if (nk < 0) throw InternalError("negative saturation quotient");
            if (nk > 0) rec.n_values[k] = nk;
            rec.nu = std::max(rec.nu, nk);
        }
        return rec;
    }
    // duality route: n(f)_{k+d-1} expressed through two syzygy dimensions and tau
    total_tjurina(j, eng, &rec);
    rec.route = "duality";
    std::map<int, long> cache;
    rec.nu = 0;
    for (int deg = 0; deg <= k_top; ++deg) {
        long k = deg - d + 1;
        long rr = k * k + (4 - d) * k + 3 - long(d) * (d + 1) / 2 + rec.tau;
        long nk = syzygy_dim_at(j, int(k), eng, cache) +
                  syzygy_dim_at(j, int(d - 4 - k), eng, cache) - rr;
        if (nk < 0) throw InternalError("duality identity produced a negative value");
        if (nk > 0) rec.n_values[deg] = nk;
        rec.nu = std::max(rec.nu, nk);
    }
    return rec;
}

} // namespace curves
