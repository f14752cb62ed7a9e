#include "curves/classify.hpp"

#include <algorithm>
#include <sstream>

namespace curves {

TauBounds tau_bounds(int d, int r) {
    if (d < 3 || r < 1 || r > d - 1) throw std::invalid_argument("tau_bounds: need d >= 3, 1 <= r <= d-1");
    TauBounds b;
    b.d = d;
    b.r = r;
    long D = d, R = r;
    b.tau_min = (D - 1) * (D - R - 1);
    b.tau_max = (D - 1) * (D - 1) - R * (D - R - 1);
    if (2 * r >= d) {
        long m = 2 * R + 2 - D;
        b.tau_max_prime = b.tau_max - m * (m - 1) / 2;
    }
    return b;
}

std::string to_string(CurveClass c) {
    switch (c) {
        case CurveClass::Free: return "free";
        case CurveClass::NearlyFree: return "nearly-free";
        case CurveClass::MPOG: return "mpog";
        case CurveClass::PlusOneGenerated: return "plus-one-generated";
        case CurveClass::MaxTjurina: return "max-tjurina";
        case CurveClass::TypeDRM: return "type";
        case CurveClass::General: return "general";
    }
    return "?";
}

std::string Facet::str() const {
    std::ostringstream os;
    os << to_string(kind);
    if (!params.empty()) {
        os << "(";
        for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
        os << ")";
    }
    return os.str();
}

bool ClassificationLabel::has(CurveClass k) const { return find(k) != nullptr; }

const Facet* ClassificationLabel::find(CurveClass k) const {
    for (const auto& f : facets)
        if (f.kind == k) return &f;
    return nullptr;
}

std::string ClassificationLabel::str() const {
    std::string s;
    for (const auto& f : facets) {
        if (!s.empty()) s += " ";
        s += f.str();
    }
    return s.empty() ? "general" : s;
}

ClassificationLabel classify_from_tau(int d, int r, long tau) {
    TauBounds b = tau_bounds(d, r);
    long cap = b.tau_max_prime ? *b.tau_max_prime : b.tau_max;
    if (tau < b.tau_min || tau > cap)
        throw InternalError("tau outside the admissible range for (d,r)");
    ClassificationLabel label;
    if (tau == b.tau_max)
        label.facets.push_back({CurveClass::Free, {r, long(d) - r - 1}});
    else if (tau == b.tau_max - 1)
        label.facets.push_back({CurveClass::NearlyFree, {r, long(d) - r}});
    else if (tau == b.tau_max - 2)
        label.facets.push_back({CurveClass::MPOG, {r, long(d) - r, long(d) - r + 1}});
    if (b.tau_max_prime && tau == *b.tau_max_prime)
        label.facets.push_back({CurveClass::MaxTjurina, {d, r}});
    if (label.facets.empty()) label.facets.push_back({CurveClass::General, {}});
    return label;
}

ClassificationLabel classify_from_exponents(int d, const std::vector<int>& exponents) {
    if (exponents.size() < 2 || !std::is_sorted(exponents.begin(), exponents.end()))
        throw std::invalid_argument("classify_from_exponents: need sorted exponents, m >= 2");
    ClassificationLabel label;
    long m = long(exponents.size());
    long d1 = exponents[0], d2 = exponents[1];
    if (m == 2 && d1 + d2 == d - 1) label.facets.push_back({CurveClass::Free, {d1, d2}});
    if (m == 3 && d1 + d2 == d) {
        long d3 = exponents[2];
        long delta = d3 - d2;
        label.facets.push_back({CurveClass::PlusOneGenerated, {d1, d2, d3, delta}});
        if (delta == 0) label.facets.push_back({CurveClass::NearlyFree, {d1, d2}});
        if (delta == 1) label.facets.push_back({CurveClass::MPOG, {d1, d2, d3}});
    }
    if (std::all_of(exponents.begin(), exponents.end(), [&](int e) { return e == exponents[0]; })) {
        long delta_m = 2 * d1 - d + 3 - m;
        if (delta_m >= 0) label.facets.push_back({CurveClass::TypeDRM, {d, d1, m, delta_m}});
    }
    if (label.facets.empty()) {
        Facet g{CurveClass::General, {}};
        for (int e : exponents) g.params.push_back(e);
        label.facets.push_back(g);
    }
    return label;
}

CrossCheck cross_check(const CurveReport& report) {
    std::ostringstream detail;
    bool ok = true;
    for (CurveClass c : {CurveClass::Free, CurveClass::NearlyFree, CurveClass::MPOG}) {
        bool via_tau = report.label_tau.has(c);
        bool via_exp = report.label_exp.has(c);
        if (via_tau != via_exp) {
            ok = false;
            detail << to_string(c) << " facet disagrees (tau-path " << (via_tau ? "yes" : "no")
                   << ", exponent-path " << (via_exp ? "yes" : "no") << "); ";
        }
    }
    const TauBounds& b = report.bounds;
    long cap = b.tau_max_prime ? *b.tau_max_prime : b.tau_max;
    if (report.tau < b.tau_min || report.tau > cap) {
        ok = false;
        detail << "tau " << report.tau << " outside [" << b.tau_min << "," << cap << "]; ";
    }
    if (report.nu >= 0 && 2 * report.r <= report.d) {
        long expected = 2 * report.r < report.d
                            ? b.tau_max - report.tau
                            : 3 * long(report.r) * report.r - 3 * report.r + 1 - report.tau;
        if (report.nu != expected) {
            ok = false;
            detail << "defect " << report.nu << " != expected " << expected << "; ";
        }
    }
    // free <=> two generators summing to d-1 <=> tau at the maximum
    if (report.label_exp.has(CurveClass::Free) != (report.tau == b.tau_max)) {
        ok = false;
        detail << "freeness/tau_max equivalence failed; ";
    }
    CrossCheck cc;
    cc.pass = ok;
    cc.detail = ok ? "all consistency checks passed" : detail.str();
    return cc;
}

CurveReport analyze(const Polynomial& f, Engine& eng, int k_max) {
    CurveReport rep;
    rep.seed = eng.pg.seed();
    JacobianTriple j = jacobian_triple(f);
    rep.d = j.d;
    rep.profile = syzygy_profile(j, eng, k_max);
    if (!rep.profile.complete)
        throw InternalError("syzygy profile did not complete below the degree cap");
    rep.exponents = rep.profile.generator_degrees;
    rep.r = rep.profile.mdr;
    rep.bounds = tau_bounds(rep.d, rep.r);

    rep.tjurina = freeness_defect(j, eng, &rep.profile);
    rep.tau = rep.tjurina.tau;
    rep.nu = rep.tjurina.nu;

    rep.label_tau = classify_from_tau(rep.d, rep.r, rep.tau);
    rep.label_exp = classify_from_exponents(rep.d, rep.exponents);
    rep.label = rep.label_exp;
    for (const auto& fct : rep.label_tau.facets)
        if (!rep.label.has(fct.kind)) rep.label.facets.push_back(fct);
    // drop the General placeholder when a real facet exists
    if (rep.label.facets.size() > 1) {
        auto& fs = rep.label.facets;
        fs.erase(std::remove_if(fs.begin(), fs.end(),
                                [](const Facet& f) {
                                    return f.kind == CurveClass::General && f.params.empty();
                                }),
                 fs.end());
    }

    CrossCheck cc = cross_check(rep);
    rep.consistent = cc.pass;
    rep.consistency_detail = cc.detail;
    rep.primes_used = eng.pg.used();
    return rep;
}

} // namespace curves
