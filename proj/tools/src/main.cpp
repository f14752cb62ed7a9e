// Command-line frontend for the plane-curve syzygy analyzer.
//
// Subcommands:
//   analyze      full report for one curve (from the catalog or a literal)
//   eigenscheme  derivation-criterion checks and pencil-arrangement tests
//   catalog      list or print the built-in curves
//   verify       recompute every recorded catalog value and compare
//
// Exit codes: 0 success, 2 usage or parse error, 3 precondition failure
// (non-reduced input, cone, unmet hypotheses), 4 internal stabilization
// failure.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "curves/catalog.hpp"
#include "curves/classify.hpp"
#include "curves/eigenscheme.hpp"

using nlohmann::json;
using namespace curves;

namespace {

constexpr const char* kSeedEnv = "CURVES_SEED";

std::uint64_t default_seed() {
    if (const char* s = std::getenv(kSeedEnv)) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw ParseError(std::string("bad ") + kSeedEnv + " value '" + s + "'", 0);
        }
    }
    return 20260826u;
}

Backend parse_backend(const std::string& name) {
    if (name == "auto") return Backend::Auto;
    if (name == "exact") return Backend::Exact;
    if (name == "modular") return Backend::Modular;
    throw ParseError("backend must be auto, exact or modular", 0);
}

struct Source {
    std::string poly;     // literal polynomial text
    std::string catalog;  // catalog entry name
};

Polynomial resolve_source(const Source& src, std::string* echo) {
    if (!src.catalog.empty() && !src.poly.empty())
        throw ParseError("give either --poly or --catalog, not both", 0);
    if (!src.catalog.empty()) {
        if (!has_curve(src.catalog))
            throw ParseError("unknown catalog curve '" + src.catalog + "'", 0);
        const auto& e = named_curve(src.catalog);
        if (echo) *echo = e.name;
        return e.projective;
    }
    if (src.poly.empty()) throw ParseError("one of --poly or --catalog is required", 0);
    if (echo) *echo = src.poly;
    return parse(src.poly);
}

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

json report_json(const CurveReport& rep, const std::string& input, const std::string& backend) {
    json doc;
    doc["schema"] = "curve-report/1";
    doc["input"] = input;
    doc["degree"] = rep.d;
    doc["mdr"] = rep.r;
    doc["exponents"] = rep.exponents;
    doc["tau"] = rep.tau;
    doc["nu"] = rep.nu;
    doc["tau_min"] = rep.bounds.tau_min;
    doc["tau_max"] = rep.bounds.tau_max;
    if (rep.bounds.tau_max_prime) doc["tau_max_prime"] = *rep.bounds.tau_max_prime;
    doc["label"] = rep.label.str();
    std::vector<std::string> facets;
    for (const auto& f : rep.label.facets) facets.push_back(f.str());
    doc["facets"] = facets;
    doc["syzygy_dims"] = rep.profile.dims;
    doc["tau_route"] = rep.tjurina.route;
    doc["profile_certificate"] = rep.profile.certificate;
    doc["consistent"] = rep.consistent;
    doc["consistency_detail"] = rep.consistency_detail;
    doc["seed"] = rep.seed;
    doc["backend"] = backend;
    return doc;
}

void print_report(const CurveReport& rep, const std::string& input, const std::string& backend,
                  bool as_json) {
    if (as_json) {
        std::cout << report_json(rep, input, backend).dump(2) << "\n";
        return;
    }
    std::cout << "input: " << input << "\n"
              << "degree: " << rep.d << "\n"
              << "mdr: " << rep.r << "\n"
              << "exponents: " << join_ints(rep.exponents) << "\n"
              << "tau: " << rep.tau << "\n"
              << "nu: " << rep.nu << "\n"
              << "tau_min: " << rep.bounds.tau_min << "\n"
              << "tau_max: " << rep.bounds.tau_max << "\n";
    if (rep.bounds.tau_max_prime) std::cout << "tau_max_prime: " << *rep.bounds.tau_max_prime << "\n";
    std::cout << "label: " << rep.label.str() << "\n"
              << "tau_route: " << rep.tjurina.route << "\n"
              << "profile_certificate: " << rep.profile.certificate << "\n"
              << "consistent: " << (rep.consistent ? "true" : "false") << "\n";
    if (!rep.consistent) std::cout << "consistency_detail: " << rep.consistency_detail << "\n";
    std::cout << "seed: " << rep.seed << "\n"
              << "backend: " << backend << "\n";
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
    Source src;
    int kmax = -1;
    std::string backend = "auto";
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool as_json = false;
};

int run_analyze(const AnalyzeArgs& a) {
    std::string echo;
    Polynomial f = resolve_source(a.src, &echo);
    Engine eng(parse_backend(a.backend), a.seed_given ? a.seed : default_seed());
    auto t0 = std::chrono::steady_clock::now();
    CurveReport rep = analyze(f, eng, a.kmax);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    print_report(rep, echo, a.backend, a.as_json);
    std::cerr << "time_seconds: " << dt << "\n";
    return 0;
}

// ------------------------------------------------------------ eigenscheme

struct EigenArgs {
    Source src;
    std::string theta = "auto";
    std::string check = "classify";  // classify | membership | quotient
    std::string pencil;              // catalog name of the pencil base
    std::string members;             // comma list of rationals t (member f + t z^d)
    std::vector<std::string> products;
    bool with_line = false;
    int kmax = -1;
    std::string backend = "auto";
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool as_json = false;
};

Rational parse_rational(const std::string& text) {
    Polynomial p = parse(text, "");
    if (!p.is_constant()) throw ParseError("expected a rational constant: " + text, 0);
    return p.coeff(Monomial::one());
}

Derivation resolve_theta(const std::string& spec, const Polynomial& f, Engine& eng) {
    if (spec == "auto") {
        JacobianTriple j = jacobian_triple(f);
        int r = mdr(j, eng);
        std::vector<SyzygyTriple> ker = syzygy_kernel(j, r, eng);
        if (ker.empty()) throw InternalError("auto theta: empty kernel at the mdr degree");
        return {ker[0][0], ker[0][1], ker[0][2]};
    }
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ';')) parts.push_back(item);
    if (parts.size() != 3) throw ParseError("theta must be 'auto' or 'a;b;c'", 0);
    return {parse(parts[0]), parse(parts[1]), parse(parts[2])};
}

int run_pencil(const EigenArgs& a, Engine& eng) {
    if (!has_curve(a.pencil)) throw ParseError("unknown catalog curve '" + a.pencil + "'", 0);
    PencilSpec spec;
    spec.f = named_curve(a.pencil).projective;
    if (!a.members.empty()) {
        std::stringstream ss(a.members);
        std::string item;
        while (std::getline(ss, item, ',')) {
            spec.members.emplace_back(Rational(1), parse_rational(item));
        }
    }
    for (const auto& p : a.products) spec.explicit_products.push_back(parse(p));
    spec.include_line = a.with_line;

    PencilArrangement arr = pencil_arrangement(spec);
    ArrangementVerdict v = a.check == "mpog-union" ? mpog_arrangement_check(arr, eng)
                                                   : free_arrangement_check(arr, eng);
    json doc;
    doc["schema"] = "pencil-verdict/1";
    doc["base"] = a.pencil;
    doc["members"] = arr.k;
    doc["with_line"] = arr.with_line;
    doc["check"] = a.check;
    doc["applies"] = v.applies;
    doc["positive"] = v.positive;
    doc["exponents"] = v.exponents;
    doc["detail"] = v.detail;
    if (a.as_json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "pencil: " << a.pencil << " (k=" << arr.k
                  << (arr.with_line ? ", with line" : "") << ")\n"
                  << "check: " << a.check << "\n"
                  << "applies: " << (v.applies ? "true" : "false") << "\n"
                  << "positive: " << (v.positive ? "true" : "false") << "\n";
        std::vector<int> exps = v.exponents;
        std::cout << "exponents: " << join_ints(exps) << "\n"
                  << "detail: " << v.detail << "\n";
    }
    return v.applies ? 0 : 3;
}

int run_eigenscheme(const EigenArgs& a) {
    Engine eng(parse_backend(a.backend), a.seed_given ? a.seed : default_seed());
    if (!a.pencil.empty()) {
        if (a.check != "free-union" && a.check != "mpog-union")
            throw ParseError("--pencil requires --check free-union or mpog-union", 0);
        return run_pencil(a, eng);
    }
    std::string echo;
    Polynomial f = resolve_source(a.src, &echo);
    Derivation theta = resolve_theta(a.theta, f, eng);

    json doc;
    doc["schema"] = "eigenscheme-report/1";
    doc["input"] = echo;
    doc["theta_degree"] = theta.degree();
    EigenschemeIdeal ideal = eigenscheme_ideal(theta);
    bool finite = is_zero_dimensional(ideal, eng);
    doc["eigenscheme_finite"] = finite;

    if (a.check == "membership") {
        MembershipResult m = ideal_membership(ideal, f);
        doc["f_in_ideal"] = m.member;
    } else if (a.check == "quotient") {
        QuotientProfile q = quotient_profile(ideal, f, eng, a.kmax);
        doc["verdict"] = q.verdict == QuotientProfile::Verdict::WholeRing ? "whole-ring"
                         : q.verdict == QuotientProfile::Verdict::Proper  ? "proper"
                                                                          : "other";
        json dims = json::object();
        for (auto [k, v] : q.dims) dims[std::to_string(k)] = v;
        doc["quotient_dims"] = dims;
        if (q.verdict == QuotientProfile::Verdict::Proper) {
            doc["ell"] = q.ell.str();
            doc["e"] = q.e;
            doc["h"] = q.h.str();
        }
    } else if (a.check == "classify") {
        DerivationCriterion crit = derivation_classify(f, theta, eng);
        doc["label"] = crit.label.str();
        doc["certificate"] = crit.certificate;
    } else {
        throw ParseError("check must be classify, membership or quotient", 0);
    }

    if (a.as_json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        for (auto& [k, v] : doc.items()) {
            if (v.is_string())
                std::cout << k << ": " << v.get<std::string>() << "\n";
            else
                std::cout << k << ": " << v.dump() << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------- catalog

int run_catalog_list(bool as_json) {
    if (as_json) {
        json arr = json::array();
        for (const auto& n : catalog_names()) {
            const auto& e = named_curve(n);
            json j;
            j["name"] = e.name;
            j["degree"] = e.degree;
            j["label"] = e.expected.label;
            j["note"] = e.note;
            arr.push_back(j);
        }
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    for (const auto& n : catalog_names()) {
        const auto& e = named_curve(n);
        std::cout << e.name << "  d=" << e.degree;
        if (!e.expected.label.empty()) std::cout << "  " << e.expected.label;
        std::cout << "  -- " << e.note << "\n";
    }
    return 0;
}

int run_catalog_show(const std::string& name, bool as_json) {
    if (!has_curve(name)) throw ParseError("unknown catalog curve '" + name + "'", 0);
    const auto& e = named_curve(name);
    if (as_json) {
        json j;
        j["name"] = e.name;
        j["degree"] = e.degree;
        j["projective"] = e.projective.str();
        if (e.affine) j["affine"] = e.affine->str();
        j["label"] = e.expected.label;
        j["exponents"] = e.expected.exponents;
        if (e.expected.tau) j["tau"] = *e.expected.tau;
        if (e.expected.nu) j["nu"] = *e.expected.nu;
        j["note"] = e.note;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "name: " << e.name << "\ndegree: " << e.degree << "\n";
    if (e.affine) std::cout << "affine: " << e.affine->str() << "\n";
    std::cout << "projective: " << e.projective.str() << "\n";
    if (!e.expected.label.empty()) std::cout << "label: " << e.expected.label << "\n";
    if (!e.expected.exponents.empty())
        std::cout << "exponents: " << join_ints(e.expected.exponents) << "\n";
    if (e.expected.tau) std::cout << "tau: " << *e.expected.tau << "\n";
    if (e.expected.nu) std::cout << "nu: " << *e.expected.nu << "\n";
    std::cout << "note: " << e.note << "\n";
    return 0;
}

// ----------------------------------------------------------------- verify

struct VerifyOutcome {
    bool pass = true;
    std::string detail;
};

VerifyOutcome check_entry(const CatalogEntry& e, const CurveReport& rep) {
    std::ostringstream bad;
    if (!e.expected.exponents.empty() && rep.exponents != e.expected.exponents)
        bad << "exponents (" << join_ints(rep.exponents) << " vs " << join_ints(e.expected.exponents)
            << ") ";
    if (e.expected.tau && rep.tau != *e.expected.tau)
        bad << "tau (" << rep.tau << " vs " << *e.expected.tau << ") ";
    if (e.expected.nu && rep.nu != *e.expected.nu)
        bad << "nu (" << rep.nu << " vs " << *e.expected.nu << ") ";
    if (!e.expected.label.empty() && rep.label.str().find(e.expected.label) == std::string::npos)
        bad << "label (" << rep.label.str() << " lacks " << e.expected.label << ") ";
    if (!rep.consistent) bad << "cross-check (" << rep.consistency_detail << ") ";
    VerifyOutcome out;
    out.detail = bad.str();
    out.pass = out.detail.empty();
    return out;
}

int run_verify(const std::string& tier, const std::string& only, std::uint64_t seed, bool seed_given) {
    if (tier != "fast" && tier != "full") throw ParseError("tier must be fast or full", 0);
    std::vector<std::string> names;
    if (!only.empty()) {
        std::stringstream ss(only);
        std::string item;
        while (std::getline(ss, item, ',')) names.push_back(item);
    } else {
        names = catalog_names();
    }
    int failures = 0, ran = 0;
    for (const auto& n : names) {
        if (!has_curve(n)) throw ParseError("unknown catalog curve '" + n + "'", 0);
        const auto& e = named_curve(n);
        if (only.empty() && tier == "fast" && e.degree > 21) continue;
        ++ran;
        // Degree >= 15 work is far faster under modular certification.
        Backend b = e.degree >= 15 ? Backend::Modular : Backend::Auto;
        Engine eng(b, seed_given ? seed : default_seed());
        auto t0 = std::chrono::steady_clock::now();
        VerifyOutcome out;
        try {
            CurveReport rep = analyze(e.projective, eng);
            out = check_entry(e, rep);
        } catch (const std::exception& ex) {
            out.pass = false;
            out.detail = std::string("exception: ") + ex.what();
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (out.pass ? "PASS" : "FAIL") << " " << e.name << " (d=" << e.degree;
        if (!e.expected.label.empty()) std::cout << ", " << e.expected.label;
        std::cout << ")";
        if (!out.pass) std::cout << " -- " << out.detail;
        std::cout << "\n";
        std::cerr << "  time_seconds: " << dt << "\n";
        if (!out.pass) ++failures;
    }
    std::cout << (failures == 0 ? "OK" : "FAILED") << ": " << (ran - failures) << "/" << ran
              << " catalog fixtures verified (" << tier << " tier)\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classifier for reduced plane projective curves"};
    app.require_subcommand(1);

    AnalyzeArgs an;
    auto* analyze_cmd = app.add_subcommand("analyze", "Classify one curve");
    analyze_cmd->add_option("--poly", an.src.poly, "Polynomial in x,y,z");
    analyze_cmd->add_option("--catalog", an.src.catalog, "Catalog entry name");
    analyze_cmd->add_option("--kmax", an.kmax, "Cap for the syzygy-degree scan");
    analyze_cmd->add_option("--backend", an.backend, "auto|exact|modular")->default_val("auto");
    analyze_cmd->add_option("--seed", an.seed, "Prime-stream seed")
        ->each([&an](const std::string&) { an.seed_given = true; });
    analyze_cmd->add_flag("--json", an.as_json, "Emit a JSON document");

    EigenArgs ei;
    auto* eig_cmd = app.add_subcommand("eigenscheme", "Derivation-criterion checks");
    eig_cmd->add_option("--poly", ei.src.poly, "Polynomial in x,y,z");
    eig_cmd->add_option("--catalog", ei.src.catalog, "Catalog entry name");
    eig_cmd->add_option("--theta", ei.theta, "auto or 'a;b;c'")->default_val("auto");
    eig_cmd->add_option("--check", ei.check,
                        "classify|membership|quotient (curve) or free-union|mpog-union (pencil)")
        ->default_val("classify");
    eig_cmd->add_option("--pencil", ei.pencil, "Catalog name of the pencil base member");
    eig_cmd->add_option("--members", ei.members, "Comma list of member values t (member f + t z^d)");
    eig_cmd->add_option("--product", ei.products, "Explicit product of pencil members");
    eig_cmd->add_flag("--with-line", ei.with_line, "Multiply the arrangement by z");
    eig_cmd->add_option("--kmax", ei.kmax, "Quotient-profile degree cap");
    eig_cmd->add_option("--backend", ei.backend, "auto|exact|modular")->default_val("auto");
    eig_cmd->add_option("--seed", ei.seed, "Prime-stream seed")
        ->each([&ei](const std::string&) { ei.seed_given = true; });
    eig_cmd->add_flag("--json", ei.as_json, "Emit a JSON document");

    auto* cat_cmd = app.add_subcommand("catalog", "Built-in curve registry");
    bool cat_json = false;
    std::string show_name;
    auto* list_cmd = cat_cmd->add_subcommand("list", "List all entries");
    list_cmd->add_flag("--json", cat_json, "Emit a JSON document");
    auto* show_cmd = cat_cmd->add_subcommand("show", "Print one entry");
    show_cmd->add_option("name", show_name, "Entry name")->required();
    show_cmd->add_flag("--json", cat_json, "Emit a JSON document");
    cat_cmd->require_subcommand(1);

    std::string tier = "fast", only;
    std::uint64_t vseed = 0;
    bool vseed_given = false;
    auto* ver_cmd = app.add_subcommand("verify", "Recompute all recorded catalog values");
    ver_cmd->add_option("--tier", tier, "fast (degree <= 21) or full")->default_val("fast");
    ver_cmd->add_option("--only", only, "Comma list of entry names");
    ver_cmd->add_option("--seed", vseed, "Prime-stream seed")
        ->each([&vseed_given](const std::string&) { vseed_given = true; });

    try {
        app.parse(argc, argv);
        if (*analyze_cmd) return run_analyze(an);
        if (*eig_cmd) return run_eigenscheme(ei);
        if (*cat_cmd) return *list_cmd ? run_catalog_list(cat_json) : run_catalog_show(show_name, cat_json);
        if (*ver_cmd) return run_verify(tier, only, vseed, vseed_given);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failure: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
