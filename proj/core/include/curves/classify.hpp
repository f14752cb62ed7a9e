#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curves/jacobian.hpp"

namespace curves {

// du Plessis-Wall range for the total Tjurina number of a degree-d curve
// with minimal relation degree r.
struct TauBounds {
    int d = 0, r = 0;
    long tau_min = 0, tau_max = 0;
    std::optional<long> tau_max_prime; // defined only when 2r >= d
};

TauBounds tau_bounds(int d, int r);

enum class CurveClass { Free, NearlyFree, MPOG, PlusOneGenerated, MaxTjurina, TypeDRM, General };

std::string to_string(CurveClass c);

// One classification facet; a curve may satisfy several vocabularies at once
// (e.g. nearly free and maximal Tjurina), so a label is a set of facets.
struct Facet {
    CurveClass kind = CurveClass::General;
    // Free/NearlyFree: d1,d2; MPOG/PlusOneGenerated: d1,d2,d3[,delta];
    // MaxTjurina: d,r; TypeDRM: d,r,m,Delta; General: raw exponents (may be empty).
    std::vector<long> params;
    std::string str() const;
};

struct ClassificationLabel {
    std::vector<Facet> facets;
    bool has(CurveClass k) const;
    const Facet* find(CurveClass k) const;
    std::string str() const;
};

// Taxonomy from the Tjurina number alone: Free at tau_max, NearlyFree at
// tau_max-1, MPOG at tau_max-2, MaxTjurina facet at tau_max_prime, else
// General. Throws InternalError outside the admissible range.
ClassificationLabel classify_from_tau(int d, int r, long tau);

// Taxonomy from the generator degrees alone.
ClassificationLabel classify_from_exponents(int d, const std::vector<int>& exponents);

struct CurveReport {
    int d = 0;
    int r = 0;
    std::vector<int> exponents;
    long tau = -1;
    long nu = -1;
    TauBounds bounds;
    ClassificationLabel label;      // merged facets
    ClassificationLabel label_tau;  // tau-path derivation
    ClassificationLabel label_exp;  // exponent-path derivation
    SyzygyProfile profile;
    TjurinaRecord tjurina;
    bool consistent = false;
    std::string consistency_detail;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> primes_used;
};

struct CrossCheck {
    bool pass = false;
    std::string detail;
};

// The two derivations must tell the same story: the Free/NearlyFree/MPOG
// facets agree across paths, tau sits inside the bounds, and when r <= d/2
// the defect identity (nu = tau_max - tau, or 3r^2-3r+1 - tau at r = d/2)
// holds.
CrossCheck cross_check(const CurveReport& report);

// Full pipeline: triple -> profile -> tau -> defect -> labels -> cross-check.
CurveReport analyze(const Polynomial& f, Engine& eng, int k_max = -1);

} // namespace curves
