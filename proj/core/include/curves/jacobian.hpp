#pragma once

#include <array>
#include <map>
#include <string>

#include "curves/linalg.hpp"
#include "curves/polynomial.hpp"

namespace curves {

// Input fails a mathematical precondition (non-reduced, cone, degree < 3, ...).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A scan or escalation hit its cap without stabilizing; indicates a bug, not
// bad input.
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shared computation context: backend policy plus the recorded prime stream.
struct Engine {
    Backend backend = Backend::Auto;
    PrimeGen pg;
    explicit Engine(Backend b = Backend::Auto, std::uint64_t seed = 20260826u)
        : backend(b), pg(seed) {}
    // Effective backend for a curve of degree d under the Auto policy.
    Backend resolve(int d) const {
        if (backend != Backend::Auto) return backend;
        return d < 24 ? Backend::Exact : Backend::Modular;
    }
};

struct JacobianTriple {
    Polynomial f, fx, fy, fz;
    int d = 0;
};

// Validates: homogeneous in x,y,z of degree >= 3, squarefree, not a cone
// (no constant-coefficient relation among the partials), Euler identity.
JacobianTriple jacobian_triple(const Polynomial& f);

// A syzygy (a,b,c) with a*fx + b*fy + c*fz = 0.
using SyzygyTriple = std::array<Polynomial, 3>;

// The evaluation map S_k^3 -> S_{k+d-1}, (a,b,c) |-> a*fx + b*fy + c*fz.
MapMatrix syzygy_matrix(const JacobianTriple& j, int k);

// Exact (certified) basis of the degree-k syzygies.
std::vector<SyzygyTriple> syzygy_kernel(const JacobianTriple& j, int k, Engine& eng);

struct SyzygyProfile {
    std::map<int, long> dims;            // degree -> dim of the syzygy space
    std::vector<int> generator_degrees;  // sorted d_1 <= ... <= d_m
    std::vector<SyzygyTriple> generators;
    int mdr = -1;
    bool complete = false;   // generation certified through the cap policy
    std::string certificate; // "determinant" (free) or "window" or "" if partial
};

// Generator degrees via graded Nakayama over exact kernels, with either the
// Saito determinant certificate (2 generators summing to d-1) or a
// no-new-generator window of 5 degrees past the last generator; cap 2d.
SyzygyProfile syzygy_profile(const JacobianTriple& j, Engine& eng, int k_max = -1);

// Least k >= 1 with a nonzero degree-k syzygy (certified).
int mdr(const JacobianTriple& j, Engine& eng);

// dim S_k - rank(S_{k-d+1}^3 -> S_k).
long milnor_hilbert(const JacobianTriple& j, int k, Engine& eng);

struct TjurinaRecord {
    long tau = -1;
    std::map<int, long> milnor;   // scanned Hilbert values of S/J
    std::map<int, long> n_values; // degree -> dim of the saturation quotient
    long nu = -1;
    int stabilization_degree = -1;
    std::string route; // "scan", "free-resolution", "saturation", "duality"
};

// Stabilized Milnor Hilbert value: scan from 3d-6 until two consecutive
// degrees agree; cap 4d (InternalError on breach).
long total_tjurina(const JacobianTriple& j, Engine& eng, TjurinaRecord* rec = nullptr);

// Same value through the free resolution once freeness with exponents
// (d1,d2) has been certified; cheap at any degree.
long total_tjurina_free(const JacobianTriple& j, int d1, int d2, TjurinaRecord* rec = nullptr);

// dim (J_f)_k.
long jacobian_dim(const JacobianTriple& j, int k, Engine& eng);

// dim (I_f)_k for the saturation I_f of J_f: h qualifies iff every monomial
// multiple of degree k+N lies in J, with N escalated to a two-step fixpoint
// (cap 3d).
long saturation_dim(const JacobianTriple& j, int k, Engine& eng);

// Full record: n(f)_k = dim (I_f)_k - dim (J_f)_k over [0, 3d-6], nu = max.
// Small degrees use the saturation descent directly; larger ones use the
// duality identity relating n(f)_k to two syzygy dimensions and tau, which
// the test suite cross-validates against the descent on small inputs.
// `profile` (optional) enables the nu=0 shortcut for certified-free curves.
TjurinaRecord freeness_defect(const JacobianTriple& j, Engine& eng,
                              const SyzygyProfile* profile = nullptr);

} // namespace curves
