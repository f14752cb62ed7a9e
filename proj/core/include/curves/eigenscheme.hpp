#pragma once

#include "curves/classify.hpp"

namespace curves {

// Coefficients of a derivation a*d/dx + b*d/dy + c*d/dz, homogeneous of a
// common degree.
struct Derivation {
    Polynomial a, b, c;

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
    int degree() const;       // common degree; throws on mixed degrees
    bool primitive() const;   // gcd(a,b,c) constant
    static Derivation euler() {
        return {Polynomial::variable(0), Polynomial::variable(1), Polynomial::variable(2)};
    }
    // The canonical annihilator f_y*d/dx - f_x*d/dy of every pencil member.
    static Derivation tangent(const Polynomial& f);
    // a*f_x + b*f_y + c*f_z == 0
    bool annihilates(const Polynomial& f) const;
};

// The three 2-minors of rows (x,y,z) / (a,b,c), signed as
// (y c - z b, z a - x c, x b - y a).
struct EigenschemeIdeal {
    std::array<Polynomial, 3> minors;
    Derivation source;
};

EigenschemeIdeal eigenscheme_ideal(const Derivation& theta);

// The vanishing locus is finite: gcd of the minors constant, and the Hilbert
// function of the quotient stabilizes to a positive constant (scan from
// 3(r+1), two consecutive equal values).
bool is_zero_dimensional(const EigenschemeIdeal& ideal, Engine& eng);

// Membership of a homogeneous g in the ideal at its own degree.
MembershipResult ideal_membership(const EigenschemeIdeal& ideal, const Polynomial& g);

struct QuotientProfile {
    enum class Verdict { WholeRing, Proper, Other };
    std::map<int, long> dims; // degree -> dim of the quotient ideal piece
    Verdict verdict = Verdict::Other;
    Polynomial ell;  // Proper: the linear generator
    int e = -1;      // Proper: degree of the second generator
    Polynomial h;    // Proper: the second generator
};

// K = ideal : (f), computed degreewise. Proper verdicts carry extracted
// generators and are verified against the complete-intersection Hilbert
// function through degree e+5; on mismatch the verdict degrades to Other.
QuotientProfile quotient_profile(const EigenschemeIdeal& ideal, const Polynomial& f, Engine& eng,
                                 int k_max = -1);

struct DerivationCriterion {
    ClassificationLabel label;
    QuotientProfile profile;
    std::string certificate;
};

// Syzygy-derivation criterion: requires theta in D0(f), 2 deg(theta) <= d-1,
// and a finite eigenscheme; WholeRing quotient means free with exponents
// (r, d-r-1), a proper (ell, h in S_e) quotient means plus-one generated with
// exponents (r, d-r, d-r-1+e).
DerivationCriterion derivation_classify(const Polynomial& f, const Derivation& theta, Engine& eng);

// det of the matrix with rows (x,y,z), theta, eta divided exactly by f;
// throws InternalError if the determinant is zero or not divisible.
Polynomial det_certificate(const Derivation& theta, const Derivation& eta, const Polynomial& f);

struct PencilSpec {
    Polynomial f; // base member; the pencil is alpha*f + beta*z^d
    std::vector<std::pair<Rational, Rational>> members; // projective (alpha:beta)
    // Products of several (possibly irrational) members given directly as one
    // rational polynomial; validated as a squarefree binary form in (f, z^d).
    std::vector<Polynomial> explicit_products;
    bool include_line = false; // multiply by z
};

struct PencilArrangement {
    Polynomial F;      // the product (times z when the line is included)
    Derivation delta;  // f_y d/dx - f_x d/dy
    int k = 0;         // number of pencil members in the product
    int d = 0;         // degree of the base member
    bool with_line = false;
};

// Validates the spec (coprime partials, z not dividing f, members distinct and
// reduced, explicit products squarefree combinations of f and z^d) and checks
// that delta annihilates the product.
PencilArrangement pencil_arrangement(const PencilSpec& spec);

struct ArrangementVerdict {
    bool applies = false;     // k >= 2 and structure matched
    bool positive = false;    // free (membership path) or MPOG (quotient path)
    std::vector<int> exponents;
    std::string detail;
};

// Free test: F_k in I_delta, exponents (d-1,(k-1)d), or +1 on both with the
// line included.
ArrangementVerdict free_arrangement_check(const PencilArrangement& arr, Engine& eng);

// MPOG test via the quotient ideal: proper with e=2, exponents
// (d-1,(k-1)d+1,(k-1)d+2), each of the last two +1 with the line included.
ArrangementVerdict mpog_arrangement_check(const PencilArrangement& arr, Engine& eng);

} // namespace curves
