#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curves/polynomial.hpp"

namespace curves {

// The three affine building blocks behind every curve in the catalog:
// s = xy + 1, p = xs + 1, u = s^2 + y in Q[x,y].
struct BrianconBasis {
    Polynomial s, p, u;
};

BrianconBasis briancon_basis();

// The two classical degree-10 polynomials with no critical points:
//   g  = p^2 u - (5/3) p s - (1/3) s
//   g' = p^2 u - (7/9) p s + (1/9) s
Polynomial build_g();
Polynomial build_g_prime();

// One-parameter family g(b) = p^2 u - (5/3) p s + b s; g(-1/3) == g.
Polynomial build_g_b(const Rational& b);

// Two-parameter family g(b,c) = p^2 u - (5/3) p s + b s - c.
Polynomial build_g_bc(const Rational& b, const Rational& c);

// Higher-degree family g_n = p^{2n} u + s (sum_{j<=n} a_j p^j +
// sum_{n<j<2n} p^j) of degree 6n+4; `a` holds a_0..a_n.
struct GnSpec {
    int n = 1;
    std::vector<Rational> a;
};

Polynomial build_gn(const GnSpec& spec);

// Expected analyzer output frozen alongside a catalog entry. `label` is
// the canonical facet string ("free(4,5)", "nearly_free(5,5)",
// "mpog(5,5,6)", "type(15,8,4)"); absent fields were not recorded for
// that entry.
struct ExpectedReport {
    std::vector<int> exponents;
    std::optional<long> tau;
    std::optional<long> nu;
    std::string label;
};

struct CatalogEntry {
    std::string name;
    // Present when the curve is the closure of an affine fiber.
    std::optional<Polynomial> affine;
    Polynomial projective;  // homogeneous, reduced, not a cone
    int degree = 0;
    ExpectedReport expected;
    std::string note;  // one-line human description
    // Entries too large for a full syzygy/tau analysis; their recorded values
    // are verified through the pencil quotient criterion instead.
    bool pencil_only = false;
};

// Registry lookup; throws std::out_of_range for unknown names.
const CatalogEntry& named_curve(const std::string& name);
bool has_curve(const std::string& name);
std::vector<std::string> catalog_names();

// The cubic in (x,z) cutting out the three extra special lines through
// (0:1:0) for the curve C0, recovered from the discriminant of the
// y-restriction of f0 to the pencil of lines x = t z. Normalized primitive
// with positive leading coefficient.
Polynomial special_line_cubic();

// The quintic in (x,y) cutting out the five extra special lines through
// (0:0:1) for C0, from the discriminant of the x-restriction to y = t x.
Polynomial special_line_quintic();

// Checks the Bezout-style certificates that g (which = 'g') and g'
// (which = 'p') have no critical points: an explicit polynomial
// combination of the two partials equal to 1.
bool verify_unit_identity(char which);

}  // namespace curves
