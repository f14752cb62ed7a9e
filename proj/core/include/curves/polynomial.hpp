#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curves/monomial.hpp"
#include "curves/rational.hpp"

namespace curves {

// Degree of the zero polynomial.
inline constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

// Sparse multivariate polynomial over Q in the fixed alphabet x,y,z,t.
// Immutable in spirit: all operations return new values, no term is ever
// stored with a zero coefficient.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    Polynomial() = default;
    explicit Polynomial(const Rational& c) {
        if (c != 0) terms_[Monomial::one()] = c;
    }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const Rational& c) { return Polynomial(c); }
    static Polynomial variable(int v, int k = 1) {
        Polynomial p;
        p.terms_[Monomial::var(v, k)] = 1;
        return p;
    }
    static Polynomial term(const Monomial& m, const Rational& c) {
        Polynomial p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial::one());
    }
    int degree() const { return terms_.empty() ? kDegreeOfZero : terms_.begin()->first.total_degree(); }
    int degree_in(int v) const;
    bool is_homogeneous() const;
    bool uses_var(int v) const { return degree_in(v) > 0; }
    std::size_t term_count() const { return terms_.size(); }

    const TermMap& terms() const { return terms_; }
    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    // Leading term in grlex x>y>z>t. Precondition: nonzero.
    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const Rational& leading_coeff() const { return terms_.begin()->second; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return terms_ != o.terms_; }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    // f * c * m, the sparse-matrix assembly workhorse.
    Polynomial mono_mul(const Monomial& m, const Rational& c = Rational(1)) const;

    Polynomial pow(unsigned n) const;
    Polynomial differentiate(int v) const;

    // Homogenize to total degree d using variable v. Throws if degree() > d.
    Polynomial homogenize(int d, int v) const;
    // Substitute a polynomial for a variable.
    Polynomial substitute(int v, const Polynomial& g) const;
    Polynomial set_var(int v, const Rational& value) const;

    Rational evaluate(const std::array<Rational, kNumVars>& point) const;

    // View as univariate in v: coefficients indexed by the v-exponent.
    std::vector<Polynomial> coeffs_in(int v) const;

    // Rational content (gcd of numerators / lcm of denominators), positive.
    Rational rational_content() const;
    // Primitive with positive leading coefficient in the canonical order.
    Polynomial normalized() const;

    // Canonical text form, graded lex x>y>z>t, leading term first.
    std::string str() const;

    void add_term(const Monomial& m, const Rational& c);

private:
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Expression grammar: integers, rationals a/b, variables from `alphabet`
// (a subset of "xyzt"), operators + - * / ^, parentheses. Whitespace is
// ignored. '/' requires a nonzero constant divisor.
Polynomial parse(const std::string& text, const std::string& alphabet = "xyz");

// GCD, primitive with positive leading rational; gcd(f,0) = normalized f.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

// Quotient f/g; throws with the first failing monomial if not exact.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

// Sylvester resultant with respect to v. Throws on zero input or if v is
// absent from both arguments.
Polynomial resultant(const Polynomial& f, const Polynomial& g, int v);

Polynomial det3(const std::array<std::array<Polynomial, 3>, 3>& m);

struct SquarefreeResult {
    bool squarefree = false;
    // "line-restriction" or "exact-gcd"; for the exact route with a
    // nontrivial gcd, `witness` holds it.
    std::string route;
    std::optional<Polynomial> witness;
    explicit operator bool() const { return squarefree; }
};

// Squarefreeness of a nonzero homogeneous f in x,y,z. Tries `trials`
// random line restrictions (each success is a proof); falls back to the
// exact gcd of f with its partials, which is authoritative.
SquarefreeResult is_squarefree(const Polynomial& f, int trials = 8);

} // namespace curves
