#pragma once

#include <gmpxx.h>
#include <string>

namespace curves {

// Exact rational coefficients. Always canonical: lowest terms, positive
// denominator, zero stored as 0/1 (gmp maintains these invariants).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace curves
