#pragma once

// Internal dense univariate helpers over Q, used by gcd prechecks and the
// line-restriction squarefreeness certificate.

#include <vector>

#include "curves/rational.hpp"

namespace curves::detail {

using UPoly = std::vector<Rational>; // coefficient of u^i at index i

inline void utrim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int udeg(const UPoly& p) { return int(p.size()) - 1; } // -1 for zero

inline UPoly uderiv(const UPoly& p) {
    UPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * long(i));
    utrim(d);
    return d;
}

// Remainder of a by b (b nonzero), both trimmed.
inline UPoly urem(UPoly a, const UPoly& b) {
    while (udeg(a) >= udeg(b)) {
        Rational q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
        a.pop_back();
        utrim(a);
        if (a.empty()) break;
    }
    return a;
}

// Monic gcd; gcd(p,0) = monic p.
inline UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly r = urem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        Rational inv = 1 / a.back();
        for (auto& c : a) c *= inv;
    }
    return a;
}

inline bool usquarefree(const UPoly& p) {
    UPoly g = ugcd(p, uderiv(p));
    return udeg(g) <= 0;
}

} // namespace curves::detail
