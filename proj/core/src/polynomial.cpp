#include "curves/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace curves {

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int Polynomial::degree_in(int v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.total_degree();
    for (const auto& [m, c] : terms_)
        if (m.total_degree() != d) return false;
    return true;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::mono_mul(const Monomial& m, const Rational& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [mm, k] : terms_) r.terms_.emplace(mm * m, k * c);
    return r;
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial base = *this, r = Polynomial(Rational(1));
    while (n) {
        if (n & 1u) r = r * base;
        base = base * base;
        n >>= 1u;
    }
    return r;
}

Polynomial Polynomial::differentiate(int v) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (m[v] == 0) continue;
        Monomial d = m;
        d.e[v] -= 1;
        r.add_term(d, c * m[v]);
    }
    return r;
}

Polynomial Polynomial::homogenize(int d, int v) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        int td = m.total_degree();
        if (td > d) throw std::invalid_argument("homogenize: degree exceeds target");
        Monomial h = m;
        h.e[v] += d - td;
        r.add_term(h, c);
    }
    return r;
}

Polynomial Polynomial::substitute(int v, const Polynomial& g) const {
    // Group terms by the v-exponent, then Horner in g.
    std::map<int, Polynomial> slices;
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        int e = rest.e[v];
        rest.e[v] = 0;
        slices[e].add_term(rest, c);
    }
    Polynomial r;
    int prev = -1;
    for (auto it = slices.rbegin(); it != slices.rend(); ++it) {
        if (prev >= 0) r = r * g.pow(unsigned(prev - it->first));
        r += it->second;
        prev = it->first;
    }
    if (prev > 0) r = r * g.pow(unsigned(prev));
    return r;
}

Polynomial Polynomial::set_var(int v, const Rational& value) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        int e = rest.e[v];
        rest.e[v] = 0;
        Rational scale = c;
        for (int i = 0; i < e; ++i) scale *= value;
        r.add_term(rest, scale);
    }
    return r;
}

Rational Polynomial::evaluate(const std::array<Rational, kNumVars>& point) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < kNumVars; ++i)
            for (int k = 0; k < m[i]; ++k) v *= point[i];
        total += v;
    }
    return total;
}

std::vector<Polynomial> Polynomial::coeffs_in(int v) const {
    std::vector<Polynomial> out(std::size_t(degree_in(v)) + 1);
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        int e = rest.e[v];
        rest.e[v] = 0;
        out[std::size_t(e)].add_term(rest, c);
    }
    return out;
}

Rational Polynomial::rational_content() const {
    if (terms_.empty()) return 0;
    Integer num = 0, den = 1;
    for (const auto& [m, c] : terms_) {
        num = gcd(num, Integer(c.get_num()));
        den = lcm(den, Integer(c.get_den()));
    }
    Rational r(num, den);
    r.canonicalize();
    return abs(r);
}

Polynomial Polynomial::normalized() const {
    if (terms_.empty()) return *this;
    Rational c = rational_content();
    if (leading_coeff() < 0) c = -c;
    return *this * (1 / c);
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool is_one = (a == 1);
        if (!is_one || m == Monomial::one()) os << a.get_str();
        if (m != Monomial::one()) {
            if (!is_one) os << "*";
            os << m.str();
        }
    }
    return os.str();
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("exact_divide: division by zero polynomial");
    Polynomial r = f, q;
    const Monomial& lg = g.leading_monomial();
    const Rational& cg = g.leading_coeff();
    while (!r.is_zero()) {
        const Monomial& lr = r.leading_monomial();
        if (!lg.divides(lr))
            throw std::domain_error("exact_divide: not divisible, failing monomial " + lr.str());
        Monomial qm = lr / lg;
        Rational qc = r.leading_coeff() / cg;
        q.add_term(qm, qc);
        r -= g.mono_mul(qm, qc);
    }
    return q;
}

Polynomial det3(const std::array<std::array<Polynomial, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

} // namespace curves
