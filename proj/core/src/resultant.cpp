#include "curves/polynomial.hpp"

namespace curves {
namespace {

// Fraction-free (Bareiss) determinant of a square polynomial matrix.
Polynomial bareiss_det(std::vector<std::vector<Polynomial>> m) {
    std::size_t n = m.size();
    if (n == 0) return Polynomial(Rational(1));
    Polynomial prev(Rational(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Polynomial::zero();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num.is_zero() ? num : exact_divide(num, prev);
            }
            m[i][std::size_t(k)] = Polynomial::zero();
        }
        prev = m[k][k];
    }
    Polynomial d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

} // namespace

Polynomial resultant(const Polynomial& f, const Polynomial& g, int v) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero input");
    int df = f.degree_in(v), dg = g.degree_in(v);
    if (df == 0 && dg == 0)
        throw std::invalid_argument("resultant: main variable absent from both inputs");
    if (df == 0) return f.pow(unsigned(dg));
    if (dg == 0) return g.pow(unsigned(df));

    std::vector<Polynomial> cf = f.coeffs_in(v), cg = g.coeffs_in(v);
    std::size_t n = std::size_t(df + dg);
    std::vector<std::vector<Polynomial>> syl(n, std::vector<Polynomial>(n));
    for (int i = 0; i < dg; ++i)
        for (int j = 0; j <= df; ++j) syl[std::size_t(i)][std::size_t(i + j)] = cf[std::size_t(df - j)];
    for (int i = 0; i < df; ++i)
        for (int j = 0; j <= dg; ++j)
            syl[std::size_t(dg + i)][std::size_t(i + j)] = cg[std::size_t(dg - j)];
    return bareiss_det(std::move(syl));
}

} // namespace curves
