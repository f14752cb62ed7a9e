#include "curves/modular.hpp"

namespace curves {

Mont64::Mont64(std::uint64_t prime) : p(prime) {
    if (!(prime & 1) || prime >= (1ull << 63)) throw std::invalid_argument("Mont64: need odd prime < 2^63");
    std::uint64_t inv = prime; // Newton iteration for p^{-1} mod 2^64
    for (int i = 0; i < 6; ++i) inv *= 2 - prime * inv;
    ninv = ~inv + 1;
    unsigned __int128 r = (unsigned __int128)1 << 64;
    one = std::uint64_t(r % p);
    r2 = std::uint64_t((unsigned __int128)one * one % p);
}

std::uint64_t Mont64::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = one;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return std::uint64_t((unsigned __int128)a * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while (!(d & 1)) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

PrimeGen::PrimeGen(std::uint64_t seed) : seed_(seed), state_(seed) {}

std::uint64_t PrimeGen::next() {
    for (;;) {
        std::uint64_t c = (splitmix64(state_) & ((1ull << 61) - 1)) | (1ull << 61) | 1ull;
        if (is_prime_u64(c)) {
            used_.push_back(c);
            return c;
        }
    }
}

int mod_rank(ModMatrix& m) {
    const Mont64& f = m.f;
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.row(r)[c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = c; j < m.cols; ++j) std::swap(m.row(piv)[j], m.row(rank)[j]);
        std::uint64_t inv = f.inv(m.row(rank)[c]);
        std::uint64_t* prow = m.row(rank);
        for (int j = c; j < m.cols; ++j) prow[j] = f.mul(prow[j], inv);
        for (int r = rank + 1; r < m.rows; ++r) {
            std::uint64_t* rr = m.row(r);
            std::uint64_t factor = rr[c];
            if (factor == 0) continue;
            rr[c] = 0;
            for (int j = c + 1; j < m.cols; ++j) rr[j] = f.sub(rr[j], f.mul(factor, prow[j]));
        }
        ++rank;
    }
    return rank;
}

std::vector<int> mod_rref(ModMatrix& m) {
    const Mont64& f = m.f;
    std::vector<int> pivots;
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.row(r)[c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(m.row(piv)[j], m.row(rank)[j]);
        std::uint64_t inv = f.inv(m.row(rank)[c]);
        std::uint64_t* prow = m.row(rank);
        for (int j = c; j < m.cols; ++j) prow[j] = f.mul(prow[j], inv);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            std::uint64_t* rr = m.row(r);
            std::uint64_t factor = rr[c];
            if (factor == 0) continue;
            rr[c] = 0;
            for (int j = c + 1; j < m.cols; ++j) rr[j] = f.sub(rr[j], f.mul(factor, prow[j]));
        }
        pivots.push_back(c);
        ++rank;
    }
    return pivots;
}

std::vector<std::vector<std::uint64_t>> mod_kernel_from_rref(const ModMatrix& m,
                                                             const std::vector<int>& pivots) {
    const Mont64& f = m.f;
    std::vector<bool> is_pivot(std::size_t(m.cols), false);
    for (int c : pivots) is_pivot[std::size_t(c)] = true;
    std::vector<std::vector<std::uint64_t>> kernel;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[std::size_t(c)]) continue;
        std::vector<std::uint64_t> v(std::size_t(m.cols), 0);
        v[std::size_t(c)] = f.one;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            std::uint64_t e = m.row(int(i))[c];
            if (e) v[std::size_t(pivots[i])] = f.sub(0, e);
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

int ModEchelon::reduce(std::vector<std::uint64_t>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::uint64_t c = v[std::size_t(pivot_[i])];
        if (c == 0) continue;
        const std::uint64_t* r = rows_[i].data();
        for (int j = pivot_[i]; j < ambient_; ++j) v[std::size_t(j)] = f_.sub(v[std::size_t(j)], f_.mul(c, r[j]));
    }
    for (int j = 0; j < ambient_; ++j)
        if (v[std::size_t(j)] != 0) return j;
    return -1;
}

bool ModEchelon::add(std::vector<std::uint64_t> v) {
    int pc = reduce(v);
    if (pc < 0) return false;
    std::uint64_t inv = f_.inv(v[std::size_t(pc)]);
    for (int j = pc; j < ambient_; ++j) v[std::size_t(j)] = f_.mul(v[std::size_t(j)], inv);
    // keep rows ordered by pivot for cheap sequential reduce
    std::size_t at = 0;
    while (at < pivot_.size() && pivot_[at] < pc) ++at;
    pivot_.insert(pivot_.begin() + long(at), pc);
    rows_.insert(rows_.begin() + long(at), std::move(v));
    return true;
}

} // namespace curves
