#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace curves {

// Montgomery arithmetic modulo a fixed odd prime p < 2^63.
struct Mont64 {
    std::uint64_t p = 0;
    std::uint64_t ninv = 0; // -p^{-1} mod 2^64
    std::uint64_t r2 = 0;   // 2^128 mod p
    std::uint64_t one = 0;  // 2^64 mod p

    Mont64() = default;
    explicit Mont64(std::uint64_t prime);

    std::uint64_t redc(unsigned __int128 t) const {
        std::uint64_t m = std::uint64_t(t) * ninv;
        unsigned __int128 s = t + (unsigned __int128)m * p;
        std::uint64_t r = std::uint64_t(s >> 64);
        return r >= p ? r - p : r;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return redc((unsigned __int128)a * b);
    }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t r = a + b;
        return r >= p ? r - p : r;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint64_t to(std::uint64_t a) const { return mul(a % p, r2); }
    std::uint64_t from(std::uint64_t a) const { return redc(a); }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const; // a in Montgomery form
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
};

bool is_prime_u64(std::uint64_t n);

// Deterministic stream of fresh 62-bit primes from a recorded seed.
class PrimeGen {
public:
    explicit PrimeGen(std::uint64_t seed);
    std::uint64_t next();
    std::uint64_t seed() const { return seed_; }
    const std::vector<std::uint64_t>& used() const { return used_; }

private:
    std::uint64_t seed_, state_;
    std::vector<std::uint64_t> used_;
};

// Signals that a prime divides a denominator in the input; callers pick a
// fresh prime and record the reselection.
struct BadPrime : std::runtime_error {
    BadPrime() : std::runtime_error("prime collides with a coefficient denominator") {}
};

// Dense row-major matrix over F_p, entries in Montgomery form.
struct ModMatrix {
    Mont64 f;
    int rows = 0, cols = 0;
    std::vector<std::uint64_t> a;

    std::uint64_t* row(int r) { return a.data() + std::size_t(r) * std::size_t(cols); }
    const std::uint64_t* row(int r) const { return a.data() + std::size_t(r) * std::size_t(cols); }
};

// Rank via forward elimination (destructive).
int mod_rank(ModMatrix& m);

// Reduced row echelon form; returns pivot columns in increasing order.
std::vector<int> mod_rref(ModMatrix& m);

// Kernel basis from an RREF'd matrix: one canonical vector per free column.
std::vector<std::vector<std::uint64_t>> mod_kernel_from_rref(const ModMatrix& m,
                                                             const std::vector<int>& pivots);

// Incremental row-echelon subspace over F_p.
class ModEchelon {
public:
    ModEchelon(const Mont64& f, int ambient) : f_(f), ambient_(ambient) {}
    // Reduce v against the echelon in place; returns the pivot column of
    // the residual, or -1 if v reduces to zero.
    int reduce(std::vector<std::uint64_t>& v) const;
    bool add(std::vector<std::uint64_t> v); // true if the dimension grew
    int dim() const { return int(rows_.size()); }
    int ambient() const { return ambient_; }

private:
    Mont64 f_;
    int ambient_;
    std::vector<std::vector<std::uint64_t>> rows_; // pivot normalized to 1
    std::vector<int> pivot_;
};

} // namespace curves
