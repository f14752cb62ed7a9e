#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curves/modular.hpp"
#include "curves/polynomial.hpp"

namespace curves {

// Dimension of the degree-k piece of Q[x,y,z].
long graded_dim(int k);

// Cached grlex-ordered monomial bases of the graded pieces of Q[x,y,z].
class GradedBasis {
public:
    static const std::vector<Monomial>& of(int k);
    // Position of m within of(k); throws if m is not an xyz-monomial of degree k.
    static int index(const Monomial& m);
};

// Column-sparse matrix over Q with rows indexed by GradedBasis::of(row_degree).
// Each column remembers which generator/shift produced it so kernel vectors can
// be folded back into polynomial tuples.
struct MapMatrix {
    int row_degree = 0;
    long rows = 0;
    struct Col {
        int source = 0;       // index of the generator this column multiplies
        Monomial shift;       // the monomial multiplier
        std::vector<std::pair<long, Rational>> entries; // (row, value), rows ascending
    };
    std::vector<Col> cols;

    long col_count() const { return long(cols.size()); }
    // Dense column extraction (mostly for tests / small problems).
    std::vector<Rational> dense_col(std::size_t j) const;
};

// Matrix of the multiplication map  (+)_i S_{k - deg g_i}  ->  S_k,
// (h_i) |-> sum h_i * g_i.  Columns are grouped by generator, then by the
// grlex order on the shift monomials.  Generators of degree > k contribute
// no columns.
MapMatrix multiplication_map(const std::vector<Polynomial>& gens, int k);

std::vector<Rational> poly_to_vec(const Polynomial& f, int k);
Polynomial vec_to_poly(const std::vector<Rational>& v, int k);

enum class Backend { Exact, Modular, Auto };

// Records how a rank (or kernel) was established.
struct RankWitness {
    long rank = -1;
    Backend backend = Backend::Exact;
    bool certified = false;                 // true iff the value is proven, not just agreed mod p
    std::vector<std::uint64_t> primes;      // primes consulted (modular paths)
    std::string note;
};

// Reduce a MapMatrix column set mod p into a dense ModMatrix (columns become rows,
// which is fine for rank).  Throws BadPrime if p divides a denominator.
ModMatrix reduce_mod(const MapMatrix& m, const Mont64& f);

// Rank by agreement of two independent primes, escalating to a third on
// disagreement.  Not certified (the true rank can only be larger).
RankWitness modular_rank(const MapMatrix& m, PrimeGen& pg);

// Exact rank over Q (fraction arithmetic); certified.
RankWitness exact_rank(const MapMatrix& m);

RankWitness rank_of(const MapMatrix& m, Backend backend, PrimeGen& pg);

struct KernelResult {
    std::vector<std::vector<Rational>> basis; // coordinate vectors in column space
    RankWitness witness;                      // witness.rank = rank of the matrix
};

// Exact kernel of the column map.  For small matrices this is fraction-free-ish
// Gauss over Q; for large ones a modular kernel is lifted by rational
// reconstruction and then verified exactly, which certifies both the kernel
// vectors and the rank.
KernelResult exact_kernel(const MapMatrix& m, PrimeGen& pg);

struct MembershipResult {
    bool member = false;
    // member: coefficients expressing the target in the columns.
    std::vector<Rational> coeffs;
    // non-member: a linear functional (dense row-space vector) vanishing on all
    // columns but not on the target.
    std::vector<Rational> functional;
};

// Does the dense vector `target` (length m.rows) lie in the column span of m?
// Exact, certified either way.
MembershipResult image_membership(const MapMatrix& m, const std::vector<Rational>& target);

// Incremental exact echelon form over Q, used for graded dimension counting
// when vectors arrive one at a time.
class QEchelon {
public:
    explicit QEchelon(long ambient) : ambient_(ambient) {}
    bool add(std::vector<Rational> v); // true if it enlarged the span
    long dim() const { return long(rows_.size()); }
    long ambient() const { return ambient_; }
    // Reduce v against the current rows in place; returns leading index or -1.
    long reduce(std::vector<Rational>& v) const;
    // Coordinates of v in terms of the added vectors, if v lies in the span.
    std::optional<std::vector<Rational>> coords(std::vector<Rational> v) const;

private:
    long ambient_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<long> pivot_;
    std::vector<std::vector<Rational>> combo_; // row i = combination of inputs giving rows_[i]
    long added_ = 0;
};

// Human-readable dump for debugging / golden tests.
std::string dump(const MapMatrix& m);

} // namespace curves
