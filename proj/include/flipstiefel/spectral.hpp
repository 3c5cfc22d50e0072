#pragma once

#include <cstdint>
#include <vector>

#include "flipstiefel/cohomology.hpp"

namespace flipstiefel {

/// Transgression coefficients of the fibration V_{n,2k} -> FV_{n,2k} -> RP^oo
/// over GF(2): the fiber generator of degree j-1 maps to c_j * x^j with
/// c_j = C(k+j-1, j) mod 2, for j in (n-2k, n].
struct TransgressionTable {
    int n;
    int k;
    std::vector<std::uint8_t> coeffs;  // coeffs[j - j_min()] = c_j

    int j_min() const noexcept { return n - 2 * k + 1; }
    int j_max() const noexcept { return n; }

    /// c_j for j in [j_min, j_max]; 0 outside.
    int c(int j) const noexcept {
        if (j < j_min() || j > j_max()) return 0;
        return coeffs[static_cast<std::size_t>(j - j_min())];
    }

    /// Least j with c_j = 1. Always exists; equal to nf(n, k).
    int first_odd() const;
};

/// Requires 2k < n.
TransgressionTable transgression_table(int n, int k);

/// Dense GF(2) matrix with bit-packed rows.
class GF2Matrix {
public:
    GF2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    void set(std::size_t r, std::size_t c) noexcept;
    int get(std::size_t r, std::size_t c) const noexcept;

    /// Row-reduction rank (works on a copy of the row data).
    std::size_t rank() const;

    /// this * rhs over GF(2); requires cols() == rhs.rows().
    GF2Matrix times(const GF2Matrix& rhs) const;

    bool is_zero() const noexcept;

private:
    std::size_t rows_, cols_, words_per_row_;
    std::vector<std::uint64_t> bits_;
};

/// The one-differential model of the spectral sequence: the bigraded
/// GF(2) vector space Z/2[x] (x) Lambda(z_{n-2k}, ..., z_{n-1}) with
///
///   d(x^a z_S) = sum over i in S with c_{i+1} = 1 of  x^{a+i+1} z_{S \ i}.
///
/// All transgressions act at once; the graded homology of this complex is
/// what e_infinity_dims reports, and crosscheck compares it against the
/// closed-form Betti numbers. Total degree is capped at dimension+1, which
/// is safe because d raises total degree by exactly 1.
class KoszulComplex {
public:
    struct Monomial {
        int x_exp;
        std::uint32_t gens;  // bit i set <=> z_{n-2k+i} present
    };

    KoszulComplex(int n, int k);  // requires 2k < n

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    int num_generators() const noexcept { return 2 * k_; }
    int generator_degree(int idx) const noexcept { return n_ - 2 * k_ + idx; }
    long long max_degree() const noexcept { return max_degree_; }

    /// Basis of total degree t, ordered lexicographically by
    /// (x_exp, sorted generator index list). Valid for 0 <= t <= max_degree()+1.
    const std::vector<Monomial>& basis(int t) const;

    /// Position of x^a z_S in basis(t), or -1 if absent.
    int index_of(int t, int x_exp, std::uint32_t gens) const;

private:
    int n_, k_;
    long long max_degree_;
    std::vector<std::vector<Monomial>> bases_;        // per degree
    std::vector<std::vector<std::int32_t>> by_mask_;  // per degree, indexed by gens
};

/// Matrix of d restricted to total degree t, rows indexed by basis(t) and
/// columns by basis(t+1). Valid for 0 <= t <= max_degree().
GF2Matrix differential_matrix(const KoszulComplex& c, const TransgressionTable& tt, int t);

/// Graded homology dims of the complex: dims[t] = nullity(d_t) - rank(d_{t-1}).
/// Per-degree ranks run in parallel.
GradedDims e_infinity_dims(int n, int k);

/// Same computation on one thread; kept as the reference path.
GradedDims e_infinity_dims_serial(int n, int k);

/// True iff the spectral computation agrees with betti(presentation(...))
/// in every degree.
bool crosscheck(int n, int k);

}  // namespace flipstiefel
