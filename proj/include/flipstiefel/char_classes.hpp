#pragma once

#include <string>
#include <vector>

#include "flipstiefel/cohomology.hpp"
#include "flipstiefel/gf2.hpp"

namespace flipstiefel {

/// Total Stiefel-Whitney class of the tangent bundle of FV_{n,2k}:
/// (1+x)^{k(n-k-1)} truncated at x^{nf(n,k)}, so w_i = C(k(n-k-1), i) x^i.
struct SWClass {
    TruncPoly2 poly;        // cap = nf(n, k)
    long long exponent;     // k(n-k-1)

    int w(std::size_t i) const noexcept { return poly.coeff(i); }

    /// True iff some w_i with 1 <= i < cap is nonzero.
    bool obstructs() const noexcept { return !poly.is_one(); }
};

/// Requires 2k < n.
SWClass sw_total(const FlipManifold& m);

enum class Parallelizable { No, Yes, Unknown };
enum class SpanStable { Yes, Unknown };

/// The two Lie-quotient families that are parallelizable outright:
/// FV_{n,n} for n even (O(n)/C_2) and FV_{n,n-1} for n odd (SO(n)/C_2).
enum class SpecialCase { None, FullFrame, CoRankOne };

struct SpanReport {
    int w1 = 0;
    int w2 = 0;
    int dim_mod4 = 0;
    int dim_mod8 = 0;
    Parallelizable parallelizable = Parallelizable::Unknown;
    SpanStable span_equals_stable_span = SpanStable::Unknown;
    SpecialCase special_case = SpecialCase::None;
};

/// Classification pipeline, in order:
///   (a) special cases: 2k = n, or 2k = n-1 with n odd, are parallelizable
///       Lie-group quotients and override everything else;
///   (b) otherwise w1 = C(k(n-k-1), 1), w2 = C(k(n-k-1), 2) mod 2 and the
///       dimension residues are computed;
///   (c) parallelizable = No when any w_i with i < nf(n,k) is nonzero,
///       Unknown otherwise (the Whitney test can only disprove);
///   (d) span = stable span exactly for k = 0, 2 mod 4; for k = 1 mod 4
///       with n = 0, 2 mod 4 and k > 1; for k = 3 mod 4 with n = 0 mod 4
///       and k > 3. Unknown otherwise.
SpanReport classify(const FlipManifold& m);

enum class RowConclusion {
    SpanEqStable,
    NotParallelizable,
    NotParAndSpanEqStable,
    SpanEqStableKGt1NotPar,
    SpanEqStableKGt1,
    SpanEqStableKGt3,
};

std::string to_string(RowConclusion c);
std::string to_string(Parallelizable p);
std::string to_string(SpanStable s);
std::string to_string(SpecialCase s);

/// One row of the 16-entry residue classification by (k mod 4, n mod 4).
/// w1/w2 and the dimension residues are computed at the smallest generic
/// representative of the class (2k < n, no special case); the conclusion is
/// assembled from classify() sweeps, with the k > 1 / k > 3 provisos
/// detected by probing small and large k in the class.
struct ResidueRow {
    int k_mod4;
    int n_mod4;
    int rep_k;
    int rep_n;
    int w1;
    int w2;
    int dim_mod2;
    int dim_mod4;
    int dim_mod8;
    int dim_modulus;  // the modulus the table conventionally reports (2, 4 or 8)
    RowConclusion conclusion;

    int dim_residue() const noexcept {
        return dim_modulus == 8 ? dim_mod8 : dim_modulus == 4 ? dim_mod4 : dim_mod2;
    }
};

std::vector<ResidueRow> residue_table();

}  // namespace flipstiefel
