#pragma once

#include <string>

#include "flipstiefel/cohomology.hpp"

namespace flipstiefel {

/// A Stiefel-type space with a free C_2-action, one of five families.
/// FlipOrthogonal(k) is FlipStiefel(2k, k) and AntipodalSO(n) is
/// AntipodalStiefel(n, n-1); the aliases are kept so reports can name the
/// space the way it was asked for.
struct C2Space {
    enum class Kind { FlipStiefel, AntipodalStiefel, AntipodalSphere, FlipOrthogonal, AntipodalSO };

    Kind kind;
    int n = 0;
    int k = 0;  // FlipStiefel: frame 2k; AntipodalStiefel: frame k

    static C2Space flip_stiefel(int n, int frame);
    static C2Space antipodal_stiefel(int n, int k);
    static C2Space antipodal_sphere(int n);    // S^{n-1} in R^n
    static C2Space flip_orthogonal(int frame); // O(2k) with the flip
    static C2Space antipodal_so(int n);        // SO(n), scalar action

    /// Grammar: flip:n,2k | pstiefel:n,k | sphere:n | so:n | o:2k
    static C2Space parse(const std::string& spec);

    std::string to_string() const;
};

/// The ideal (x^exponent) in Z/2[x] = H*(RP^oo; Z/2). Containment of
/// principal ideals reverses the exponent order: (x^a) is contained in
/// (x^b) exactly when a >= b.
struct IndexIdeal {
    int exponent;

    std::string to_string() const { return "(x^" + std::to_string(exponent) + ")"; }
};

/// Flip families use nf, antipodal families use np.
IndexIdeal index_exponent(const C2Space& s);

enum class Verdict { Forbidden, Unknown };

std::string to_string(Verdict v);

struct ObstructionVerdict {
    Verdict verdict;
    int source_exp;
    int target_exp;
};

/// An equivariant map source -> target forces the target's index ideal into
/// the source's, so the map is Forbidden when target_exp < source_exp.
/// Containment is necessary, never sufficient: otherwise Unknown.
ObstructionVerdict obstruct(const C2Space& source, const C2Space& target);

/// Largest m with k*m < nf(n,k), i.e. floor((nf(n,k)-1)/k). For any
/// continuous f: S^{n-1} -> R^m with m at most this value there exist k
/// mutually orthogonal pairs with equal f-values. Requires 1 < 2k <= n.
int coincidence_threshold(int n, int k);

/// The k = 3 threshold offset: 5 for n = 1,2 mod 4; 4 for n = 0 mod 4;
/// 3 for n = 3 mod 4. Requires n >= 7.
int rn(int n);

/// True iff every binary digit of n-2k+1 is also set in n-k, which by the
/// digit-wise parity rule is exactly when nf(n,k) lands at its least
/// possible value n-2k+1. Requires 1 < 2k <= n.
bool nf_is_minimal(int n, int k);

}  // namespace flipstiefel
