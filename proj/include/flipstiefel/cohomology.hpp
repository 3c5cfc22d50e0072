#pragma once

#include <vector>

#include "flipstiefel/gf2.hpp"

namespace flipstiefel {

/// The pair (n, k) naming FV_{n,2k}: orthonormal 2k-frames in R^n modulo
/// the simultaneous pairwise swap (v1,v2,...) -> (v2,v1,...).
/// Valid parameters satisfy 1 < 2k <= n.
struct FlipManifold {
    int n;
    int k;  // the frame has 2k columns

    FlipManifold(int n_, int k_);

    /// Construct from the frame size as it appears on the command line
    /// ("n 2k"); the frame must be even.
    static FlipManifold from_frame(int n, int frame);

    int frame() const noexcept { return 2 * k; }

    /// k(2n - 2k - 1): half the difference of the two triangular numbers.
    long long dimension() const noexcept {
        return static_cast<long long>(k) * (2LL * n - 2LL * k - 1);
    }
};

/// Truncation exponent of the degree-1 class x in H*(FV_{n,2k}; Z/2):
/// the least j with n-2k < j <= n and C(k+j-1, j) odd. Requires 1 < 2k <= n.
int nf(int n, int k);

/// Projective-Stiefel analogue: the least j with n-k < j <= n and C(n, j)
/// odd. Requires 1 <= k <= n.
int np(int n, int k);

/// Additive presentation of H*(FV_{n,2k}; Z/2): the truncated polynomial
/// part Z/2[x]/(x^truncation) and the degrees of the 2k-1 exterior
/// generators (n-2k .. n-1 with truncation-1 removed).
struct CohomologyPresentation {
    int truncation;
    std::vector<int> generator_degrees;  // sorted ascending
};

/// Requires 2k < n (the closed form is not asserted at 2k = n).
CohomologyPresentation presentation(const FlipManifold& m);

/// Graded GF(2) dimensions, dense by degree.
struct GradedDims {
    std::vector<long long> dims;

    long long dim(std::size_t t) const noexcept { return t < dims.size() ? dims[t] : 0; }
    long long total() const noexcept;
    int top_degree() const noexcept;  // -1 when everything vanishes

    bool operator==(const GradedDims&) const = default;
};

/// Graded dimensions of Z/2[x]/(x^truncation) (x) Lambda(generators),
/// computed as the coefficient vector of
///   (1 + t + ... + t^{truncation-1}) * prod_d (1 + t^d).
GradedDims betti(const CohomologyPresentation& p);

long long euler_characteristic(const GradedDims& g);

}  // namespace flipstiefel
