#include "flipstiefel/cohomology.hpp"

#include <stdexcept>
#include <string>

namespace flipstiefel {

namespace {

void require_flip_range(int n, int k, const char* who) {
    if (k < 1 || 2 * k <= 1 || 2 * k > n)
        throw std::invalid_argument(std::string(who) + ": requires 1 < 2k <= n, got n=" +
                                    std::to_string(n) + " k=" + std::to_string(k));
}

}  // namespace

FlipManifold::FlipManifold(int n_, int k_) : n(n_), k(k_) {
    require_flip_range(n_, k_, "FlipManifold");
}

FlipManifold FlipManifold::from_frame(int n, int frame) {
    if (frame % 2 != 0)
        throw std::invalid_argument("FlipManifold: frame size must be even, got " +
                                    std::to_string(frame));
    return FlipManifold(n, frame / 2);
}

int nf(int n, int k) {
    require_flip_range(n, k, "nf");
    for (int j = n - 2 * k + 1; j <= n; ++j) {
        if (binom_mod2(static_cast<std::uint64_t>(k) + j - 1, j)) return j;
    }
    // Unreachable: some j <= n always works since C(k+n-1, n) odd reduces
    // to C(n, j) odd for a smaller j, and C(n, n) = 1.
    throw std::logic_error("nf: no odd coefficient found in range");
}

int np(int n, int k) {
    if (k < 1 || k > n)
        throw std::invalid_argument("np: requires 1 <= k <= n, got n=" + std::to_string(n) +
                                    " k=" + std::to_string(k));
    for (int j = n - k + 1; j <= n; ++j) {
        if (binom_mod2(n, j)) return j;
    }
    throw std::logic_error("np: no odd coefficient found in range");  // C(n,n)=1
}

CohomologyPresentation presentation(const FlipManifold& m) {
    if (2 * m.k >= m.n)
        throw std::invalid_argument("presentation: requires 2k < n, got n=" +
                                    std::to_string(m.n) + " 2k=" + std::to_string(2 * m.k));
    CohomologyPresentation p;
    p.truncation = nf(m.n, m.k);
    p.generator_degrees.reserve(2 * m.k - 1);
    for (int d = m.n - 2 * m.k; d <= m.n - 1; ++d) {
        if (d == p.truncation - 1) continue;
        p.generator_degrees.push_back(d);
    }
    return p;
}

long long GradedDims::total() const noexcept {
    long long s = 0;
    for (long long d : dims) s += d;
    return s;
}

int GradedDims::top_degree() const noexcept {
    for (std::size_t t = dims.size(); t-- > 0;)
        if (dims[t] != 0) return static_cast<int>(t);
    return -1;
}

GradedDims betti(const CohomologyPresentation& p) {
    if (p.truncation < 1) throw std::invalid_argument("betti: truncation must be positive");
    std::vector<long long> poly(p.truncation, 1);  // 1 + t + ... + t^{truncation-1}
    for (int d : p.generator_degrees) {
        std::vector<long long> next(poly.size() + d, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + d] += poly[i];
        }
        poly.swap(next);
    }
    return GradedDims{std::move(poly)};
}

long long euler_characteristic(const GradedDims& g) {
    long long chi = 0;
    for (std::size_t t = 0; t < g.dims.size(); ++t) chi += (t % 2 == 0) ? g.dims[t] : -g.dims[t];
    return chi;
}

}  // namespace flipstiefel
