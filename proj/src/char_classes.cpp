#include "flipstiefel/char_classes.hpp"

#include <stdexcept>

namespace flipstiefel {

SWClass sw_total(const FlipManifold& m) {
    if (2 * m.k >= m.n)
        throw std::invalid_argument("sw_total: requires 2k < n (no truncation exponent at 2k = n)");
    const long long e = static_cast<long long>(m.k) * (m.n - m.k - 1);
    const int cap = nf(m.n, m.k);
    return SWClass{poly_pow_trunc(TruncPoly2::one_plus_x(2), static_cast<std::uint64_t>(e),
                                  static_cast<std::size_t>(cap)),
                   e};
}

namespace {

bool is_special_full_frame(const FlipManifold& m) { return 2 * m.k == m.n; }

bool is_special_corank_one(const FlipManifold& m) {
    return 2 * m.k == m.n - 1 && m.n % 2 == 1;
}

/// Span = stable span residue rule, including the k-size provisos.
bool span_equals_stable(int k, int n_mod4) {
    const int km = k % 4;
    if (km == 0 || km == 2) return true;
    if (km == 1 && (n_mod4 == 0 || n_mod4 == 2)) return k > 1;
    if (km == 3 && n_mod4 == 0) return k > 3;
    return false;
}

}  // namespace

SpanReport classify(const FlipManifold& m) {
    SpanReport r;
    const long long dim = m.dimension();
    r.dim_mod4 = static_cast<int>(dim % 4);
    r.dim_mod8 = static_cast<int>(dim % 8);

    if (is_special_full_frame(m) || is_special_corank_one(m)) {
        r.special_case = is_special_full_frame(m) ? SpecialCase::FullFrame : SpecialCase::CoRankOne;
        r.parallelizable = Parallelizable::Yes;
        // Parallelizable forces span = dim = stable span, and all
        // Whitney classes of the (trivial) tangent bundle vanish.
        r.span_equals_stable_span = SpanStable::Yes;
        r.w1 = 0;
        r.w2 = 0;
        return r;
    }

    const SWClass w = sw_total(m);
    r.w1 = binom_mod2(static_cast<std::uint64_t>(w.exponent), 1);
    r.w2 = binom_mod2(static_cast<std::uint64_t>(w.exponent), 2);
    r.parallelizable = w.obstructs() ? Parallelizable::No : Parallelizable::Unknown;
    r.span_equals_stable_span =
        span_equals_stable(m.k, m.n % 4) ? SpanStable::Yes : SpanStable::Unknown;
    return r;
}

std::string to_string(RowConclusion c) {
    switch (c) {
        case RowConclusion::SpanEqStable: return "span = stable span";
        case RowConclusion::NotParallelizable: return "not parallelizable";
        case RowConclusion::NotParAndSpanEqStable: return "not parallelizable; span = stable span";
        case RowConclusion::SpanEqStableKGt1NotPar:
            return "span = stable span for k > 1; not parallelizable";
        case RowConclusion::SpanEqStableKGt1: return "span = stable span for k > 1";
        case RowConclusion::SpanEqStableKGt3: return "span = stable span for k > 3";
    }
    return "?";
}

std::string to_string(Parallelizable p) {
    switch (p) {
        case Parallelizable::No: return "no";
        case Parallelizable::Yes: return "yes";
        case Parallelizable::Unknown: return "unknown";
    }
    return "?";
}

std::string to_string(SpanStable s) {
    return s == SpanStable::Yes ? "yes" : "unknown";
}

std::string to_string(SpecialCase s) {
    switch (s) {
        case SpecialCase::None: return "none";
        case SpecialCase::FullFrame: return "full-frame Lie quotient O(n)/C2";
        case SpecialCase::CoRankOne: return "corank-one Lie quotient SO(n)/C2";
    }
    return "?";
}

namespace {

int smallest_k_in_class(int k_mod4) { return k_mod4 == 0 ? 4 : k_mod4; }

int smallest_n_in_class(int n_mod4, int k) {
    int n = 2 * k + 1;  // need 2k < n
    while (n % 4 != n_mod4) ++n;
    return n;
}

}  // namespace

std::vector<ResidueRow> residue_table() {
    std::vector<ResidueRow> rows;
    rows.reserve(16);
    for (int km = 0; km < 4; ++km) {
        for (int nm = 0; nm < 4; ++nm) {
            ResidueRow row{};
            row.k_mod4 = km;
            row.n_mod4 = nm;
            row.rep_k = smallest_k_in_class(km);
            row.rep_n = smallest_n_in_class(nm, row.rep_k);

            const FlipManifold rep(row.rep_n, row.rep_k);
            const long long e = static_cast<long long>(rep.k) * (rep.n - rep.k - 1);
            row.w1 = binom_mod2(static_cast<std::uint64_t>(e), 1);
            row.w2 = binom_mod2(static_cast<std::uint64_t>(e), 2);
            const long long dim = rep.dimension();
            row.dim_mod2 = static_cast<int>(dim % 2);
            row.dim_mod4 = static_cast<int>(dim % 4);
            row.dim_mod8 = static_cast<int>(dim % 8);
            if (km == 3 && nm == 0)
                row.dim_modulus = 8;
            else if ((km == 1 && nm != 1) || (km == 3 && nm == 2))
                row.dim_modulus = 4;
            else
                row.dim_modulus = 2;

            // The row concludes "not parallelizable" from its own data,
            // i.e. when w1 or w2 is already nonzero on the class. (The
            // per-instance classifier can be strictly sharper via higher
            // classes; that never enters the table.)
            const bool not_par = row.w1 == 1 || row.w2 == 1;
            const bool span_small = span_equals_stable(row.rep_k, nm);
            const bool span_large = span_equals_stable(row.rep_k + 4, nm);

            if (span_large && span_small) {
                row.conclusion = not_par ? RowConclusion::NotParAndSpanEqStable
                                         : RowConclusion::SpanEqStable;
            } else if (span_large) {
                if (not_par) {
                    row.conclusion = RowConclusion::SpanEqStableKGt1NotPar;
                } else {
                    row.conclusion = row.rep_k == 1 ? RowConclusion::SpanEqStableKGt1
                                                    : RowConclusion::SpanEqStableKGt3;
                }
            } else {
                row.conclusion = RowConclusion::NotParallelizable;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace flipstiefel
