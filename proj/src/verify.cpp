#include <algorithm>
#include <set>
#include <utility>

#include "flipstiefel/char_classes.hpp"
#include "flipstiefel/cohomology.hpp"
#include "flipstiefel/equivariant.hpp"
#include "flipstiefel/report.hpp"
#include "flipstiefel/spectral.hpp"

namespace flipstiefel {

namespace {

// Every (n, k) with 1 < 2k <= n (or strictly 2k < n) up to n_max.
template <typename F>
bool all_flip_pairs(int n_max, bool strict, F&& body) {
    for (int n = 2; n <= n_max; ++n)
        for (int k = 1; 2 * k <= (strict ? n - 1 : n); ++k)
            if (!body(n, k)) return false;
    return true;
}

bool residue_row_matches(const ResidueRow& row, int w1, int w2, int dim_residue, int dim_modulus,
                         RowConclusion conclusion) {
    return row.w1 == w1 && row.w2 == w2 && row.dim_modulus == dim_modulus &&
           row.dim_residue() == dim_residue && row.conclusion == conclusion;
}

// Every generic instance of the residue class in the sweep window is
// obstructed.
bool class_all_obstructed(int km, int nm) {
    bool seen = false;
    for (int k = 1; k <= 19; ++k) {
        if (k % 4 != km) continue;
        for (int n = 2 * k + 1; n <= 40; ++n) {
            if (n % 4 != nm) continue;
            const SpanReport r = classify(FlipManifold(n, k));
            if (r.special_case != SpecialCase::None) continue;
            seen = true;
            if (r.parallelizable != Parallelizable::No) return false;
        }
    }
    return seen;
}

// Residue classes where already (w1, w2) rules out parallelizability; this
// is what the table's conclusion column is built from.
std::set<std::pair<int, int>> w_forced_classes() {
    std::set<std::pair<int, int>> out;
    for (const ResidueRow& row : residue_table())
        if (row.w1 == 1 || row.w2 == 1) out.insert({row.k_mod4, row.n_mod4});
    return out;
}

bool check_span_family(int km, const std::vector<int>& n_mods, int k_above) {
    for (int k = 1; k <= 19; ++k) {
        if (k % 4 != km) continue;
        for (int n = 2 * k + 1; n <= 40; ++n) {
            const SpanReport r = classify(FlipManifold(n, k));
            if (r.special_case != SpecialCase::None) continue;
            const bool in_family =
                std::find(n_mods.begin(), n_mods.end(), n % 4) != n_mods.end() && k > k_above;
            if (in_family && r.span_equals_stable_span != SpanStable::Yes) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<RegressionCheck> regression_checks() {
    std::vector<RegressionCheck> checks;
    auto add = [&checks](std::string anchor, std::function<bool()> run) {
        checks.push_back(RegressionCheck{std::move(anchor), std::move(run)});
    };

    // ---- closed forms of the truncation exponent --------------------------

    add("nf(2k,2k) = 1 for k odd, k <= 32", [] {
        for (int k = 1; k <= 32; k += 2)
            if (nf(2 * k, k) != 1) return false;
        return true;
    });
    add("nf(2k,2k) = 2 for k = 2 mod 4, k <= 32", [] {
        for (int k = 2; k <= 32; k += 4)
            if (nf(2 * k, k) != 2) return false;
        return true;
    });
    add("nf(2k+1,2k) = 2 exactly for k = 1,2 mod 4, k <= 32", [] {
        for (int k = 1; k <= 32; ++k) {
            const bool expect = (k % 4 == 1 || k % 4 == 2);
            if ((nf(2 * k + 1, k) == 2) != expect) return false;
        }
        return true;
    });
    add("nf(2k+1,2k) = 2 for k = 1,2,5,6,9,10 mod 12 (equivalent residue list)", [] {
        for (int k = 1; k <= 32; ++k) {
            const int r = k % 12;
            if (r == 1 || r == 2 || r == 5 || r == 6 || r == 9 || r == 10)
                if (nf(2 * k + 1, k) != 2) return false;
        }
        return true;
    });
    add("nf(2k+2,2k) = 3 for k = 1,5,9 mod 12, k <= 31", [] {
        for (int k = 1; k <= 31; ++k) {
            const int r = k % 12;
            if (r == 1 || r == 5 || r == 9)
                if (nf(2 * k + 2, k) != 3) return false;
        }
        return true;
    });
    add("nf(n,2) = n-1 for n <= 64", [] {
        for (int n = 2; n <= 64; ++n)
            if (nf(n, 1) != n - 1) return false;
        return true;
    });
    add("nf(n,4) = n-3 for n odd, n <= 63", [] {
        for (int n = 5; n <= 63; n += 2)
            if (nf(n, 2) != n - 3) return false;
        return true;
    });
    add("nf(n,4) = n-2 for n even, n <= 64", [] {
        for (int n = 4; n <= 64; n += 2)
            if (nf(n, 2) != n - 2) return false;
        return true;
    });
    add("nf(n,6) = n-5 for n = 1,2 mod 4, n <= 64", [] {
        for (int n = 6; n <= 64; ++n)
            if ((n % 4 == 1 || n % 4 == 2) && nf(n, 3) != n - 5) return false;
        return true;
    });
    add("nf(n,6) = n-4 for n = 0 mod 4, n <= 64", [] {
        for (int n = 8; n <= 64; n += 4)
            if (nf(n, 3) != n - 4) return false;
        return true;
    });
    add("nf(n,6) = n-3 for n = 3 mod 4, n <= 63", [] {
        for (int n = 7; n <= 63; n += 4)
            if (nf(n, 3) != n - 3) return false;
        return true;
    });

    add("inverse of (1+x)^k expands with the parities C(r+k-1, r)", [] {
        const std::size_t cap = 64;
        for (std::uint64_t k = 1; k <= 12; ++k) {
            const TruncPoly2 inv = poly_pow_trunc(TruncPoly2::one_plus_x(2), k, cap).inverse();
            for (std::size_t r = 0; r < cap; ++r)
                if (inv.coeff(r) != neg_binom_mod2(k, r)) return false;
        }
        return true;
    });

    // ---- projective-Stiefel truncation anchors ----------------------------

    add("np(n,1) = n for n odd, n <= 63", [] {
        for (int n = 1; n <= 63; n += 2)
            if (np(n, 1) != n) return false;
        return true;
    });
    add("np(2^r, 2^r - 1) = 2^r for r <= 6", [] {
        for (int r = 1; r <= 6; ++r)
            if (np(1 << r, (1 << r) - 1) != (1 << r)) return false;
        return true;
    });
    add("np(2^r - 1, 2^r - 2) = 2 for 2 <= r <= 6", [] {
        for (int r = 2; r <= 6; ++r)
            if (np((1 << r) - 1, (1 << r) - 2) != 2) return false;
        return true;
    });

    // ---- range and monotonicity of nf -------------------------------------

    add("n-2k < nf(n,2k) <= n-1 for all valid n <= 64", [] {
        return all_flip_pairs(64, false, [](int n, int k) {
            const int v = nf(n, k);
            return n - 2 * k < v && v <= n - 1;
        });
    });
    add("nf chain nf(n,2) >= nf(n,4) >= ... for even n <= 64", [] {
        for (int n = 4; n <= 64; n += 2)
            for (int k = 1; k < n / 2; ++k)
                if (nf(n, k) < nf(n, k + 1)) return false;
        return true;
    });
    add("nf chain nf(n,2) >= nf(n,4) >= ... for odd n <= 63", [] {
        for (int n = 5; n <= 63; n += 2)
            for (int k = 1; k < (n - 1) / 2; ++k)
                if (nf(n, k) < nf(n, k + 1)) return false;
        return true;
    });

    // ---- digit criteria for the extreme values of nf ----------------------

    add("digit containment test = (nf at minimum n-2k+1), n <= 48", [] {
        return all_flip_pairs(48, false, [](int n, int k) {
            return nf_is_minimal(n, k) == (nf(n, k) == n - 2 * k + 1);
        });
    });
    add("nf(n,2) attains the minimum n-2k+1 at k = 1", [] {
        for (int n = 2; n <= 64; ++n)
            if (!nf_is_minimal(n, 1)) return false;
        return true;
    });
    add("nf above minimum on the family n = 2^r - 2^s + 1, n-2k = 2^s - 1", [] {
        for (int r = 3; r <= 6; ++r) {
            for (int s = 1; s < r - 1; ++s) {
                const int n = (1 << r) - ((1 << s) - 1);
                const int k = (n - ((1 << s) - 1)) / 2;
                if (k < 1 || 2 * k > n) continue;
                if (nf_is_minimal(n, k)) return false;
            }
        }
        return true;
    });
    add("nf = 2^r on the family n = 2k + 2^r - 1, bit r of k-1 clear", [] {
        for (int r = 1; r <= 5; ++r)
            for (int k = 1; k <= 32; ++k) {
                if ((k - 1) & (1 << r)) continue;
                if (nf(2 * k + (1 << r) - 1, k) != (1 << r)) return false;
            }
        return true;
    });
    add("nf <= 2^r whenever bit r of k-1 is clear and n-2k < 2^r <= n", [] {
        return all_flip_pairs(64, false, [](int n, int k) {
            for (int r = 1; r <= 6; ++r) {
                if ((k - 1) & (1 << r)) continue;
                if (n - 2 * k < (1 << r) && (1 << r) <= n && nf(n, k) > (1 << r)) return false;
            }
            return true;
        });
    });

    // ---- graded dimensions -------------------------------------------------

    add("top nonzero degree = k(2n-2k-1) for 2k < n <= 14", [] {
        return all_flip_pairs(14, true, [](int n, int k) {
            const FlipManifold m(n, k);
            return betti(presentation(m)).top_degree() == m.dimension();
        });
    });
    add("total dimension = nf * 2^(2k-1) for 2k < n <= 14", [] {
        return all_flip_pairs(14, true, [](int n, int k) {
            const auto p = presentation(FlipManifold(n, k));
            return betti(p).total() == p.truncation * (1LL << (2 * k - 1));
        });
    });
    add("graded symmetry dims[t] = dims[dim-t] for 2k < n <= 14", [] {
        return all_flip_pairs(14, true, [](int n, int k) {
            const GradedDims g = betti(presentation(FlipManifold(n, k)));
            const long long dim = FlipManifold(n, k).dimension();
            for (long long t = 0; t <= dim; ++t)
                if (g.dim(static_cast<std::size_t>(t)) !=
                    g.dim(static_cast<std::size_t>(dim - t)))
                    return false;
            return true;
        });
    });
    add("euler characteristic 0 for 2k < n <= 14", [] {
        return all_flip_pairs(14, true, [](int n, int k) {
            return euler_characteristic(betti(presentation(FlipManifold(n, k)))) == 0;
        });
    });
    add("connected: degree-0 dimension is 1", [] {
        return all_flip_pairs(14, true,
                              [](int n, int k) { return betti(presentation(FlipManifold(n, k))).dim(0) == 1; });
    });
    add("dimension formula k(2n-2k-1) = C(n,2) - C(n-2k,2)", [] {
        return all_flip_pairs(40, false, [](int n, int k) {
            const long long tri = static_cast<long long>(n) * (n - 1) / 2 -
                                  static_cast<long long>(n - 2 * k) * (n - 2 * k - 1) / 2;
            return FlipManifold(n, k).dimension() == tri;
        });
    });

    // ---- spectral model ----------------------------------------------------

    for (int n = 3; n <= 10; ++n) {
        for (int k = 1; 2 * k < n; ++k) {
            add("spectral homology matches closed form for FV_{" + std::to_string(n) + "," +
                    std::to_string(2 * k) + "}",
                [n, k] { return crosscheck(n, k); });
        }
    }
    add("d compose d = 0 for 2k < n <= 10", [] {
        return all_flip_pairs(10, true, [](int n, int k) {
            const KoszulComplex complex(n, k);
            const TransgressionTable tt = transgression_table(n, k);
            for (int t = 0; t + 1 <= complex.max_degree(); ++t) {
                const GF2Matrix dt = differential_matrix(complex, tt, t);
                const GF2Matrix dt1 = differential_matrix(complex, tt, t + 1);
                if (!dt.times(dt1).is_zero()) return false;
            }
            return true;
        });
    });
    add("first odd transgression coefficient sits at j = nf", [] {
        return all_flip_pairs(12, true,
                              [](int n, int k) { return transgression_table(n, k).first_odd() == nf(n, k); });
    });
    add("some transgression coefficient is odd (truncation exists)", [] {
        return all_flip_pairs(24, true, [](int n, int k) {
            const TransgressionTable tt = transgression_table(n, k);
            for (int j = tt.j_min(); j <= tt.j_max(); ++j)
                if (tt.c(j)) return true;
            return false;
        });
    });
    add("x^nf is a boundary: z_{nf-1} maps onto it", [] {
        return all_flip_pairs(12, true, [](int n, int k) {
            const KoszulComplex complex(n, k);
            const TransgressionTable tt = transgression_table(n, k);
            const int v = nf(n, k);
            const int row = complex.index_of(v - 1, 0, std::uint32_t{1} << (v - 1 - (n - 2 * k)));
            const int col = complex.index_of(v, v, 0);
            if (row < 0 || col < 0) return false;
            const GF2Matrix d = differential_matrix(complex, tt, v - 1);
            return d.get(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) == 1;
        });
    });

    // ---- Whitney classes and the residue table -----------------------------

    add("w_i(TFV) = C(k(n-k-1), i) x^i below the truncation, n <= 64", [] {
        return all_flip_pairs(64, true, [](int n, int k) {
            const SWClass w = sw_total(FlipManifold(n, k));
            for (std::size_t i = 0; i < w.poly.cap(); ++i)
                if (w.poly.coeff(i) != binom_mod2(static_cast<std::uint64_t>(w.exponent), i))
                    return false;
            return true;
        });
    });
    add("w_1 coefficient k(n-k-1) is odd exactly when k and n are odd", [] {
        return all_flip_pairs(64, true, [](int n, int k) {
            const int w1 = binom_mod2(static_cast<std::uint64_t>(k) * (n - k - 1), 1);
            return (w1 == 1) == (k % 2 == 1 && n % 2 == 1);
        });
    });
    add("w(TFV_{5,2}) = 1 + x + x^2 + x^3", [] {
        const SWClass w = sw_total(FlipManifold(5, 1));
        return w.poly.cap() == 4 && w.w(0) == 1 && w.w(1) == 1 && w.w(2) == 1 && w.w(3) == 1;
    });

    struct RowFixture {
        int km, nm, w1, w2, dim_residue, dim_modulus;
        RowConclusion conclusion;
    };
    static const RowFixture table_fixture[16] = {
        {0, 0, 0, 0, 0, 2, RowConclusion::SpanEqStable},
        {0, 1, 0, 0, 0, 2, RowConclusion::SpanEqStable},
        {0, 2, 0, 0, 0, 2, RowConclusion::SpanEqStable},
        {0, 3, 0, 0, 0, 2, RowConclusion::SpanEqStable},
        {1, 0, 0, 1, 1, 4, RowConclusion::SpanEqStableKGt1NotPar},
        {1, 1, 1, 1, 1, 2, RowConclusion::NotParallelizable},
        {1, 2, 0, 0, 1, 4, RowConclusion::SpanEqStableKGt1},
        {1, 3, 1, 0, 3, 4, RowConclusion::NotParallelizable},
        {2, 0, 0, 1, 0, 2, RowConclusion::NotParAndSpanEqStable},
        {2, 1, 0, 0, 0, 2, RowConclusion::SpanEqStable},
        {2, 2, 0, 1, 0, 2, RowConclusion::NotParAndSpanEqStable},
        {2, 3, 0, 0, 0, 2, RowConclusion::SpanEqStable},
        {3, 0, 0, 0, 3, 8, RowConclusion::SpanEqStableKGt3},
        {3, 1, 1, 1, 1, 2, RowConclusion::NotParallelizable},
        {3, 2, 0, 1, 3, 4, RowConclusion::NotParallelizable},
        {3, 3, 1, 0, 1, 2, RowConclusion::NotParallelizable},
    };
    for (const RowFixture& fx : table_fixture) {
        add("residue row k=" + std::to_string(fx.km) + ", n=" + std::to_string(fx.nm) +
                " mod 4: w1=" + std::to_string(fx.w1) + " w2=" + std::to_string(fx.w2) + " dim=" +
                std::to_string(fx.dim_residue) + " mod " + std::to_string(fx.dim_modulus),
            [fx] {
                for (const ResidueRow& row : residue_table()) {
                    if (row.k_mod4 != fx.km || row.n_mod4 != fx.nm) continue;
                    return residue_row_matches(row, fx.w1, fx.w2, fx.dim_residue, fx.dim_modulus,
                                               fx.conclusion);
                }
                return false;
            });
    }

    add("worked instance FV_{12,10}: w1=0, w2=1, dim = 1 mod 4, not parallelizable", [] {
        const SpanReport r = classify(FlipManifold(12, 5));
        return r.w1 == 0 && r.w2 == 1 && r.dim_mod4 == 1 &&
               r.parallelizable == Parallelizable::No &&
               r.span_equals_stable_span == SpanStable::Yes;
    });

    // ---- non-parallelizability and span case lists -------------------------

    add("not parallelizable: k odd and n odd (generic instances, k<=19, n<=40)", [] {
        for (int km : {1, 3})
            for (int nm : {1, 3})
                if (!class_all_obstructed(km, nm)) return false;
        return true;
    });
    add("not parallelizable: k = 1 mod 4, n = 0 mod 4",
        [] { return class_all_obstructed(1, 0); });
    add("not parallelizable: k = 2 mod 4, n = 0 mod 4",
        [] { return class_all_obstructed(2, 0); });
    add("not parallelizable: k = 2 mod 4, n = 2 mod 4",
        [] { return class_all_obstructed(2, 2); });
    add("not parallelizable: k = 3 mod 4, n = 2 mod 4",
        [] { return class_all_obstructed(3, 2); });
    add("(w1,w2) rules out parallelizability exactly on the eight table classes", [] {
        const std::set<std::pair<int, int>> expected = {{1, 1}, {1, 3}, {3, 1}, {3, 3},
                                                        {1, 0}, {2, 0}, {2, 2}, {3, 2}};
        return w_forced_classes() == expected;
    });

    add("span = stable span for k = 0 mod 4", [] { return check_span_family(0, {0, 1, 2, 3}, 0); });
    add("span = stable span for k = 2 mod 4", [] { return check_span_family(2, {0, 1, 2, 3}, 0); });
    add("span = stable span for k = 1 mod 4, n = 0,2 mod 4, k > 1",
        [] { return check_span_family(1, {0, 2}, 1); });
    add("span = stable span for k = 3 mod 4, n = 0 mod 4, k > 3",
        [] { return check_span_family(3, {0}, 3); });
    add("span verdict Unknown outside the four families", [] {
        for (int k = 1; k <= 19; ++k)
            for (int n = 2 * k + 1; n <= 40; ++n) {
                const SpanReport r = classify(FlipManifold(n, k));
                if (r.special_case != SpecialCase::None) continue;
                const int km = k % 4, nm = n % 4;
                const bool in_family = km == 0 || km == 2 || (km == 1 && (nm == 0 || nm == 2) && k > 1) ||
                                       (km == 3 && nm == 0 && k > 3);
                if (!in_family && r.span_equals_stable_span != SpanStable::Unknown) return false;
            }
        return true;
    });

    add("FV_{n,n} parallelizable for n even (Lie-group quotient)", [] {
        for (int n = 2; n <= 40; n += 2) {
            const SpanReport r = classify(FlipManifold(n, n / 2));
            if (r.parallelizable != Parallelizable::Yes || r.special_case != SpecialCase::FullFrame)
                return false;
        }
        return true;
    });
    add("FV_{n,n-1} parallelizable for n odd (Lie-group quotient)", [] {
        for (int n = 3; n <= 39; n += 2) {
            const SpanReport r = classify(FlipManifold(n, (n - 1) / 2));
            if (r.parallelizable != Parallelizable::Yes || r.special_case != SpecialCase::CoRankOne)
                return false;
        }
        return true;
    });
    add("FV_{n,2} not parallelizable for n >= 4", [] {
        for (int n = 4; n <= 64; ++n)
            if (classify(FlipManifold(n, 1)).parallelizable != Parallelizable::No) return false;
        return true;
    });

    // ---- index ideals and obstructions -------------------------------------

    add("flip index exponent equals nf for all valid n <= 24", [] {
        return all_flip_pairs(24, false, [](int n, int k) {
            return index_exponent(C2Space::flip_stiefel(n, 2 * k)).exponent == nf(n, k);
        });
    });
    add("sphere index exponent is n (Borsuk-Ulam truncation)", [] {
        for (int n = 1; n <= 64; ++n)
            if (index_exponent(C2Space::antipodal_sphere(n)).exponent != n) return false;
        return true;
    });
    add("index anchors: sphere:7 -> (x^7), so:8 -> (x^8), so:7 -> (x^2)", [] {
        return index_exponent(C2Space::antipodal_sphere(7)).exponent == 7 &&
               index_exponent(C2Space::antipodal_so(8)).exponent == 8 &&
               index_exponent(C2Space::antipodal_so(7)).exponent == 2;
    });
    add("forbidden: flip:8,8 -> flip:4,4 with exponents 4 and 2", [] {
        const auto v = obstruct(C2Space::parse("flip:8,8"), C2Space::parse("flip:4,4"));
        return v.verdict == Verdict::Forbidden && v.source_exp == 4 && v.target_exp == 2;
    });
    add("forbidden family: flip frames 2^(r+1) -> 2^(s+1) on O-groups, r > s", [] {
        for (int r = 1; r <= 3; ++r) {
            const int k = 1 << r;  // k-1 = 2^r - 1: bits 0..r-1 set, bit r clear
            for (int s = 0; s < r; ++s) {
                for (int l = 1; l <= 1 << s; ++l) {
                    if ((l - 1) >> s) continue;  // need l - 1 < 2^s
                    const auto v =
                        obstruct(C2Space::flip_orthogonal(2 * k), C2Space::flip_orthogonal(2 * l));
                    if (v.source_exp != (1 << r)) return false;
                    if (v.target_exp > (1 << s)) return false;
                    if (v.verdict != Verdict::Forbidden) return false;
                }
            }
        }
        return true;
    });
    add("forbidden: antipodal SO(n) -> flip V_{n,2k} for n = 2^r", [] {
        for (int r = 2; r <= 5; ++r) {
            const int n = 1 << r;
            for (int k = 1; 2 * k <= n; ++k) {
                const auto v = obstruct(C2Space::antipodal_so(n), C2Space::flip_stiefel(n, 2 * k));
                if (v.verdict != Verdict::Forbidden || v.source_exp != n) return false;
            }
        }
        return true;
    });
    add("forbidden: flip SO(n) -> antipodal SO(n) for n = 2^r - 1, r > 2", [] {
        for (int r = 3; r <= 5; ++r) {
            const int n = (1 << r) - 1;
            const auto v = obstruct(C2Space::flip_stiefel(n, n - 1), C2Space::antipodal_so(n));
            if (v.verdict != Verdict::Forbidden || v.target_exp != 2 || v.source_exp <= 2)
                return false;
        }
        return true;
    });
    add("forbidden: antipodal sphere:7 -> flip:7,2k for all valid frames", [] {
        for (int frame : {2, 4, 6}) {
            const auto v = obstruct(C2Space::antipodal_sphere(7), C2Space::flip_stiefel(7, frame));
            if (v.verdict != Verdict::Forbidden || v.source_exp != 7) return false;
        }
        return true;
    });
    add("forbidden: antipodal sphere -> flip V_{n,2k} for n = 2^r - 1", [] {
        for (int r = 2; r <= 5; ++r) {
            const int n = (1 << r) - 1;
            for (int k = 1; 2 * k <= n; ++k) {
                const auto v =
                    obstruct(C2Space::antipodal_sphere(n), C2Space::flip_stiefel(n, 2 * k));
                if (v.verdict != Verdict::Forbidden) return false;
            }
        }
        return true;
    });
    add("possible: O(2k) -> O(2l) flip maps for k odd, l = 2 mod 4, k >= l", [] {
        for (int k = 1; k <= 19; k += 2)
            for (int l = 2; l <= k; l += 4) {
                const auto v =
                    obstruct(C2Space::flip_orthogonal(2 * k), C2Space::flip_orthogonal(2 * l));
                if (v.verdict != Verdict::Unknown || v.source_exp != 1 || v.target_exp != 2)
                    return false;
            }
        return true;
    });
    add("obstruction is antisymmetric: never forbidden in both directions", [] {
        std::vector<C2Space> spaces;
        for (int n = 2; n <= 10; ++n)
            for (int k = 1; 2 * k <= n; ++k) spaces.push_back(C2Space::flip_stiefel(n, 2 * k));
        for (int n = 2; n <= 10; ++n) spaces.push_back(C2Space::antipodal_so(n));
        for (int n = 2; n <= 10; ++n) spaces.push_back(C2Space::antipodal_sphere(n));
        for (const auto& a : spaces)
            for (const auto& b : spaces)
                if (obstruct(a, b).verdict == Verdict::Forbidden &&
                    obstruct(b, a).verdict == Verdict::Forbidden)
                    return false;
        return true;
    });
    add("obstruction never rules out the identity map", [] {
        for (int n = 2; n <= 12; ++n)
            for (int k = 1; 2 * k <= n; ++k) {
                const C2Space s = C2Space::flip_stiefel(n, 2 * k);
                if (obstruct(s, s).verdict != Verdict::Unknown) return false;
            }
        return true;
    });

    // ---- coincidence thresholds --------------------------------------------

    add("threshold(n,2) = n-2 for 2 <= n <= 100", [] {
        for (int n = 2; n <= 100; ++n)
            if (coincidence_threshold(n, 1) != n - 2) return false;
        return true;
    });
    add("threshold(n,4) = floor(n/2) - 2 for 4 <= n <= 100", [] {
        for (int n = 4; n <= 100; ++n)
            if (coincidence_threshold(n, 2) != n / 2 - 2) return false;
        return true;
    });
    add("threshold(n,6) = floor((n - r_n - 1)/3) for 7 <= n <= 100", [] {
        for (int n = 7; n <= 100; ++n)
            if (coincidence_threshold(n, 3) != (n - rn(n) - 1) / 3) return false;
        return true;
    });
    add("r_n = 5,5,4,3 by n mod 4 (1,2,0,3)", [] {
        for (int n = 7; n <= 100; ++n) {
            const int expect = (n % 4 == 1 || n % 4 == 2) ? 5 : (n % 4 == 0 ? 4 : 3);
            if (rn(n) != expect) return false;
        }
        return true;
    });
    add("k=3 threshold table row n = 1 mod 4: r=5, nf(n,6) = n-5", [] {
        for (int n = 9; n <= 100; n += 4)
            if (rn(n) != 5 || nf(n, 3) != n - 5 || 3 * coincidence_threshold(n, 3) > n - 6)
                return false;
        return true;
    });
    add("k=3 threshold table row n = 2 mod 4: r=5, nf(n,6) = n-5", [] {
        for (int n = 10; n <= 100; n += 4)
            if (rn(n) != 5 || nf(n, 3) != n - 5 || 3 * coincidence_threshold(n, 3) > n - 6)
                return false;
        return true;
    });
    add("k=3 threshold table row n = 0 mod 4: r=4, nf(n,6) = n-4", [] {
        for (int n = 8; n <= 100; n += 4)
            if (rn(n) != 4 || nf(n, 3) != n - 4 || 3 * coincidence_threshold(n, 3) > n - 5)
                return false;
        return true;
    });
    add("k=3 threshold table row n = 3 mod 4: r=3, nf(n,6) = n-3", [] {
        for (int n = 7; n <= 100; n += 4)
            if (rn(n) != 3 || nf(n, 3) != n - 3 || 3 * coincidence_threshold(n, 3) > n - 4)
                return false;
        return true;
    });
    add("k * threshold < nf <= k * (threshold + 1) for all valid n <= 100", [] {
        return all_flip_pairs(100, false, [](int n, int k) {
            const int t = coincidence_threshold(n, k);
            return k * t <= nf(n, k) - 1 && nf(n, k) - 1 < k * (t + 1);
        });
    });

    return checks;
}

}  // namespace flipstiefel
