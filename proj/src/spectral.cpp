#include "flipstiefel/spectral.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace flipstiefel {

namespace {

void require_proper_range(int n, int k, const char* who) {
    if (k < 1 || 2 * k >= n)
        throw std::invalid_argument(std::string(who) + ": requires 1 <= k and 2k < n, got n=" +
                                    std::to_string(n) + " k=" + std::to_string(k));
}

constexpr std::size_t kWordBits = 64;

}  // namespace

int TransgressionTable::first_odd() const {
    for (int j = j_min(); j <= j_max(); ++j)
        if (c(j)) return j;
    throw std::logic_error("TransgressionTable: no odd coefficient");
}

TransgressionTable transgression_table(int n, int k) {
    require_proper_range(n, k, "transgression_table");
    TransgressionTable tt{n, k, {}};
    tt.coeffs.reserve(static_cast<std::size_t>(2 * k));
    for (int j = tt.j_min(); j <= tt.j_max(); ++j)
        tt.coeffs.push_back(
            static_cast<std::uint8_t>(binom_mod2(static_cast<std::uint64_t>(k) + j - 1, j)));
    return tt;
}

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + kWordBits - 1) / kWordBits) {
    if (words_per_row_ == 0) words_per_row_ = 1;
    bits_.assign(rows_ * words_per_row_, 0);
}

void GF2Matrix::set(std::size_t r, std::size_t c) noexcept {
    bits_[r * words_per_row_ + c / kWordBits] ^= std::uint64_t{1} << (c % kWordBits);
}

int GF2Matrix::get(std::size_t r, std::size_t c) const noexcept {
    return static_cast<int>((bits_[r * words_per_row_ + c / kWordBits] >> (c % kWordBits)) & 1u);
}

std::size_t GF2Matrix::rank() const {
    std::vector<std::uint64_t> work = bits_;
    const std::size_t wpr = words_per_row_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        const std::size_t word = col / kWordBits;
        const std::uint64_t mask = std::uint64_t{1} << (col % kWordBits);
        std::size_t pivot = rows_;
        for (std::size_t r = rank; r < rows_; ++r) {
            if (work[r * wpr + word] & mask) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows_) continue;
        if (pivot != rank)
            std::swap_ranges(work.begin() + pivot * wpr, work.begin() + (pivot + 1) * wpr,
                             work.begin() + rank * wpr);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r != rank && (work[r * wpr + word] & mask)) {
                for (std::size_t w = word; w < wpr; ++w) work[r * wpr + w] ^= work[rank * wpr + w];
            }
        }
        ++rank;
    }
    return rank;
}

GF2Matrix GF2Matrix::times(const GF2Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("GF2Matrix::times: shape mismatch");
    GF2Matrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t m = 0; m < cols_; ++m) {
            if (!get(r, m)) continue;
            for (std::size_t w = 0; w < rhs.words_per_row_; ++w)
                out.bits_[r * out.words_per_row_ + w] ^= rhs.bits_[m * rhs.words_per_row_ + w];
        }
    }
    return out;
}

bool GF2Matrix::is_zero() const noexcept {
    for (std::uint64_t w : bits_)
        if (w != 0) return false;
    return true;
}

KoszulComplex::KoszulComplex(int n, int k) : n_(n), k_(k) {
    require_proper_range(n, k, "KoszulComplex");
    if (2 * k > 24) throw std::invalid_argument("KoszulComplex: frame too large for desk scale");
    max_degree_ = FlipManifold(n, k).dimension();

    const int gens = 2 * k;
    const std::uint32_t num_masks = std::uint32_t{1} << gens;
    std::vector<int> degsum(num_masks, 0);
    for (std::uint32_t mask = 1; mask < num_masks; ++mask) {
        const int low = std::countr_zero(mask);
        degsum[mask] = degsum[mask & (mask - 1)] + generator_degree(low);
    }

    const std::size_t levels = static_cast<std::size_t>(max_degree_) + 2;
    bases_.resize(levels);
    by_mask_.assign(levels, std::vector<std::int32_t>(num_masks, -1));

    // Masks in lexicographic order of their sorted index lists; ties cannot
    // occur. Comparing the bit-reversed values would also work, but the
    // explicit comparator keeps the ordering contract readable.
    std::vector<std::uint32_t> mask_order(num_masks);
    for (std::uint32_t m = 0; m < num_masks; ++m) mask_order[m] = m;
    std::sort(mask_order.begin(), mask_order.end(), [](std::uint32_t a, std::uint32_t b) {
        std::uint32_t x = a, y = b;
        while (x != 0 && y != 0) {
            const int ix = std::countr_zero(x), iy = std::countr_zero(y);
            if (ix != iy) return ix < iy;
            x &= x - 1;
            y &= y - 1;
        }
        return x == 0 && y != 0;  // shorter list first
    });

    for (std::size_t t = 0; t < levels; ++t) {
        auto& level = bases_[t];
        for (std::uint32_t mask : mask_order) {
            const int a = static_cast<int>(t) - degsum[mask];
            if (a < 0) continue;
            level.push_back(Monomial{a, mask});
        }
        // Lexicographic on (x_exp, index list): stable sort by exponent
        // preserves the mask order within each exponent.
        std::stable_sort(level.begin(), level.end(),
                         [](const Monomial& p, const Monomial& q) { return p.x_exp < q.x_exp; });
        for (std::size_t i = 0; i < level.size(); ++i)
            by_mask_[t][level[i].gens] = static_cast<std::int32_t>(i);
    }
}

const std::vector<KoszulComplex::Monomial>& KoszulComplex::basis(int t) const {
    return bases_.at(static_cast<std::size_t>(t));
}

int KoszulComplex::index_of(int t, int x_exp, std::uint32_t gens) const {
    const auto& lut = by_mask_.at(static_cast<std::size_t>(t));
    if (gens >= lut.size()) return -1;
    const std::int32_t idx = lut[gens];
    if (idx < 0) return -1;
    return bases_[static_cast<std::size_t>(t)][static_cast<std::size_t>(idx)].x_exp == x_exp
               ? idx
               : -1;
}

GF2Matrix differential_matrix(const KoszulComplex& c, const TransgressionTable& tt, int t) {
    if (t < 0 || t > c.max_degree())
        throw std::invalid_argument("differential_matrix: degree out of range");
    const auto& domain = c.basis(t);
    const auto& codomain = c.basis(t + 1);
    GF2Matrix m(domain.size(), codomain.size());
    for (std::size_t row = 0; row < domain.size(); ++row) {
        const auto& mono = domain[row];
        std::uint32_t rest = mono.gens;
        while (rest != 0) {
            const int idx = std::countr_zero(rest);
            rest &= rest - 1;
            const int j = c.generator_degree(idx) + 1;  // z_{j-1} |-> c_j x^j
            if (!tt.c(j)) continue;
            const int col = c.index_of(t + 1, mono.x_exp + j, mono.gens & ~(std::uint32_t{1} << idx));
            if (col < 0) throw std::logic_error("differential_matrix: image monomial missing");
            m.set(row, static_cast<std::size_t>(col));
        }
    }
    return m;
}

namespace {

GradedDims e_infinity_impl(int n, int k, bool parallel) {
    const KoszulComplex complex(n, k);
    const TransgressionTable tt = transgression_table(n, k);
    const int top = static_cast<int>(complex.max_degree());

    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 1, 0);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int t = 0; t <= top; ++t)
        ranks[static_cast<std::size_t>(t)] = differential_matrix(complex, tt, t).rank();

    GradedDims out;
    out.dims.resize(static_cast<std::size_t>(top) + 1, 0);
    for (int t = 0; t <= top; ++t) {
        const long long kernel =
            static_cast<long long>(complex.basis(t).size()) - static_cast<long long>(ranks[t]);
        const long long boundaries = t > 0 ? static_cast<long long>(ranks[t - 1]) : 0;
        out.dims[static_cast<std::size_t>(t)] = kernel - boundaries;
    }
    return out;
}

}  // namespace

GradedDims e_infinity_dims(int n, int k) { return e_infinity_impl(n, k, true); }

GradedDims e_infinity_dims_serial(int n, int k) { return e_infinity_impl(n, k, false); }

bool crosscheck(int n, int k) {
    const GradedDims spectral = e_infinity_dims(n, k);
    const GradedDims closed = betti(presentation(FlipManifold(n, k)));
    const std::size_t len = std::max(spectral.dims.size(), closed.dims.size());
    for (std::size_t t = 0; t < len; ++t)
        if (spectral.dim(t) != closed.dim(t)) return false;
    return true;
}

}  // namespace flipstiefel
