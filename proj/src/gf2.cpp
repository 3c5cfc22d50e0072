#include "flipstiefel/gf2.hpp"

#include <stdexcept>

namespace flipstiefel {

int neg_binom_mod2(std::uint64_t k, std::uint64_t r) {
    if (k == 0) throw std::invalid_argument("neg_binom_mod2: k must be >= 1");
    return binom_mod2(r + k - 1, r);
}

Dyadic Dyadic::of(std::uint64_t value) {
    Dyadic d;
    while (value != 0) {
        d.bits.push_back(static_cast<std::uint8_t>(value & 1));
        value >>= 1;
    }
    return d;
}

std::uint64_t Dyadic::value() const noexcept {
    std::uint64_t v = 0;
    for (std::size_t i = bits.size(); i-- > 0;) v = (v << 1) | bits[i];
    return v;
}

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t cap) { return (cap + kWordBits - 1) / kWordBits; }
}  // namespace

TruncPoly2::TruncPoly2(std::size_t cap) : cap_(cap), words_(words_for(cap), 0) {
    if (cap == 0) throw std::invalid_argument("TruncPoly2: cap must be positive");
}

TruncPoly2 TruncPoly2::one(std::size_t cap) {
    TruncPoly2 p(cap);
    p.words_[0] = 1;
    return p;
}

TruncPoly2 TruncPoly2::one_plus_x(std::size_t cap) {
    TruncPoly2 p = one(cap);
    if (cap > 1) p.set_coeff(1, 1);
    return p;
}

TruncPoly2 TruncPoly2::monomial(std::size_t cap, std::size_t degree) {
    TruncPoly2 p(cap);
    if (degree < cap) p.set_coeff(degree, 1);
    return p;
}

int TruncPoly2::coeff(std::size_t i) const noexcept {
    if (i >= cap_) return 0;
    return static_cast<int>((words_[i / kWordBits] >> (i % kWordBits)) & 1u);
}

void TruncPoly2::set_coeff(std::size_t i, int value) {
    if (i >= cap_) return;  // x^i = 0 past the cap
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value & 1)
        words_[i / kWordBits] |= mask;
    else
        words_[i / kWordBits] &= ~mask;
}

void TruncPoly2::clear_tail() noexcept {
    const std::size_t rem = cap_ % kWordBits;
    if (rem != 0) words_.back() &= (std::uint64_t{1} << rem) - 1;
}

TruncPoly2 TruncPoly2::operator+(const TruncPoly2& rhs) const {
    if (cap_ != rhs.cap_) throw std::invalid_argument("TruncPoly2: cap mismatch in +");
    TruncPoly2 out(cap_);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] ^ rhs.words_[w];
    return out;
}

TruncPoly2 TruncPoly2::operator*(const TruncPoly2& rhs) const {
    if (cap_ != rhs.cap_) throw std::invalid_argument("TruncPoly2: cap mismatch in *");
    TruncPoly2 out(cap_);
    for (std::size_t i = 0; i < cap_; ++i) {
        if (!coeff(i)) continue;
        // out += rhs << i, truncated at cap
        const std::size_t word_shift = i / kWordBits;
        const std::size_t bit_shift = i % kWordBits;
        for (std::size_t w = 0; w + word_shift < out.words_.size(); ++w) {
            std::uint64_t chunk = rhs.words_[w] << bit_shift;
            if (bit_shift != 0 && w > 0) chunk |= rhs.words_[w - 1] >> (kWordBits - bit_shift);
            out.words_[w + word_shift] ^= chunk;
        }
    }
    out.clear_tail();
    return out;
}

bool TruncPoly2::is_zero() const noexcept {
    for (std::uint64_t w : words_)
        if (w != 0) return false;
    return true;
}

bool TruncPoly2::is_one() const noexcept {
    if (words_[0] != 1) return false;
    for (std::size_t w = 1; w < words_.size(); ++w)
        if (words_[w] != 0) return false;
    return true;
}

int TruncPoly2::degree() const noexcept {
    for (std::size_t i = cap_; i-- > 0;)
        if (coeff(i)) return static_cast<int>(i);
    return -1;
}

TruncPoly2 TruncPoly2::inverse() const {
    if (!coeff(0)) throw std::invalid_argument("TruncPoly2::inverse: constant term must be 1");
    // Solve p*q = 1 coefficient by coefficient; over GF(2) the i-th
    // coefficient of p*q is fixed by flipping q's x^i term.
    TruncPoly2 q = one(cap_);
    TruncPoly2 prod = *this;  // p * q so far
    for (std::size_t i = 1; i < cap_; ++i) {
        if (!prod.coeff(i)) continue;
        q.set_coeff(i, 1);
        prod = prod + (*this * monomial(cap_, i));
    }
    return q;
}

std::vector<std::size_t> TruncPoly2::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < cap_; ++i)
        if (coeff(i)) s.push_back(i);
    return s;
}

std::string TruncPoly2::to_string() const {
    const auto s = support();
    if (s.empty()) return "0";
    std::string out;
    for (std::size_t idx = 0; idx < s.size(); ++idx) {
        if (idx) out += " + ";
        if (s[idx] == 0)
            out += "1";
        else if (s[idx] == 1)
            out += "x";
        else
            out += "x^" + std::to_string(s[idx]);
    }
    return out;
}

TruncPoly2 poly_pow_trunc(const TruncPoly2& base, std::uint64_t e, std::size_t cap) {
    TruncPoly2 b(cap);
    for (std::size_t i = 0; i < std::min(cap, base.cap()); ++i) b.set_coeff(i, base.coeff(i));
    TruncPoly2 acc = TruncPoly2::one(cap);
    while (e != 0) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

}  // namespace flipstiefel
