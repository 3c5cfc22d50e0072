#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace flipstiefel {

/// Parity of the binomial coefficient C(a, b).
///
/// By Lucas' theorem C(a, b) is odd exactly when every binary digit of b
/// is also set in a, so the whole computation is one bitwise containment
/// test. b > a yields 0, matching the combinatorial convention.
inline int binom_mod2(std::uint64_t a, std::uint64_t b) noexcept {
    return (b & ~a) == 0 ? 1 : 0;
}

/// Parity of C(r+k-1, r): the coefficient of x^r in (1+x)^{-k} over GF(2).
/// Requires k >= 1.
int neg_binom_mod2(std::uint64_t k, std::uint64_t r);

/// Binary digits of a non-negative integer, least significant first.
/// A nonzero value never stores trailing zero digits, so the leading
/// (= last stored) digit of a nonzero value is 1.
struct Dyadic {
    std::vector<std::uint8_t> bits;

    static Dyadic of(std::uint64_t value);

    std::uint64_t value() const noexcept;

    /// Digit at position i (0 beyond the stored length).
    int bit(std::size_t i) const noexcept {
        return i < bits.size() ? bits[i] : 0;
    }

    std::size_t size() const noexcept { return bits.size(); }

    bool operator==(const Dyadic&) const = default;
};

/// Polynomial over GF(2) in one variable x, truncated at a fixed exponent:
/// x^cap = 0. Coefficients live in a packed bit-vector, so addition is a
/// word-wise XOR and multiplication a shift-and-XOR convolution that drops
/// everything of degree >= cap.
class TruncPoly2 {
public:
    explicit TruncPoly2(std::size_t cap);

    static TruncPoly2 zero(std::size_t cap) { return TruncPoly2(cap); }
    static TruncPoly2 one(std::size_t cap);
    static TruncPoly2 one_plus_x(std::size_t cap);
    static TruncPoly2 monomial(std::size_t cap, std::size_t degree);

    std::size_t cap() const noexcept { return cap_; }

    int coeff(std::size_t i) const noexcept;
    void set_coeff(std::size_t i, int value);

    TruncPoly2 operator+(const TruncPoly2& rhs) const;
    TruncPoly2 operator*(const TruncPoly2& rhs) const;
    bool operator==(const TruncPoly2& rhs) const = default;

    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Largest degree with a nonzero coefficient, or -1 for the zero poly.
    int degree() const noexcept;

    /// Multiplicative inverse in Z/2[x]/(x^cap); requires coeff(0) == 1.
    TruncPoly2 inverse() const;

    std::vector<std::size_t> support() const;

    /// "1 + x + x^3" style rendering; "0" for the zero polynomial.
    std::string to_string() const;

private:
    std::size_t cap_;
    std::vector<std::uint64_t> words_;

    void clear_tail() noexcept;
};

/// base^e in Z/2[x]/(x^cap) by square-and-multiply. The cap of the result
/// is `cap`, independent of the cap of `base`.
TruncPoly2 poly_pow_trunc(const TruncPoly2& base, std::uint64_t e, std::size_t cap);

}  // namespace flipstiefel
