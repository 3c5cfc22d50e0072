#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "flipstiefel/gf2.hpp"
#include "oracles.hpp"

using namespace flipstiefel;

TEST_CASE("binom_mod2 basics") {
    CHECK(binom_mod2(0, 0) == 1);
    CHECK(binom_mod2(5, 0) == 1);
    CHECK(binom_mod2(7, 3) == 1);   // 35 is odd
    CHECK(binom_mod2(10, 2) == 1);  // 45 is odd (Pascal row 10: 1 0 1 0 0 0 0 0 1 0 1)
    CHECK(binom_mod2(10, 3) == 0);  // 120 is even
    CHECK(binom_mod2(3, 5) == 0);   // b > a
}

TEST_CASE("binom_mod2 agrees with the Pascal recurrence up to 4096") {
    const oracles::PascalMod2 table(4096);
    for (std::size_t a = 0; a <= 4096; ++a)
        for (std::size_t b = 0; b <= a; ++b)
            if (binom_mod2(a, b) != table.binom(a, b)) {
                CAPTURE(a);
                CAPTURE(b);
                REQUIRE(binom_mod2(a, b) == table.binom(a, b));
            }
    CHECK(table.binom(10, 2) == 1);  // row 10 of the recurrence: 45 is odd
}

TEST_CASE("Vandermonde parity for a, b, c <= 64") {
    for (std::uint64_t a = 0; a <= 64; ++a)
        for (std::uint64_t b = 0; b <= 64; ++b)
            for (std::uint64_t c = 0; c <= 64; ++c) {
                int sum = 0;
                for (std::uint64_t j = 0; j <= c; ++j)
                    sum ^= binom_mod2(a, j) & binom_mod2(b, c - j);
                if (sum != binom_mod2(a + b, c)) {
                    CAPTURE(a);
                    CAPTURE(b);
                    CAPTURE(c);
                    REQUIRE(sum == binom_mod2(a + b, c));
                }
            }
}

TEST_CASE("neg_binom_mod2") {
    SUBCASE("k = 1 gives the all-ones series") {
        for (std::uint64_t r = 0; r <= 200; ++r) CHECK(neg_binom_mod2(1, r) == 1);
    }
    SUBCASE("spot values against the oracle") {
        const oracles::PascalMod2 table(600);
        CHECK(neg_binom_mod2(2, 3) == 0);  // C(4,3) = 4
        CHECK(neg_binom_mod2(4, 4) == 1);  // C(7,4) = 35
        for (std::uint64_t k = 1; k <= 12; ++k)
            for (std::uint64_t r = 0; r <= 40; ++r)
                CHECK(neg_binom_mod2(k, r) ==
                      table.binom(static_cast<std::size_t>(r + k - 1), static_cast<std::size_t>(r)));
    }
    SUBCASE("k = 0 rejected") { CHECK_THROWS_AS(neg_binom_mod2(0, 3), std::invalid_argument); }
}

TEST_CASE("Dyadic expansions") {
    CHECK(Dyadic::of(0).bits.empty());
    const Dyadic d = Dyadic::of(13);  // 1101
    CHECK(d.bits == std::vector<std::uint8_t>{1, 0, 1, 1});
    CHECK(d.value() == 13);
    CHECK(d.bit(0) == 1);
    CHECK(d.bit(1) == 0);
    CHECK(d.bit(17) == 0);
    for (std::uint64_t v = 0; v < 2000; ++v) {
        const Dyadic e = Dyadic::of(v);
        CHECK(e.value() == v);
        if (v != 0) CHECK(e.bits.back() == 1);  // no trailing zero digits
    }
}

TEST_CASE("TruncPoly2 construction and rendering") {
    CHECK_THROWS_AS(TruncPoly2(0), std::invalid_argument);
    const TruncPoly2 p = TruncPoly2::one_plus_x(4);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 1);
    CHECK(p.coeff(2) == 0);
    CHECK(p.coeff(99) == 0);
    CHECK(p.to_string() == "1 + x");
    CHECK(TruncPoly2::zero(3).to_string() == "0");
    CHECK(TruncPoly2::monomial(8, 5).to_string() == "x^5");
    CHECK(TruncPoly2::monomial(4, 9).is_zero());  // above the cap
}

TEST_CASE("poly_pow_trunc examples") {
    const TruncPoly2 p = poly_pow_trunc(TruncPoly2::one_plus_x(2), 3, 4);
    CHECK(p.to_string() == "1 + x + x^2 + x^3");

    const TruncPoly2 p0 = poly_pow_trunc(TruncPoly2::monomial(7, 3), 0, 7);
    CHECK(p0.is_one());

    // (1+x)^4 = 1 + x^4 dies entirely below cap 3 except the constant.
    const TruncPoly2 p4 = poly_pow_trunc(TruncPoly2::one_plus_x(3), 4, 3);
    CHECK(p4.is_one());
}

TEST_CASE("binomial rows from powers of 1+x, e <= 512") {
    const std::size_t cap = 520;
    for (std::uint64_t e = 0; e <= 512; e += 7) {
        const TruncPoly2 p = poly_pow_trunc(TruncPoly2::one_plus_x(2), e, cap);
        for (std::size_t i = 0; i < cap; ++i)
            if (p.coeff(i) != binom_mod2(e, i)) {
                CAPTURE(e);
                CAPTURE(i);
                REQUIRE(p.coeff(i) == binom_mod2(e, i));
            }
    }
}

namespace {

TruncPoly2 random_poly(std::size_t cap, std::mt19937_64& rng) {
    TruncPoly2 p(cap);
    std::bernoulli_distribution bit(0.4);
    for (std::size_t i = 0; i < cap; ++i)
        if (bit(rng)) p.set_coeff(i, 1);
    return p;
}

}  // namespace

TEST_CASE("TruncPoly2 ring laws (randomized)") {
    std::mt19937_64 rng(0xf1195717);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t cap = 1 + static_cast<std::size_t>(rng() % 130);
        const TruncPoly2 a = random_poly(cap, rng);
        const TruncPoly2 b = random_poly(cap, rng);
        const TruncPoly2 c = random_poly(cap, rng);

        CHECK((a + b) == (b + a));
        CHECK((a + a).is_zero());
        CHECK((a * b) == (b * a));
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK((a * TruncPoly2::one(cap)) == a);

        // x^cap = 0: multiplying by x cap times annihilates everything.
        TruncPoly2 shifted = a;
        const TruncPoly2 x = TruncPoly2::monomial(cap, 1);
        for (std::size_t i = 0; i < cap; ++i) shifted = shifted * x;
        CHECK(shifted.is_zero());
    }
}

TEST_CASE("TruncPoly2 inverse") {
    std::mt19937_64 rng(0x1e57);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t cap = 1 + static_cast<std::size_t>(rng() % 90);
        TruncPoly2 p = random_poly(cap, rng);
        p.set_coeff(0, 1);
        CHECK((p * p.inverse()).is_one());
    }
    CHECK_THROWS_AS(TruncPoly2::monomial(5, 1).inverse(), std::invalid_argument);
}
