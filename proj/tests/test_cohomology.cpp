#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flipstiefel/cohomology.hpp"
#include "oracles.hpp"

using namespace flipstiefel;

TEST_CASE("FlipManifold validity and dimension") {
    CHECK_THROWS_AS(FlipManifold(3, 2), std::invalid_argument);   // 2k > n
    CHECK_THROWS_AS(FlipManifold(5, 0), std::invalid_argument);   // 2k < 2
    CHECK_THROWS_AS(FlipManifold::from_frame(7, 3), std::invalid_argument);  // odd frame
    CHECK(FlipManifold(5, 1).dimension() == 7);
    CHECK(FlipManifold(6, 2).dimension() == 14);
    CHECK(FlipManifold::from_frame(10, 4).k == 2);
}

TEST_CASE("nf anchor values") {
    CHECK(nf(10, 1) == 9);
    CHECK(nf(9, 2) == 6);
    CHECK(nf(12, 3) == 8);
    CHECK(nf(6, 3) == 1);
    CHECK(nf(8, 4) == 4);
    CHECK_THROWS_AS(nf(4, 3), std::invalid_argument);
}

TEST_CASE("np anchor values") {
    CHECK(np(7, 1) == 7);
    CHECK(np(8, 7) == 8);
    CHECK(np(7, 6) == 2);
    CHECK_THROWS_AS(np(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(np(3, 4), std::invalid_argument);
}

TEST_CASE("nf and np agree with the brute-force oracle scans") {
    const oracles::PascalMod2 table(130);
    for (int n = 2; n <= 64; ++n)
        for (int k = 1; 2 * k <= n; ++k) CHECK(nf(n, k) == oracles::brute_nf(table, n, k));
    for (int n = 1; n <= 64; ++n)
        for (int k = 1; k <= n; ++k) CHECK(np(n, k) == oracles::brute_np(table, n, k));
}

TEST_CASE("nf range bounds") {
    for (int n = 2; n <= 64; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            const int v = nf(n, k);
            CHECK(v > n - 2 * k);
            CHECK(v <= n - 1);  // never reaches n
        }
}

TEST_CASE("nf monotone chains in k") {
    for (int n = 4; n <= 64; ++n) {
        const int k_top = (n % 2 == 0) ? n / 2 : (n - 1) / 2;
        for (int k = 1; k < k_top; ++k) CHECK(nf(n, k) >= nf(n, k + 1));
    }
}

TEST_CASE("presentation") {
    SUBCASE("FV_{5,2}") {
        const auto p = presentation(FlipManifold(5, 1));
        CHECK(p.truncation == 4);
        CHECK(p.generator_degrees == std::vector<int>{4});
    }
    SUBCASE("FV_{6,4}") {
        const auto p = presentation(FlipManifold(6, 2));
        CHECK(p.truncation == 4);
        CHECK(p.generator_degrees == std::vector<int>{2, 4, 5});
    }
    SUBCASE("FV_{7,2}") {
        const auto p = presentation(FlipManifold(7, 1));
        CHECK(p.truncation == 6);
        CHECK(p.generator_degrees == std::vector<int>{6});
    }
    SUBCASE("square case rejected") {
        CHECK_THROWS_AS(presentation(FlipManifold(6, 3)), std::invalid_argument);
    }
    SUBCASE("structure for all 2k < n <= 20") {
        for (int n = 3; n <= 20; ++n)
            for (int k = 1; 2 * k < n; ++k) {
                const auto p = presentation(FlipManifold(n, k));
                CHECK(static_cast<int>(p.generator_degrees.size()) == 2 * k - 1);
                for (int d : p.generator_degrees) CHECK(d != p.truncation - 1);
                CHECK(p.generator_degrees.front() >= n - 2 * k);
                CHECK(p.generator_degrees.back() <= n - 1);
            }
    }
}

TEST_CASE("betti examples") {
    SUBCASE("FV_{5,2} is a (1,1,...,1) ladder") {
        const GradedDims g = betti(presentation(FlipManifold(5, 1)));
        CHECK(g.dims == std::vector<long long>{1, 1, 1, 1, 1, 1, 1, 1});
    }
    SUBCASE("degree zero is 1, totals multiply out") {
        for (int n = 3; n <= 14; ++n)
            for (int k = 1; 2 * k < n; ++k) {
                const auto p = presentation(FlipManifold(n, k));
                const GradedDims g = betti(p);
                CHECK(g.dim(0) == 1);
                CHECK(g.total() == p.truncation * (1LL << (2 * k - 1)));
            }
        CHECK(betti(presentation(FlipManifold(6, 2))).total() == 32);
    }
}

TEST_CASE("betti suite: symmetry, top degree, euler characteristic") {
    for (int n = 3; n <= 14; ++n)
        for (int k = 1; 2 * k < n; ++k) {
            const FlipManifold m(n, k);
            const GradedDims g = betti(presentation(m));
            const long long dim = m.dimension();
            CHECK(g.top_degree() == dim);
            for (long long t = 0; t <= dim; ++t)
                CHECK(g.dim(static_cast<std::size_t>(t)) ==
                      g.dim(static_cast<std::size_t>(dim - t)));
            CHECK(euler_characteristic(g) == 0);
        }
}

TEST_CASE("euler characteristic baseline") {
    CHECK(euler_characteristic(GradedDims{{1}}) == 1);  // a point
    CHECK(euler_characteristic(GradedDims{{1, 0, 1}}) == 2);
}

TEST_CASE("digit-pattern family: nf = 2^r when n = 2k + 2^r - 1") {
    for (int r = 1; r <= 5; ++r)
        for (int k = 1; k <= 32; ++k) {
            if ((k - 1) & (1 << r)) continue;
            const int n = 2 * k + (1 << r) - 1;
            CHECK(nf(n, k) == (1 << r));
        }
}
