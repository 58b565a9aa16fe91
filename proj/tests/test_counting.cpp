#include <doctest.h>

#include <random>

#include "spiegel/counting.hpp"

using namespace spiegel;
using namespace spiegel::counting;
using arith::factor_squarefree_odd;

TEST_CASE("is_square_mod pinned values") {
    for (std::int64_t x : {1, 2, -7, 1000})
        CHECK(is_square_mod(x, 1));

    CHECK_FALSE(is_square_mod(2, 5));
    CHECK(is_square_mod(-1, 5));
    CHECK(is_square_mod(4, 5));
    CHECK(is_square_mod(2, 7));
    CHECK_FALSE(is_square_mod(-1, 7));

    CHECK_THROWS_AS(is_square_mod(10, 15), NotCoprime);
    CHECK_THROWS_AS(is_square_mod(2, 9), NotOddSquarefree);
}

TEST_CASE("enumerate mode agrees with legendre mode") {
    std::mt19937_64 rng(424242);
    for (std::int64_t m = 1; m <= 1001; m += 2) {
        arith::FactoredOddSquarefree f;
        try {
            f = factor_squarefree_odd(m);
        } catch (const NotOddSquarefree&) {
            continue;
        }
        std::uniform_int_distribution<std::int64_t> val(-3 * m, 3 * m);
        int tested = 0;
        while (tested < 8) {
            std::int64_t x = val(rng);
            if (arith::gcd_abs(x, m) != 1)
                continue;
            ++tested;
            CHECK(is_square_mod(x, f, SquareTestMode::Enumerate) ==
                  is_square_mod(x, f, SquareTestMode::Legendre));
        }
    }
}

TEST_CASE("enumerate mode refuses large moduli") {
    // 1000001 = 101 * 9901 is odd and squarefree but above the scan cap.
    CHECK_THROWS_AS(is_square_mod(2, 1'000'001, SquareTestMode::Enumerate),
                    EnumerationTooLarge);
    CHECK_NOTHROW(is_square_mod(2, 1'000'001, SquareTestMode::Legendre));
}

TEST_CASE("e_direct pinned values") {
    auto d1 = factor_squarefree_odd(1);
    CHECK(e_direct(d1, 1, 1) == 1);
    CHECK(e_direct(d1, -2, 7) == 1);

    auto d5 = factor_squarefree_odd(5);
    CHECK(e_direct(d5, 1, 1) == 2);
    CHECK(e_direct(d5, 2, 2) == 0);
    CHECK(e_direct(d5, 2, 1) == 1);
    CHECK(e_direct(d5, -1, 1) == 2);
    CHECK(e_direct(d5, -2, 1) == 1);
    CHECK(e_direct(d5, -1, 2) == 1);

    CHECK_THROWS_AS(e_direct(d5, 5, 1), NotCoprime);
    CHECK_THROWS_AS(e_direct(d5, 1, 10), NotCoprime);
}

TEST_CASE("e_direct is symmetric in u and v") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<std::int64_t> dpick(1, 2000);
    std::uniform_int_distribution<std::int64_t> upick(-20, 20);
    int tested = 0;
    while (tested < 300) {
        arith::FactoredOddSquarefree D;
        try {
            D = factor_squarefree_odd(dpick(rng) | 1);
        } catch (const NotOddSquarefree&) {
            continue;
        }
        std::int64_t u = upick(rng), v = upick(rng);
        if (u == 0 || v == 0 || arith::gcd_abs(u, D.value) != 1 ||
            arith::gcd_abs(v, D.value) != 1)
            continue;
        ++tested;
        CHECK(e_direct(D, u, v) == e_direct(D, v, u));
    }
}

TEST_CASE("the pairs (D,1) and (1,D) force lower bounds") {
    for (std::int64_t n = 1; n <= 501; n += 2) {
        arith::FactoredOddSquarefree D;
        try {
            D = factor_squarefree_odd(n);
        } catch (const NotOddSquarefree&) {
            continue;
        }
        CHECK(e_direct(D, 1, 1) >= 1);
        CHECK(e_direct(D, -1, 1) >= 1);
    }
}

TEST_CASE("e_direct depends on u only through its residues") {
    auto d105 = factor_squarefree_odd(105);
    for (std::int64_t u : {-2, -1, 1, 2})
        for (std::int64_t k : {1, 2, 5}) {
            CHECK(e_direct(d105, u, 1) == e_direct(d105, u + 2 * 105 * k, 1));
            CHECK(e_direct(d105, 1, u) == e_direct(d105, 1, u - 2 * 105 * k));
        }
}

TEST_CASE("square-test modes give identical counts across a range") {
    // The central independence check for the direct counter: both square
    // tests yield the same E_D(u,v) everywhere they are defined.
    for (std::int64_t n = 1; n <= 3000; n += 2) {
        arith::FactoredOddSquarefree D;
        try {
            D = factor_squarefree_odd(n);
        } catch (const NotOddSquarefree&) {
            continue;
        }
        for (std::int64_t u : {-2, -1, 1, 2})
            for (std::int64_t v : {-2, -1, 1, 2})
                CHECK(e_direct(D, u, v, SquareTestMode::Legendre) ==
                      e_direct(D, u, v, SquareTestMode::Enumerate));
    }
}
