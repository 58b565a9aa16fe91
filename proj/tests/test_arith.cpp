#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "spiegel/arith.hpp"

using namespace spiegel;
using namespace spiegel::arith;

namespace {

// Independent Legendre oracle: search x^2 = m (mod p) over all residues.
int legendre_by_search(std::int64_t m, std::int64_t p) {
    std::int64_t r = m % p;
    if (r < 0)
        r += p;
    if (r == 0)
        return 0;
    for (std::int64_t x = 0; x < p; ++x)
        if (x * x % p == r)
            return 1;
    return -1;
}

std::vector<std::int64_t> odd_primes_below(std::int64_t bound) {
    std::vector<std::int64_t> primes;
    for (std::int64_t n = 3; n < bound; n += 2) {
        bool prime = true;
        for (std::int64_t q = 3; q * q <= n; q += 2)
            if (n % q == 0) {
                prime = false;
                break;
            }
        if (prime)
            primes.push_back(n);
    }
    return primes;
}

} // namespace

TEST_CASE("factor_squarefree_odd on valid inputs") {
    auto one = factor_squarefree_odd(1);
    CHECK(one.value == 1);
    CHECK(one.omega() == 0);
    CHECK(one.primes.empty());

    auto f15 = factor_squarefree_odd(15);
    CHECK(f15.value == 15);
    CHECK(f15.primes == std::vector<std::int64_t>{3, 5});
    CHECK(f15.omega() == 2);

    auto f = factor_squarefree_odd(3 * 5 * 7 * 11 * 13);
    CHECK(f.primes == std::vector<std::int64_t>{3, 5, 7, 11, 13});

    auto big_prime = factor_squarefree_odd(1'000'003);
    CHECK(big_prime.primes == std::vector<std::int64_t>{1'000'003});
}

TEST_CASE("factor_squarefree_odd rejections") {
    CHECK_THROWS_AS(factor_squarefree_odd(9), NotOddSquarefree);
    CHECK_THROWS_AS(factor_squarefree_odd(45), NotOddSquarefree);
    CHECK_THROWS_AS(factor_squarefree_odd(0), NotOddSquarefree);
    CHECK_THROWS_AS(factor_squarefree_odd(-15), NotOddSquarefree);
    CHECK_THROWS_AS(factor_squarefree_odd(2), NotOddSquarefree);
    CHECK_THROWS_AS(factor_squarefree_odd(30), NotOddSquarefree);
    CHECK_THROWS_AS(factor_squarefree_odd(121), NotOddSquarefree);
}

TEST_CASE("jacobi pinned values") {
    CHECK(jacobi(5, 1) == 1);
    CHECK(jacobi(0, 1) == 1);
    CHECK(jacobi(-7, 1) == 1);
    CHECK(jacobi(-1, 5) == 1);
    CHECK(jacobi(-1, 3) == -1);
    CHECK(jacobi(2, 5) == -1);
    CHECK(jacobi(2, 7) == 1);
    CHECK(jacobi(3, 15) == 0);
    CHECK(jacobi(0, 5) == 0);

    CHECK_THROWS_AS(jacobi(1, 4), InvalidModulus);
    CHECK_THROWS_AS(jacobi(1, 0), InvalidModulus);
    CHECK_THROWS_AS(jacobi(1, -3), InvalidModulus);
}

TEST_CASE("jacobi agrees with the square-search oracle") {
    for (std::int64_t p : odd_primes_below(200))
        for (std::int64_t m = 1; m < p; ++m)
            CHECK(jacobi(m, p) == legendre_by_search(m, p));
}

TEST_CASE("jacobi is multiplicative in both arguments") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<std::int64_t> val(1, 1'000'000);
    for (int i = 0; i < 2000; ++i) {
        std::int64_t m1 = val(rng), m2 = val(rng);
        std::int64_t n1 = val(rng) | 1, n2 = val(rng) | 1;
        CHECK(jacobi(m1 * m2, n1) == jacobi(m1, n1) * jacobi(m2, n1));
        CHECK(jacobi(m1, n1 * n2) == jacobi(m1, n1) * jacobi(m1, n2));
    }
}

TEST_CASE("quadratic reciprocity in beta form") {
    std::mt19937_64 rng(987654);
    std::uniform_int_distribution<std::int64_t> val(1, 2'000'000);
    int tested = 0;
    while (tested < 2000) {
        std::int64_t m = val(rng) | 1, n = val(rng) | 1;
        if (gcd_abs(m, n) != 1)
            continue;
        ++tested;
        int expected = (beta(m).bit & beta(n).bit) ? -1 : 1;
        CHECK(jacobi(m, n) * jacobi(n, m) == expected);
    }
}

TEST_CASE("beta values and additivity") {
    CHECK(beta(1) == F2(0));
    CHECK(beta(3) == F2(1));
    CHECK(beta(5) == F2(0));
    CHECK(beta(7) == F2(1));
    CHECK_THROWS_AS(beta(4), InvalidModulus);
    CHECK_THROWS_AS(beta(-3), InvalidModulus);

    std::mt19937_64 rng(777);
    std::uniform_int_distribution<std::int64_t> val(1, 1'000'000);
    int tested = 0;
    while (tested < 1000) {
        std::int64_t m = val(rng) | 1, n = val(rng) | 1;
        if (gcd_abs(m, n) != 1)
            continue;
        ++tested;
        CHECK(beta(m) + beta(n) == beta(m * n));
    }
}

TEST_CASE("the sign identity behind the averaging argument") {
    // 2*(-1)^(xy+yz+zx) = (-1)^x + (-1)^y + (-1)^z - (-1)^(x+y+z), exhaustively.
    for (int x = 0; x <= 1; ++x)
        for (int y = 0; y <= 1; ++y)
            for (int z = 0; z <= 1; ++z) {
                int lhs = 2 * ((x * y + y * z + z * x) % 2 ? -1 : 1);
                auto sgn = [](int e) { return e % 2 ? -1 : 1; };
                int rhs = sgn(x) + sgn(y) + sgn(z) - sgn(x + y + z);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("beta_u pinned values and errors") {
    for (std::int64_t p : {3, 5, 7, 11, 13})
        CHECK(beta_u(1, p) == F2(0));
    CHECK(beta_u(2, 7) == F2(0));
    CHECK(beta_u(-2, 5) == F2(1));
    CHECK(beta_u(2, 5) == F2(1));
    CHECK(beta_u(-1, 5) == F2(0));
    CHECK_THROWS_AS(beta_u(10, 5), NotCoprime);
    CHECK_THROWS_AS(beta_u(0, 5), NotCoprime);
}

TEST_CASE("alpha pinned values and errors") {
    CHECK(alpha(1, 7) == F2(0));
    CHECK(alpha(3, 5) == F2(1));
    CHECK(alpha(5, 3) == F2(1));
    CHECK(alpha(3, 7) == F2(1));
    CHECK(alpha(7, 3) == F2(0));
    CHECK_THROWS_AS(alpha(3, 15), NotCoprime);
    CHECK_THROWS_AS(alpha(4, 15), InvalidModulus);
    CHECK_THROWS_AS(alpha(3, 8), InvalidModulus);
}

TEST_CASE("alpha matches the sign of jacobi") {
    std::mt19937_64 rng(13579);
    std::uniform_int_distribution<std::int64_t> val(1, 100000);
    int tested = 0;
    while (tested < 1000) {
        std::int64_t a = val(rng) | 1, b = val(rng) | 1;
        if (gcd_abs(a, b) != 1)
            continue;
        ++tested;
        CHECK(jacobi(a, b) == alpha(a, b).sign());
    }
}

TEST_CASE("divisor_pairs enumeration order and contents") {
    auto d1 = factor_squarefree_odd(1);
    CHECK(divisor_pairs(d1) ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 1}});

    auto d15 = factor_squarefree_odd(15);
    CHECK(divisor_pairs(d15) == std::vector<std::pair<std::int64_t, std::int64_t>>{
                                    {1, 15}, {3, 5}, {5, 3}, {15, 1}});

    auto d105 = factor_squarefree_odd(105);
    auto pairs = divisor_pairs(d105);
    CHECK(pairs.size() == 8);
    std::set<std::int64_t> seen;
    for (auto [a, b] : pairs) {
        CHECK(a * b == 105);
        seen.insert(a);
    }
    CHECK(seen.size() == 8);
}

TEST_CASE("F2 arithmetic") {
    CHECK(F2(1) + F2(1) == F2(0));
    CHECK(F2(0) + F2(1) == F2(1));
    CHECK(F2(0) + F2(0) == F2(0));
    CHECK(F2(1).sign() == -1);
    CHECK(F2(0).sign() == 1);
}
