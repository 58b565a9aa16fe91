#include "spiegel/arith.hpp"

#include <string>

namespace spiegel::arith {

namespace {

std::uint64_t abs_u64(std::int64_t x) {
    return x < 0 ? ~static_cast<std::uint64_t>(x) + 1u : static_cast<std::uint64_t>(x);
}

} // namespace

std::uint64_t gcd_abs(std::int64_t a, std::int64_t b) {
    std::uint64_t x = abs_u64(a), y = abs_u64(b);
    while (y != 0) {
        x %= y;
        std::swap(x, y);
    }
    return x;
}

FactoredOddSquarefree factor_squarefree_odd(std::int64_t n) {
    if (n <= 0)
        throw NotOddSquarefree("not a positive integer: " + std::to_string(n));
    if (n % 2 == 0)
        throw NotOddSquarefree("even: " + std::to_string(n));

    FactoredOddSquarefree out;
    out.value = n;
    std::int64_t rem = n;
    for (std::int64_t p = 3; p <= rem / p; p += 2) {
        if (rem % p != 0)
            continue;
        rem /= p;
        if (rem % p == 0)
            throw NotOddSquarefree(std::to_string(p) + "^2 divides " + std::to_string(n));
        out.primes.push_back(p);
    }
    if (rem > 1)
        out.primes.push_back(rem);
    return out;
}

int jacobi(std::int64_t m, std::int64_t n) {
    if (n < 1 || n % 2 == 0)
        throw InvalidModulus("jacobi modulus must be odd and positive, got " +
                             std::to_string(n));
    // The symbol depends on m only through m mod n, which also absorbs the
    // supplementary (-1/n) factor for negative m.
    std::int64_t a = m % n;
    if (a < 0)
        a += n;

    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t r = n % 8;
            if (r == 3 || r == 5)
                result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

F2 beta(std::int64_t n) {
    if (n < 1 || n % 2 == 0)
        throw InvalidModulus("beta requires an odd positive argument, got " +
                             std::to_string(n));
    return F2(static_cast<unsigned>(((n - 1) / 2) & 1));
}

F2 beta_u(std::int64_t u, std::int64_t p) {
    int j = jacobi(u, p);
    if (j == 0)
        throw NotCoprime("beta_u(" + std::to_string(u) + ", " + std::to_string(p) +
                         "): arguments share a factor");
    return F2(j < 0 ? 1u : 0u);
}

F2 alpha(std::int64_t a, std::int64_t b) {
    if (a < 1 || a % 2 == 0)
        throw InvalidModulus("alpha requires odd positive arguments, got " +
                             std::to_string(a));
    int j = jacobi(a, b);
    if (j == 0)
        throw NotCoprime("alpha(" + std::to_string(a) + ", " + std::to_string(b) +
                         "): arguments share a factor");
    return F2(j < 0 ? 1u : 0u);
}

std::int64_t divisor_of_mask(const FactoredOddSquarefree& D, std::uint64_t mask) {
    std::int64_t a = 1;
    for (int i = 0; i < D.omega(); ++i)
        if (mask >> i & 1u)
            a *= D.primes[static_cast<std::size_t>(i)];
    return a;
}

std::vector<std::pair<std::int64_t, std::int64_t>>
divisor_pairs(const FactoredOddSquarefree& D) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    const std::uint64_t total = std::uint64_t{1} << D.omega();
    pairs.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::int64_t a = divisor_of_mask(D, mask);
        pairs.emplace_back(a, D.value / a);
    }
    return pairs;
}

} // namespace spiegel::arith
