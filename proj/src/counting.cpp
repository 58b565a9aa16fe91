#include "spiegel/counting.hpp"

#include <string>

namespace spiegel::counting {

namespace {

constexpr std::int64_t kEnumerateCap = 1'000'000;

std::int64_t mod_into_range(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

bool square_by_enumeration(std::int64_t x, std::int64_t m) {
    if (m > kEnumerateCap)
        throw EnumerationTooLarge("enumerate-mode square test capped at m <= 10^6, got " +
                                  std::to_string(m));
    const std::int64_t target = mod_into_range(x, m);
    for (std::int64_t t = 0; t < m; ++t) {
        if (static_cast<std::int64_t>((static_cast<__int128>(t) * t) % m) == target)
            return true;
    }
    return false;
}

// ua mod p via the residues of u and a; avoids forming the product u*a.
bool square_mod_primes(std::int64_t x, std::int64_t mult,
                       const arith::FactoredOddSquarefree& D, std::uint64_t mask) {
    for (int i = 0; i < D.omega(); ++i) {
        if (!(mask >> i & 1u))
            continue;
        std::int64_t p = D.primes[static_cast<std::size_t>(i)];
        if (arith::jacobi(x, p) * arith::jacobi(mult % p, p) != 1)
            return false;
    }
    return true;
}

} // namespace

bool is_square_mod(std::int64_t x, const arith::FactoredOddSquarefree& m,
                   SquareTestMode mode) {
    if (arith::gcd_abs(x, m.value) != 1)
        throw NotCoprime("is_square_mod(" + std::to_string(x) + ", " +
                         std::to_string(m.value) + "): arguments share a factor");
    if (mode == SquareTestMode::Enumerate)
        return square_by_enumeration(x, m.value);
    for (std::int64_t p : m.primes)
        if (arith::jacobi(x, p) != 1)
            return false;
    return true;
}

bool is_square_mod(std::int64_t x, std::int64_t m, SquareTestMode mode) {
    return is_square_mod(x, arith::factor_squarefree_odd(m), mode);
}

std::int64_t e_direct(const arith::FactoredOddSquarefree& D, std::int64_t u,
                      std::int64_t v, SquareTestMode mode) {
    if (arith::gcd_abs(u, D.value) != 1 || arith::gcd_abs(v, D.value) != 1)
        throw NotCoprime("e_direct: u, v must be coprime to D = " +
                         std::to_string(D.value));

    const std::uint64_t total = std::uint64_t{1} << D.omega();
    const std::uint64_t all = total - 1;
    std::int64_t count = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const std::int64_t a = arith::divisor_of_mask(D, mask);
        const std::int64_t b = D.value / a;
        bool ok;
        if (mode == SquareTestMode::Legendre) {
            ok = square_mod_primes(u, a, D, all & ~mask) && // ua mod b
                 square_mod_primes(v, b, D, mask);          // vb mod a
        } else {
            const auto mulmod = [](std::int64_t x, std::int64_t y, std::int64_t m) {
                return mod_into_range(
                    static_cast<std::int64_t>(static_cast<__int128>(x % m) * (y % m) % m), m);
            };
            ok = square_by_enumeration(mulmod(u, a, b), b) &&
                 square_by_enumeration(mulmod(v, b, a), a);
        }
        if (ok)
            ++count;
    }
    return count;
}

} // namespace spiegel::counting
