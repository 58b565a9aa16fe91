#ifndef SPIEGEL_ARITH_HPP
#define SPIEGEL_ARITH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "spiegel/errors.hpp"

namespace spiegel::arith {

/// An element of the two-element field, with addition mod 2.
struct F2 {
    unsigned bit = 0;

    constexpr F2() = default;
    constexpr explicit F2(unsigned b) : bit(b & 1u) {}

    constexpr F2 operator+(F2 o) const { return F2(bit ^ o.bit); }
    constexpr F2& operator+=(F2 o) {
        bit ^= o.bit;
        return *this;
    }
    constexpr bool operator==(const F2&) const = default;

    /// (-1)^bit as an ordinary integer sign.
    constexpr int sign() const { return bit ? -1 : 1; }
};

/// A positive odd squarefree integer together with its sorted prime
/// factorization. Only factor_squarefree_odd() builds these, so the
/// invariants (product of distinct odd primes, primes ascending) hold
/// by construction.
struct FactoredOddSquarefree {
    std::int64_t value = 1;
    std::vector<std::int64_t> primes;

    int omega() const { return static_cast<int>(primes.size()); }
};

/// Factor n by trial division. Throws NotOddSquarefree unless n is a
/// positive odd squarefree integer.
FactoredOddSquarefree factor_squarefree_odd(std::int64_t n);

/// Jacobi symbol (m/n) for odd n >= 1 and any integer m.
/// Returns 0 iff gcd(m, n) > 1; (m/1) = 1 for every m.
int jacobi(std::int64_t m, std::int64_t n);

/// beta(n) in F2 with (-1/n) = (-1)^beta(n), i.e. ((n-1)/2) mod 2.
F2 beta(std::int64_t n);

/// beta_u(p) in F2 with (u/p) = (-1)^beta_u(p). Requires gcd(u, p) = 1.
F2 beta_u(std::int64_t u, std::int64_t p);

/// alpha(a, b) in F2 with (a/b) = (-1)^alpha(a,b) for odd coprime
/// positive a, b.
F2 alpha(std::int64_t a, std::int64_t b);

/// All 2^omega ordered pairs (a, b) with a*b = D, in ascending order of
/// the subset bitmask of primes dividing a (bit i <-> primes[i]).
std::vector<std::pair<std::int64_t, std::int64_t>>
divisor_pairs(const FactoredOddSquarefree& D);

/// Divisor of D formed by the primes selected in mask.
std::int64_t divisor_of_mask(const FactoredOddSquarefree& D, std::uint64_t mask);

/// gcd on magnitudes, safe for INT64_MIN.
std::uint64_t gcd_abs(std::int64_t a, std::int64_t b);

} // namespace spiegel::arith

#endif
