#ifndef SPIEGEL_COUNTING_HPP
#define SPIEGEL_COUNTING_HPP

#include <cstdint>

#include "spiegel/arith.hpp"

namespace spiegel::counting {

enum class SquareTestMode {
    Enumerate, // scan t in [0, m) for t^2 = x (mod m); the slow oracle
    Legendre,  // x is a square mod each prime of m
};

/// Is x a square modulo the odd squarefree m? Requires gcd(x, m) = 1.
/// Enumerate mode refuses m > 10^6.
bool is_square_mod(std::int64_t x, const arith::FactoredOddSquarefree& m,
                   SquareTestMode mode = SquareTestMode::Legendre);

/// Convenience overload; factors m first (throws NotOddSquarefree).
bool is_square_mod(std::int64_t x, std::int64_t m,
                   SquareTestMode mode = SquareTestMode::Legendre);

/// E_D(u,v): the number of ordered pairs (a,b) with ab = D such that
/// ua is a square mod b and vb is a square mod a.
std::int64_t e_direct(const arith::FactoredOddSquarefree& D, std::int64_t u,
                      std::int64_t v,
                      SquareTestMode mode = SquareTestMode::Legendre);

} // namespace spiegel::counting

#endif
