#ifndef SPIEGEL_AFFINE_HPP
#define SPIEGEL_AFFINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spiegel/arith.hpp"

namespace spiegel::affine {

/// An n x n linear system over F2 with right-hand side. Row i is stored as a
/// bitmask of coefficients (bit j = coefficient of x_j); rhs bit i holds the
/// right-hand side of equation i. n <= 64.
struct F2AffineSystem {
    int n = 0;
    std::vector<std::uint64_t> rows;
    std::uint64_t rhs = 0;

    bool rhs_bit(int i) const { return rhs >> i & 1u; }

    /// True iff x (as a bitmask) satisfies every equation.
    bool satisfied_by(std::uint64_t x) const;

    /// One line per row: coefficient characters '0'/'1', " | ", rhs bit.
    std::string dump() const;
};

/// Solution count of an affine system: 0, or 2^dim.
struct SolutionCount {
    std::uint64_t count = 0;
    std::optional<int> dim;
};

/// The system whose solutions are the divisor indicator vectors counted by
/// E_D(u,v): equation i reads
///   (beta_u(p_i) + beta_v(p_i) + sum_{j != i} alpha(p_j, p_i)) x_i
///     + sum_{j != i} alpha(p_j, p_i) x_j  =  beta_u(p_i).
F2AffineSystem build_system(const arith::FactoredOddSquarefree& D, std::int64_t u,
                            std::int64_t v);

/// Gaussian elimination over F2 with deterministic pivoting (columns
/// left to right, first usable row top-down).
SolutionCount solve_count(F2AffineSystem sys);

/// E_D(u,v) as the cardinality of the affine solution space.
std::int64_t e_affine(const arith::FactoredOddSquarefree& D, std::int64_t u,
                      std::int64_t v);

/// The classical matrix variant: same off-diagonal entries, diagonal
/// (omega(D) + 1 + sum_{l != i} alpha(p_l, p_i)) mod 2. Rows as bitmasks.
std::vector<std::uint64_t> redei_matrix(const arith::FactoredOddSquarefree& D);

} // namespace spiegel::affine

#endif
