#include "spiegel/affine.hpp"

#include <bit>

namespace spiegel::affine {

bool F2AffineSystem::satisfied_by(std::uint64_t x) const {
    for (int i = 0; i < n; ++i) {
        unsigned lhs = std::popcount(rows[static_cast<std::size_t>(i)] & x) & 1u;
        if (lhs != (rhs >> i & 1u))
            return false;
    }
    return true;
}

std::string F2AffineSystem::dump() const {
    std::string out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            out += (rows[static_cast<std::size_t>(i)] >> j & 1u) ? '1' : '0';
        out += " | ";
        out += rhs_bit(i) ? '1' : '0';
        out += '\n';
    }
    return out;
}

F2AffineSystem build_system(const arith::FactoredOddSquarefree& D, std::int64_t u,
                            std::int64_t v) {
    if (arith::gcd_abs(u, D.value) != 1 || arith::gcd_abs(v, D.value) != 1)
        throw NotCoprime("build_system: u, v must be coprime to D = " +
                         std::to_string(D.value));

    const int n = D.omega();
    F2AffineSystem sys;
    sys.n = n;
    sys.rows.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        const std::int64_t pi = D.primes[static_cast<std::size_t>(i)];
        arith::F2 diag = arith::beta_u(u, pi) + arith::beta_u(v, pi);
        std::uint64_t row = 0;
        for (int j = 0; j < n; ++j) {
            if (j == i)
                continue;
            arith::F2 a = arith::alpha(D.primes[static_cast<std::size_t>(j)], pi);
            diag += a;
            row |= static_cast<std::uint64_t>(a.bit) << j;
        }
        row |= static_cast<std::uint64_t>(diag.bit) << i;
        sys.rows[static_cast<std::size_t>(i)] = row;
        sys.rhs |= static_cast<std::uint64_t>(arith::beta_u(u, pi).bit) << i;
    }
    return sys;
}

SolutionCount solve_count(F2AffineSystem sys) {
    const int n = sys.n;
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r) {
            if (sys.rows[static_cast<std::size_t>(r)] >> col & 1u) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            continue;
        if (pivot != rank) {
            std::swap(sys.rows[static_cast<std::size_t>(pivot)],
                      sys.rows[static_cast<std::size_t>(rank)]);
            std::uint64_t bp = sys.rhs >> pivot & 1u;
            std::uint64_t br = sys.rhs >> rank & 1u;
            sys.rhs ^= (bp ^ br) << pivot;
            sys.rhs ^= (bp ^ br) << rank;
        }
        for (int r = 0; r < n; ++r) {
            if (r == rank)
                continue;
            if (sys.rows[static_cast<std::size_t>(r)] >> col & 1u) {
                sys.rows[static_cast<std::size_t>(r)] ^=
                    sys.rows[static_cast<std::size_t>(rank)];
                sys.rhs ^= (sys.rhs >> rank & 1u) << r;
            }
        }
        ++rank;
    }
    for (int r = rank; r < n; ++r)
        if (sys.rhs >> r & 1u)
            return SolutionCount{0, std::nullopt};
    const int dim = n - rank;
    return SolutionCount{std::uint64_t{1} << dim, dim};
}

std::int64_t e_affine(const arith::FactoredOddSquarefree& D, std::int64_t u,
                      std::int64_t v) {
    return static_cast<std::int64_t>(solve_count(build_system(D, u, v)).count);
}

std::vector<std::uint64_t> redei_matrix(const arith::FactoredOddSquarefree& D) {
    const int n = D.omega();
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        const std::int64_t pi = D.primes[static_cast<std::size_t>(i)];
        arith::F2 diag(static_cast<unsigned>((n + 1) & 1));
        std::uint64_t row = 0;
        for (int j = 0; j < n; ++j) {
            if (j == i)
                continue;
            arith::F2 a = arith::alpha(D.primes[static_cast<std::size_t>(j)], pi);
            diag += a;
            row |= static_cast<std::uint64_t>(a.bit) << j;
        }
        row |= static_cast<std::uint64_t>(diag.bit) << i;
        rows[static_cast<std::size_t>(i)] = row;
    }
    return rows;
}

} // namespace spiegel::affine
