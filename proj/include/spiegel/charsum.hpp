#ifndef SPIEGEL_CHARSUM_HPP
#define SPIEGEL_CHARSUM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "spiegel/arith.hpp"

namespace spiegel::charsum {

/// Parameters of sigma_D(s,t,u,v); each must be coprime to D.
struct SigmaParams {
    std::int64_t s = 1;
    std::int64_t t = 1;
    std::int64_t u = 1;
    std::int64_t v = 1;
};

/// sigma_D(s,t,u,v) = sum over ab=D of
///   prod_{p|b} ((s/p) + (ua/p)) * prod_{p|a} ((t/p) + (vb/p)).
std::int64_t sigma(const arith::FactoredOddSquarefree& D, const SigmaParams& q);

/// S_D(u,v) = sigma_D(1,1,u,v); nonnegative, and E_D(u,v) = 2^-omega * S_D(u,v).
std::int64_t s_value(const arith::FactoredOddSquarefree& D, std::int64_t u,
                     std::int64_t v);

/// The same sum rewritten over ordered quadruples abcd = D:
///   sum (-1)^{beta(c)beta(d)} (a/d)(b/c)(s/b)(t/a)(u/d)(v/c).
/// Cost 4^omega; throws OmegaTooLarge beyond omega = 12.
std::int64_t sigma_quad(const arith::FactoredOddSquarefree& D, const SigmaParams& q);

/// Evaluates the 8-fold averaged quadruple sum for 8*S_D(u,v) and returns it
/// divided by 8. Throws InternalInconsistency if the sum is not divisible by
/// 8 or differs from s_value (never expected).
std::int64_t s_value_averaged(const arith::FactoredOddSquarefree& D, std::int64_t u,
                              std::int64_t v);

struct IdentityCheck {
    std::string name;
    bool applicable = true;
    bool pass = true;
    std::uint64_t cases_checked = 0;
    std::string detail; // first counterexample, when failing
};

struct IdentityReport {
    std::int64_t D = 1;
    std::vector<IdentityCheck> checks;

    bool all_pass() const;
};

/// Evaluates the identity suite over all (s,t,u,v) in {+-1,+-2}^4:
///   sigma(s,t,u,v) = sigma(t,s,v,u)
///   |sigma(s,t,u,v)| <= S(su,tv)
///   S(-1,1) = S(1,1)            (D = 1 mod 4)
///   S(1,1)  = 2*S(-1,1)         (D = 3 mod 4)
///   S(u,1) <= S(-u,1)+S(u,-1) <= 2*S(u,1)
IdentityReport identity_report(const arith::FactoredOddSquarefree& D);

} // namespace spiegel::charsum

#endif
