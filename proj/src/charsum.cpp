#include "spiegel/charsum.hpp"

#include <array>
#include <cstdlib>
#include <map>

namespace spiegel::charsum {

namespace {

constexpr int kOmegaCap = 12; // 4^omega terms; beyond this the sum is refused

void require_coprime(const arith::FactoredOddSquarefree& D, std::int64_t x,
                     const char* role) {
    if (arith::gcd_abs(x, D.value) != 1)
        throw NotCoprime(std::string("sigma: parameter ") + role + " = " +
                         std::to_string(x) + " shares a factor with D = " +
                         std::to_string(D.value));
}

void require_params(const arith::FactoredOddSquarefree& D, const SigmaParams& q) {
    require_coprime(D, q.s, "s");
    require_coprime(D, q.t, "t");
    require_coprime(D, q.u, "u");
    require_coprime(D, q.v, "v");
}

// (-1/x) for odd positive x.
int neg_one_symbol(std::int64_t x) { return x % 4 == 1 ? 1 : -1; }

} // namespace

std::int64_t sigma(const arith::FactoredOddSquarefree& D, const SigmaParams& q) {
    require_params(D, q);
    const int n = D.omega();
    const std::uint64_t total = std::uint64_t{1} << n;
    std::int64_t sum = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const std::int64_t a = arith::divisor_of_mask(D, mask);
        const std::int64_t b = D.value / a;
        std::int64_t term = 1;
        for (int i = 0; i < n && term != 0; ++i) {
            const std::int64_t p = D.primes[static_cast<std::size_t>(i)];
            if (mask >> i & 1u) // p | a
                term *= arith::jacobi(q.t, p) + arith::jacobi(q.v, p) * arith::jacobi(b, p);
            else // p | b
                term *= arith::jacobi(q.s, p) + arith::jacobi(q.u, p) * arith::jacobi(a, p);
        }
        sum += term;
    }
    return sum;
}

std::int64_t s_value(const arith::FactoredOddSquarefree& D, std::int64_t u,
                     std::int64_t v) {
    return sigma(D, SigmaParams{1, 1, u, v});
}

std::int64_t sigma_quad(const arith::FactoredOddSquarefree& D, const SigmaParams& q) {
    require_params(D, q);
    const int n = D.omega();
    if (n > kOmegaCap)
        throw OmegaTooLarge("quadruple divisor sum refused for omega = " +
                            std::to_string(n) + " > " + std::to_string(kOmegaCap));

    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    std::int64_t sum = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::array<std::int64_t, 4> part{1, 1, 1, 1}; // a, b, c, d
        for (int i = 0; i < n; ++i)
            part[(code >> (2 * i)) & 3u] *= D.primes[static_cast<std::size_t>(i)];
        const auto [a, b, c, d] = part;

        int term = (arith::beta(c).bit & arith::beta(d).bit) ? -1 : 1;
        term *= arith::jacobi(a, d) * arith::jacobi(b, c);
        term *= arith::jacobi(q.s, b) * arith::jacobi(q.t, a);
        term *= arith::jacobi(q.u, d) * arith::jacobi(q.v, c);
        sum += term;
    }
    return sum;
}

std::int64_t s_value_averaged(const arith::FactoredOddSquarefree& D, std::int64_t u,
                              std::int64_t v) {
    require_coprime(D, u, "u");
    require_coprime(D, v, "v");
    const int n = D.omega();
    if (n > kOmegaCap)
        throw OmegaTooLarge("quadruple divisor sum refused for omega = " +
                            std::to_string(n) + " > " + std::to_string(kOmegaCap));

    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    std::int64_t sum = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::array<std::int64_t, 4> part{1, 1, 1, 1}; // a, b, c, d
        for (int i = 0; i < n; ++i)
            part[(code >> (2 * i)) & 3u] *= D.primes[static_cast<std::size_t>(i)];
        const auto [a, b, c, d] = part;

        int base = (arith::beta(c).bit & arith::beta(d).bit) ? -1 : 1;
        base *= arith::jacobi(a, d) * arith::jacobi(b, c);

        const int ua = arith::jacobi(u, a), ud = arith::jacobi(u, d);
        const int vb = arith::jacobi(v, b), vc = arith::jacobi(v, c);
        const int m1 = neg_one_symbol(a) + neg_one_symbol(c) + neg_one_symbol(d) -
                       neg_one_symbol(D.value / b); // acd
        const int m2 = neg_one_symbol(b) + neg_one_symbol(c) + neg_one_symbol(d) -
                       neg_one_symbol(D.value / a); // bcd
        const int m3 = 1 + neg_one_symbol(a * c) + neg_one_symbol(b * d) -
                       neg_one_symbol(D.value);

        sum += base * (2 * ud * vc + ua * vc * m1 + ud * vb * m2 + ua * vb * m3);
    }

    if (sum % 8 != 0)
        throw InternalInconsistency("averaged sum for D = " + std::to_string(D.value) +
                                    " not divisible by 8: " + std::to_string(sum));
    const std::int64_t result = sum / 8;
    const std::int64_t direct = s_value(D, u, v);
    if (result != direct)
        throw InternalInconsistency("averaged sum " + std::to_string(result) +
                                    " != S_D " + std::to_string(direct) + " for D = " +
                                    std::to_string(D.value));
    return result;
}

bool IdentityReport::all_pass() const {
    for (const auto& c : checks)
        if (c.applicable && !c.pass)
            return false;
    return true;
}

IdentityReport identity_report(const arith::FactoredOddSquarefree& D) {
    static constexpr std::array<std::int64_t, 4> vals{1, -1, 2, -2};
    const auto neg = [](int k) { return k ^ 1; }; // index of -vals[k]

    // sigma over every parameter combination, indexed by (s,t,u,v) indices.
    std::int64_t sig[4][4][4][4];
    for (int si = 0; si < 4; ++si)
        for (int ti = 0; ti < 4; ++ti)
            for (int ui = 0; ui < 4; ++ui)
                for (int vi = 0; vi < 4; ++vi)
                    sig[si][ti][ui][vi] =
                        sigma(D, SigmaParams{vals[si], vals[ti], vals[ui], vals[vi]});

    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> s_memo;
    const auto s_of = [&](std::int64_t u, std::int64_t v) {
        auto it = s_memo.find({u, v});
        if (it == s_memo.end())
            it = s_memo.emplace(std::pair{u, v}, s_value(D, u, v)).first;
        return it->second;
    };

    IdentityReport report;
    report.D = D.value;

    auto params_str = [&](int si, int ti, int ui, int vi) {
        return "(s,t,u,v)=(" + std::to_string(vals[si]) + "," + std::to_string(vals[ti]) +
               "," + std::to_string(vals[ui]) + "," + std::to_string(vals[vi]) + ")";
    };

    {
        IdentityCheck c;
        c.name = "sigma(s,t,u,v)=sigma(t,s,v,u)";
        for (int si = 0; si < 4; ++si)
            for (int ti = 0; ti < 4; ++ti)
                for (int ui = 0; ui < 4; ++ui)
                    for (int vi = 0; vi < 4; ++vi) {
                        ++c.cases_checked;
                        if (sig[si][ti][ui][vi] != sig[ti][si][vi][ui] && c.pass) {
                            c.pass = false;
                            c.detail = params_str(si, ti, ui, vi);
                        }
                    }
        report.checks.push_back(std::move(c));
    }
    {
        IdentityCheck c;
        c.name = "|sigma(s,t,u,v)|<=S(su,tv)";
        for (int si = 0; si < 4; ++si)
            for (int ti = 0; ti < 4; ++ti)
                for (int ui = 0; ui < 4; ++ui)
                    for (int vi = 0; vi < 4; ++vi) {
                        ++c.cases_checked;
                        const std::int64_t lhs = std::llabs(sig[si][ti][ui][vi]);
                        if (lhs > s_of(vals[si] * vals[ui], vals[ti] * vals[vi]) && c.pass) {
                            c.pass = false;
                            c.detail = params_str(si, ti, ui, vi);
                        }
                    }
        report.checks.push_back(std::move(c));
    }
    {
        IdentityCheck c;
        c.name = "S(-1,1)=S(1,1)";
        c.applicable = D.value % 4 == 1;
        if (c.applicable) {
            c.cases_checked = 1;
            c.pass = sig[0][0][1][0] == sig[0][0][0][0];
            if (!c.pass)
                c.detail = "S(-1,1)=" + std::to_string(sig[0][0][1][0]) +
                           " S(1,1)=" + std::to_string(sig[0][0][0][0]);
        }
        report.checks.push_back(std::move(c));
    }
    {
        IdentityCheck c;
        c.name = "S(1,1)=2S(-1,1)";
        c.applicable = D.value % 4 == 3;
        if (c.applicable) {
            c.cases_checked = 1;
            c.pass = sig[0][0][0][0] == 2 * sig[0][0][1][0];
            if (!c.pass)
                c.detail = "S(1,1)=" + std::to_string(sig[0][0][0][0]) +
                           " S(-1,1)=" + std::to_string(sig[0][0][1][0]);
        }
        report.checks.push_back(std::move(c));
    }
    {
        IdentityCheck c;
        c.name = "S(u,1)<=S(-u,1)+S(u,-1)<=2S(u,1)";
        for (int ui = 0; ui < 4; ++ui) {
            ++c.cases_checked;
            const std::int64_t su1 = sig[0][0][ui][0];
            const std::int64_t mid = sig[0][0][neg(ui)][0] + sig[0][0][ui][1];
            if ((su1 > mid || mid > 2 * su1) && c.pass) {
                c.pass = false;
                c.detail = "u=" + std::to_string(vals[ui]);
            }
        }
        report.checks.push_back(std::move(c));
    }
    return report;
}

} // namespace spiegel::charsum
