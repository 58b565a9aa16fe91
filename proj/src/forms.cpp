#include "spiegel/forms.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "spiegel/arith.hpp"

namespace spiegel::forms {

namespace {

using i128 = __int128;

constexpr std::size_t kTableCap = 5000;

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

std::int64_t isqrt64(std::int64_t n) {
    if (n < 0)
        return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

bool is_square64(std::int64_t n) {
    if (n < 0)
        return false;
    const std::int64_t r = isqrt64(n);
    return r * r == n;
}

std::uint64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c) {
    return arith::gcd_abs(static_cast<std::int64_t>(arith::gcd_abs(a, b)), c);
}

struct XGcd {
    std::int64_t g, x, y; // g = x*a + y*b, g >= 0
};

XGcd xgcd(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b;
    std::int64_t old_x = 1, x = 0;
    std::int64_t old_y = 0, y = 1;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_x -= q * x;
        std::swap(old_x, x);
        old_y -= q * y;
        std::swap(old_y, y);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    return {old_r, old_x, old_y};
}

i128 disc128(const QuadForm& f) {
    return static_cast<i128>(f.b) * f.b - 4 * static_cast<i128>(f.a) * f.c;
}

bool squarefree64(std::int64_t n) {
    if (n < 1)
        return false;
    for (std::int64_t p = 2; p <= n / p; ++p) {
        if (n % p != 0)
            continue;
        n /= p;
        if (n % p == 0)
            return false;
    }
    return true;
}

void validate_form(const QuadForm& f, std::int64_t disc) {
    if (gcd3(f.a, f.b, f.c) != 1)
        throw NotPrimitive("form (" + std::to_string(f.a) + "," + std::to_string(f.b) +
                           "," + std::to_string(f.c) + ") is not primitive");
    if (disc >= 0 && is_square64(disc))
        throw SquareDiscriminant("discriminant " + std::to_string(disc) +
                                 " is a square");
    if (disc < 0 && f.a <= 0)
        throw std::domain_error("form of negative discriminant must have a > 0");
}

// b into (-a, a]; c recomputed from the discriminant.
void normalize_neg(QuadForm& f, std::int64_t d) {
    const std::int64_t m = 2 * f.a;
    std::int64_t r = f.b % m;
    if (r > f.a)
        r -= m;
    else if (r <= -f.a)
        r += m;
    f.b = r;
    f.c = static_cast<std::int64_t>((static_cast<i128>(r) * r - d) / (4 * f.a));
}

QuadForm reduce_neg(QuadForm f, std::int64_t d) {
    normalize_neg(f, d);
    while (f.a > f.c) {
        std::swap(f.a, f.c);
        f.b = -f.b;
        normalize_neg(f, d);
    }
    if (f.a == f.c && f.b < 0)
        f.b = -f.b;
    return f;
}

// b into (-|a|, |a|] while |a| > sqrt(d), else into (sqrt(d) - 2|a|, sqrt(d)].
void normalize_pos(QuadForm& f, std::int64_t d, std::int64_t s) {
    const std::int64_t aa = abs64(f.a);
    const std::int64_t m = 2 * aa;
    const std::int64_t lo = aa > s ? -aa : s - m;
    std::int64_t r = (f.b - lo) % m;
    if (r <= 0)
        r += m;
    r += lo; // unique r = b (mod 2|a|) in (lo, lo + 2|a|]
    f.b = r;
    f.c = static_cast<std::int64_t>((static_cast<i128>(r) * r - d) / (4 * f.a));
}

bool reduced_pos(const QuadForm& f, std::int64_t d, std::int64_t s) {
    if (f.b <= 0 || f.b > s)
        return false;
    const i128 outer = 2 * static_cast<i128>(abs64(f.a)) + f.b;
    if (outer * outer <= d)
        return false;
    const i128 inner = 2 * static_cast<i128>(abs64(f.a)) - f.b;
    return inner <= 0 || inner * inner < d;
}

QuadForm rho_pos(QuadForm f, std::int64_t d, std::int64_t s) {
    std::swap(f.a, f.c);
    f.b = -f.b;
    normalize_pos(f, d, s);
    return f;
}

QuadForm reduce_pos(QuadForm f, std::int64_t d, std::int64_t s) {
    normalize_pos(f, d, s);
    for (int steps = 0; !reduced_pos(f, d, s); ++steps) {
        if (steps > 100000)
            throw InternalInconsistency("reduction of a form of discriminant " +
                                        std::to_string(d) + " did not terminate");
        f = rho_pos(f, d, s);
    }
    return f;
}

QuadForm reduce_any(QuadForm f, std::int64_t d) {
    return d < 0 ? reduce_neg(f, d) : reduce_pos(f, d, isqrt64(d));
}

std::vector<QuadForm> reduced_forms_neg(std::int64_t d) {
    std::vector<QuadForm> out;
    const std::int64_t absd = -d;
    const std::int64_t b0 = absd % 2;
    for (std::int64_t a = 1; 3 * a * a <= absd; ++a) {
        for (std::int64_t b = b0; b <= a; b += 2) {
            const std::int64_t num = b * b + absd;
            if (num % (4 * a) != 0)
                continue;
            const std::int64_t c = num / (4 * a);
            if (c < a || gcd3(a, b, c) != 1)
                continue;
            out.push_back({a, b, c});
            if (b > 0 && b < a && a < c)
                out.push_back({a, -b, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<QuadForm> reduced_forms_pos(std::int64_t d, std::int64_t s) {
    std::vector<QuadForm> out;
    for (std::int64_t b = 2 - (d % 2); b <= s; b += 2) {
        const std::int64_t n = (d - b * b) / 4;
        const auto admit = [&](std::int64_t e) {
            const std::int64_t outer = 2 * e + b;
            if (outer * outer <= d)
                return false;
            const std::int64_t inner = 2 * e - b;
            if (inner > 0 && inner * inner >= d)
                return false;
            if (gcd3(e, b, n / e) != 1)
                return false;
            out.push_back({e, b, -(n / e)});
            out.push_back({-e, b, n / e});
            return true;
        };
        for (std::int64_t e = 1; e * e <= n; ++e) {
            if (n % e != 0)
                continue;
            admit(e);
            if (e != n / e)
                admit(n / e);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::int64_t discriminant(const QuadForm& f) {
    const i128 d = disc128(f);
    if (d > (static_cast<i128>(1) << 62) || d < -(static_cast<i128>(1) << 62))
        throw BoundExceeded("discriminant of (" + std::to_string(f.a) + "," +
                            std::to_string(f.b) + "," + std::to_string(f.c) +
                            ") exceeds the supported range");
    return static_cast<std::int64_t>(d);
}

bool is_fundamental(std::int64_t disc) {
    if (disc == 0 || disc == 1)
        return false;
    const std::int64_t mod4 = ((disc % 4) + 4) % 4;
    if (mod4 == 1)
        return squarefree64(abs64(disc));
    if (mod4 != 0)
        return false;
    const std::int64_t m = disc / 4;
    const std::int64_t m4 = ((m % 4) + 4) % 4;
    return (m4 == 2 || m4 == 3) && squarefree64(abs64(m));
}

QuadForm principal_form(std::int64_t disc) {
    if (disc >= 0 && is_square64(disc))
        throw SquareDiscriminant("discriminant " + std::to_string(disc) +
                                 " is a square");
    if (disc < 0) {
        const std::int64_t b0 = abs64(disc) % 2;
        return {1, b0, (b0 * b0 - disc) / 4};
    }
    const std::int64_t s = isqrt64(disc);
    const std::int64_t b0 = (s % 2 == abs64(disc) % 2) ? s : s - 1;
    return {1, b0, (b0 * b0 - disc) / 4};
}

QuadForm reduce(QuadForm f) {
    const std::int64_t d = discriminant(f);
    validate_form(f, d);
    return reduce_any(f, d);
}

QuadForm compose(const QuadForm& f1, const QuadForm& f2) {
    const std::int64_t d = discriminant(f1);
    if (discriminant(f2) != d)
        throw DiscriminantMismatch("cannot compose forms of discriminants " +
                                   std::to_string(d) + " and " +
                                   std::to_string(discriminant(f2)));
    validate_form(f1, d);
    validate_form(f2, d);

    const std::int64_t s = (f1.b + f2.b) / 2;
    const std::int64_t n = (f1.b - f2.b) / 2;
    const XGcd first = xgcd(f1.a, f2.a);            // g = u0 a1 + v0 a2
    const XGcd second = xgcd(first.g, s);           // e = v1 g + w s
    const std::int64_t e = second.g;
    const std::int64_t a1e = f1.a / e;
    const std::int64_t a2e = f2.a / e;

    const i128 big_a = static_cast<i128>(a1e) * a2e;
    const i128 v = static_cast<i128>(first.y) * second.x; // v0 * v1
    i128 big_b = f2.b + 2 * static_cast<i128>(a2e) * (v * n - static_cast<i128>(second.y) * f2.c);

    const i128 two_a = 2 * (big_a < 0 ? -big_a : big_a);
    big_b %= two_a;
    if (big_b < 0)
        big_b += two_a;

    if (big_a > (static_cast<i128>(1) << 62) || big_a < -(static_cast<i128>(1) << 62))
        throw BoundExceeded("composition coefficients exceed the supported range");
    const i128 num = big_b * big_b - d;
    if (num % (4 * big_a) != 0)
        throw InternalInconsistency("composition produced a non-integral form");
    const QuadForm out{static_cast<std::int64_t>(big_a), static_cast<std::int64_t>(big_b),
                       static_cast<std::int64_t>(num / (4 * big_a))};
    return reduce_any(out, d);
}

std::size_t ClassGroup::class_index(const QuadForm& reduced) const {
    const auto it = class_of_.find(reduced);
    if (it == class_of_.end())
        throw InternalInconsistency("form (" + std::to_string(reduced.a) + "," +
                                    std::to_string(reduced.b) + "," +
                                    std::to_string(reduced.c) +
                                    ") is not a reduced form of discriminant " +
                                    std::to_string(disc_));
    return it->second;
}

std::size_t ClassGroup::compose_classes(std::size_t i, std::size_t j) const {
    return class_index(compose(reps_[i], reps_[j]));
}

const std::vector<std::uint32_t>& ClassGroup::op_table() {
    if (!table_.empty())
        return table_;
    const std::size_t h = order();
    if (h > kTableCap)
        throw BoundExceeded("composition table refused for class number " +
                            std::to_string(h) + " > " + std::to_string(kTableCap));
    table_.assign(h * h, 0);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const auto k = static_cast<std::uint32_t>(compose_classes(i, j));
            table_[i * h + j] = k;
            table_[j * h + i] = k;
        }
    return table_;
}

ClassGroup class_group(std::int64_t disc, std::int64_t bound) {
    if (abs64(disc) > bound)
        throw BoundExceeded("discriminant " + std::to_string(disc) +
                            " exceeds the bound " + std::to_string(bound));
    if (!is_fundamental(disc))
        throw NotFundamental(std::to_string(disc) +
                             " is not a fundamental discriminant");

    ClassGroup g;
    g.disc_ = disc;

    if (disc < 0) {
        g.reps_ = reduced_forms_neg(disc);
        for (std::size_t i = 0; i < g.reps_.size(); ++i)
            g.class_of_[g.reps_[i]] = static_cast<std::uint32_t>(i);
    } else {
        const std::int64_t s = isqrt64(disc);
        const std::vector<QuadForm> all = reduced_forms_pos(disc, s);
        const std::set<QuadForm> members(all.begin(), all.end());
        for (const QuadForm& start : all) {
            if (g.class_of_.count(start))
                continue;
            const auto id = static_cast<std::uint32_t>(g.reps_.size());
            g.reps_.push_back(start); // least form of its cycle, by scan order
            QuadForm f = start;
            do {
                g.class_of_[f] = id;
                f = rho_pos(f, disc, s);
                if (!members.count(f))
                    throw InternalInconsistency(
                        "reduction step left the reduced-form set at discriminant " +
                        std::to_string(disc));
            } while (!(f == start));
        }
    }

    g.identity_ = g.class_index(reduce_any(principal_form(disc), disc));
    return g;
}

int rk4_oracle(std::int64_t disc, std::int64_t bound) {
    ClassGroup g = class_group(disc, bound);
    const std::size_t h = g.order();
    const std::size_t e = g.identity();

    std::vector<std::size_t> sq(h);
    for (std::size_t i = 0; i < h; ++i)
        sq[i] = g.compose_classes(i, i);

    std::uint64_t n2 = 0, n4 = 0;
    for (std::size_t i = 0; i < h; ++i) {
        if (sq[i] == e)
            ++n2;
        if (sq[sq[i]] == e)
            ++n4;
    }
    const bool pow2 = (n2 & (n2 - 1)) == 0 && (n4 & (n4 - 1)) == 0;
    if (!pow2 || n2 == 0 || n4 % n2 != 0)
        throw InternalInconsistency("torsion counts N2 = " + std::to_string(n2) +
                                    ", N4 = " + std::to_string(n4) +
                                    " are malformed at discriminant " +
                                    std::to_string(disc));
    int rk = 0;
    for (std::uint64_t q = n4 / n2; q > 1; q >>= 1)
        ++rk;
    return rk;
}

} // namespace spiegel::forms
