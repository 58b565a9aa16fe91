#ifndef SPIEGEL_RANK4_HPP
#define SPIEGEL_RANK4_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spiegel/arith.hpp"

namespace spiegel::rank4 {

/// The three admissible shapes of a positive fundamental discriminant and
/// their reflections:
///   d = D  (D odd squarefree, D = 1 mod 4, D > 1), reflection -4D
///   d = 8D (D odd squarefree),                     reflection -8D
///   d = 4D (D odd squarefree, D = 3 mod 4),        reflection -D
enum class CaseTag { OneMod4, ZeroMod8, FourMod8 };

const char* case_name(CaseTag tag); // "1mod4", "0mod8", "4mod8"

enum class Equality { Equal, PlusOne };

const char* equality_name(Equality e); // "equal", "plus_one"

struct DiscriminantCase {
    CaseTag tag = CaseTag::OneMod4;
    arith::FactoredOddSquarefree D;
    std::int64_t d_K = 0;
    std::int64_t d_sharp = 0;
};

/// Validates d against the table above and extracts D and the reflected
/// discriminant. Throws NotFundamental naming the violated rule.
DiscriminantCase classify(std::int64_t d);

struct ETerm {
    std::string label; // "E(-1,1)" etc.
    std::int64_t value = 0;
};

struct RankReport {
    DiscriminantCase disc;
    std::vector<ETerm> e_terms;
    int rk4_K = 0;
    int rk4_sharp = 0;
    Equality equality = Equality::Equal;
    std::string criterion; // empty when no single-term criterion exists (0 mod 8)
};

struct RankOptions {
    // Recompute every E-term by direct counting and by character sum and
    // require agreement with the affine solver.
    bool cross_check = false;
};

/// Ranks of the field and its reflection from the E-term formulas:
///   1 mod 4: 2^rk4(K) = E(-1,1)/2,           2^rk4(K#) = (E(1,1)+E(2,2))/2
///   0 mod 8: 2^rk4(K) = (E(-2,1)+E(-1,2))/2, 2^rk4(K#) = E(2,1)
///   4 mod 8: 2^rk4(K) = (E(-1,1)+E(-2,2))/2, 2^rk4(K#) = E(1,1)/2
RankReport rank_pair(const DiscriminantCase& c, const RankOptions& opt = {});

struct EqualityDecision {
    Equality equality = Equality::Equal;
    std::string criterion;
};

/// Equality classification without computing ranks where a single E-term
/// decides: 1 mod 4 is Equal iff E(2,2) = 0; 4 mod 8 is PlusOne iff
/// E(-2,2) = 0. The 0 mod 8 case has no such criterion and falls back to
/// the rank pair.
EqualityDecision equality_case(const DiscriminantCase& c);

struct UeharaReport {
    bool applicable = false; // every prime of D is +-1 mod 8
    Equality predicted = Equality::Equal;
    Equality observed = Equality::Equal;
};

/// When every prime divisor of D is +-1 mod 8 the equality case is forced:
///   1 mod 4            -> PlusOne
///   0 mod 8, D = 3 mod 4 -> PlusOne
///   0 mod 8, D = 1 mod 4 -> Equal
///   4 mod 8            -> Equal
/// Throws AssertionFailed with the counterexample if the computed case
/// disagrees (never expected).
UeharaReport uehara_check(const DiscriminantCase& c);

struct ScanOptions {
    int jobs = 1;
    bool cross_check = false;
};

struct ScanAggregate {
    std::uint64_t reports = 0;
    std::uint64_t spiegel_violations = 0;
    std::map<std::pair<int, int>, std::uint64_t> joint; // (rk4_K, rk4_sharp)

    void add(const RankReport& r);
    void merge(const ScanAggregate& o);
    std::uint64_t count_rk_k(int r) const;
};

using ReportSink = std::function<void(const RankReport&)>;

/// Visits every valid discriminant in [d_min, d_max] in ascending order
/// (invalid d are skipped) and returns the aggregate. With jobs > 1 the
/// range is processed in parallel chunks; the sink still sees reports in
/// ascending d order and output is independent of the job count.
ScanAggregate scan_stream(std::int64_t d_min, std::int64_t d_max,
                          const ScanOptions& opt, const ReportSink& sink);

struct ScanResult {
    std::vector<RankReport> reports;
    ScanAggregate agg;
};

/// Convenience wrapper storing all reports.
ScanResult scan(std::int64_t d_min, std::int64_t d_max, const ScanOptions& opt = {});

struct DensityRow {
    int r = 0;
    std::uint64_t conditioning = 0; // # of d with rk4_K = r
    double emp_equal = 0.0;         // empirical P(rk4_sharp = r | rk4_K = r)
    double emp_plus = 0.0;          // empirical P(rk4_sharp = r+1 | rk4_K = r)
    double theo_equal = 0.0;        // 1 - 2^-(r+1)
    double theo_plus = 0.0;         // 2^-(r+1)
    bool insufficient = false;      // no conditioning events
};

/// Empirical conditional frequencies over fundamental d in (0, X] next to
/// the limiting values, for r in {0, 1, 2}. Report only, no assertion.
std::vector<DensityRow> density_compare(std::int64_t X, const ScanOptions& opt = {});

} // namespace spiegel::rank4

#endif
