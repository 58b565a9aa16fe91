#include "spiegel/rank4.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "spiegel/affine.hpp"
#include "spiegel/charsum.hpp"
#include "spiegel/counting.hpp"

namespace spiegel::rank4 {

namespace {

constexpr std::int64_t kMaxDiscriminant = std::int64_t{1} << 60;

arith::FactoredOddSquarefree core_of(std::int64_t d, std::int64_t core) {
    try {
        return arith::factor_squarefree_odd(core);
    } catch (const NotOddSquarefree& e) {
        throw NotFundamental("d = " + std::to_string(d) + ": core " +
                             std::to_string(core) + " must be odd and squarefree (" +
                             e.what() + ")");
    }
}

std::optional<int> log2_exact(std::int64_t x) {
    if (x <= 0 || (x & (x - 1)) != 0)
        return std::nullopt;
    return std::countr_zero(static_cast<std::uint64_t>(x));
}

std::int64_t checked_e_term(const DiscriminantCase& c, std::int64_t u, std::int64_t v,
                            bool cross_check) {
    const std::int64_t by_affine = affine::e_affine(c.D, u, v);
    if (cross_check) {
        const std::int64_t by_count = counting::e_direct(c.D, u, v);
        const std::int64_t by_sum = charsum::s_value(c.D, u, v) >> c.D.omega();
        if (by_affine != by_count || by_affine != by_sum)
            throw InternalInconsistency(
                "E-term mismatch at d = " + std::to_string(c.d_K) + ", (u,v) = (" +
                std::to_string(u) + "," + std::to_string(v) + "): affine " +
                std::to_string(by_affine) + ", direct " + std::to_string(by_count) +
                ", character sum " + std::to_string(by_sum));
    }
    return by_affine;
}

int rank_from_power(const DiscriminantCase& c, std::int64_t two_to_rank,
                    const char* which) {
    auto rk = log2_exact(two_to_rank);
    if (!rk)
        throw InternalInconsistency("d = " + std::to_string(c.d_K) + ": 2^rk4 of " +
                                    which + " evaluated to " +
                                    std::to_string(two_to_rank) +
                                    ", not a positive power of 2");
    return *rk;
}

} // namespace

const char* case_name(CaseTag tag) {
    switch (tag) {
    case CaseTag::OneMod4:
        return "1mod4";
    case CaseTag::ZeroMod8:
        return "0mod8";
    case CaseTag::FourMod8:
        return "4mod8";
    }
    return "?";
}

const char* equality_name(Equality e) {
    return e == Equality::Equal ? "equal" : "plus_one";
}

DiscriminantCase classify(std::int64_t d) {
    if (d <= 0)
        throw NotFundamental("d must be positive, got " + std::to_string(d));
    if (d > kMaxDiscriminant)
        throw NotFundamental("d = " + std::to_string(d) + " exceeds the supported range");

    if (d % 2 != 0) {
        if (d % 4 != 1)
            throw NotFundamental("d = " + std::to_string(d) +
                                 ": an odd discriminant must be 1 (mod 4); for D = " +
                                 std::to_string(d) + " = 3 (mod 4) use d = 4*" +
                                 std::to_string(d) + " = " + std::to_string(4 * d));
        if (d == 1)
            throw NotFundamental("d = 1 is not the discriminant of a real quadratic field");
        return {CaseTag::OneMod4, core_of(d, d), d, -4 * d};
    }
    if (d % 8 == 0)
        return {CaseTag::ZeroMod8, core_of(d, d / 8), d, -d};
    if (d % 8 == 4) {
        const std::int64_t core = d / 4;
        if (core % 4 != 3)
            throw NotFundamental("d = " + std::to_string(d) + " = 4*" +
                                 std::to_string(core) + ": the 4 (mod 8) shape requires " +
                                 std::to_string(core) + " = 3 (mod 4)");
        return {CaseTag::FourMod8, core_of(d, core), d, -core};
    }
    throw NotFundamental("d = " + std::to_string(d) +
                         ": no discriminant is 2 (mod 4)");
}

RankReport rank_pair(const DiscriminantCase& c, const RankOptions& opt) {
    RankReport report;
    report.disc = c;

    const auto term = [&](const char* label, std::int64_t u, std::int64_t v) {
        std::int64_t value = checked_e_term(c, u, v, opt.cross_check);
        report.e_terms.push_back(ETerm{label, value});
        return value;
    };

    switch (c.tag) {
    case CaseTag::OneMod4: {
        const std::int64_t em11 = term("E(-1,1)", -1, 1);
        const std::int64_t e11 = term("E(1,1)", 1, 1);
        const std::int64_t e22 = term("E(2,2)", 2, 2);
        report.rk4_K = rank_from_power(c, em11 / 2, "K");
        report.rk4_sharp = rank_from_power(c, (e11 + e22) / 2, "K#");
        report.equality = e22 == 0 ? Equality::Equal : Equality::PlusOne;
        report.criterion = e22 == 0 ? "E(2,2)=0" : "E(2,2)!=0";
        break;
    }
    case CaseTag::ZeroMod8: {
        const std::int64_t em21 = term("E(-2,1)", -2, 1);
        const std::int64_t em12 = term("E(-1,2)", -1, 2);
        const std::int64_t e21 = term("E(2,1)", 2, 1);
        report.rk4_K = rank_from_power(c, (em21 + em12) / 2, "K");
        report.rk4_sharp = rank_from_power(c, e21, "K#");
        report.equality =
            report.rk4_sharp == report.rk4_K ? Equality::Equal : Equality::PlusOne;
        break;
    }
    case CaseTag::FourMod8: {
        const std::int64_t em11 = term("E(-1,1)", -1, 1);
        const std::int64_t em22 = term("E(-2,2)", -2, 2);
        const std::int64_t e11 = term("E(1,1)", 1, 1);
        report.rk4_K = rank_from_power(c, (em11 + em22) / 2, "K");
        report.rk4_sharp = rank_from_power(c, e11 / 2, "K#");
        report.equality = em22 == 0 ? Equality::PlusOne : Equality::Equal;
        report.criterion = em22 == 0 ? "E(-2,2)=0" : "E(-2,2)!=0";
        break;
    }
    }
    return report;
}

EqualityDecision equality_case(const DiscriminantCase& c) {
    switch (c.tag) {
    case CaseTag::OneMod4: {
        const bool zero = affine::e_affine(c.D, 2, 2) == 0;
        return {zero ? Equality::Equal : Equality::PlusOne,
                zero ? "E(2,2)=0" : "E(2,2)!=0"};
    }
    case CaseTag::FourMod8: {
        const bool zero = affine::e_affine(c.D, -2, 2) == 0;
        return {zero ? Equality::PlusOne : Equality::Equal,
                zero ? "E(-2,2)=0" : "E(-2,2)!=0"};
    }
    case CaseTag::ZeroMod8:
    default: {
        const RankReport r = rank_pair(c);
        return {r.equality, ""};
    }
    }
}

UeharaReport uehara_check(const DiscriminantCase& c) {
    UeharaReport report;
    for (std::int64_t p : c.D.primes) {
        const std::int64_t r = p % 8;
        if (r != 1 && r != 7)
            return report; // not applicable
    }
    report.applicable = true;

    switch (c.tag) {
    case CaseTag::OneMod4:
        report.predicted = Equality::PlusOne;
        break;
    case CaseTag::ZeroMod8:
        report.predicted =
            c.D.value % 4 == 3 ? Equality::PlusOne : Equality::Equal;
        break;
    case CaseTag::FourMod8:
        report.predicted = Equality::Equal;
        break;
    }

    const RankReport ranks = rank_pair(c);
    report.observed = ranks.rk4_sharp == ranks.rk4_K ? Equality::Equal : Equality::PlusOne;
    if (report.observed != report.predicted)
        throw AssertionFailed("equality-case prediction failed at d = " +
                              std::to_string(c.d_K) + " (D = " +
                              std::to_string(c.D.value) + "): predicted " +
                              equality_name(report.predicted) + ", observed " +
                              equality_name(report.observed));
    return report;
}

void ScanAggregate::add(const RankReport& r) {
    ++reports;
    if (!(r.rk4_K <= r.rk4_sharp && r.rk4_sharp <= r.rk4_K + 1))
        ++spiegel_violations;
    ++joint[{r.rk4_K, r.rk4_sharp}];
}

void ScanAggregate::merge(const ScanAggregate& o) {
    reports += o.reports;
    spiegel_violations += o.spiegel_violations;
    for (const auto& [key, n] : o.joint)
        joint[key] += n;
}

std::uint64_t ScanAggregate::count_rk_k(int r) const {
    std::uint64_t n = 0;
    for (const auto& [key, count] : joint)
        if (key.first == r)
            n += count;
    return n;
}

namespace {

void scan_range_into(std::int64_t lo, std::int64_t hi, const ScanOptions& opt,
                     std::vector<RankReport>* store, ScanAggregate& agg) {
    RankOptions ropt;
    ropt.cross_check = opt.cross_check;
    for (std::int64_t d = lo; d <= hi; ++d) {
        DiscriminantCase c;
        try {
            c = classify(d);
        } catch (const NotFundamental&) {
            continue;
        }
        RankReport r = rank_pair(c, ropt);
        agg.add(r);
        if (store)
            store->push_back(std::move(r));
    }
}

} // namespace

ScanAggregate scan_stream(std::int64_t d_min, std::int64_t d_max,
                          const ScanOptions& opt, const ReportSink& sink) {
    if (d_min < 1 || d_min > d_max)
        throw std::invalid_argument("scan range requires 0 < d_min <= d_max, got [" +
                                    std::to_string(d_min) + ", " +
                                    std::to_string(d_max) + "]");

    const int jobs = std::max(1, opt.jobs);
    ScanAggregate total;

    if (jobs == 1) {
        std::vector<RankReport> buffer;
        std::vector<RankReport>* store = sink ? &buffer : nullptr;
        for (std::int64_t lo = d_min; lo <= d_max;) {
            const std::int64_t hi = std::min(d_max, lo + 65535);
            if (store)
                store->clear();
            scan_range_into(lo, hi, opt, store, total);
            if (sink)
                for (const RankReport& r : buffer)
                    sink(r);
            lo = hi + 1;
        }
        return total;
    }

    constexpr std::int64_t kChunk = 8192;
    const std::size_t n_chunks =
        static_cast<std::size_t>((d_max - d_min) / kChunk + 1);

    struct ChunkResult {
        std::vector<RankReport> reports;
        ScanAggregate agg;
        bool done = false;
    };
    std::vector<ChunkResult> results(n_chunks);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex mtx;
    std::condition_variable cv;

    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n_chunks)
                return;
            const std::int64_t lo = d_min + static_cast<std::int64_t>(i) * kChunk;
            const std::int64_t hi = std::min(d_max, lo + kChunk - 1);
            ChunkResult local;
            try {
                scan_range_into(lo, hi, opt, sink ? &local.reports : nullptr, local.agg);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mtx);
                if (!first_error)
                    first_error = std::current_exception();
                failed.store(true);
                cv.notify_all();
                return;
            }
            {
                std::lock_guard<std::mutex> lock(mtx);
                results[i] = std::move(local);
                results[i].done = true;
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j)
        pool.emplace_back(worker);

    // Consume chunks in order so the sink observes ascending d.
    {
        std::unique_lock<std::mutex> lock(mtx);
        for (std::size_t i = 0; i < n_chunks; ++i) {
            cv.wait(lock, [&] { return results[i].done || failed.load(); });
            if (failed.load())
                break;
            ChunkResult chunk = std::move(results[i]);
            lock.unlock();
            if (sink)
                for (const RankReport& r : chunk.reports)
                    sink(r);
            total.merge(chunk.agg);
            lock.lock();
        }
    }
    for (auto& t : pool)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);
    return total;
}

ScanResult scan(std::int64_t d_min, std::int64_t d_max, const ScanOptions& opt) {
    ScanResult out;
    out.agg = scan_stream(d_min, d_max, opt,
                          [&](const RankReport& r) { out.reports.push_back(r); });
    return out;
}

std::vector<DensityRow> density_compare(std::int64_t X, const ScanOptions& opt) {
    if (X < 1)
        throw std::invalid_argument("density comparison requires X >= 1, got " +
                                    std::to_string(X));
    const ScanAggregate agg = scan_stream(1, X, opt, nullptr);

    std::vector<DensityRow> rows;
    for (int r = 0; r <= 2; ++r) {
        DensityRow row;
        row.r = r;
        row.conditioning = agg.count_rk_k(r);
        row.theo_equal = 1.0 - std::pow(2.0, -(r + 1));
        row.theo_plus = std::pow(2.0, -(r + 1));
        if (row.conditioning == 0) {
            row.insufficient = true;
        } else {
            const auto at = [&](int s) {
                auto it = agg.joint.find({r, s});
                return it == agg.joint.end() ? std::uint64_t{0} : it->second;
            };
            row.emp_equal =
                static_cast<double>(at(r)) / static_cast<double>(row.conditioning);
            row.emp_plus =
                static_cast<double>(at(r + 1)) / static_cast<double>(row.conditioning);
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace spiegel::rank4
