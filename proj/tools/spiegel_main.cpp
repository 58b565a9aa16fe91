// Command-line front end: single-discriminant reports, range scans, the
// character-sum identity suite, class-group cross-checks, and density
// statistics. Exit codes: 0 success, 1 invalid input, 2 consistency failure.

#include <cinttypes>
#include <cstdio>
#include <exception>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "spiegel/arith.hpp"
#include "spiegel/charsum.hpp"
#include "spiegel/forms.hpp"
#include "spiegel/rank4.hpp"
#include "spiegel/report_io.hpp"

namespace {

using namespace spiegel;

int cmd_rank4(std::int64_t d, const std::string& format, bool cross_check) {
    const rank4::DiscriminantCase c = rank4::classify(d);
    rank4::RankOptions opt;
    opt.cross_check = cross_check;
    const rank4::RankReport r = rank4::rank_pair(c, opt);
    if (format == "csv")
        std::cout << report_io::csv_header() << '\n' << report_io::csv_row(r) << '\n';
    else if (format == "json")
        std::cout << report_io::json_row(r) << '\n';
    else
        std::cout << report_io::human_block(r);
    return 0;
}

int cmd_scan(std::int64_t d_min, std::int64_t d_max, int jobs, bool cross_check,
             const std::string& format) {
    if (d_min < 1 || d_min > d_max) {
        std::cerr << "invalid range [" << d_min << ", " << d_max << "]\n";
        return 1;
    }
    rank4::ScanOptions opt;
    opt.jobs = jobs;
    opt.cross_check = cross_check;

    if (format == "csv")
        std::cout << report_io::csv_header() << '\n';
    const rank4::ScanAggregate agg = rank4::scan_stream(
        d_min, d_max, opt, [&](const rank4::RankReport& r) {
            std::cout << (format == "json" ? report_io::json_row(r)
                                           : report_io::csv_row(r))
                      << '\n';
        });

    std::cerr << "scan [" << d_min << ", " << d_max << "]: " << agg.reports
              << " discriminants, spiegelungssatz holds for "
              << (agg.reports - agg.spiegel_violations) << "/" << agg.reports << '\n';
    return agg.spiegel_violations == 0 ? 0 : 2;
}

int cmd_identities(std::int64_t D) {
    arith::FactoredOddSquarefree f;
    try {
        f = arith::factor_squarefree_odd(D);
    } catch (const NotOddSquarefree& e) {
        std::cerr << "D = " << D << " rejected: " << e.what() << '\n';
        return 1;
    }
    const charsum::IdentityReport report = charsum::identity_report(f);
    for (const auto& c : report.checks) {
        if (!c.applicable) {
            std::cout << "SKIP " << c.name << " (not applicable for D = " << report.D
                      << ")\n";
            continue;
        }
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.cases_checked
                  << (c.cases_checked == 1 ? " case)" : " cases)");
        if (!c.pass)
            std::cout << " at " << c.detail;
        std::cout << '\n';
    }
    return report.all_pass() ? 0 : 2;
}

int cmd_oracle(std::int64_t d) {
    const rank4::DiscriminantCase c = rank4::classify(d);
    const rank4::RankReport r = rank4::rank_pair(c);
    const int oracle_k = forms::rk4_oracle(c.d_K);
    const int oracle_sharp = forms::rk4_oracle(c.d_sharp);
    const bool agree = oracle_k == r.rk4_K && oracle_sharp == r.rk4_sharp;
    std::cout << "d=" << d << ": formula rk4(K)=" << r.rk4_K
              << " rk4(K#)=" << r.rk4_sharp << "; class group rk4(K)=" << oracle_k
              << " rk4(K#)=" << oracle_sharp << (agree ? " -- agree" : " -- MISMATCH")
              << '\n';
    return agree ? 0 : 2;
}

int cmd_stats(std::int64_t max, int jobs) {
    rank4::ScanOptions opt;
    opt.jobs = jobs;
    std::cerr << "scanning fundamental discriminants up to " << max << "...\n";
    const auto rows = rank4::density_compare(max, opt);
    std::printf("%-3s %-12s %-12s %-12s %-12s %-12s %s\n", "r", "n", "P(s=r)",
                "limit", "P(s=r+1)", "limit", "note");
    for (const auto& row : rows) {
        if (row.insufficient)
            std::printf("%-3d %-12" PRIu64 " %-12s %-12.6f %-12s %-12.6f %s\n", row.r,
                        row.conditioning, "-", row.theo_equal, "-", row.theo_plus,
                        "insufficient-data");
        else
            std::printf("%-3d %-12" PRIu64 " %-12.6f %-12.6f %-12.6f %-12.6f\n", row.r,
                        row.conditioning, row.emp_equal, row.theo_equal, row.emp_plus,
                        row.theo_plus);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"4-rank of narrow class groups of quadratic fields and their "
                 "reflections, by divisor counting, character sums and affine "
                 "systems over F2, with a quadratic-form class-group cross-check"};
    app.require_subcommand(1);

    std::int64_t d = 0;
    std::string format = "human";
    bool cross_check = false;
    auto* rank4_cmd =
        app.add_subcommand("rank4", "rank report for one positive discriminant");
    rank4_cmd->add_option("d", d, "discriminant of a real quadratic field")->required();
    rank4_cmd->add_option("--format", format, "human, csv or json")
        ->check(CLI::IsMember({"human", "csv", "json"}));
    rank4_cmd->add_flag("--cross-check", cross_check,
                        "recompute every E-term by all three methods");

    std::int64_t d_min = 1, d_max = 0;
    int jobs = 1;
    bool scan_cross = false;
    std::string scan_format = "csv";
    auto* scan_cmd = app.add_subcommand("scan", "rank reports over a range of d");
    scan_cmd->add_option("--min", d_min, "lower end of the range")->required();
    scan_cmd->add_option("--max", d_max, "upper end of the range")->required();
    scan_cmd->add_option("--jobs", jobs, "worker threads");
    scan_cmd->add_flag("--cross-check", scan_cross,
                       "recompute every E-term by all three methods");
    scan_cmd->add_option("--format", scan_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    std::int64_t ident_d = 0;
    auto* ident_cmd =
        app.add_subcommand("identities", "character-sum identity suite for one D");
    ident_cmd->add_option("D", ident_d, "positive odd squarefree integer")->required();

    std::int64_t oracle_d = 0;
    auto* oracle_cmd = app.add_subcommand(
        "oracle", "compare formula ranks against the form class group");
    oracle_cmd->add_option("d", oracle_d, "discriminant of a real quadratic field")
        ->required();

    std::int64_t stats_max = 0;
    int stats_jobs = 1;
    auto* stats_cmd =
        app.add_subcommand("stats", "empirical equality-case densities up to X");
    stats_cmd->add_option("--max", stats_max, "scan fundamental d in (0, X]")->required();
    stats_cmd->add_option("--jobs", stats_jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (rank4_cmd->parsed())
            return cmd_rank4(d, format, cross_check);
        if (scan_cmd->parsed())
            return cmd_scan(d_min, d_max, jobs, scan_cross, scan_format);
        if (ident_cmd->parsed())
            return cmd_identities(ident_d);
        if (oracle_cmd->parsed())
            return cmd_oracle(oracle_d);
        if (stats_cmd->parsed())
            return cmd_stats(stats_max, stats_jobs);
    } catch (const InternalInconsistency& e) {
        std::cerr << "consistency failure: " << e.what() << '\n';
        return 2;
    } catch (const AssertionFailed& e) {
        std::cerr << "consistency failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
