#ifndef SPIEGEL_REPORT_IO_HPP
#define SPIEGEL_REPORT_IO_HPP

#include <string>

#include "spiegel/rank4.hpp"

namespace spiegel::report_io {

/// Fixed column order shared by the CSV and JSON emitters:
/// d, case, D, omega, rk4_K, rk4_sharp, equality, criterion.
std::string csv_header();
std::string csv_row(const rank4::RankReport& r);

/// One JSON object per line, same fields in the same order.
std::string json_row(const rank4::RankReport& r);

/// Multi-line human-readable block for a single discriminant.
std::string human_block(const rank4::RankReport& r);

} // namespace spiegel::report_io

#endif
