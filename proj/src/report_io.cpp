#include "spiegel/report_io.hpp"

namespace spiegel::report_io {

std::string csv_header() { return "d,case,D,omega,rk4_K,rk4_sharp,equality,criterion"; }

std::string csv_row(const rank4::RankReport& r) {
    std::string out;
    out += std::to_string(r.disc.d_K);
    out += ',';
    out += rank4::case_name(r.disc.tag);
    out += ',';
    out += std::to_string(r.disc.D.value);
    out += ',';
    out += std::to_string(r.disc.D.omega());
    out += ',';
    out += std::to_string(r.rk4_K);
    out += ',';
    out += std::to_string(r.rk4_sharp);
    out += ',';
    out += rank4::equality_name(r.equality);
    out += ',';
    out += r.criterion;
    return out;
}

std::string json_row(const rank4::RankReport& r) {
    std::string out = "{\"d\":";
    out += std::to_string(r.disc.d_K);
    out += ",\"case\":\"";
    out += rank4::case_name(r.disc.tag);
    out += "\",\"D\":";
    out += std::to_string(r.disc.D.value);
    out += ",\"omega\":";
    out += std::to_string(r.disc.D.omega());
    out += ",\"rk4_K\":";
    out += std::to_string(r.rk4_K);
    out += ",\"rk4_sharp\":";
    out += std::to_string(r.rk4_sharp);
    out += ",\"equality\":\"";
    out += rank4::equality_name(r.equality);
    out += "\",\"criterion\":\"";
    out += r.criterion; // values are from a fixed set, no escaping needed
    out += "\"}";
    return out;
}

std::string human_block(const rank4::RankReport& r) {
    std::string out;
    out += "d        = " + std::to_string(r.disc.d_K) + " (" +
           rank4::case_name(r.disc.tag) + ")\n";
    out += "D        = " + std::to_string(r.disc.D.value) + " (omega " +
           std::to_string(r.disc.D.omega()) + ")\n";
    out += "d_sharp  = " + std::to_string(r.disc.d_sharp) + "\n";
    out += "E-terms  :";
    for (const auto& t : r.e_terms)
        out += " " + t.label + "=" + std::to_string(t.value);
    out += "\n";
    out += "rk4(K)   = " + std::to_string(r.rk4_K) + "\n";
    out += "rk4(K#)  = " + std::to_string(r.rk4_sharp) + "\n";
    out += "equality : " + std::string(rank4::equality_name(r.equality));
    if (!r.criterion.empty())
        out += " [" + r.criterion + "]";
    out += "\n";
    return out;
}

} // namespace spiegel::report_io
