#include "wdlkit/report.hpp"

namespace wdlkit {

std::string to_line(const CheckResult& r) {
    if (r.passed) return "PASS " + r.id;
    std::string out = "FAIL " + r.id + " witness";
    for (const auto& [var, value] : r.witness) out += " " + var + "=" + value;
    out += " lhs=" + r.lhs + " rhs=" + r.rhs;
    return out;
}

std::string to_text(const AxiomReport& r) {
    std::string out;
    for (const auto& e : r.entries) out += to_line(e) + "\n";
    return out;
}

} // namespace wdlkit
