#include "lexshell/report.hpp"

#include <ostream>

namespace lexshell {

void write_report(std::ostream& out, const Report& r) {
    for (const auto& [k, v] : r.header) out << k << ": " << v << "\n";
    out << "\n";
    out << "verdict: " << r.verdict << "\n";
    if (!r.subject.empty()) out << "subject: " << r.subject << "\n";
    for (const auto& line : r.detail) out << line << "\n";
    if (!r.certificate.empty()) {
        out << "\ncertificate:\n";
        for (const auto& line : r.certificate) out << line << "\n";
    }
    if (!r.counterexample.empty()) {
        out << "\ncounterexample:\n";
        for (const auto& line : r.counterexample) out << line << "\n";
    }
    out << "\nstats:\n";
    out << "nodes: " << r.nodes << "\n";
    if (r.deterministic)
        out << "time-ms: -\n";
    else
        out << "time-ms: " << r.wall_ms << "\n";
}

} // namespace lexshell
