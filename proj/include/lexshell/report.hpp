#ifndef LEXSHELL_REPORT_HPP
#define LEXSHELL_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace lexshell {

// Plain key-colon-value report, grouped into blank-line-separated sections.
// In deterministic mode the output is byte-for-byte reproducible for
// identical inputs and limits (wall time is printed as "-").
struct Report {
    std::vector<std::pair<std::string, std::string>> header;
    std::string verdict;       // holds | fails | not-found | resource-limit
    std::string subject;
    std::vector<std::string> detail;         // extra verdict-section lines
    std::vector<std::string> certificate;    // lines under "certificate:"
    std::vector<std::string> counterexample; // lines under "counterexample:"
    std::uint64_t nodes = 0;
    bool deterministic = true;
    long long wall_ms = 0;
};

void write_report(std::ostream& out, const Report& r);

} // namespace lexshell

#endif
