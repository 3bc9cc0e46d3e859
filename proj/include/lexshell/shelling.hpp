#ifndef LEXSHELL_SHELLING_HPP
#define LEXSHELL_SHELLING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lexshell/labeling.hpp"
#include "lexshell/simplicial.hpp"

namespace lexshell {

// Linear order on all facets, by facet index into c.facets().
using ShellingOrder = std::vector<int>;

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct SearchStats {
    std::uint64_t nodes = 0; // prefix extensions attempted
};

struct ShellingCheck {
    bool ok = true;
    int first_bad_index = -1;               // 1-based position k of the offending facet
    std::vector<Face> offending_maximal;    // maximal intersection faces at k
};

// Definition check: for every k >= 2 the intersection of facet k with the
// union of its predecessors must be pure of dimension dim(F_k) - 1.
ShellingCheck is_shelling(const SimplicialComplex& c, const ShellingOrder& order);

// Lexicographically least shelling order, or nullopt after exhaustive search.
// Backtracking with prefix pruning and a memo of dead facet sets; throws
// ResourceLimitError when the node budget runs out.
std::optional<ShellingOrder> find_shelling(const SimplicialComplex& c,
                                           std::uint64_t budget = kDefaultNodeBudget,
                                           SearchStats* stats = nullptr);

// Least shelling whose final facet is `last`, or nullopt.
std::optional<ShellingOrder> find_shelling_ending_at(const SimplicialComplex& c, int last,
                                                     std::uint64_t budget = kDefaultNodeBudget,
                                                     SearchStats* stats = nullptr);

// True iff facet f is the last facet of every shelling of c.
// Requires c shellable (NotShellableError otherwise).
bool forced_last_facet(const SimplicialComplex& c, int f,
                       std::uint64_t budget = kDefaultNodeBudget, SearchStats* stats = nullptr);

struct LexOrderCheck {
    bool labeling_ok = false;  // l verified as an EL-labeling
    bool shelling_ok = false;  // lex order of maximal chains shells the order complex
    bool vacuous = false;      // proper part empty
    ShellingCheck detail;
};

// Theorem check: sorting the maximal chains of p by their label sequences and
// reading them as facets of the order complex of the proper part must give a
// shelling whenever l is an EL-labeling.
LexOrderCheck lex_order_shelling_check(const Poset& p, const EdgeLabeling& l,
                                       IncreaseMode mode = IncreaseMode::Weak);

} // namespace lexshell

#endif
