#ifndef LEXSHELL_POSET_HPP
#define LEXSHELL_POSET_HPP

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexshell/errors.hpp"

namespace lexshell {

// Elements are dense indices into a name table sorted bytewise; comparing
// ElemId values is the canonical identifier order used everywhere.
using ElemId = int;

// A chain is listed bottom-up; consecutive entries are cover pairs.
using Chain = std::vector<ElemId>;

struct GradedResult {
    bool graded = false;
    int rank = -1; // common maximal-chain length when graded
};

// Finite poset stored by its cover relation (Hasse diagram), immutable after
// construction. Boundedness is checked lazily: only operations that need a
// unique bottom/top throw NotBoundedError.
class Poset {
public:
    // Validates that the pairs form the Hasse diagram of a poset: acyclic,
    // no duplicate pairs, and no pair implied by a longer path.
    static Poset from_covers(const std::vector<std::pair<std::string, std::string>>& covers,
                             const std::vector<std::string>& isolated = {});

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(ElemId e) const { return names_[check(e)]; }
    ElemId id(std::string_view name) const; // throws UnknownElementError
    std::optional<ElemId> find(std::string_view name) const;

    const std::vector<ElemId>& up_covers(ElemId e) const { return up_[check(e)]; }
    const std::vector<ElemId>& down_covers(ElemId e) const { return down_[check(e)]; }

    bool leq(ElemId a, ElemId b) const { return upset_[check(a)].test(check(b)); }
    bool less(ElemId a, ElemId b) const { return a != b && leq(a, b); }

    bool is_bounded() const { return bottom_ >= 0 && top_ >= 0; }
    ElemId bottom() const;
    ElemId top() const;
    int height(ElemId e) const { return heights_[check(e)]; }

    // Elements covering x, in canonical order.
    std::vector<ElemId> atoms(ElemId x) const { return up_[check(x)]; }
    std::vector<ElemId> coatoms(ElemId x) const { return down_[check(x)]; }

    // Induced subposet on {z : x <= z <= y}.
    Poset interval(ElemId x, ElemId y) const;

    Poset dual() const;

    // All maximal chains bottom-to-top, enumerated in identifier-lex order.
    std::vector<Chain> maximal_chains() const;

    GradedResult is_graded() const;

    // Cover pairs in canonical (lower, upper) order.
    std::vector<std::pair<std::string, std::string>> cover_pairs() const;

    // Length of the longest chain between two comparable elements.
    int interval_length(ElemId x, ElemId y) const;

    // Upward-set bitset of e (e itself included); index space is ElemId.
    const boost::dynamic_bitset<>& upset(ElemId e) const { return upset_[check(e)]; }

private:
    Poset() = default;
    int check(ElemId e) const;

    std::vector<std::string> names_;              // sorted, id = index
    std::vector<std::vector<ElemId>> up_;         // covers above, sorted
    std::vector<std::vector<ElemId>> down_;       // covers below, sorted
    std::vector<boost::dynamic_bitset<>> upset_;  // reachability: upset_[u][v] iff u <= v
    std::vector<int> heights_;
    ElemId bottom_ = -1;
    ElemId top_ = -1;
};

// Convenience: resolve a list of names against a poset.
std::vector<ElemId> resolve_elements(const Poset& p, const std::vector<std::string>& names);

} // namespace lexshell

#endif
