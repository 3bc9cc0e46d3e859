#ifndef LEXSHELL_LABELING_HPP
#define LEXSHELL_LABELING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lexshell/poset.hpp"

namespace lexshell {

// Def 2 asks for a unique weakly increasing chain, Def 4 for a strictly
// increasing one; both verifiers take the mode explicitly.
enum class IncreaseMode { Weak, Strict };

// Integer labels on the cover relation of one poset.
class EdgeLabeling {
public:
    void set(ElemId u, ElemId v, int label) { labels_[{u, v}] = label; }
    std::optional<int> get(ElemId u, ElemId v) const;
    int at(ElemId u, ElemId v) const; // IncompleteLabelingError when missing
    const std::map<std::pair<ElemId, ElemId>, int>& entries() const { return labels_; }

private:
    std::map<std::pair<ElemId, ElemId>, int> labels_;
};

// Rooted edge: the saturated chain from the bottom up to and including u,
// plus the cover (u, v). Labels may depend on the whole prefix.
struct RootedEdgeKey {
    Chain prefix; // starts at the bottom, ends at u
    ElemId upper; // v with u covered by v
    bool operator<(const RootedEdgeKey& o) const {
        return prefix != o.prefix ? prefix < o.prefix : upper < o.upper;
    }
};

class ChainEdgeLabeling {
public:
    // Root-independent lift of an edge labeling.
    static ChainEdgeLabeling lift(const EdgeLabeling& base);
    // Explicit rooted-edge map.
    static ChainEdgeLabeling from_entries(const std::map<RootedEdgeKey, int>& entries);

    int at(const Chain& prefix, ElemId upper) const;
    bool root_independent() const { return lifted_; }
    const EdgeLabeling& base() const { return base_; }
    const std::map<RootedEdgeKey, int>& entries() const { return entries_; }

private:
    bool lifted_ = false;
    EdgeLabeling base_;
    std::map<RootedEdgeKey, int> entries_;
};

struct ElCheck {
    bool ok = true;
    ElemId fail_x = -1, fail_y = -1;
    std::string reason;
};

struct ClCheck {
    bool ok = true;
    ElemId fail_x = -1, fail_y = -1;
    Chain fail_root;
    std::string reason;
};

// Every closed interval must have exactly one increasing maximal chain whose
// label sequence strictly lex-precedes every other maximal chain's sequence.
ElCheck verify_el_labeling(const Poset& p, const EdgeLabeling& l, IncreaseMode mode);

// Rooted variant: the condition is checked in every rooted interval, with
// labels read relative to the root prefix.
ClCheck verify_cl_labeling(const Poset& p, const ChainEdgeLabeling& l, IncreaseMode mode);

// Backtracking search for an EL-labeling with labels in {1..alphabet_size}.
// A nullopt result is NOT a proof that p has no EL-labeling; the sound
// non-EL certificate is the root-independence obstruction in the rao module.
std::optional<EdgeLabeling> search_el_labeling(const Poset& p, int alphabet_size,
                                               IncreaseMode mode,
                                               std::uint64_t budget = 10'000'000,
                                               std::uint64_t* nodes_out = nullptr);

// Shared sequence comparison: elementwise; on a tie through the shorter
// length the shorter sequence precedes.
bool lex_precedes(const std::vector<int>& a, const std::vector<int>& b);
bool is_increasing(const std::vector<int>& seq, IncreaseMode mode);

} // namespace lexshell

#endif
