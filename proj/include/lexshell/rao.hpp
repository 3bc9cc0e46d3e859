#ifndef LEXSHELL_RAO_HPP
#define LEXSHELL_RAO_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lexshell/poset.hpp"

namespace lexshell {

// One node of a recursive atom ordering certificate. A node describes the
// interval [element, 1^]; children line up with `ordering` and are null for
// atoms whose interval has length <= 1 (the recursion bottoms out there).
struct RaoNode {
    ElemId element = -1;
    std::vector<ElemId> ordering;
    std::vector<std::unique_ptr<RaoNode>> children;
};

// Certificate tree rooted at [0^, 1^]; a null root is the trivial
// certificate for posets of length 1.
struct RaoCertificate {
    std::unique_ptr<RaoNode> root;
};

RaoCertificate clone(const RaoCertificate& cert);
bool certificates_equal(const RaoCertificate& a, const RaoCertificate& b);

struct RaoCheck {
    bool ok = true;
    std::vector<ElemId> fail_path; // elements from the root down to the bad node
    std::string reason;
};

// Checks both conditions of the recursive atom ordering definition at every
// node: the ordering is a permutation of the atoms, atoms above earlier
// siblings form a prefix of each child ordering, and for every pair of atoms
// below a common element a suitable earlier-covered atom exists.
RaoCheck verify_rao(const Poset& p, const RaoCertificate& cert);

// Exhaustive backtracking search; nullopt soundly certifies that no
// recursive atom ordering exists. Returns the lexicographically least
// certificate (canonical atom order at each node, depth-first).
std::optional<RaoCertificate> find_rao(const Poset& p, std::uint64_t budget = 10'000'000,
                                       std::uint64_t* nodes_out = nullptr);

// One atom order per element, shared by every node instance of that element.
struct RootIndependentOrderFamily {
    std::map<ElemId, std::vector<ElemId>> orders;
};

// Searches for a family whose instantiation passes verify_rao on [u, 1^] for
// every element u simultaneously. nullopt after exhaustive search certifies
// that no EL-shelling exists (an EL-shelling would induce such a family).
std::optional<RootIndependentOrderFamily> find_root_independent_rao(
    const Poset& p, std::uint64_t budget = 10'000'000, std::uint64_t* nodes_out = nullptr);

// Expand a family into the certificate tree it induces.
RaoCertificate instantiate_family(const Poset& p, const RootIndependentOrderFamily& fam);

// Atoms of [u, 1^] lying above at least one element of `earlier`. In any
// certificate node for u reached after exactly the atoms in `earlier`, this
// set must be a prefix of u's ordering.
std::vector<ElemId> forced_first_set(const Poset& p, ElemId u,
                                     const std::vector<ElemId>& earlier);

struct ObstructionWitness {
    int context_a = -1, context_b = -1;        // indices into the input list
    std::vector<ElemId> set_a, set_b;          // their forced-first sets
};

// Two contexts whose forced-first sets are not nested can never both be
// prefixes of one ordering of atoms(u); such a witness plus the
// root-independence lemma rules out EL-shellability without global search.
std::optional<ObstructionWitness> el_obstruction(
    const Poset& p, ElemId u, const std::vector<std::vector<ElemId>>& contexts);

// Minimal elements of {y : y > a and y > b}.
std::vector<ElemId> minimal_common_uppers(const Poset& p, ElemId a, ElemId b);

} // namespace lexshell

#endif
