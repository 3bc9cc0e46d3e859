#ifndef LEXSHELL_CONSTRUCTIONS_HPP
#define LEXSHELL_CONSTRUCTIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lexshell/rao.hpp"
#include "lexshell/shelling.hpp"
#include "lexshell/simplicial.hpp"

namespace lexshell {

// Bounded poset made of a 3-chain and a 2-chain sharing endpoints; the
// smallest gadget whose atom order is forced in every recursive atom
// ordering.
Poset pentagon();

// Loads a .cplx file and validates the properties the graded construction
// relies on: pure 2-dimensional, shellable, has a facet {1,3,4}, and that
// facet is last in every shelling. A transcription mistake in the data file
// fails here instead of propagating.
SimplicialComplex load_hachimori(const std::string& path,
                                 std::uint64_t budget = kDefaultNodeBudget);

// Four copies (indexed a..d) of the dual face lattice of h, with the special
// facet and the top identified across copies, a new bottom, a new element x
// below all facet elements, and cross-copy covers between equal-or-adjacent
// indices.
Poset build_graded_example(const SimplicialComplex& h, int special_facet);

// Names used by build_graded_example.
std::string graded_copy_name(const SimplicialComplex& h, const Face& face, int copy);
extern const char* const kGradedBottom;  // "0^"
extern const char* const kGradedTop;     // "1^"
extern const char* const kGradedX;       // "x"
std::string graded_copy_bottom(int copy); // "0^_a" .. "0^_d"

// Materializes the recursive atom ordering certificate for the graded
// example, following the block recipes keyed on root context and the fixed
// shelling of h (which must end at special_facet). Ties inside blocks break
// canonically.
RaoCertificate build_graded_rao(const Poset& P, const SimplicialComplex& h, int special_facet,
                                const ShellingOrder& shelling);

// Loads the ungraded counterexample and validates the structural statements
// the verdict rests on: bounded, ungraded, atoms {x, a1..a6}, two covers per
// a_i both covering x, an element y with atoms d1..d6, every element of
// height >= 2 above x, and per a_i an atom of [y,1^] above the other covers
// of a_i.
Poset load_ungraded_example(const std::string& path);

} // namespace lexshell

#endif
