#ifndef LEXSHELL_TEST_HELPERS_HPP
#define LEXSHELL_TEST_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "lexshell/constructions.hpp"
#include "lexshell/labeling.hpp"
#include "lexshell/poset.hpp"
#include "lexshell/rao.hpp"
#include "lexshell/shelling.hpp"
#include "lexshell/simplicial.hpp"

namespace lexshell::testing {

std::string data_path(const std::string& name);

// Boolean lattice B_n: subsets of {1..n}; the empty set is named "-".
Poset boolean_lattice(int n);

// Standard EL-labeling of B_n: the label of S < S+{i} is i.
EdgeLabeling boolean_standard_labeling(const Poset& b, int n);

// Random bounded poset with at most max_elems elements (including bounds).
Poset random_bounded_poset(std::mt19937& rng, int max_elems);

// Oracle: all shellings of c by checking every permutation (use only for
// small facet counts).
std::vector<ShellingOrder> all_shellings_brute(const SimplicialComplex& c);

// Oracle: recursive atom ordering existence straight from the definition,
// enumerating permutations and checking condition 2 against every common
// upper bound (no minimal-bound shortcut, no memoization).
bool rao_exists_brute(const Poset& p);

// Oracle: verify a certificate straight from the definition (condition 2
// over all common upper bounds).
bool verify_rao_brute(const Poset& p, const RaoCertificate& cert);

} // namespace lexshell::testing

#endif
