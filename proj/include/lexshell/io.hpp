#ifndef LEXSHELL_IO_HPP
#define LEXSHELL_IO_HPP

#include <iosfwd>
#include <string>

#include "lexshell/labeling.hpp"
#include "lexshell/poset.hpp"
#include "lexshell/rao.hpp"
#include "lexshell/simplicial.hpp"

namespace lexshell {

// All formats are UTF-8 and line oriented; '#' starts a comment and tokens
// are whitespace separated (so tokens cannot contain whitespace).

// .poset: `cover <u> <v>` per Hasse edge, optional `elem <u>` declarations.
Poset load_poset(const std::string& path);
Poset read_poset(std::istream& in, const std::string& what);
void write_poset(std::ostream& out, const Poset& p);
void save_poset(const std::string& path, const Poset& p);

// .cplx: one facet per line as vertex tokens.
SimplicialComplex load_complex(const std::string& path);
SimplicialComplex read_complex(std::istream& in, const std::string& what);
void write_complex(std::ostream& out, const SimplicialComplex& c);
void save_complex(const std::string& path, const SimplicialComplex& c);

// .shell: one facet per line as vertex tokens, in shelling order.
std::vector<int> load_shelling(const std::string& path, const SimplicialComplex& c);
void write_shelling(std::ostream& out, const SimplicialComplex& c,
                    const std::vector<int>& order);
void save_shelling(const std::string& path, const SimplicialComplex& c,
                   const std::vector<int>& order);

// .lbl: `u v k` with integer k for the cover u < v.
EdgeLabeling load_labeling(const std::string& path, const Poset& p);
void write_labeling(std::ostream& out, const Poset& p, const EdgeLabeling& l);
void save_labeling(const std::string& path, const Poset& p, const EdgeLabeling& l);

// .cll: `u0>u1>...>uk : label` labels the edge (u_{k-1}, u_k) under the root
// prefix u0..u_{k-1}. Duplicate keys with conflicting labels are an error.
ChainEdgeLabeling load_chain_labeling(const std::string& path, const Poset& p);

// .rao: indented certificate tree, `<element>: <atom> <atom> ...` per node,
// children two spaces deeper, written in ordering order.
RaoCertificate load_rao(const std::string& path, const Poset& p);
RaoCertificate read_rao(std::istream& in, const Poset& p, const std::string& what);
void write_rao(std::ostream& out, const Poset& p, const RaoCertificate& cert);
void save_rao(const std::string& path, const Poset& p, const RaoCertificate& cert);

// .rif: flat `<element>: <atom> <atom> ...` lines, one per element,
// canonical element order.
RootIndependentOrderFamily load_family(const std::string& path, const Poset& p);
void write_family(std::ostream& out, const Poset& p, const RootIndependentOrderFamily& fam);
void save_family(const std::string& path, const Poset& p,
                 const RootIndependentOrderFamily& fam);

} // namespace lexshell

#endif
