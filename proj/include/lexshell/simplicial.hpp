#ifndef LEXSHELL_SIMPLICIAL_HPP
#define LEXSHELL_SIMPLICIAL_HPP

#include <string>
#include <vector>

#include "lexshell/poset.hpp"

namespace lexshell {

// Vertex subset, sorted by vertex id.
using Face = std::vector<int>;

// Abstract simplicial complex given by its inclusion-maximal faces.
// Vertices are opaque tokens mapped to dense ids in bytewise-lex order.
class SimplicialComplex {
public:
    static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets);

    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    const std::string& vertex_name(int v) const { return vertex_names_.at(v); }
    int vertex_id(std::string_view name) const;

    // Facets sorted lexicographically (as sorted id vectors); this is the
    // canonical facet order used by searches and certificates.
    const std::vector<Face>& facets() const { return facets_; }
    int facet_count() const { return static_cast<int>(facets_.size()); }

    int dimension() const; // max facet size - 1
    bool is_pure() const;

    // Index of a facet given by vertex names; NotAFacetError if absent.
    int facet_index(const std::vector<std::string>& vertices) const;

    std::string face_label(const Face& f) const; // names joined by spaces

private:
    std::vector<std::string> vertex_names_;
    std::vector<Face> facets_;
};

// Order complex: vertices are poset elements, facets are maximal chains.
// With strip_bounds the proper part of a bounded poset is used instead
// (EmptyPosetError when nothing remains).
SimplicialComplex order_complex(const Poset& p, bool strip_bounds);

// Bounded poset with the whole complex at the bottom, the facets of c as
// atoms, all smaller nonempty faces above them by reverse inclusion, and the
// empty face as the top.
Poset dual_face_lattice(const SimplicialComplex& c);

// Element name used for a face inside dual_face_lattice output.
std::string face_element_name(const SimplicialComplex& c, const Face& f);

} // namespace lexshell

#endif
