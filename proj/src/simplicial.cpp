#include "lexshell/simplicial.hpp"

#include <algorithm>
#include <set>

namespace lexshell {

namespace {

bool subset_of(const Face& a, const Face& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<std::string>>& facets) {
    if (facets.empty()) throw EmptyInputError("complex needs at least one facet");
    std::set<std::string> names;
    for (const auto& f : facets) {
        if (f.empty()) throw EmptyInputError("empty facet");
        for (const auto& v : f) names.insert(v);
    }
    SimplicialComplex c;
    c.vertex_names_.assign(names.begin(), names.end());
    auto vid = [&c](const std::string& s) {
        return static_cast<int>(std::lower_bound(c.vertex_names_.begin(), c.vertex_names_.end(),
                                                 s) -
                                c.vertex_names_.begin());
    };
    for (const auto& f : facets) {
        Face face;
        face.reserve(f.size());
        for (const auto& v : f) face.push_back(vid(v));
        std::sort(face.begin(), face.end());
        face.erase(std::unique(face.begin(), face.end()), face.end());
        c.facets_.push_back(std::move(face));
    }
    std::sort(c.facets_.begin(), c.facets_.end());
    for (size_t i = 0; i < c.facets_.size(); ++i) {
        for (size_t j = 0; j < c.facets_.size(); ++j) {
            if (i != j && subset_of(c.facets_[i], c.facets_[j]))
                throw RedundantFacetError("facet {" + c.face_label(c.facets_[i]) +
                                          "} is contained in {" + c.face_label(c.facets_[j]) +
                                          "}");
        }
    }
    return c;
}

int SimplicialComplex::vertex_id(std::string_view name) const {
    auto it = std::lower_bound(vertex_names_.begin(), vertex_names_.end(), name);
    if (it == vertex_names_.end() || *it != name)
        throw UnknownElementError("unknown vertex '" + std::string(name) + "'");
    return static_cast<int>(it - vertex_names_.begin());
}

int SimplicialComplex::dimension() const {
    size_t d = 0;
    for (const auto& f : facets_) d = std::max(d, f.size());
    return static_cast<int>(d) - 1;
}

bool SimplicialComplex::is_pure() const {
    for (const auto& f : facets_)
        if (f.size() != facets_.front().size()) return false;
    return true;
}

int SimplicialComplex::facet_index(const std::vector<std::string>& vertices) const {
    Face f;
    for (const auto& v : vertices) f.push_back(vertex_id(v));
    std::sort(f.begin(), f.end());
    auto it = std::lower_bound(facets_.begin(), facets_.end(), f);
    if (it == facets_.end() || *it != f) {
        std::string label;
        for (const auto& v : vertices) label += (label.empty() ? "" : " ") + v;
        throw NotAFacetError("{" + label + "} is not a facet");
    }
    return static_cast<int>(it - facets_.begin());
}

std::string SimplicialComplex::face_label(const Face& f) const {
    std::string out;
    for (int v : f) {
        if (!out.empty()) out += ' ';
        out += vertex_names_[v];
    }
    return out;
}

SimplicialComplex order_complex(const Poset& p, bool strip_bounds) {
    std::vector<std::vector<std::string>> facets;
    if (strip_bounds) {
        ElemId b = p.bottom();
        ElemId t = p.top();
        if (p.size() <= 2) throw EmptyPosetError("proper part of the poset is empty");
        for (const auto& chain : p.maximal_chains()) {
            std::vector<std::string> f;
            for (ElemId e : chain)
                if (e != b && e != t) f.push_back(p.name(e));
            facets.push_back(std::move(f));
        }
    } else {
        // Maximal chains of an arbitrary poset: saturated source-to-sink paths.
        std::vector<ElemId> stack;
        std::vector<size_t> pos;
        for (ElemId s = 0; s < p.size(); ++s) {
            if (!p.down_covers(s).empty()) continue;
            stack.assign(1, s);
            pos.assign(1, 0);
            while (!stack.empty()) {
                ElemId u = stack.back();
                const auto& ups = p.up_covers(u);
                if (ups.empty()) {
                    std::vector<std::string> f;
                    for (ElemId e : stack) f.push_back(p.name(e));
                    facets.push_back(std::move(f));
                    stack.pop_back();
                    pos.pop_back();
                    continue;
                }
                if (pos.back() < ups.size()) {
                    stack.push_back(ups[pos.back()++]);
                    pos.push_back(0);
                } else {
                    stack.pop_back();
                    pos.pop_back();
                }
            }
        }
    }
    return SimplicialComplex::from_facets(facets);
}

std::string face_element_name(const SimplicialComplex& c, const Face& f) {
    bool single_char = true;
    for (int v = 0; v < c.vertex_count(); ++v)
        if (c.vertex_name(v).size() != 1) single_char = false;
    std::string out;
    for (int v : f) {
        if (!out.empty() && !single_char) out += '.';
        out += c.vertex_name(v);
    }
    return out;
}

Poset dual_face_lattice(const SimplicialComplex& c) {
    // All nonempty faces, generated from the facets.
    std::set<Face> faces;
    for (const auto& facet : c.facets()) {
        const size_t k = facet.size();
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            Face f;
            for (size_t i = 0; i < k; ++i)
                if (mask & (1u << i)) f.push_back(facet[i]);
            faces.insert(std::move(f));
        }
    }
    const std::string bottom = "0^";
    const std::string top = "1^";
    std::set<std::string> used;
    for (const auto& f : faces) {
        std::string n = face_element_name(c, f);
        if (n == bottom || n == top || !used.insert(n).second)
            throw ValidationError("face name collision on '" + n + "' in dual face lattice");
    }

    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& facet : c.facets()) covers.push_back({bottom, face_element_name(c, facet)});
    for (const auto& f : faces) {
        if (f.size() >= 2) {
            for (size_t skip = 0; skip < f.size(); ++skip) {
                Face sub;
                for (size_t i = 0; i < f.size(); ++i)
                    if (i != skip) sub.push_back(f[i]);
                covers.push_back({face_element_name(c, f), face_element_name(c, sub)});
            }
        } else {
            covers.push_back({face_element_name(c, f), top});
        }
    }
    return Poset::from_covers(covers);
}

} // namespace lexshell
