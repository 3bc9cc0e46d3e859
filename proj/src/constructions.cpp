#include "lexshell/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lexshell/io.hpp"

namespace lexshell {

const char* const kGradedBottom = "0^";
const char* const kGradedTop = "1^";
const char* const kGradedX = "x";

Poset pentagon() {
    return Poset::from_covers({{"0^", "a"}, {"a", "m"}, {"m", "1^"}, {"0^", "b"}, {"b", "1^"}});
}

SimplicialComplex load_hachimori(const std::string& path, std::uint64_t budget) {
    SimplicialComplex c = load_complex(path);
    if (!c.is_pure() || c.dimension() != 2)
        throw ValidationError(path + ": complex is not pure 2-dimensional");
    int special;
    try {
        special = c.facet_index({"1", "3", "4"});
    } catch (const Error&) {
        throw ValidationError(path + ": no facet {1 3 4}");
    }
    SearchStats stats;
    if (!find_shelling(c, budget, &stats))
        throw ValidationError(path + ": complex is not shellable");
    if (!forced_last_facet(c, special, budget, &stats))
        throw ValidationError(path + ": facet {1 3 4} is not forced last in every shelling");
    return c;
}

std::string graded_copy_bottom(int copy) {
    return std::string("0^_") + static_cast<char>('a' + copy);
}

std::string graded_copy_name(const SimplicialComplex& h, const Face& face, int copy) {
    return face_element_name(h, face) + "_" + static_cast<char>('a' + copy);
}

namespace {

// All nonempty faces of h, smallest first inside each size class.
std::vector<Face> all_faces(const SimplicialComplex& h) {
    std::set<Face> faces;
    for (const auto& facet : h.facets()) {
        const size_t k = facet.size();
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            Face f;
            for (size_t i = 0; i < k; ++i)
                if (mask & (1u << i)) f.push_back(facet[i]);
            faces.insert(std::move(f));
        }
    }
    return {faces.begin(), faces.end()};
}

} // namespace

Poset build_graded_example(const SimplicialComplex& h, int special_facet) {
    const Face special = h.facets().at(special_facet);
    const std::string special_name = face_element_name(h, special);
    auto faces = all_faces(h);

    auto elem_name = [&](const Face& f, int copy) -> std::string {
        if (f == special) return special_name;
        return graded_copy_name(h, f, copy);
    };

    std::set<std::pair<std::string, std::string>> covers;
    covers.insert({kGradedBottom, kGradedX});
    for (int i = 0; i < 4; ++i) covers.insert({kGradedBottom, graded_copy_bottom(i)});
    for (const auto& facet : h.facets()) {
        for (int i = 0; i < 4; ++i) {
            covers.insert({kGradedX, elem_name(facet, i)});
            covers.insert({graded_copy_bottom(i), elem_name(facet, i)});
        }
    }
    // Dual-face-lattice covers, replicated with equal-or-adjacent indices.
    for (const auto& z : faces) {
        if (z.size() >= 2) {
            for (size_t skip = 0; skip < z.size(); ++skip) {
                Face y;
                for (size_t i = 0; i < z.size(); ++i)
                    if (i != skip) y.push_back(z[i]);
                for (int zi = 0; zi < 4; ++zi)
                    for (int yi = 0; yi < 4; ++yi)
                        if (std::abs(zi - yi) <= 1)
                            covers.insert({elem_name(z, zi), elem_name(y, yi)});
            }
        } else {
            for (int i = 0; i < 4; ++i) covers.insert({elem_name(z, i), kGradedTop});
        }
    }
    return Poset::from_covers({covers.begin(), covers.end()});
}

namespace {

// What a graded-example element is, for recipe dispatch.
struct GradedNames {
    const SimplicialComplex& h;
    const Poset& P;
    Face special;
    std::string special_name;
    std::map<ElemId, std::pair<Face, int>> face_of; // copies only, not the special facet
    ElemId x, bottom, top, special_id;
    std::vector<ElemId> copy_bottoms;

    GradedNames(const SimplicialComplex& hh, const Poset& pp, int special_facet)
        : h(hh), P(pp) {
        special = h.facets().at(special_facet);
        special_name = face_element_name(h, special);
        x = P.id(kGradedX);
        bottom = P.id(kGradedBottom);
        top = P.id(kGradedTop);
        special_id = P.id(special_name);
        for (int i = 0; i < 4; ++i) copy_bottoms.push_back(P.id(graded_copy_bottom(i)));
        for (const auto& f : all_faces(h)) {
            if (f == special) continue;
            for (int i = 0; i < 4; ++i) face_of[P.id(graded_copy_name(h, f, i))] = {f, i};
        }
    }

    int copy_index(ElemId e) const {
        auto it = face_of.find(e);
        return it == face_of.end() ? -1 : it->second.second;
    }
};

std::vector<ElemId> sorted_block(std::vector<ElemId> v) {
    std::sort(v.begin(), v.end());
    return v;
}

struct GradedRaoBuilder {
    const GradedNames& names;
    const Poset& P;
    const SimplicialComplex& h;
    ShellingOrder shelling; // facet indices of h, special last
    ElemId top;

    // Atom classes inside [elem, 1^]: per copy index, split forced/unforced.
    std::vector<ElemId> block(const std::vector<ElemId>& atoms,
                              const std::vector<ElemId>& forced, int copy, bool in_forced) const {
        std::vector<ElemId> out;
        for (ElemId a : atoms) {
            bool f = std::binary_search(forced.begin(), forced.end(), a);
            if (f == in_forced && names.copy_index(a) == copy) out.push_back(a);
        }
        return out;
    }

    std::vector<ElemId> ordering_for(ElemId elem, const std::vector<ElemId>& forced,
                                     ElemId ctx) const {
        auto atoms = P.atoms(elem);
        if (elem == names.bottom) {
            std::vector<ElemId> out{names.x};
            for (ElemId cb : names.copy_bottoms) out.push_back(cb);
            return out;
        }
        if (elem == names.x) {
            std::vector<ElemId> out;
            for (size_t k = 0; k + 1 < shelling.size(); ++k)
                for (int i = 0; i < 4; ++i)
                    out.push_back(P.id(graded_copy_name(h, h.facets()[shelling[k]], i)));
            out.push_back(names.special_id);
            return out;
        }
        for (int i = 0; i < 4; ++i) {
            if (elem == names.copy_bottoms[i]) {
                std::vector<ElemId> out;
                for (size_t k = 0; k + 1 < shelling.size(); ++k)
                    out.push_back(P.id(graded_copy_name(h, h.facets()[shelling[k]], i)));
                out.push_back(names.special_id);
                return out;
            }
        }
        if (elem == names.special_id) {
            if (ctx == names.x) {
                // Explicit order: 14, 34 interleaved over copies, then 13.
                Face e13{h.vertex_id("1"), h.vertex_id("3")};
                Face e14{h.vertex_id("1"), h.vertex_id("4")};
                Face e34{h.vertex_id("3"), h.vertex_id("4")};
                std::sort(e13.begin(), e13.end());
                std::sort(e14.begin(), e14.end());
                std::sort(e34.begin(), e34.end());
                std::vector<ElemId> out;
                for (int i = 0; i < 4; ++i) {
                    out.push_back(P.id(graded_copy_name(h, e14, i)));
                    out.push_back(P.id(graded_copy_name(h, e34, i)));
                }
                for (int i = 0; i < 4; ++i) out.push_back(P.id(graded_copy_name(h, e13, i)));
                return out;
            }
            int i = root_copy(ctx);
            std::vector<ElemId> out = sorted_block(block(atoms, forced, i, true));
            for (int d : {i - 1, i + 1})
                if (d >= 0 && d < 4)
                    for (ElemId a : sorted_block(block(atoms, forced, d, true)))
                        out.push_back(a);
            for (ElemId a : sorted_block(block(atoms, forced, i, false))) out.push_back(a);
            append_rest(out, atoms);
            return out;
        }
        if (auto it = names.face_of.find(elem); it != names.face_of.end()) {
            const auto& [face, i] = it->second;
            if (face.size() == 3) {
                std::vector<ElemId> out;
                if (ctx == names.x) {
                    if (i == 0) {
                        for (ElemId a : sorted_block(block(atoms, forced, 0, true)))
                            out.push_back(a);
                        for (ElemId a : sorted_block(block(atoms, forced, 1, true)))
                            out.push_back(a);
                        for (ElemId a : sorted_block(block(atoms, forced, 0, false)))
                            out.push_back(a);
                        for (ElemId a : sorted_block(block(atoms, forced, 1, false)))
                            out.push_back(a);
                    } else {
                        for (ElemId a : sorted_block(block(atoms, forced, i - 1, true)))
                            out.push_back(a);
                        for (ElemId a : sorted_block(block(atoms, forced, i, true)))
                            out.push_back(a);
                        if (i + 1 < 4) {
                            for (ElemId a : sorted_block(block(atoms, forced, i + 1, true)))
                                out.push_back(a);
                            for (ElemId a : sorted_block(block(atoms, forced, i + 1, false)))
                                out.push_back(a);
                        }
                    }
                } else {
                    for (ElemId a : sorted_block(block(atoms, forced, i, true)))
                        out.push_back(a);
                    for (int d : {i - 1, i + 1})
                        if (d >= 0 && d < 4)
                            for (ElemId a : sorted_block(block(atoms, forced, d, true)))
                                out.push_back(a);
                    for (ElemId a : sorted_block(block(atoms, forced, i, false)))
                        out.push_back(a);
                }
                append_rest(out, atoms);
                return out;
            }
            // Edge copies: intervals of length two, forced atoms first.
            std::vector<ElemId> out = forced;
            append_rest(out, atoms);
            return out;
        }
        throw RecipeInapplicableError("no recipe for element '" + P.name(elem) + "'");
    }

    int root_copy(ElemId ctx) const {
        for (int i = 0; i < 4; ++i)
            if (ctx == names.copy_bottoms[i]) return i;
        throw RecipeInapplicableError("root context '" + P.name(ctx) + "' is not x or a copy bottom");
    }

    static void append_rest(std::vector<ElemId>& out, const std::vector<ElemId>& atoms) {
        std::vector<ElemId> rest;
        for (ElemId a : atoms)
            if (std::find(out.begin(), out.end(), a) == out.end()) rest.push_back(a);
        std::sort(rest.begin(), rest.end());
        out.insert(out.end(), rest.begin(), rest.end());
    }

    std::unique_ptr<RaoNode> build(ElemId elem, const std::vector<ElemId>& forced,
                                   ElemId ctx) const {
        auto node = std::make_unique<RaoNode>();
        node->element = elem;
        node->ordering = ordering_for(elem, forced, ctx);
        // The recipe must produce a permutation with the forced atoms first;
        // anything else means the data contradicts a recipe premise.
        {
            auto sorted = node->ordering;
            std::sort(sorted.begin(), sorted.end());
            if (sorted != P.atoms(elem))
                throw RecipeInapplicableError("recipe at '" + P.name(elem) +
                                              "' does not order the atoms");
            std::vector<ElemId> prefix(node->ordering.begin(),
                                       node->ordering.begin() + forced.size());
            std::sort(prefix.begin(), prefix.end());
            if (prefix != forced)
                throw RecipeInapplicableError("recipe at '" + P.name(elem) +
                                              "' breaks the forced prefix");
        }
        std::vector<ElemId> placed;
        for (ElemId a : node->ordering) {
            if (P.interval_length(a, top) >= 2) {
                ElemId child_ctx = (elem == names.bottom) ? a : ctx;
                node->children.push_back(build(a, forced_first_set(P, a, placed), child_ctx));
            } else {
                node->children.push_back(nullptr);
            }
            placed.push_back(a);
        }
        return node;
    }
};

} // namespace

RaoCertificate build_graded_rao(const Poset& P, const SimplicialComplex& h, int special_facet,
                                const ShellingOrder& shelling) {
    if (shelling.size() != h.facets().size())
        throw RecipeInapplicableError("shelling does not cover all facets");
    if (shelling.back() != special_facet)
        throw RecipeInapplicableError("shelling does not end at the special facet");
    const Face special = h.facets().at(special_facet);
    // Every boundary edge of the special facet must lie in another facet;
    // the rooted recipes at the identified element rely on that.
    for (size_t skip = 0; skip < special.size(); ++skip) {
        Face e;
        for (size_t i = 0; i < special.size(); ++i)
            if (i != skip) e.push_back(special[i]);
        bool shared = false;
        for (int g = 0; g < h.facet_count(); ++g) {
            if (g == special_facet) continue;
            const auto& fg = h.facets()[g];
            if (std::includes(fg.begin(), fg.end(), e.begin(), e.end())) shared = true;
        }
        if (!shared)
            throw RecipeInapplicableError("edge {" + h.face_label(e) +
                                          "} of the special facet lies in no other facet");
    }

    GradedNames names(h, P, special_facet);
    GradedRaoBuilder builder{names, P, h, shelling, names.top};
    RaoCertificate cert;
    cert.root = builder.build(names.bottom, {}, -1);
    return cert;
}

Poset load_ungraded_example(const std::string& path) {
    Poset p = load_poset(path);
    if (!p.is_bounded()) throw ValidationError(path + ": poset is not bounded");
    if (p.is_graded().graded) throw ValidationError(path + ": poset is graded");

    auto need = [&](const std::string& n) -> ElemId {
        auto e = p.find(n);
        if (!e) throw ValidationError(path + ": missing element '" + n + "'");
        return *e;
    };
    ElemId x = need("x");
    std::vector<ElemId> a;
    for (int i = 1; i <= 6; ++i) a.push_back(need("a" + std::to_string(i)));

    {
        std::vector<ElemId> expected{x};
        expected.insert(expected.end(), a.begin(), a.end());
        std::sort(expected.begin(), expected.end());
        if (p.atoms(p.bottom()) != expected)
            throw ValidationError(path + ": atoms are not exactly {x, a1..a6}");
    }

    auto above_x = p.atoms(x); // covers of x
    for (int i = 0; i < 6; ++i) {
        auto ups = p.up_covers(a[i]);
        if (ups.size() != 2)
            throw ValidationError(path + ": a" + std::to_string(i + 1) +
                                  " is not covered by exactly two elements");
        for (ElemId z : ups)
            if (!std::binary_search(above_x.begin(), above_x.end(), z))
                throw ValidationError(path + ": a cover of a" + std::to_string(i + 1) +
                                      " does not cover x");
    }

    ElemId y = need("y");
    {
        std::vector<ElemId> expected;
        for (int i = 1; i <= 6; ++i) expected.push_back(need("d" + std::to_string(i)));
        std::sort(expected.begin(), expected.end());
        if (p.atoms(y) != expected)
            throw ValidationError(path + ": atoms of [y, 1^] are not exactly {d1..d6}");
    }

    for (ElemId e = 0; e < p.size(); ++e)
        if (p.height(e) >= 2 && !p.less(x, e))
            throw ValidationError(path + ": element '" + p.name(e) +
                                  "' of height >= 2 is not above x");

    // For each a_i some atom of [y, 1^] dominates the covers of a_i other
    // than y itself.
    for (int i = 0; i < 6; ++i) {
        std::vector<ElemId> others;
        for (ElemId z : p.up_covers(a[i]))
            if (z != y) others.push_back(z);
        bool found = false;
        for (ElemId d : p.atoms(y)) {
            bool all = true;
            for (ElemId z : others)
                if (!p.less(z, d)) all = false;
            if (all) {
                found = true;
                break;
            }
        }
        if (!found)
            throw ValidationError(path + ": no atom of [y, 1^] lies above the other covers of a" +
                                  std::to_string(i + 1));
    }
    return p;
}

} // namespace lexshell
