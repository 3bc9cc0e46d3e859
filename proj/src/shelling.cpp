#include "lexshell/shelling.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace lexshell {

namespace {

Face intersect(const Face& a, const Face& b) {
    Face out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool face_subset(const Face& a, const Face& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Precomputed pairwise data for the facet-attachment test. For candidate k
// and already-placed set M, the intersection complex is pure of dimension
// dim(F_k)-1 iff every F_k∩F_i (i in M) lies inside some codimension-one
// F_k∩F_j with j in M.
struct AttachTable {
    int t = 0;
    std::vector<std::vector<std::uint64_t>> dominators; // [k][i] = mask of such j

    explicit AttachTable(const SimplicialComplex& c) {
        const auto& fs = c.facets();
        t = static_cast<int>(fs.size());
        if (t > 64)
            throw Error("shelling search supports at most 64 facets (got " +
                        std::to_string(t) + ")");
        std::vector<std::vector<Face>> inter(t, std::vector<Face>(t));
        for (int k = 0; k < t; ++k)
            for (int i = 0; i < t; ++i)
                if (i != k) inter[k][i] = intersect(fs[k], fs[i]);
        dominators.assign(t, std::vector<std::uint64_t>(t, 0));
        for (int k = 0; k < t; ++k) {
            const size_t want = fs[k].size() - 1;
            for (int i = 0; i < t; ++i) {
                if (i == k) continue;
                std::uint64_t mask = 0;
                for (int j = 0; j < t; ++j) {
                    if (j == k) continue;
                    if (inter[k][j].size() == want && face_subset(inter[k][i], inter[k][j]))
                        mask |= std::uint64_t(1) << j;
                }
                dominators[k][i] = mask;
            }
        }
    }

    bool attach_ok(int k, std::uint64_t placed) const {
        std::uint64_t m = placed;
        while (m) {
            int i = std::countr_zero(m);
            m &= m - 1;
            if (!(dominators[k][i] & placed)) return false;
        }
        return true;
    }
};

struct ShellingSearch {
    const SimplicialComplex& c;
    AttachTable table;
    std::uint64_t budget;
    SearchStats* stats;
    std::uint64_t nodes = 0;
    std::unordered_set<std::uint64_t> dead;

    ShellingSearch(const SimplicialComplex& complex, std::uint64_t b, SearchStats* s)
        : c(complex), table(complex), budget(b), stats(s) {}

    ~ShellingSearch() {
        if (stats) stats->nodes += nodes;
    }

    void tick() {
        if (++nodes > budget) throw ResourceLimitError("shelling search: node budget exhausted");
    }

    // DFS in canonical facet order; the first completion is lexicographically
    // least. `last` >= 0 pins the final facet.
    bool dfs(std::uint64_t placed, int count, int last, ShellingOrder& order) {
        const int t = table.t;
        if (count == t) return true;
        if (dead.count(placed)) return false;
        for (int k = 0; k < t; ++k) {
            if (placed & (std::uint64_t(1) << k)) continue;
            if (last >= 0 && k == last && count != t - 1) continue;
            if (last >= 0 && k != last && count == t - 1) continue;
            tick();
            if (count > 0 && !table.attach_ok(k, placed)) continue;
            order.push_back(k);
            if (dfs(placed | (std::uint64_t(1) << k), count + 1, last, order)) return true;
            order.pop_back();
        }
        dead.insert(placed);
        return false;
    }
};

} // namespace

ShellingCheck is_shelling(const SimplicialComplex& c, const ShellingOrder& order) {
    const auto& fs = c.facets();
    const int t = static_cast<int>(fs.size());
    {
        std::vector<int> sorted(order);
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> want(t);
        for (int i = 0; i < t; ++i) want[i] = i;
        if (sorted != want)
            throw NotAPermutationError("order is not a permutation of the facets");
    }
    for (int k = 1; k < t; ++k) {
        const Face& fk = fs[order[k]];
        std::set<Face> inters;
        for (int i = 0; i < k; ++i) inters.insert(intersect(fk, fs[order[i]]));
        std::vector<Face> maximal;
        for (const auto& f : inters) {
            bool is_max = true;
            for (const auto& g : inters)
                if (f != g && face_subset(f, g)) {
                    is_max = false;
                    break;
                }
            if (is_max) maximal.push_back(f);
        }
        bool ok = true;
        for (const auto& f : maximal)
            if (f.size() != fk.size() - 1) ok = false;
        if (!ok) {
            ShellingCheck bad;
            bad.ok = false;
            bad.first_bad_index = k + 1;
            bad.offending_maximal = std::move(maximal);
            return bad;
        }
    }
    return {};
}

std::optional<ShellingOrder> find_shelling(const SimplicialComplex& c, std::uint64_t budget,
                                           SearchStats* stats) {
    ShellingSearch s(c, budget, stats);
    ShellingOrder order;
    if (s.dfs(0, 0, -1, order)) return order;
    return std::nullopt;
}

std::optional<ShellingOrder> find_shelling_ending_at(const SimplicialComplex& c, int last,
                                                     std::uint64_t budget, SearchStats* stats) {
    if (last < 0 || last >= c.facet_count())
        throw NotAFacetError("facet index out of range");
    ShellingSearch s(c, budget, stats);
    ShellingOrder order;
    if (s.dfs(0, 0, last, order)) return order;
    return std::nullopt;
}

bool forced_last_facet(const SimplicialComplex& c, int f, std::uint64_t budget,
                       SearchStats* stats) {
    if (f < 0 || f >= c.facet_count()) throw NotAFacetError("facet index out of range");
    SearchStats local;
    auto remaining = [&]() {
        return budget > local.nodes ? budget - local.nodes : std::uint64_t(0);
    };
    try {
        if (!find_shelling(c, remaining(), &local))
            throw NotShellableError("complex is not shellable");
        for (int g = 0; g < c.facet_count(); ++g) {
            if (g == f) continue;
            if (find_shelling_ending_at(c, g, remaining(), &local)) {
                if (stats) stats->nodes += local.nodes;
                return false;
            }
        }
    } catch (...) {
        if (stats) stats->nodes += local.nodes;
        throw;
    }
    if (stats) stats->nodes += local.nodes;
    return true;
}

LexOrderCheck lex_order_shelling_check(const Poset& p, const EdgeLabeling& l, IncreaseMode mode) {
    LexOrderCheck out;
    auto el = verify_el_labeling(p, l, mode);
    out.labeling_ok = el.ok;
    if (!el.ok) return out;

    if (p.size() <= 2) {
        // Proper part empty: nothing to shell.
        out.vacuous = true;
        out.shelling_ok = true;
        return out;
    }

    auto chains = p.maximal_chains();
    std::vector<std::pair<std::vector<int>, Chain>> keyed;
    keyed.reserve(chains.size());
    for (auto& ch : chains) {
        std::vector<int> seq;
        for (size_t i = 1; i < ch.size(); ++i) seq.push_back(l.at(ch[i - 1], ch[i]));
        keyed.push_back({std::move(seq), std::move(ch)});
    }
    std::sort(keyed.begin(), keyed.end());

    auto complex = order_complex(p, true);
    ShellingOrder order;
    order.reserve(keyed.size());
    ElemId bot = p.bottom(), top = p.top();
    for (const auto& [seq, ch] : keyed) {
        std::vector<std::string> names;
        for (ElemId e : ch)
            if (e != bot && e != top) names.push_back(p.name(e));
        order.push_back(complex.facet_index(names));
    }
    out.detail = is_shelling(complex, order);
    out.shelling_ok = out.detail.ok;
    return out;
}

} // namespace lexshell
