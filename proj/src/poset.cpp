#include "lexshell/poset.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lexshell {

int Poset::check(ElemId e) const {
    if (e < 0 || e >= static_cast<int>(names_.size()))
        throw UnknownElementError("element id " + std::to_string(e) + " out of range");
    return e;
}

ElemId Poset::id(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name)
        throw UnknownElementError("unknown element '" + std::string(name) + "'");
    return static_cast<ElemId>(it - names_.begin());
}

std::optional<ElemId> Poset::find(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<ElemId>(it - names_.begin());
}

ElemId Poset::bottom() const {
    if (bottom_ < 0) throw NotBoundedError("poset has no unique minimum");
    return bottom_;
}

ElemId Poset::top() const {
    if (top_ < 0) throw NotBoundedError("poset has no unique maximum");
    return top_;
}

Poset Poset::from_covers(const std::vector<std::pair<std::string, std::string>>& covers,
                         const std::vector<std::string>& isolated) {
    Poset p;
    std::set<std::string> names;
    for (const auto& [u, v] : covers) {
        names.insert(u);
        names.insert(v);
    }
    for (const auto& n : isolated) names.insert(n);
    p.names_.assign(names.begin(), names.end());
    const int n = static_cast<int>(p.names_.size());
    if (n == 0) throw EmptyInputError("poset needs at least one element");

    auto idx = [&p](const std::string& s) {
        return static_cast<ElemId>(std::lower_bound(p.names_.begin(), p.names_.end(), s) -
                                   p.names_.begin());
    };

    p.up_.assign(n, {});
    p.down_.assign(n, {});
    std::set<std::pair<ElemId, ElemId>> seen;
    for (const auto& [u, v] : covers) {
        ElemId a = idx(u), b = idx(v);
        if (a == b) throw CycleError("cover pair (" + u + ", " + v + ") is a self-loop");
        if (!seen.insert({a, b}).second)
            throw DuplicateCoverError("duplicate cover pair (" + u + ", " + v + ")");
        p.up_[a].push_back(b);
        p.down_[b].push_back(a);
    }
    for (auto& row : p.up_) std::sort(row.begin(), row.end());
    for (auto& row : p.down_) std::sort(row.begin(), row.end());

    // Kahn topological sort over the cover digraph.
    std::vector<int> indeg(n, 0);
    for (int v = 0; v < n; ++v) indeg[v] = static_cast<int>(p.down_[v].size());
    std::vector<ElemId> order;
    order.reserve(n);
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) order.push_back(v);
    for (size_t head = 0; head < order.size(); ++head) {
        for (ElemId w : p.up_[order[head]])
            if (--indeg[w] == 0) order.push_back(w);
    }
    if (static_cast<int>(order.size()) != n)
        throw CycleError("cover relation contains a directed cycle");

    // Reachability by reverse topological sweep.
    p.upset_.assign(n, boost::dynamic_bitset<>(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        ElemId u = *it;
        p.upset_[u].set(u);
        for (ElemId w : p.up_[u]) p.upset_[u] |= p.upset_[w];
    }

    // Every listed pair must be a genuine cover: reject pairs that are also
    // implied by a path of length >= 2 instead of silently reducing.
    for (ElemId u = 0; u < n; ++u) {
        for (ElemId v : p.up_[u]) {
            for (ElemId w : p.up_[u]) {
                if (w != v && p.upset_[w].test(v))
                    throw NonCoverError("pair (" + p.names_[u] + ", " + p.names_[v] +
                                        ") is implied transitively via " + p.names_[w]);
            }
        }
    }

    // Unique source/sink, when they exist.
    std::vector<ElemId> sources, sinks;
    for (int v = 0; v < n; ++v) {
        if (p.down_[v].empty()) sources.push_back(v);
        if (p.up_[v].empty()) sinks.push_back(v);
    }
    p.bottom_ = sources.size() == 1 ? sources[0] : -1;
    p.top_ = sinks.size() == 1 ? sinks[0] : -1;

    // Longest chain from a minimal element; reporting only.
    p.heights_.assign(n, 0);
    for (ElemId u : order)
        for (ElemId w : p.up_[u]) p.heights_[w] = std::max(p.heights_[w], p.heights_[u] + 1);

    return p;
}

Poset Poset::interval(ElemId x, ElemId y) const {
    check(x);
    check(y);
    if (!leq(x, y))
        throw NotComparableError("interval requires " + names_[x] + " <= " + names_[y]);
    std::vector<std::pair<std::string, std::string>> covers;
    std::vector<std::string> members;
    for (ElemId z = 0; z < size(); ++z) {
        if (!(leq(x, z) && leq(z, y))) continue;
        members.push_back(names_[z]);
        for (ElemId w : up_[z])
            if (leq(w, y)) covers.push_back({names_[z], names_[w]});
    }
    return from_covers(covers, members);
}

Poset Poset::dual() const {
    std::vector<std::pair<std::string, std::string>> covers;
    for (ElemId u = 0; u < size(); ++u)
        for (ElemId w : up_[u]) covers.push_back({names_[w], names_[u]});
    std::vector<std::string> members(names_.begin(), names_.end());
    return from_covers(covers, members);
}

std::vector<Chain> Poset::maximal_chains() const {
    ElemId b = bottom();
    ElemId t = top();
    std::vector<Chain> out;
    Chain cur{b};
    // Iterative DFS; successors are already in canonical order, so chains
    // come out in identifier-lex order.
    std::vector<size_t> pos{0};
    while (!cur.empty()) {
        ElemId u = cur.back();
        if (u == t) {
            out.push_back(cur);
            cur.pop_back();
            pos.pop_back();
            continue;
        }
        const auto& ups = up_[u];
        if (pos.back() < ups.size()) {
            ElemId nxt = ups[pos.back()++];
            cur.push_back(nxt);
            pos.push_back(0);
        } else {
            cur.pop_back();
            pos.pop_back();
        }
    }
    return out;
}

GradedResult Poset::is_graded() const {
    auto chains = maximal_chains(); // throws NotBoundedError when unbounded
    GradedResult r;
    r.graded = true;
    r.rank = static_cast<int>(chains.front().size()) - 1;
    for (const auto& c : chains) {
        if (static_cast<int>(c.size()) - 1 != r.rank) {
            r.graded = false;
            r.rank = -1;
            break;
        }
    }
    return r;
}

std::vector<std::pair<std::string, std::string>> Poset::cover_pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (ElemId u = 0; u < size(); ++u)
        for (ElemId w : up_[u]) out.push_back({names_[u], names_[w]});
    return out;
}

int Poset::interval_length(ElemId x, ElemId y) const {
    if (!leq(x, y))
        throw NotComparableError("interval_length requires " + names_[x] + " <= " + names_[y]);
    // Longest path from x to y within the interval.
    std::vector<int> best(size(), -1);
    best[x] = 0;
    // Process in id order is not topological; do a DFS-free DP over heights via
    // repeated relaxation along covers restricted to [x, y].
    // Covers only go upward, so a single sweep in topological order suffices;
    // ids are not topological, reuse height order instead.
    std::vector<ElemId> elems;
    for (ElemId z = 0; z < size(); ++z)
        if (leq(x, z) && leq(z, y)) elems.push_back(z);
    std::sort(elems.begin(), elems.end(),
              [this](ElemId a, ElemId b) { return heights_[a] < heights_[b]; });
    for (ElemId z : elems) {
        if (best[z] < 0) continue;
        for (ElemId w : up_[z])
            if (leq(w, y)) best[w] = std::max(best[w], best[z] + 1);
    }
    return best[y];
}

std::vector<ElemId> resolve_elements(const Poset& p, const std::vector<std::string>& names) {
    std::vector<ElemId> out;
    out.reserve(names.size());
    for (const auto& n : names) out.push_back(p.id(n));
    return out;
}

} // namespace lexshell
