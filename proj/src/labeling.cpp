#include "lexshell/labeling.hpp"

#include <algorithm>

namespace lexshell {

std::optional<int> EdgeLabeling::get(ElemId u, ElemId v) const {
    auto it = labels_.find({u, v});
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

int EdgeLabeling::at(ElemId u, ElemId v) const {
    auto it = labels_.find({u, v});
    if (it == labels_.end())
        throw IncompleteLabelingError("no label on cover (" + std::to_string(u) + ", " +
                                      std::to_string(v) + ")");
    return it->second;
}

ChainEdgeLabeling ChainEdgeLabeling::lift(const EdgeLabeling& base) {
    ChainEdgeLabeling c;
    c.lifted_ = true;
    c.base_ = base;
    return c;
}

ChainEdgeLabeling ChainEdgeLabeling::from_entries(const std::map<RootedEdgeKey, int>& entries) {
    ChainEdgeLabeling c;
    c.entries_ = entries;
    return c;
}

int ChainEdgeLabeling::at(const Chain& prefix, ElemId upper) const {
    if (lifted_) return base_.at(prefix.back(), upper);
    auto it = entries_.find(RootedEdgeKey{prefix, upper});
    if (it == entries_.end())
        throw IncompleteLabelingError("no label on rooted edge ending at element id " +
                                      std::to_string(upper));
    return it->second;
}

bool lex_precedes(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool is_increasing(const std::vector<int>& seq, IncreaseMode mode) {
    for (size_t i = 1; i < seq.size(); ++i) {
        if (mode == IncreaseMode::Weak ? seq[i - 1] > seq[i] : seq[i - 1] >= seq[i]) return false;
    }
    return true;
}

namespace {

// Maximal chains of [x, y] as element sequences, identifier-lex order.
std::vector<Chain> interval_chains(const Poset& p, ElemId x, ElemId y) {
    std::vector<Chain> out;
    Chain cur{x};
    std::vector<size_t> pos{0};
    while (!cur.empty()) {
        ElemId u = cur.back();
        if (u == y) {
            out.push_back(cur);
            cur.pop_back();
            pos.pop_back();
            continue;
        }
        const auto& ups = p.up_covers(u);
        bool advanced = false;
        while (pos.back() < ups.size()) {
            ElemId nxt = ups[pos.back()++];
            if (p.leq(nxt, y)) {
                cur.push_back(nxt);
                pos.push_back(0);
                advanced = true;
                break;
            }
        }
        if (!advanced && (cur.back() == u) && pos.back() >= ups.size()) {
            cur.pop_back();
            pos.pop_back();
        }
    }
    return out;
}

// "Exactly one increasing chain, and it strictly lex-precedes all others."
std::string check_sequences(const std::vector<std::vector<int>>& seqs, IncreaseMode mode) {
    int increasing = -1;
    int count = 0;
    for (size_t i = 0; i < seqs.size(); ++i) {
        if (is_increasing(seqs[i], mode)) {
            ++count;
            if (increasing < 0) increasing = static_cast<int>(i);
        }
    }
    if (count == 0) return "no increasing maximal chain";
    if (count > 1) return std::to_string(count) + " increasing maximal chains";
    for (size_t i = 0; i < seqs.size(); ++i) {
        if (static_cast<int>(i) == increasing) continue;
        if (!lex_precedes(seqs[increasing], seqs[i]))
            return "increasing chain is not lexicographically first";
    }
    return {};
}

} // namespace

ElCheck verify_el_labeling(const Poset& p, const EdgeLabeling& l, IncreaseMode mode) {
    p.bottom();
    p.top();
    for (ElemId u = 0; u < p.size(); ++u)
        for (ElemId v : p.up_covers(u)) l.at(u, v); // totality

    for (ElemId x = 0; x < p.size(); ++x) {
        for (ElemId y = 0; y < p.size(); ++y) {
            if (x == y || !p.leq(x, y)) continue;
            auto chains = interval_chains(p, x, y);
            std::vector<std::vector<int>> seqs;
            seqs.reserve(chains.size());
            for (const auto& c : chains) {
                std::vector<int> s;
                for (size_t i = 1; i < c.size(); ++i) s.push_back(l.at(c[i - 1], c[i]));
                seqs.push_back(std::move(s));
            }
            std::string reason = check_sequences(seqs, mode);
            if (!reason.empty()) return {false, x, y, reason};
        }
    }
    return {};
}

ClCheck verify_cl_labeling(const Poset& p, const ChainEdgeLabeling& l, IncreaseMode mode) {
    ElemId bot = p.bottom();
    p.top();

    // Totality over all rooted edges reachable along maximal chains.
    {
        Chain cur{bot};
        std::vector<size_t> pos{0};
        while (!cur.empty()) {
            ElemId u = cur.back();
            const auto& ups = p.up_covers(u);
            if (pos.back() < ups.size()) {
                ElemId nxt = ups[pos.back()++];
                l.at(cur, nxt);
                cur.push_back(nxt);
                pos.push_back(0);
            } else {
                cur.pop_back();
                pos.pop_back();
            }
        }
    }

    for (ElemId x = 0; x < p.size(); ++x) {
        auto roots = interval_chains(p, bot, x);
        for (ElemId y = 0; y < p.size(); ++y) {
            if (x == y || !p.leq(x, y)) continue;
            auto chains = interval_chains(p, x, y);
            for (const auto& root : roots) {
                std::vector<std::vector<int>> seqs;
                seqs.reserve(chains.size());
                for (const auto& c : chains) {
                    Chain prefix = root; // root ends at x == c.front()
                    std::vector<int> s;
                    for (size_t i = 1; i < c.size(); ++i) {
                        s.push_back(l.at(prefix, c[i]));
                        prefix.push_back(c[i]);
                    }
                    seqs.push_back(std::move(s));
                }
                std::string reason = check_sequences(seqs, mode);
                if (!reason.empty()) return {false, x, y, root, reason};
            }
        }
    }
    return {};
}

std::optional<EdgeLabeling> search_el_labeling(const Poset& p, int alphabet_size,
                                               IncreaseMode mode, std::uint64_t budget,
                                               std::uint64_t* nodes_out) {
    p.bottom();
    p.top();
    // Covers in canonical order; assignment slots index this list.
    std::vector<std::pair<ElemId, ElemId>> edges;
    for (ElemId u = 0; u < p.size(); ++u)
        for (ElemId v : p.up_covers(u)) edges.push_back({u, v});
    const int m = static_cast<int>(edges.size());
    std::map<std::pair<ElemId, ElemId>, int> edge_index;
    for (int i = 0; i < m; ++i) edge_index[edges[i]] = i;

    // Per interval: maximal chains as edge-index sequences, plus the set of
    // edges inside the interval, so completed intervals can be verified the
    // moment their last edge gets a label.
    struct IntervalData {
        std::vector<std::vector<int>> chains; // edge indices
        int pending = 0;                      // unassigned edges inside
    };
    std::vector<IntervalData> intervals;
    std::vector<std::vector<int>> edge_to_intervals(m);
    for (ElemId x = 0; x < p.size(); ++x) {
        for (ElemId y = 0; y < p.size(); ++y) {
            if (x == y || !p.leq(x, y)) continue;
            IntervalData d;
            std::vector<bool> inside(m, false);
            for (const auto& c : interval_chains(p, x, y)) {
                std::vector<int> seq;
                for (size_t i = 1; i < c.size(); ++i) {
                    int e = edge_index.at({c[i - 1], c[i]});
                    seq.push_back(e);
                    inside[e] = true;
                }
                d.chains.push_back(std::move(seq));
            }
            int idx = static_cast<int>(intervals.size());
            for (int e = 0; e < m; ++e)
                if (inside[e]) {
                    ++d.pending;
                    edge_to_intervals[e].push_back(idx);
                }
            intervals.push_back(std::move(d));
        }
    }

    std::vector<int> assigned(m, 0); // 0 = unassigned, else label
    std::uint64_t nodes = 0;

    auto interval_ok = [&](const IntervalData& d) {
        std::vector<std::vector<int>> seqs;
        seqs.reserve(d.chains.size());
        for (const auto& ch : d.chains) {
            std::vector<int> s;
            s.reserve(ch.size());
            for (int e : ch) s.push_back(assigned[e]);
            seqs.push_back(std::move(s));
        }
        return check_sequences(seqs, mode).empty();
    };

    std::optional<EdgeLabeling> result;
    auto rec = [&](auto&& self, int slot) -> bool {
        if (slot == m) {
            EdgeLabeling l;
            for (int i = 0; i < m; ++i) l.set(edges[i].first, edges[i].second, assigned[i]);
            result = std::move(l);
            return true;
        }
        for (int label = 1; label <= alphabet_size; ++label) {
            if (++nodes > budget) {
                if (nodes_out) *nodes_out = nodes;
                throw ResourceLimitError("search_el_labeling: node budget exhausted");
            }
            assigned[slot] = label;
            bool ok = true;
            for (int idx : edge_to_intervals[slot]) {
                if (--intervals[idx].pending == 0 && !interval_ok(intervals[idx])) ok = false;
            }
            if (ok && self(self, slot + 1)) return true;
            for (int idx : edge_to_intervals[slot]) ++intervals[idx].pending;
            assigned[slot] = 0;
        }
        return false;
    };
    rec(rec, 0);
    if (nodes_out) *nodes_out = nodes;
    return result;
}

} // namespace lexshell
