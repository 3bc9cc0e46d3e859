#include "lexshell/rao.hpp"

#include <algorithm>
#include <set>

namespace lexshell {

namespace {

bool sorted_subset(const std::vector<ElemId>& a, const std::vector<ElemId>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Cached minimal-common-upper-bound queries for one poset.
struct Cond2Checker {
    const Poset& p;
    std::map<std::pair<ElemId, ElemId>, std::vector<ElemId>> cache;

    const std::vector<ElemId>& mcu(ElemId a, ElemId b) {
        auto key = std::minmax(a, b);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        return cache.emplace(key, minimal_common_uppers(p, a, b)).first->second;
    }

    // Placing `cand` after `placed` at a certificate node: for every earlier
    // atom and every minimal common upper bound y, some cover z of cand with
    // z <= y must lie above an earlier atom. Checking the minimal bounds
    // suffices because z <= y is inherited upward.
    bool ok(const std::vector<ElemId>& placed, ElemId cand) {
        const auto& covers = p.up_covers(cand);
        for (ElemId ai : placed) {
            for (ElemId y : mcu(ai, cand)) {
                bool found = false;
                for (ElemId z : covers) {
                    if (!p.leq(z, y)) continue;
                    for (ElemId ak : placed) {
                        if (p.less(ak, z)) {
                            found = true;
                            break;
                        }
                    }
                    if (found) break;
                }
                if (!found) return false;
            }
        }
        return true;
    }
};

} // namespace

std::vector<ElemId> minimal_common_uppers(const Poset& p, ElemId a, ElemId b) {
    boost::dynamic_bitset<> common = p.upset(a) & p.upset(b);
    common.reset(a);
    common.reset(b);
    std::vector<ElemId> members;
    for (auto i = common.find_first(); i != boost::dynamic_bitset<>::npos;
         i = common.find_next(i))
        members.push_back(static_cast<ElemId>(i));
    std::vector<ElemId> out;
    for (ElemId y : members) {
        bool minimal = true;
        for (ElemId z : members) {
            if (z != y && p.less(z, y)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(y);
    }
    return out;
}

std::vector<ElemId> forced_first_set(const Poset& p, ElemId u,
                                     const std::vector<ElemId>& earlier) {
    std::vector<ElemId> out;
    for (ElemId z : p.atoms(u)) {
        for (ElemId e : earlier) {
            if (p.less(e, z)) {
                out.push_back(z);
                break;
            }
        }
    }
    return out; // atoms() is sorted, so this is too
}

RaoCertificate clone(const RaoCertificate& cert) {
    auto copy_node = [](auto&& self, const RaoNode* n) -> std::unique_ptr<RaoNode> {
        if (!n) return nullptr;
        auto m = std::make_unique<RaoNode>();
        m->element = n->element;
        m->ordering = n->ordering;
        for (const auto& c : n->children) m->children.push_back(self(self, c.get()));
        return m;
    };
    return RaoCertificate{copy_node(copy_node, cert.root.get())};
}

bool certificates_equal(const RaoCertificate& a, const RaoCertificate& b) {
    auto eq = [](auto&& self, const RaoNode* x, const RaoNode* y) -> bool {
        if (!x || !y) return !x && !y;
        if (x->element != y->element || x->ordering != y->ordering) return false;
        if (x->children.size() != y->children.size()) return false;
        for (size_t i = 0; i < x->children.size(); ++i)
            if (!self(self, x->children[i].get(), y->children[i].get())) return false;
        return true;
    };
    return eq(eq, a.root.get(), b.root.get());
}

namespace {

struct Verifier {
    const Poset& p;
    ElemId top;
    Cond2Checker c2{p};
    RaoCheck out;

    bool fail(const std::vector<ElemId>& path, std::string reason) {
        out.ok = false;
        out.fail_path = path;
        out.reason = std::move(reason);
        return false;
    }

    bool node_ok(const RaoNode* node, ElemId elem, const std::vector<ElemId>& forced,
                 std::vector<ElemId>& path) {
        path.push_back(elem);
        if (!node) return fail(path, "missing node");
        if (node->element != elem)
            return fail(path, "node element '" + p.name(node->element) +
                                  "' does not match its position (expected '" + p.name(elem) +
                                  "')");
        auto atoms = p.atoms(elem);
        {
            auto sorted = node->ordering;
            std::sort(sorted.begin(), sorted.end());
            if (sorted != atoms)
                return fail(path, "ordering is not a permutation of the atoms");
        }
        if (!node->children.empty() && node->children.size() != node->ordering.size())
            return fail(path, "children do not line up with the ordering");

        // Condition 1 against the parent: forced atoms form a prefix.
        {
            std::vector<ElemId> prefix(node->ordering.begin(),
                                       node->ordering.begin() + forced.size());
            std::sort(prefix.begin(), prefix.end());
            if (prefix != forced) {
                std::string s;
                for (ElemId e : forced) s += (s.empty() ? "" : " ") + p.name(e);
                return fail(path, "atoms above earlier siblings {" + s + "} are not a prefix");
            }
        }

        // Condition 2, checked on minimal common upper bounds.
        std::vector<ElemId> placed;
        for (size_t j = 0; j < node->ordering.size(); ++j) {
            ElemId aj = node->ordering[j];
            if (j > 0 && !c2.ok(placed, aj))
                return fail(path, "condition 2 fails at atom " + std::to_string(j + 1) + " ('" +
                                      p.name(aj) + "')");
            placed.push_back(aj);
        }

        // Recurse.
        placed.clear();
        for (size_t j = 0; j < node->ordering.size(); ++j) {
            ElemId aj = node->ordering[j];
            const RaoNode* child = node->children.empty() ? nullptr : node->children[j].get();
            int len = p.interval_length(aj, top);
            if (len >= 2 && !child) {
                path.push_back(aj);
                return fail(path, "missing child node");
            }
            if (child) {
                auto forced_child = forced_first_set(p, aj, placed);
                if (!node_ok(child, aj, forced_child, path)) return false;
                path.pop_back();
            }
            placed.push_back(aj);
        }
        return true;
    }
};

} // namespace

RaoCheck verify_rao(const Poset& p, const RaoCertificate& cert) {
    ElemId bot = p.bottom();
    ElemId top = p.top();
    int len = p.interval_length(bot, top);
    if (len < 1) throw MalformedCertificateError("poset must have length >= 1");
    Verifier v{p, top};
    if (!cert.root) {
        if (len == 1) return {};
        v.out.ok = false;
        v.out.reason = "certificate is empty but the poset has length >= 2";
        return v.out;
    }
    std::vector<ElemId> path;
    v.node_ok(cert.root.get(), bot, {}, path);
    return v.out;
}

namespace {

// Search-internal tree with shared subtrees (the memo reuses them).
struct SNode {
    ElemId element = -1;
    std::vector<ElemId> ordering;
    std::vector<std::shared_ptr<const SNode>> children;
};

std::unique_ptr<RaoNode> to_public(const SNode* n) {
    if (!n) return nullptr;
    auto m = std::make_unique<RaoNode>();
    m->element = n->element;
    m->ordering = n->ordering;
    for (const auto& c : n->children) m->children.push_back(to_public(c.get()));
    return m;
}

struct RaoSearch {
    const Poset& p;
    ElemId top;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    Cond2Checker c2{p};
    // Subtree existence and least witness depend only on (element, forced set).
    std::map<std::pair<ElemId, std::vector<ElemId>>, std::shared_ptr<const SNode>> memo;

    void tick() {
        if (++nodes > budget) throw ResourceLimitError("find_rao: node budget exhausted");
    }

    // Least certificate node for [u, 1^] whose ordering starts with `forced`,
    // or nullptr after exhausting all orderings.
    std::shared_ptr<const SNode> solve(ElemId u, const std::vector<ElemId>& forced) {
        auto key = std::make_pair(u, forced);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        auto atoms = p.atoms(u);
        const size_t t = atoms.size();
        std::vector<bool> used(t, false);
        std::vector<ElemId> placed;
        std::vector<std::shared_ptr<const SNode>> kids;

        auto rec = [&](auto&& self, size_t idx) -> bool {
            if (idx == t) return true;
            const bool in_forced_zone = idx < forced.size();
            for (size_t i = 0; i < t; ++i) {
                if (used[i]) continue;
                ElemId a = atoms[i];
                if (in_forced_zone && !std::binary_search(forced.begin(), forced.end(), a))
                    continue;
                tick();
                if (idx > 0 && !c2.ok(placed, a)) continue;
                std::shared_ptr<const SNode> child;
                if (p.interval_length(a, top) >= 2) {
                    child = solve(a, forced_first_set(p, a, placed));
                    if (!child) continue;
                }
                used[i] = true;
                placed.push_back(a);
                kids.push_back(std::move(child));
                if (self(self, idx + 1)) return true;
                used[i] = false;
                placed.pop_back();
                kids.pop_back();
            }
            return false;
        };

        std::shared_ptr<const SNode> result;
        if (rec(rec, 0)) {
            auto node = std::make_shared<SNode>();
            node->element = u;
            node->ordering = std::move(placed);
            node->children = std::move(kids);
            result = std::move(node);
        }
        memo.emplace(key, result);
        return result;
    }
};

} // namespace

std::optional<RaoCertificate> find_rao(const Poset& p, std::uint64_t budget,
                                       std::uint64_t* nodes_out) {
    ElemId bot = p.bottom();
    ElemId top = p.top();
    int len = p.interval_length(bot, top);
    if (len < 1) throw MalformedCertificateError("poset must have length >= 1");
    if (len == 1) {
        if (nodes_out) *nodes_out = 0;
        return RaoCertificate{};
    }
    RaoSearch s{p, top, budget};
    std::shared_ptr<const SNode> root;
    try {
        root = s.solve(bot, {});
    } catch (...) {
        if (nodes_out) *nodes_out = s.nodes;
        throw;
    }
    if (nodes_out) *nodes_out = s.nodes;
    if (!root) return std::nullopt;
    RaoCertificate cert;
    cert.root = to_public(root.get());
    return cert;
}

namespace {

struct FamilySearch {
    const Poset& p;
    ElemId top;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    Cond2Checker c2{p};
    std::vector<ElemId> order; // processing order
    std::map<ElemId, std::vector<ElemId>> assigned;
    std::map<ElemId, std::vector<std::vector<ElemId>>> pending; // required prefix sets

    void tick() {
        if (++nodes > budget)
            throw ResourceLimitError("find_root_independent_rao: node budget exhausted");
    }

    static bool nested(std::vector<std::vector<ElemId>> sets) {
        std::sort(sets.begin(), sets.end(),
                  [](const auto& a, const auto& b) { return a.size() < b.size(); });
        for (size_t i = 1; i < sets.size(); ++i)
            if (!sorted_subset(sets[i - 1], sets[i])) return false;
        return true;
    }

    bool compatible(ElemId z, const std::vector<ElemId>& extra) {
        for (const auto& s : pending[z])
            if (!(sorted_subset(s, extra) || sorted_subset(extra, s))) return false;
        return true;
    }

    bool solve(size_t idx) {
        if (idx == order.size()) return true;
        ElemId u = order[idx];
        auto atoms = p.atoms(u);
        const size_t t = atoms.size();

        // Prefix sets recorded by elements below u; realizable as initial
        // segments of one permutation iff pairwise nested.
        auto required = pending[u];
        if (!nested(required)) return false;
        std::sort(required.begin(), required.end(),
                  [](const auto& a, const auto& b) { return a.size() < b.size(); });

        std::vector<bool> used(t, false);
        std::vector<ElemId> placed;

        auto pool_for = [&required](size_t pos) -> const std::vector<ElemId>* {
            for (const auto& s : required)
                if (pos < s.size()) return &s;
            return nullptr;
        };

        auto rec = [&](auto&& self, size_t pos) -> bool {
            if (pos == t) {
                assigned[u] = placed;
                if (solve(idx + 1)) return true;
                assigned.erase(u);
                return false;
            }
            const std::vector<ElemId>* pool = pool_for(pos);
            for (size_t i = 0; i < t; ++i) {
                if (used[i]) continue;
                ElemId a = atoms[i];
                if (pool && !std::binary_search(pool->begin(), pool->end(), a)) continue;
                tick();
                if (pos > 0 && !c2.ok(placed, a)) continue;
                // Prefix constraint this placement imposes on the atom above.
                bool pushed = false;
                if (a != top) {
                    auto forced = forced_first_set(p, a, placed);
                    if (!forced.empty()) {
                        if (!compatible(a, forced)) continue;
                        pending[a].push_back(std::move(forced));
                        pushed = true;
                    }
                }
                used[i] = true;
                placed.push_back(a);
                if (self(self, pos + 1)) return true;
                used[i] = false;
                placed.pop_back();
                if (pushed) pending[a].pop_back();
            }
            return false;
        };
        return rec(rec, 0);
    }
};

} // namespace

std::optional<RootIndependentOrderFamily> find_root_independent_rao(const Poset& p,
                                                                    std::uint64_t budget,
                                                                    std::uint64_t* nodes_out) {
    ElemId bot = p.bottom();
    ElemId top = p.top();
    int len = p.interval_length(bot, top);
    if (len < 1) throw MalformedCertificateError("poset must have length >= 1");
    if (len == 1) {
        if (nodes_out) *nodes_out = 0;
        RootIndependentOrderFamily fam;
        fam.orders[bot] = {top};
        return fam;
    }

    FamilySearch s{p, top, budget};
    for (ElemId u = 0; u < p.size(); ++u)
        if (u != top) s.order.push_back(u);
    // Lower elements first so every prefix constraint on an element is known
    // by the time it is assigned; small atom sets first inside a height class
    // so conflicts surface before the big permutation spaces are touched.
    std::sort(s.order.begin(), s.order.end(), [&p](ElemId a, ElemId b) {
        if (p.height(a) != p.height(b)) return p.height(a) < p.height(b);
        if (p.up_covers(a).size() != p.up_covers(b).size())
            return p.up_covers(a).size() < p.up_covers(b).size();
        return a < b;
    });

    bool found;
    try {
        found = s.solve(0);
    } catch (...) {
        if (nodes_out) *nodes_out = s.nodes;
        throw;
    }
    if (nodes_out) *nodes_out = s.nodes;
    if (!found) return std::nullopt;
    RootIndependentOrderFamily fam;
    fam.orders = std::move(s.assigned);
    return fam;
}

RaoCertificate instantiate_family(const Poset& p, const RootIndependentOrderFamily& fam) {
    ElemId bot = p.bottom();
    ElemId top = p.top();
    auto build = [&](auto&& self, ElemId u) -> std::unique_ptr<RaoNode> {
        auto it = fam.orders.find(u);
        if (it == fam.orders.end())
            throw MalformedCertificateError("family has no ordering for element '" + p.name(u) +
                                            "'");
        auto node = std::make_unique<RaoNode>();
        node->element = u;
        node->ordering = it->second;
        for (ElemId a : node->ordering) {
            if (p.interval_length(a, top) >= 2)
                node->children.push_back(self(self, a));
            else
                node->children.push_back(nullptr);
        }
        return node;
    };
    RaoCertificate cert;
    if (p.interval_length(bot, top) >= 2) cert.root = build(build, bot);
    return cert;
}

std::optional<ObstructionWitness> el_obstruction(
    const Poset& p, ElemId u, const std::vector<std::vector<ElemId>>& contexts) {
    std::vector<std::vector<ElemId>> sets;
    sets.reserve(contexts.size());
    for (const auto& ctx : contexts) {
        for (ElemId e : ctx) p.name(e); // validate ids
        sets.push_back(forced_first_set(p, u, ctx));
    }
    for (size_t i = 0; i < sets.size(); ++i) {
        for (size_t j = i + 1; j < sets.size(); ++j) {
            if (!sorted_subset(sets[i], sets[j]) && !sorted_subset(sets[j], sets[i])) {
                ObstructionWitness w;
                w.context_a = static_cast<int>(i);
                w.context_b = static_cast<int>(j);
                w.set_a = sets[i];
                w.set_b = sets[j];
                return w;
            }
        }
    }
    return std::nullopt;
}

} // namespace lexshell
