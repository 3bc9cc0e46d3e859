#include "helpers.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lexshell::testing {

std::string data_path(const std::string& name) {
    return std::string(LEXSHELL_DATA_DIR) + "/" + name;
}

namespace {

std::string subset_name(unsigned mask) {
    if (mask == 0) return "-";
    std::string s;
    for (int i = 0; i < 16; ++i)
        if (mask & (1u << i)) s += std::to_string(i + 1);
    return s;
}

} // namespace

Poset boolean_lattice(int n) {
    std::vector<std::pair<std::string, std::string>> covers;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        for (int i = 0; i < n; ++i)
            if (!(mask & (1u << i)))
                covers.push_back({subset_name(mask), subset_name(mask | (1u << i))});
    return Poset::from_covers(covers);
}

EdgeLabeling boolean_standard_labeling(const Poset& b, int n) {
    EdgeLabeling l;
    for (ElemId u = 0; u < b.size(); ++u) {
        for (ElemId v : b.up_covers(u)) {
            const std::string &nu = b.name(u), &nv = b.name(v);
            for (char c : nv) {
                if (nu == "-" || nu.find(c) == std::string::npos) {
                    l.set(u, v, c - '0');
                    break;
                }
            }
        }
    }
    (void)n;
    return l;
}

Poset random_bounded_poset(std::mt19937& rng, int max_elems) {
    std::uniform_int_distribution<int> size_dist(2, std::max(2, max_elems - 2));
    const int n = size_dist(rng);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> pdist(0.15, 0.55);
    const double prob = pdist(rng);

    // Random order relation on n middle elements, then reduce to covers.
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (unit(rng) < prob) rel[i][j] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (rel[i][k] && rel[k][j]) rel[i][j] = true;

    auto name = [](int i) { return "e" + std::to_string(i); };
    std::vector<std::pair<std::string, std::string>> covers;
    std::vector<bool> has_lower(n, false), has_upper(n, false);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!rel[i][j]) continue;
            bool is_cover = true;
            for (int k = i + 1; k < j && is_cover; ++k)
                if (rel[i][k] && rel[k][j]) is_cover = false;
            if (is_cover) {
                covers.push_back({name(i), name(j)});
                has_lower[j] = true;
                has_upper[i] = true;
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if (!has_lower[i]) covers.push_back({"0^", name(i)});
        if (!has_upper[i]) covers.push_back({name(i), "z^"});
    }
    return Poset::from_covers(covers);
}

std::vector<ShellingOrder> all_shellings_brute(const SimplicialComplex& c) {
    const int t = c.facet_count();
    ShellingOrder order(t);
    std::iota(order.begin(), order.end(), 0);
    std::vector<ShellingOrder> out;
    do {
        if (is_shelling(c, order).ok) out.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

namespace {

// Condition 2 from the definition, quantified over every common upper bound.
bool cond2_all_uppers(const Poset& p, const std::vector<ElemId>& ordering) {
    ElemId top = p.top();
    (void)top;
    for (size_t j = 1; j < ordering.size(); ++j) {
        for (size_t i = 0; i < j; ++i) {
            for (ElemId y = 0; y < p.size(); ++y) {
                if (!(p.less(ordering[i], y) && p.less(ordering[j], y))) continue;
                bool found = false;
                for (ElemId z : p.up_covers(ordering[j])) {
                    if (!p.leq(z, y)) continue;
                    for (size_t k = 0; k < j && !found; ++k)
                        if (p.less(ordering[k], z)) found = true;
                    if (found) break;
                }
                if (!found) return false;
            }
        }
    }
    return true;
}

bool is_prefix_set(const std::vector<ElemId>& ordering, std::vector<ElemId> want) {
    std::vector<ElemId> head(ordering.begin(), ordering.begin() + want.size());
    std::sort(head.begin(), head.end());
    std::sort(want.begin(), want.end());
    return head == want;
}

bool rao_exists_brute_at(const Poset& p, ElemId u, const std::vector<ElemId>& forced) {
    ElemId top = p.top();
    if (p.interval_length(u, top) <= 1) return true;
    std::vector<ElemId> ordering = p.atoms(u);
    std::sort(ordering.begin(), ordering.end());
    do {
        if (!is_prefix_set(ordering, forced)) continue;
        if (!cond2_all_uppers(p, ordering)) continue;
        bool kids_ok = true;
        std::vector<ElemId> placed;
        for (ElemId a : ordering) {
            auto forced_child = forced_first_set(p, a, placed);
            if (!rao_exists_brute_at(p, a, forced_child)) {
                kids_ok = false;
                break;
            }
            placed.push_back(a);
        }
        if (kids_ok) return true;
    } while (std::next_permutation(ordering.begin(), ordering.end()));
    return false;
}

bool verify_rao_brute_at(const Poset& p, const RaoNode* node, ElemId elem,
                         const std::vector<ElemId>& forced) {
    ElemId top = p.top();
    int len = p.interval_length(elem, top);
    if (!node) return len <= 1;
    if (node->element != elem) return false;
    auto atoms = p.atoms(elem);
    auto sorted = node->ordering;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != atoms) return false;
    if (!is_prefix_set(node->ordering, forced)) return false;
    if (!cond2_all_uppers(p, node->ordering)) return false;
    std::vector<ElemId> placed;
    for (size_t j = 0; j < node->ordering.size(); ++j) {
        ElemId a = node->ordering[j];
        const RaoNode* child = node->children.empty() ? nullptr : node->children[j].get();
        auto forced_child = forced_first_set(p, a, placed);
        if (!verify_rao_brute_at(p, child, a, forced_child)) return false;
        placed.push_back(a);
    }
    return true;
}

} // namespace

bool rao_exists_brute(const Poset& p) {
    ElemId bot = p.bottom();
    ElemId top = p.top();
    if (p.interval_length(bot, top) == 1) return true;
    return rao_exists_brute_at(p, bot, {});
}

bool verify_rao_brute(const Poset& p, const RaoCertificate& cert) {
    ElemId bot = p.bottom();
    ElemId top = p.top();
    if (p.interval_length(bot, top) == 1) return !cert.root || cert.root->element == bot;
    if (!cert.root) return false;
    return verify_rao_brute_at(p, cert.root.get(), bot, {});
}

} // namespace lexshell::testing
