#include "lexshell/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lexshell {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    return out;
}

} // namespace

Poset read_poset(std::istream& in, const std::string& what) {
    std::vector<std::pair<std::string, std::string>> covers;
    std::vector<std::string> isolated;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "cover" && toks.size() == 3) {
            covers.push_back({toks[1], toks[2]});
        } else if (toks[0] == "elem" && toks.size() == 2) {
            isolated.push_back(toks[1]);
        } else {
            throw ParseError(what + ":" + std::to_string(lineno) + ": expected 'cover <u> <v>' or 'elem <u>'");
        }
    }
    if (covers.empty() && isolated.empty())
        throw ParseError(what + ": no data lines");
    return Poset::from_covers(covers, isolated);
}

Poset load_poset(const std::string& path) {
    auto in = open_in(path);
    return read_poset(in, path);
}

void write_poset(std::ostream& out, const Poset& p) {
    for (ElemId e = 0; e < p.size(); ++e)
        if (p.up_covers(e).empty() && p.down_covers(e).empty())
            out << "elem " << p.name(e) << "\n";
    for (const auto& [u, v] : p.cover_pairs()) out << "cover " << u << " " << v << "\n";
}

void save_poset(const std::string& path, const Poset& p) {
    auto out = open_out(path);
    write_poset(out, p);
}

SimplicialComplex read_complex(std::istream& in, const std::string& what) {
    std::vector<std::vector<std::string>> facets;
    std::string line;
    while (std::getline(in, line)) {
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        facets.push_back(toks);
    }
    if (facets.empty()) throw ParseError(what + ": no facets");
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex load_complex(const std::string& path) {
    auto in = open_in(path);
    return read_complex(in, path);
}

void write_complex(std::ostream& out, const SimplicialComplex& c) {
    for (const auto& f : c.facets()) {
        for (size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << c.vertex_name(f[i]);
        out << "\n";
    }
}

void save_complex(const std::string& path, const SimplicialComplex& c) {
    auto out = open_out(path);
    write_complex(out, c);
}

std::vector<int> load_shelling(const std::string& path, const SimplicialComplex& c) {
    auto in = open_in(path);
    std::vector<int> order;
    std::string line;
    while (std::getline(in, line)) {
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        order.push_back(c.facet_index(toks));
    }
    return order;
}

void write_shelling(std::ostream& out, const SimplicialComplex& c,
                    const std::vector<int>& order) {
    for (int k : order) {
        const auto& f = c.facets().at(k);
        for (size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << c.vertex_name(f[i]);
        out << "\n";
    }
}

void save_shelling(const std::string& path, const SimplicialComplex& c,
                   const std::vector<int>& order) {
    auto out = open_out(path);
    write_shelling(out, c, order);
}

EdgeLabeling load_labeling(const std::string& path, const Poset& p) {
    auto in = open_in(path);
    EdgeLabeling l;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() != 3)
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected '<u> <v> <label>'");
        ElemId u = p.id(toks[0]);
        ElemId v = p.id(toks[1]);
        const auto& ups = p.up_covers(u);
        if (std::find(ups.begin(), ups.end(), v) == ups.end())
            throw ParseError(path + ":" + std::to_string(lineno) + ": (" + toks[0] + ", " +
                             toks[1] + ") is not a cover");
        int label;
        try {
            label = std::stoi(toks[2]);
        } catch (...) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": bad label '" + toks[2] +
                             "'");
        }
        if (auto prev = l.get(u, v); prev && *prev != label)
            throw ParseError(path + ":" + std::to_string(lineno) + ": conflicting label for (" +
                             toks[0] + ", " + toks[1] + ")");
        l.set(u, v, label);
    }
    return l;
}

void write_labeling(std::ostream& out, const Poset& p, const EdgeLabeling& l) {
    for (const auto& [edge, label] : l.entries())
        out << p.name(edge.first) << " " << p.name(edge.second) << " " << label << "\n";
}

void save_labeling(const std::string& path, const Poset& p, const EdgeLabeling& l) {
    auto out = open_out(path);
    write_labeling(out, p, l);
}

ChainEdgeLabeling load_chain_labeling(const std::string& path, const Poset& p) {
    auto in = open_in(path);
    std::map<RootedEdgeKey, int> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() != 3 || toks[1] != ":")
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": expected '<u0>>...><uk> : <label>'");
        // Split the chain on '>'.
        std::vector<std::string> names;
        std::string cur;
        for (char ch : toks[0]) {
            if (ch == '>') {
                names.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        names.push_back(cur);
        if (names.size() < 2)
            throw ParseError(path + ":" + std::to_string(lineno) + ": chain needs two elements");
        RootedEdgeKey key;
        for (size_t i = 0; i + 1 < names.size(); ++i) key.prefix.push_back(p.id(names[i]));
        key.upper = p.id(names.back());
        // The prefix must be a saturated chain starting at the bottom.
        if (key.prefix.front() != p.bottom())
            throw ParseError(path + ":" + std::to_string(lineno) + ": chain must start at the bottom");
        for (size_t i = 0; i + 1 < key.prefix.size(); ++i) {
            const auto& ups = p.up_covers(key.prefix[i]);
            if (std::find(ups.begin(), ups.end(), key.prefix[i + 1]) == ups.end())
                throw ParseError(path + ":" + std::to_string(lineno) + ": not a saturated chain");
        }
        {
            const auto& ups = p.up_covers(key.prefix.back());
            if (std::find(ups.begin(), ups.end(), key.upper) == ups.end())
                throw ParseError(path + ":" + std::to_string(lineno) + ": final step is not a cover");
        }
        int label;
        try {
            label = std::stoi(toks[2]);
        } catch (...) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": bad label '" + toks[2] +
                             "'");
        }
        auto it = entries.find(key);
        if (it != entries.end() && it->second != label)
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": conflicting label for a rooted edge");
        entries[key] = label;
    }
    return ChainEdgeLabeling::from_entries(entries);
}

namespace {

void write_rao_node(std::ostream& out, const Poset& p, const RaoNode* n, int depth) {
    for (int i = 0; i < depth; ++i) out << "  ";
    out << p.name(n->element) << ":";
    for (ElemId a : n->ordering) out << " " << p.name(a);
    out << "\n";
    for (const auto& c : n->children)
        if (c) write_rao_node(out, p, c.get(), depth + 1);
}

} // namespace

void write_rao(std::ostream& out, const Poset& p, const RaoCertificate& cert) {
    if (cert.root) write_rao_node(out, p, cert.root.get(), 0);
}

void save_rao(const std::string& path, const Poset& p, const RaoCertificate& cert) {
    auto out = open_out(path);
    write_rao(out, p, cert);
}

RaoCertificate read_rao(std::istream& in, const Poset& p, const std::string& what) {
    struct Line {
        int depth;
        ElemId element;
        std::vector<ElemId> ordering;
    };
    std::vector<Line> lines;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        size_t indent = 0;
        while (indent < raw.size() && raw[indent] == ' ') ++indent;
        auto toks = tokenize(raw);
        if (toks.empty()) continue;
        if (indent % 2 != 0)
            throw ParseError(what + ":" + std::to_string(lineno) + ": odd indentation");
        Line ln;
        ln.depth = static_cast<int>(indent / 2);
        std::string head = toks[0];
        if (head.empty() || head.back() != ':')
            throw ParseError(what + ":" + std::to_string(lineno) + ": expected '<element>:'");
        head.pop_back();
        ln.element = p.id(head);
        for (size_t i = 1; i < toks.size(); ++i) ln.ordering.push_back(p.id(toks[i]));
        lines.push_back(std::move(ln));
    }
    if (lines.empty()) return {};

    RaoCertificate cert;
    std::vector<RaoNode*> stack; // stack[d] = open node at depth d
    for (const auto& ln : lines) {
        auto node = std::make_unique<RaoNode>();
        node->element = ln.element;
        node->ordering = ln.ordering;
        node->children.resize(ln.ordering.size());
        RaoNode* raw_node = node.get();
        if (ln.depth == 0) {
            if (cert.root) throw ParseError(what + ": multiple root nodes");
            cert.root = std::move(node);
        } else {
            if (ln.depth > static_cast<int>(stack.size()))
                throw ParseError(what + ": indentation skips a level before '" +
                                 p.name(ln.element) + "'");
            RaoNode* parent = stack[ln.depth - 1];
            auto it = std::find(parent->ordering.begin(), parent->ordering.end(), ln.element);
            if (it == parent->ordering.end())
                throw ParseError(what + ": node '" + p.name(ln.element) +
                                 "' is not an atom of its parent");
            size_t slot = static_cast<size_t>(it - parent->ordering.begin());
            if (parent->children[slot])
                throw ParseError(what + ": duplicate node for '" + p.name(ln.element) + "'");
            parent->children[slot] = std::move(node);
        }
        stack.resize(ln.depth);
        stack.push_back(raw_node);
    }
    return cert;
}

RaoCertificate load_rao(const std::string& path, const Poset& p) {
    auto in = open_in(path);
    return read_rao(in, p, path);
}

RootIndependentOrderFamily load_family(const std::string& path, const Poset& p) {
    auto in = open_in(path);
    RootIndependentOrderFamily fam;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        std::string head = toks[0];
        if (head.empty() || head.back() != ':')
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected '<element>:'");
        head.pop_back();
        ElemId u = p.id(head);
        std::vector<ElemId> ordering;
        for (size_t i = 1; i < toks.size(); ++i) ordering.push_back(p.id(toks[i]));
        if (fam.orders.count(u))
            throw ParseError(path + ":" + std::to_string(lineno) + ": duplicate element '" +
                             head + "'");
        fam.orders[u] = std::move(ordering);
    }
    return fam;
}

void write_family(std::ostream& out, const Poset& p, const RootIndependentOrderFamily& fam) {
    for (const auto& [u, ordering] : fam.orders) {
        out << p.name(u) << ":";
        for (ElemId a : ordering) out << " " << p.name(a);
        out << "\n";
    }
}

void save_family(const std::string& path, const Poset& p,
                 const RootIndependentOrderFamily& fam) {
    auto out = open_out(path);
    write_family(out, p, fam);
}

} // namespace lexshell
