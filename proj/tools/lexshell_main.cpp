// Command-line front end: deterministic reports on stdout, exit codes
//   0 property holds / witness found
//   1 property fails / exhaustively refuted
//   2 input or format error
//   3 resource limit reached

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lexshell/constructions.hpp"
#include "lexshell/io.hpp"
#include "lexshell/report.hpp"

using namespace lexshell;

namespace {

struct Ctx {
    std::uint64_t limit = kDefaultNodeBudget;
    bool deterministic = true;
    std::string mode; // empty = command default
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    // Def 2 checks default to weak increase, Def 4 to strict.
    IncreaseMode increase(IncreaseMode command_default) const {
        if (mode.empty()) return command_default;
        if (mode == "weak") return IncreaseMode::Weak;
        if (mode == "strict") return IncreaseMode::Strict;
        throw ParseError("--mode must be 'weak' or 'strict'");
    }

    std::string mode_string(IncreaseMode command_default) const {
        return increase(command_default) == IncreaseMode::Weak ? "weak" : "strict";
    }

    Report report(const std::string& command,
                  std::vector<std::pair<std::string, std::string>> inputs) const {
        Report r;
        r.header.push_back({"command", command});
        for (auto& kv : inputs) r.header.push_back(std::move(kv));
        r.header.push_back({"limit", std::to_string(limit)});
        r.header.push_back({"deterministic", deterministic ? "on" : "off"});
        r.deterministic = deterministic;
        return r;
    }

    int finish(Report& r, int code) {
        r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        write_report(std::cout, r);
        return code;
    }
};

std::string join_names(const Poset& p, const std::vector<ElemId>& elems,
                       const char* sep = " ") {
    std::string out;
    for (ElemId e : elems) {
        if (!out.empty()) out += sep;
        out += p.name(e);
    }
    return out;
}

std::string facet_line(const SimplicialComplex& c, int k) {
    std::string out;
    for (int v : c.facets().at(k)) {
        if (!out.empty()) out += ' ';
        out += c.vertex_name(v);
    }
    return out;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Commands that take a complex accept a poset too, via its order complex.
SimplicialComplex load_input_complex(const std::string& path, bool strip_bounds) {
    if (ends_with(path, ".poset")) return order_complex(load_poset(path), strip_bounds);
    return load_complex(path);
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> rao_lines(const Poset& p, const RaoCertificate& cert) {
    std::ostringstream ss;
    write_rao(ss, p, cert);
    return split_lines(ss.str());
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        } else if (!cur.empty()) {
            out.push_back(cur);
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int cmd_validate(Ctx& ctx, const std::string& path) {
    auto r = ctx.report("validate", {{"input", path}});
    try {
        if (ends_with(path, ".cplx")) {
            auto c = load_complex(path);
            r.subject = "complex with " + std::to_string(c.facet_count()) + " facets, dimension " +
                        std::to_string(c.dimension());
        } else {
            auto p = load_poset(path);
            r.subject = "poset with " + std::to_string(p.size()) + " elements";
            r.detail.push_back(std::string("bounded: ") + (p.is_bounded() ? "yes" : "no"));
        }
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        r.verdict = "fails";
        r.counterexample.push_back(e.what());
        return ctx.finish(r, 1);
    }
    r.verdict = "holds";
    return ctx.finish(r, 0);
}

int cmd_chains(Ctx& ctx, const std::string& path) {
    auto p = load_poset(path);
    auto r = ctx.report("chains", {{"poset", path}});
    auto chains = p.maximal_chains();
    r.verdict = "holds";
    r.subject = std::to_string(chains.size()) + " maximal chains";
    for (const auto& c : chains) r.certificate.push_back(join_names(p, c));
    return ctx.finish(r, 0);
}

int cmd_graded(Ctx& ctx, const std::string& path) {
    auto p = load_poset(path);
    auto r = ctx.report("graded", {{"poset", path}});
    auto g = p.is_graded();
    if (g.graded) {
        r.verdict = "holds";
        r.subject = "graded of rank " + std::to_string(g.rank);
        return ctx.finish(r, 0);
    }
    r.verdict = "fails";
    r.subject = "maximal chains of different lengths exist";
    auto chains = p.maximal_chains();
    size_t len0 = chains.front().size();
    r.counterexample.push_back(join_names(p, chains.front()));
    for (const auto& c : chains)
        if (c.size() != len0) {
            r.counterexample.push_back(join_names(p, c));
            break;
        }
    return ctx.finish(r, 1);
}

int cmd_shelling_check(Ctx& ctx, const std::string& path, const std::string& order_path,
                       bool strip) {
    auto c = load_input_complex(path, strip);
    auto order = load_shelling(order_path, c);
    auto r = ctx.report("shelling-check", {{"complex", path}, {"order", order_path}});
    auto chk = is_shelling(c, order);
    if (chk.ok) {
        r.verdict = "holds";
        r.subject = "the given facet order is a shelling";
        return ctx.finish(r, 0);
    }
    r.verdict = "fails";
    r.subject = "facet order is not a shelling";
    r.counterexample.push_back("first-failing-position: " + std::to_string(chk.first_bad_index));
    for (const auto& f : chk.offending_maximal)
        r.counterexample.push_back("intersection-facet: " +
                                   (f.empty() ? std::string("(empty)") : c.face_label(f)));
    return ctx.finish(r, 1);
}

int cmd_shelling_find(Ctx& ctx, const std::string& path, bool strip, const std::string& emit) {
    auto c = load_input_complex(path, strip);
    auto r = ctx.report("shelling-find", {{"complex", path}});
    SearchStats stats;
    auto order = find_shelling(c, ctx.limit, &stats);
    r.nodes = stats.nodes;
    if (!order) {
        r.verdict = "fails";
        r.subject = "no shelling exists (exhaustive search)";
        return ctx.finish(r, 1);
    }
    r.verdict = "holds";
    r.subject = "lexicographically least shelling";
    for (int k : *order) r.certificate.push_back(facet_line(c, k));
    if (!emit.empty()) save_shelling(emit, c, *order);
    return ctx.finish(r, 0);
}

int cmd_forced_last(Ctx& ctx, const std::string& path, const std::vector<std::string>& verts) {
    auto c = load_complex(path);
    int f = c.facet_index(verts);
    auto r = ctx.report("forced-last", {{"complex", path}, {"facet", facet_line(c, f)}});
    SearchStats stats;
    bool forced = forced_last_facet(c, f, ctx.limit, &stats);
    r.nodes = stats.nodes;
    if (forced) {
        r.verdict = "holds";
        r.subject = "facet is last in every shelling";
        return ctx.finish(r, 0);
    }
    r.verdict = "fails";
    r.subject = "a shelling ends at a different facet";
    for (int g = 0; g < c.facet_count(); ++g) {
        if (g == f) continue;
        SearchStats s2;
        if (auto order = find_shelling_ending_at(c, g, ctx.limit, &s2)) {
            for (int k : *order) r.counterexample.push_back(facet_line(c, k));
            break;
        }
    }
    return ctx.finish(r, 1);
}

int cmd_el_check(Ctx& ctx, const std::string& path, const std::string& lbl_path) {
    auto p = load_poset(path);
    auto l = load_labeling(lbl_path, p);
    auto r = ctx.report("el-check", {{"poset", path},
                                     {"labeling", lbl_path},
                                     {"labels", ctx.mode_string(IncreaseMode::Weak)}});
    auto chk = verify_el_labeling(p, l, ctx.increase(IncreaseMode::Weak));
    if (chk.ok) {
        r.verdict = "holds";
        r.subject = "edge labeling is an EL-labeling";
        return ctx.finish(r, 0);
    }
    r.verdict = "fails";
    r.subject = "edge labeling is not an EL-labeling";
    r.counterexample.push_back("interval: [" + p.name(chk.fail_x) + ", " + p.name(chk.fail_y) +
                               "]");
    r.counterexample.push_back("reason: " + chk.reason);
    return ctx.finish(r, 1);
}

int cmd_el_find(Ctx& ctx, const std::string& path, int alphabet, const std::string& emit) {
    auto p = load_poset(path);
    auto r = ctx.report("el-find", {{"poset", path},
                                    {"alphabet", std::to_string(alphabet)},
                                    {"labels", ctx.mode_string(IncreaseMode::Weak)}});
    std::uint64_t nodes = 0;
    auto found =
        search_el_labeling(p, alphabet, ctx.increase(IncreaseMode::Weak), ctx.limit, &nodes);
    r.nodes = nodes;
    if (!found) {
        r.verdict = "not-found";
        r.subject = "no EL-labeling with this alphabet";
        r.detail.push_back("note: not a proof of non-EL-shellability; see rindep-rao");
        return ctx.finish(r, 1);
    }
    r.verdict = "holds";
    r.subject = "EL-labeling found";
    for (const auto& [edge, label] : found->entries())
        r.certificate.push_back(p.name(edge.first) + " " + p.name(edge.second) + " " +
                                std::to_string(label));
    if (!emit.empty()) save_labeling(emit, p, *found);
    return ctx.finish(r, 0);
}

int cmd_cl_check(Ctx& ctx, const std::string& path, const std::string& cll_path) {
    auto p = load_poset(path);
    auto l = load_chain_labeling(cll_path, p);
    auto r = ctx.report("cl-check", {{"poset", path},
                                     {"labeling", cll_path},
                                     {"labels", ctx.mode_string(IncreaseMode::Strict)}});
    auto chk = verify_cl_labeling(p, l, ctx.increase(IncreaseMode::Strict));
    if (chk.ok) {
        r.verdict = "holds";
        r.subject = "chain-edge labeling is a CL-labeling";
        return ctx.finish(r, 0);
    }
    r.verdict = "fails";
    r.subject = "chain-edge labeling is not a CL-labeling";
    r.counterexample.push_back("rooted-interval: [" + p.name(chk.fail_x) + ", " +
                               p.name(chk.fail_y) + "] root " + join_names(p, chk.fail_root, ">"));
    r.counterexample.push_back("reason: " + chk.reason);
    return ctx.finish(r, 1);
}

int cmd_lexorder_check(Ctx& ctx, const std::string& path, const std::string& lbl_path) {
    auto p = load_poset(path);
    auto l = load_labeling(lbl_path, p);
    auto r = ctx.report("lexorder-check", {{"poset", path},
                                           {"labeling", lbl_path},
                                           {"labels", ctx.mode_string(IncreaseMode::Weak)}});
    auto chk = lex_order_shelling_check(p, l, ctx.increase(IncreaseMode::Weak));
    if (!chk.labeling_ok) {
        r.verdict = "fails";
        r.subject = "labeling is not an EL-labeling";
        return ctx.finish(r, 1);
    }
    if (chk.shelling_ok) {
        r.verdict = "holds";
        r.subject = chk.vacuous ? "proper part empty; vacuously a shelling"
                                : "lex order of maximal chains shells the order complex";
        return ctx.finish(r, 0);
    }
    r.verdict = "fails";
    r.subject = "lex order of maximal chains is not a shelling";
    r.counterexample.push_back("first-failing-position: " +
                               std::to_string(chk.detail.first_bad_index));
    return ctx.finish(r, 1);
}

int cmd_rao_check(Ctx& ctx, const std::string& path, const std::string& rao_path) {
    auto p = load_poset(path);
    auto cert = load_rao(rao_path, p);
    auto r = ctx.report("rao-check", {{"poset", path}, {"certificate", rao_path}});
    auto chk = verify_rao(p, cert);
    if (chk.ok) {
        r.verdict = "holds";
        r.subject = "certificate is a recursive atom ordering";
        return ctx.finish(r, 0);
    }
    r.verdict = "fails";
    r.subject = "certificate violates the recursive atom ordering conditions";
    r.counterexample.push_back("node: " + join_names(p, chk.fail_path, ">"));
    r.counterexample.push_back("reason: " + chk.reason);
    return ctx.finish(r, 1);
}

int cmd_rao_find(Ctx& ctx, const std::string& path, const std::string& emit) {
    auto p = load_poset(path);
    auto r = ctx.report("rao-find", {{"poset", path}});
    std::uint64_t nodes = 0;
    auto cert = find_rao(p, ctx.limit, &nodes);
    r.nodes = nodes;
    if (!cert) {
        r.verdict = "fails";
        r.subject = "no recursive atom ordering (exhaustive search); not CL-shellable";
        return ctx.finish(r, 1);
    }
    r.verdict = "holds";
    r.subject = "recursive atom ordering found; poset is CL-shellable";
    r.certificate = rao_lines(p, *cert);
    if (!emit.empty()) save_rao(emit, p, *cert);
    return ctx.finish(r, 0);
}

int cmd_rindep_rao(Ctx& ctx, const std::string& path, const std::string& emit,
                   const std::string& verify_path) {
    auto p = load_poset(path);
    if (!verify_path.empty()) {
        auto fam = load_family(verify_path, p);
        auto r = ctx.report("rindep-rao", {{"poset", path}, {"family", verify_path}});
        auto cert = instantiate_family(p, fam);
        auto chk = verify_rao(p, cert);
        if (chk.ok) {
            r.verdict = "holds";
            r.subject = "family instantiates a recursive atom ordering";
            return ctx.finish(r, 0);
        }
        r.verdict = "fails";
        r.subject = "family does not instantiate a recursive atom ordering";
        r.counterexample.push_back("node: " + join_names(p, chk.fail_path, ">"));
        r.counterexample.push_back("reason: " + chk.reason);
        return ctx.finish(r, 1);
    }
    auto r = ctx.report("rindep-rao", {{"poset", path}});
    std::uint64_t nodes = 0;
    auto fam = find_root_independent_rao(p, ctx.limit, &nodes);
    r.nodes = nodes;
    if (!fam) {
        r.verdict = "fails";
        r.subject =
            "no root-independent recursive atom ordering (exhaustive search); "
            "poset is not EL-shellable";
        return ctx.finish(r, 1);
    }
    r.verdict = "holds";
    r.subject = "root-independent atom order family found";
    std::ostringstream ss;
    write_family(ss, p, *fam);
    r.certificate = split_lines(ss.str());
    if (!emit.empty()) save_family(emit, p, *fam);
    return ctx.finish(r, 0);
}

int cmd_obstruct(Ctx& ctx, const std::string& path, const std::string& elem,
                 const std::vector<std::string>& raw_contexts,
                 const std::vector<std::string>& atoms_of) {
    auto p = load_poset(path);
    ElemId u = p.id(elem);
    std::vector<std::vector<ElemId>> contexts;
    std::vector<std::string> labels;
    for (const auto& raw : raw_contexts) {
        contexts.push_back(resolve_elements(p, split_commas(raw)));
        labels.push_back(raw);
    }
    for (const auto& name : atoms_of) {
        ElemId v = p.id(name);
        std::vector<ElemId> ctx_set;
        for (ElemId a : p.atoms(v))
            if (a != u) ctx_set.push_back(a);
        contexts.push_back(std::move(ctx_set));
        labels.push_back("atoms-of " + name + " minus " + elem);
    }
    auto r = ctx.report("obstruct", {{"poset", path}, {"element", elem}});
    if (contexts.size() < 2) throw ParseError("obstruct needs at least two contexts");
    auto w = el_obstruction(p, u, contexts);
    if (!w) {
        r.verdict = "fails";
        r.subject = "forced-first sets are nested; no obstruction among these contexts";
        return ctx.finish(r, 1);
    }
    r.verdict = "holds";
    r.subject = "incomparable forced-first sets; no EL-shelling exists";
    r.certificate.push_back("context-a: " + labels[w->context_a]);
    r.certificate.push_back("forced-first-a: " + join_names(p, w->set_a));
    r.certificate.push_back("context-b: " + labels[w->context_b]);
    r.certificate.push_back("forced-first-b: " + join_names(p, w->set_b));
    return ctx.finish(r, 0);
}

int cmd_build_graded(Ctx& ctx, const std::string& path, const std::string& out_path) {
    auto h = load_hachimori(path, ctx.limit);
    int special = h.facet_index({"1", "3", "4"});
    auto P = build_graded_example(h, special);
    auto r = ctx.report("build-graded", {{"complex", path}});
    auto g = P.is_graded();
    r.verdict = "holds";
    r.subject = "graded example with " + std::to_string(P.size()) + " elements, rank " +
                std::to_string(g.rank);
    std::ostringstream ss;
    write_poset(ss, P);
    r.certificate = split_lines(ss.str());
    if (!out_path.empty()) save_poset(out_path, P);
    return ctx.finish(r, 0);
}

int cmd_graded_rao(Ctx& ctx, const std::string& path, const std::string& out_path) {
    auto h = load_hachimori(path, ctx.limit);
    int special = h.facet_index({"1", "3", "4"});
    auto P = build_graded_example(h, special);
    SearchStats stats;
    auto shelling = find_shelling(h, ctx.limit, &stats);
    auto r = ctx.report("graded-rao", {{"complex", path}});
    r.nodes = stats.nodes;
    auto cert = build_graded_rao(P, h, special, *shelling);
    auto chk = verify_rao(P, cert);
    if (!chk.ok) {
        r.verdict = "fails";
        r.subject = "recipe certificate failed verification";
        r.counterexample.push_back("node: " + join_names(P, chk.fail_path, ">"));
        r.counterexample.push_back("reason: " + chk.reason);
        return ctx.finish(r, 1);
    }
    r.verdict = "holds";
    r.subject = "recipe certificate verifies; graded example is CL-shellable";
    r.certificate = rao_lines(P, cert);
    if (!out_path.empty()) save_rao(out_path, P, cert);
    return ctx.finish(r, 0);
}

int cmd_hachimori_validate(Ctx& ctx, const std::string& path) {
    auto r = ctx.report("hachimori-validate", {{"complex", path}});
    try {
        auto h = load_hachimori(path, ctx.limit);
        r.verdict = "holds";
        r.subject = "pure 2-dimensional, shellable, facet {1 3 4} forced last";
        r.detail.push_back("facets: " + std::to_string(h.facet_count()));
        r.detail.push_back("vertices: " + std::to_string(h.vertex_count()));
    } catch (const ParseError&) {
        throw;
    } catch (const ValidationError& e) {
        r.verdict = "fails";
        r.counterexample.push_back(e.what());
        return ctx.finish(r, 1);
    }
    return ctx.finish(r, 0);
}

int cmd_ungraded_validate(Ctx& ctx, const std::string& path) {
    auto r = ctx.report("validate", {{"input", path}});
    try {
        auto p = load_ungraded_example(path);
        r.verdict = "holds";
        r.subject = "ungraded example passes all structural checks";
        r.detail.push_back("elements: " + std::to_string(p.size()));
    } catch (const ParseError&) {
        throw;
    } catch (const ValidationError& e) {
        r.verdict = "fails";
        r.counterexample.push_back(e.what());
        return ctx.finish(r, 1);
    }
    return ctx.finish(r, 0);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lexshell: shellability, lexicographic labelings, and recursive atom orderings "
                 "for finite bounded posets"};
    app.require_subcommand(1);

    Ctx ctx;
    if (const char* env = std::getenv("LEXSHELL_LIMIT")) ctx.limit = std::strtoull(env, nullptr, 10);

    // Shared flags live on each subcommand.
    auto add_common = [&](CLI::App* sub, bool with_mode) {
        sub->add_option("--limit", ctx.limit, "search node budget");
        sub->add_flag("--deterministic,!--no-deterministic", ctx.deterministic,
                      "byte-reproducible reports (default on)");
        if (with_mode) sub->add_option("--mode", ctx.mode, "weak|strict increase requirement");
    };

    std::function<int()> run;

    // validate
    {
        auto sub = app.add_subcommand("validate", "parse and validate a .poset or .cplx file");
        auto path = std::make_shared<std::string>();
        auto ungraded = std::make_shared<bool>(false);
        sub->add_option("file", *path)->required();
        sub->add_flag("--ungraded-example", *ungraded,
                      "also check the ungraded-example structural statements");
        add_common(sub, false);
        sub->callback([&, path, ungraded] {
            run = [&, path, ungraded] {
                return *ungraded ? cmd_ungraded_validate(ctx, *path) : cmd_validate(ctx, *path);
            };
        });
    }
    // chains
    {
        auto sub = app.add_subcommand("chains", "list all maximal chains");
        auto path = std::make_shared<std::string>();
        sub->add_option("poset", *path)->required();
        add_common(sub, false);
        sub->callback([&, path] { run = [&, path] { return cmd_chains(ctx, *path); }; });
    }
    // graded
    {
        auto sub = app.add_subcommand("graded", "decide gradedness and report the rank");
        auto path = std::make_shared<std::string>();
        sub->add_option("poset", *path)->required();
        add_common(sub, false);
        sub->callback([&, path] { run = [&, path] { return cmd_graded(ctx, *path); }; });
    }
    // shelling-check
    {
        auto sub = app.add_subcommand("shelling-check", "verify a facet order is a shelling");
        auto path = std::make_shared<std::string>();
        auto order = std::make_shared<std::string>();
        auto strip = std::make_shared<bool>(true);
        sub->add_option("complex", *path, ".cplx, or .poset for its order complex")->required();
        sub->add_option("order", *order, ".shell file")->required();
        sub->add_flag("--strip-bounds,!--no-strip-bounds", *strip,
                      "use the proper part for poset inputs (default on)");
        add_common(sub, false);
        sub->callback([&, path, order, strip] {
            run = [&, path, order, strip] {
                return cmd_shelling_check(ctx, *path, *order, *strip);
            };
        });
    }
    // shelling-find
    {
        auto sub = app.add_subcommand("shelling-find", "search for the least shelling");
        auto path = std::make_shared<std::string>();
        auto strip = std::make_shared<bool>(true);
        auto emit = std::make_shared<std::string>();
        sub->add_option("complex", *path, ".cplx, or .poset for its order complex")->required();
        sub->add_flag("--strip-bounds,!--no-strip-bounds", *strip,
                      "use the proper part for poset inputs (default on)");
        sub->add_option("--emit", *emit, "write the shelling to this .shell file");
        add_common(sub, false);
        sub->callback([&, path, strip, emit] {
            run = [&, path, strip, emit] { return cmd_shelling_find(ctx, *path, *strip, *emit); };
        });
    }
    // forced-last
    {
        auto sub = app.add_subcommand("forced-last",
                                      "decide whether a facet is last in every shelling");
        auto path = std::make_shared<std::string>();
        auto verts = std::make_shared<std::vector<std::string>>();
        sub->add_option("complex", *path)->required();
        sub->add_option("vertices", *verts, "vertex tokens of the facet")->required();
        add_common(sub, false);
        sub->callback([&, path, verts] {
            run = [&, path, verts] { return cmd_forced_last(ctx, *path, *verts); };
        });
    }
    // el-check
    {
        auto sub = app.add_subcommand("el-check", "verify an EL-labeling");
        auto path = std::make_shared<std::string>();
        auto lbl = std::make_shared<std::string>();
        sub->add_option("poset", *path)->required();
        sub->add_option("labeling", *lbl, ".lbl file")->required();
        add_common(sub, true);
        sub->callback([&, path, lbl] {
            run = [&, path, lbl] { return cmd_el_check(ctx, *path, *lbl); };
        });
    }
    // el-find
    {
        auto sub = app.add_subcommand("el-find", "search for an EL-labeling");
        auto path = std::make_shared<std::string>();
        auto alphabet = std::make_shared<int>(3);
        auto emit = std::make_shared<std::string>();
        sub->add_option("poset", *path)->required();
        sub->add_option("--alphabet", *alphabet, "label values 1..N (default 3)");
        sub->add_option("--emit", *emit, "write the labeling to this .lbl file");
        add_common(sub, true);
        sub->callback([&, path, alphabet, emit] {
            run = [&, path, alphabet, emit] { return cmd_el_find(ctx, *path, *alphabet, *emit); };
        });
    }
    // cl-check
    {
        auto sub = app.add_subcommand("cl-check", "verify a CL-labeling");
        auto path = std::make_shared<std::string>();
        auto cll = std::make_shared<std::string>();
        sub->add_option("poset", *path)->required();
        sub->add_option("labeling", *cll, ".cll file")->required();
        add_common(sub, true);
        sub->callback([&, path, cll] {
            run = [&, path, cll] { return cmd_cl_check(ctx, *path, *cll); };
        });
    }
    // lexorder-check
    {
        auto sub = app.add_subcommand("lexorder-check",
                                      "check that the lex order of maximal chains is a shelling");
        auto path = std::make_shared<std::string>();
        auto lbl = std::make_shared<std::string>();
        sub->add_option("poset", *path)->required();
        sub->add_option("labeling", *lbl, ".lbl file")->required();
        add_common(sub, true);
        sub->callback([&, path, lbl] {
            run = [&, path, lbl] { return cmd_lexorder_check(ctx, *path, *lbl); };
        });
    }
    // rao-check
    {
        auto sub = app.add_subcommand("rao-check", "verify a recursive atom ordering certificate");
        auto path = std::make_shared<std::string>();
        auto cert = std::make_shared<std::string>();
        sub->add_option("poset", *path)->required();
        sub->add_option("certificate", *cert, ".rao file")->required();
        add_common(sub, false);
        sub->callback([&, path, cert] {
            run = [&, path, cert] { return cmd_rao_check(ctx, *path, *cert); };
        });
    }
    // rao-find
    {
        auto sub = app.add_subcommand("rao-find", "search for a recursive atom ordering");
        auto path = std::make_shared<std::string>();
        auto emit = std::make_shared<std::string>();
        sub->add_option("poset", *path)->required();
        sub->add_option("--emit", *emit, "write the certificate to this .rao file");
        add_common(sub, false);
        sub->callback([&, path, emit] {
            run = [&, path, emit] { return cmd_rao_find(ctx, *path, *emit); };
        });
    }
    // rindep-rao
    {
        auto sub = app.add_subcommand(
            "rindep-rao", "search for a root-independent recursive atom ordering family");
        auto path = std::make_shared<std::string>();
        auto emit = std::make_shared<std::string>();
        auto verify = std::make_shared<std::string>();
        sub->add_option("poset", *path)->required();
        sub->add_option("--emit", *emit, "write the family to this .rif file");
        sub->add_option("--verify-family", *verify, "verify this .rif file instead of searching");
        add_common(sub, false);
        sub->callback([&, path, emit, verify] {
            run = [&, path, emit, verify] { return cmd_rindep_rao(ctx, *path, *emit, *verify); };
        });
    }
    // obstruct
    {
        auto sub = app.add_subcommand("obstruct",
                                      "look for incomparable forced-first sets at an element");
        auto path = std::make_shared<std::string>();
        auto elem = std::make_shared<std::string>();
        auto contexts = std::make_shared<std::vector<std::string>>();
        auto atoms_of = std::make_shared<std::vector<std::string>>();
        sub->add_option("poset", *path)->required();
        sub->add_option("element", *elem)->required();
        sub->add_option("--context", *contexts, "comma-separated earlier elements (repeatable)");
        sub->add_option("--context-atoms-of", *atoms_of,
                        "use atoms of this element minus the target (repeatable)");
        add_common(sub, false);
        sub->callback([&, path, elem, contexts, atoms_of] {
            run = [&, path, elem, contexts, atoms_of] {
                return cmd_obstruct(ctx, *path, *elem, *contexts, *atoms_of);
            };
        });
    }
    // build-graded
    {
        auto sub = app.add_subcommand("build-graded",
                                      "build the graded example from a validated complex");
        auto path = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        sub->add_option("complex", *path)->required();
        sub->add_option("--out", *out, "write the poset to this .poset file");
        add_common(sub, false);
        sub->callback([&, path, out] {
            run = [&, path, out] { return cmd_build_graded(ctx, *path, *out); };
        });
    }
    // graded-rao
    {
        auto sub = app.add_subcommand(
            "graded-rao", "build and verify the recipe certificate for the graded example");
        auto path = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        sub->add_option("complex", *path)->required();
        sub->add_option("--out", *out, "write the certificate to this .rao file");
        add_common(sub, false);
        sub->callback([&, path, out] {
            run = [&, path, out] { return cmd_graded_rao(ctx, *path, *out); };
        });
    }
    // hachimori-validate
    {
        auto sub = app.add_subcommand("hachimori-validate",
                                      "validate the bundled complex's defining properties");
        auto path = std::make_shared<std::string>();
        sub->add_option("complex", *path)->required();
        add_common(sub, false);
        sub->callback([&, path] { run = [&, path] { return cmd_hachimori_validate(ctx, *path); }; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        return run();
    } catch (const ResourceLimitError& e) {
        Report r = ctx.report("(aborted)", {});
        r.verdict = "resource-limit";
        r.detail.push_back(std::string("diagnostic: ") + e.what());
        ctx.finish(r, 3);
        return 3;
    } catch (const Error& e) {
        std::cout << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << "error: " << e.what() << "\n";
        return 2;
    }
}
