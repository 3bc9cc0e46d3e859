#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "lexshell/shelling.hpp"

using namespace lexshell;
using lexshell::testing::all_shellings_brute;
using lexshell::testing::boolean_lattice;
using lexshell::testing::boolean_standard_labeling;

namespace {

SimplicialComplex cplx(std::vector<std::vector<std::string>> facets) {
    return SimplicialComplex::from_facets(std::move(facets));
}

} // namespace

TEST_CASE("is_shelling on fixed examples", "[shelling]") {
    SECTION("every order of the triangle boundary shells") {
        auto c = cplx({{"1", "2"}, {"2", "3"}, {"1", "3"}});
        auto all = all_shellings_brute(c);
        CHECK(all.size() == 6); // all 3! permutations work
    }
    SECTION("disjoint edges never shell") {
        auto c = cplx({{"1", "2"}, {"3", "4"}});
        auto chk = is_shelling(c, {0, 1});
        REQUIRE_FALSE(chk.ok);
        CHECK(chk.first_bad_index == 2);
        REQUIRE(chk.offending_maximal.size() == 1);
        CHECK(chk.offending_maximal[0].empty()); // empty intersection, wrong dimension
    }
    SECTION("not a permutation") {
        auto c = cplx({{"1", "2"}, {"3", "4"}});
        CHECK_THROWS_AS(is_shelling(c, {0, 0}), NotAPermutationError);
        CHECK_THROWS_AS(is_shelling(c, {0}), NotAPermutationError);
    }
    SECTION("a point pair is a shellable 0-complex") {
        auto c = cplx({{"1"}, {"2"}});
        CHECK(is_shelling(c, {0, 1}).ok);
        CHECK(is_shelling(c, {1, 0}).ok);
    }
}

TEST_CASE("find_shelling", "[shelling]") {
    SECTION("single facet is shellable by convention") {
        auto c = cplx({{"1", "2", "3"}});
        auto got = find_shelling(c);
        REQUIRE(got.has_value());
        CHECK(got->size() == 1);
    }
    SECTION("disconnected 1-complex has none") {
        CHECK_FALSE(find_shelling(cplx({{"1", "2"}, {"3", "4"}})).has_value());
    }
    SECTION("triangle boundary returns the least order") {
        auto c = cplx({{"1", "2"}, {"2", "3"}, {"1", "3"}});
        auto got = find_shelling(c);
        REQUIRE(got.has_value());
        // Least of the brute-forced valid permutations.
        auto all = all_shellings_brute(c);
        CHECK(*got == *std::min_element(all.begin(), all.end()));
        // Facets are sorted {12, 13, 23}; least order is (12, 13, 23).
        CHECK(*got == ShellingOrder{0, 1, 2});
    }
    SECTION("budget exhaustion is an error, not a refusal") {
        auto c = cplx({{"1", "2"}, {"2", "3"}, {"1", "3"}});
        CHECK_THROWS_AS(find_shelling(c, 1), ResourceLimitError);
    }
}

TEST_CASE("forced_last_facet", "[shelling]") {
    SECTION("nothing is forced on the triangle boundary") {
        auto c = cplx({{"1", "2"}, {"2", "3"}, {"1", "3"}});
        CHECK_FALSE(forced_last_facet(c, 0));
        // Both a shelling ending at 12 and one starting from 12 exist.
        CHECK(find_shelling_ending_at(c, 0).has_value());
    }
    SECTION("the only facet is forced last") {
        auto c = cplx({{"1", "2", "3"}});
        CHECK(forced_last_facet(c, 0));
    }
    SECTION("errors") {
        auto c = cplx({{"1", "2"}, {"3", "4"}});
        CHECK_THROWS_AS(forced_last_facet(c, 0), NotShellableError);
        CHECK_THROWS_AS(forced_last_facet(cplx({{"1", "2"}}), 5), NotAFacetError);
    }
}

TEST_CASE("search and verify agree; prefixes stay valid", "[shelling][property]") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> nverts(3, 6);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int shellable_seen = 0;
    for (int trial = 0; trial < 80; ++trial) {
        // Random pure 2-complexes on a few vertices.
        int n = nverts(rng);
        std::vector<std::vector<std::string>> facets;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    if (unit(rng) < 0.4)
                        facets.push_back({std::to_string(a), std::to_string(b),
                                          std::to_string(c)});
        if (facets.empty()) continue;
        auto c = SimplicialComplex::from_facets(facets);
        auto got = find_shelling(c);
        if (!got) continue;
        ++shellable_seen;
        REQUIRE(is_shelling(c, *got).ok);
        // Prefix-monotonicity: every prefix of the found order shells the
        // subcomplex generated by its facets.
        for (size_t m = 1; m < got->size(); ++m) {
            std::vector<std::vector<std::string>> prefix_facets;
            for (size_t i = 0; i < m; ++i) {
                std::vector<std::string> f;
                for (int v : c.facets()[(*got)[i]]) f.push_back(c.vertex_name(v));
                prefix_facets.push_back(std::move(f));
            }
            auto sub = SimplicialComplex::from_facets(prefix_facets);
            ShellingOrder sub_order;
            for (size_t i = 0; i < m; ++i) {
                std::vector<std::string> f;
                for (int v : c.facets()[(*got)[i]]) f.push_back(c.vertex_name(v));
                sub_order.push_back(sub.facet_index(f));
            }
            REQUIRE(is_shelling(sub, sub_order).ok);
        }
    }
    CHECK(shellable_seen > 10);
}

TEST_CASE("1-dimensional shellability is connectedness", "[shelling][property]") {
    // All graphs on 4 vertices with 1..5 edges, as pure 1-complexes.
    std::vector<std::pair<int, int>> all_edges;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) all_edges.push_back({a, b});
    for (unsigned mask = 1; mask < (1u << all_edges.size()); ++mask) {
        if (std::popcount(mask) > 5) continue;
        std::vector<std::vector<std::string>> facets;
        for (size_t i = 0; i < all_edges.size(); ++i)
            if (mask & (1u << i))
                facets.push_back({std::to_string(all_edges[i].first),
                                  std::to_string(all_edges[i].second)});
        auto c = SimplicialComplex::from_facets(facets);
        // Union-find connectivity over the vertices that appear.
        std::vector<int> parent(c.vertex_count());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](auto&& self, int x) -> int {
            return parent[x] == x ? x : parent[x] = self(self, parent[x]);
        };
        for (const auto& f : c.facets()) parent[find(find, f[0])] = find(find, f[1]);
        std::set<int> roots;
        for (int v = 0; v < c.vertex_count(); ++v) roots.insert(find(find, v));
        bool connected = roots.size() == 1;
        CHECK(find_shelling(c).has_value() == connected);
    }
}

TEST_CASE("lexicographic chain order shells the order complex", "[shelling]") {
    SECTION("B_2 with the swap labeling") {
        Poset b2 = boolean_lattice(2);
        EdgeLabeling l;
        l.set(b2.id("-"), b2.id("1"), 1);
        l.set(b2.id("-"), b2.id("2"), 2);
        l.set(b2.id("1"), b2.id("12"), 2);
        l.set(b2.id("2"), b2.id("12"), 1);
        auto chk = lex_order_shelling_check(b2, l);
        CHECK(chk.labeling_ok);
        CHECK(chk.shelling_ok);
    }
    SECTION("two-element chain is vacuously fine") {
        Poset p = Poset::from_covers({{"0", "1"}});
        EdgeLabeling l;
        l.set(p.id("0"), p.id("1"), 7);
        auto chk = lex_order_shelling_check(p, l);
        CHECK(chk.labeling_ok);
        CHECK(chk.shelling_ok);
        CHECK(chk.vacuous);
    }
    SECTION("B_3 standard labeling") {
        Poset b3 = boolean_lattice(3);
        auto l = boolean_standard_labeling(b3, 3);
        auto chk = lex_order_shelling_check(b3, l);
        CHECK(chk.labeling_ok);
        CHECK(chk.shelling_ok);
    }
    SECTION("non-EL labeling reports labeling failure") {
        Poset b2 = boolean_lattice(2);
        EdgeLabeling l;
        for (const auto& [u, v] : b2.cover_pairs()) l.set(b2.id(u), b2.id(v), 1);
        auto chk = lex_order_shelling_check(b2, l);
        CHECK_FALSE(chk.labeling_ok);
        CHECK_FALSE(chk.shelling_ok);
    }
}
