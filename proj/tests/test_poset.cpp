#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "lexshell/constructions.hpp"
#include "lexshell/poset.hpp"

using namespace lexshell;
using lexshell::testing::boolean_lattice;
using lexshell::testing::random_bounded_poset;

TEST_CASE("pentagon builds with five elements and a forced shape", "[poset]") {
    Poset p = pentagon();
    REQUIRE(p.size() == 5);
    REQUIRE(p.is_bounded());
    REQUIRE(p.name(p.bottom()) == "0^");
    REQUIRE(p.name(p.top()) == "1^");

    auto atoms = p.atoms(p.bottom());
    REQUIRE(atoms.size() == 2);
    CHECK(p.name(atoms[0]) == "a");
    CHECK(p.name(atoms[1]) == "b");

    auto chains = p.maximal_chains();
    REQUIRE(chains.size() == 2);
    CHECK(chains[0].size() == 4); // 0^ a m 1^
    CHECK(chains[1].size() == 3); // 0^ b 1^
    CHECK_FALSE(p.is_graded().graded);
}

TEST_CASE("two-element chain is the smallest bounded poset", "[poset]") {
    Poset p = Poset::from_covers({{"0^", "1^"}});
    REQUIRE(p.size() == 2);
    REQUIRE(p.is_bounded());
    auto atoms = p.atoms(p.bottom());
    REQUIRE(atoms.size() == 1);
    CHECK(atoms[0] == p.top());
    auto g = p.is_graded();
    CHECK(g.graded);
    CHECK(g.rank == 1);
}

TEST_CASE("cover validation", "[poset]") {
    SECTION("transitively implied pair is rejected") {
        CHECK_THROWS_AS(Poset::from_covers({{"0^", "a"}, {"a", "b"}, {"0^", "b"}}),
                        NonCoverError);
    }
    SECTION("duplicate pair is rejected") {
        CHECK_THROWS_AS(Poset::from_covers({{"a", "b"}, {"a", "b"}}), DuplicateCoverError);
    }
    SECTION("cycles are rejected") {
        CHECK_THROWS_AS(Poset::from_covers({{"a", "b"}, {"b", "c"}, {"c", "a"}}), CycleError);
        CHECK_THROWS_AS(Poset::from_covers({{"a", "a"}}), CycleError);
    }
}

TEST_CASE("boundedness is lazy", "[poset]") {
    // Two minimal elements: atoms still work, maximal_chains refuses.
    Poset p = Poset::from_covers({{"a", "c"}, {"b", "c"}});
    REQUIRE_FALSE(p.is_bounded());
    CHECK(p.atoms(p.id("a")).size() == 1);
    CHECK_THROWS_AS(p.maximal_chains(), NotBoundedError);
    CHECK_THROWS_AS(p.bottom(), NotBoundedError);
}

TEST_CASE("intervals are induced subposets", "[poset]") {
    Poset p = pentagon();
    SECTION("full interval is the poset itself") {
        Poset q = p.interval(p.bottom(), p.top());
        CHECK(q.size() == p.size());
        CHECK(q.cover_pairs() == p.cover_pairs());
    }
    SECTION("interval above an atom is a chain") {
        Poset q = p.interval(p.id("a"), p.top());
        CHECK(q.size() == 3);
        CHECK(q.is_graded().rank == 2);
        CHECK(q.maximal_chains().size() == 1);
    }
    SECTION("incomparable endpoints are an error") {
        CHECK_THROWS_AS(p.interval(p.id("a"), p.id("b")), NotComparableError);
    }
    SECTION("singleton interval") {
        Poset q = p.interval(p.id("a"), p.id("a"));
        CHECK(q.size() == 1);
    }
}

TEST_CASE("maximal chain enumeration is canonical and complete", "[poset]") {
    SECTION("B_2 has two chains") {
        Poset b2 = boolean_lattice(2);
        CHECK(b2.maximal_chains().size() == 2);
    }
    SECTION("B_3 chain count matches permutation enumeration") {
        Poset b3 = boolean_lattice(3);
        auto chains = b3.maximal_chains();
        // Independent count: each chain adds the coordinates of {1,2,3} in
        // some order, so distinct chains correspond to permutations.
        std::vector<int> perm{1, 2, 3};
        std::set<std::vector<std::string>> expected;
        do {
            std::vector<std::string> names{"-"};
            std::string acc;
            for (int v : perm) {
                acc += std::to_string(v);
                std::string sorted = acc;
                std::sort(sorted.begin(), sorted.end());
                names.push_back(sorted);
            }
            expected.insert(names);
        } while (std::next_permutation(perm.begin(), perm.end()));
        REQUIRE(expected.size() == 6);
        REQUIRE(chains.size() == 6);
        std::set<std::vector<std::string>> got;
        for (const auto& c : chains) {
            std::vector<std::string> names;
            for (ElemId e : c) names.push_back(b3.name(e));
            got.insert(names);
        }
        CHECK(got == expected);
        // Canonical enumeration: identifier-lex sorted.
        auto sorted_chains = chains;
        std::sort(sorted_chains.begin(), sorted_chains.end());
        CHECK(chains == sorted_chains);
    }
    SECTION("graded B_3") {
        auto g = boolean_lattice(3).is_graded();
        CHECK(g.graded);
        CHECK(g.rank == 3);
    }
}

TEST_CASE("dual reverses covers and is an involution", "[poset]") {
    Poset p = pentagon();
    Poset d = p.dual();
    CHECK_FALSE(d.is_graded().graded);
    CHECK(d.atoms(d.id("1^")).size() == 2); // old coatoms
    Poset dd = d.dual();
    CHECK(dd.cover_pairs() == p.cover_pairs());

    Poset chain2 = Poset::from_covers({{"0", "1"}});
    CHECK(chain2.dual().cover_pairs() ==
          std::vector<std::pair<std::string, std::string>>{{"1", "0"}});
}

TEST_CASE("poset invariants on random instances", "[poset][property]") {
    std::mt19937 rng(20260809);
    for (int trial = 0; trial < 60; ++trial) {
        Poset p = random_bounded_poset(rng, 9);

        // Covers derived from the order relation reproduce the cover set.
        std::vector<std::pair<std::string, std::string>> derived;
        for (ElemId u = 0; u < p.size(); ++u) {
            for (ElemId v = 0; v < p.size(); ++v) {
                if (u == v || !p.leq(u, v)) continue;
                bool cover = true;
                for (ElemId w = 0; w < p.size() && cover; ++w)
                    if (w != u && w != v && p.leq(u, w) && p.leq(w, v)) cover = false;
                if (cover) derived.push_back({p.name(u), p.name(v)});
            }
        }
        auto listed = p.cover_pairs();
        std::sort(derived.begin(), derived.end());
        std::sort(listed.begin(), listed.end());
        REQUIRE(derived == listed);

        // dual is an involution.
        REQUIRE(p.dual().dual().cover_pairs() == p.cover_pairs());

        // Chains of the full interval match chains of the poset.
        REQUIRE(p.interval(p.bottom(), p.top()).maximal_chains().size() ==
                p.maximal_chains().size());

        // atoms agree with coatoms of the dual.
        Poset d = p.dual();
        for (ElemId u = 0; u < p.size(); ++u) {
            std::vector<std::string> up, down;
            for (ElemId v : p.atoms(u)) up.push_back(p.name(v));
            for (ElemId v : d.coatoms(d.id(p.name(u)))) down.push_back(d.name(v));
            std::sort(up.begin(), up.end());
            std::sort(down.begin(), down.end());
            REQUIRE(up == down);
        }

        // Graded posets have equal-length maximal chains (by definition of
        // the check, asserted over the full enumeration).
        auto g = p.is_graded();
        if (g.graded)
            for (const auto& c : p.maximal_chains())
                REQUIRE(static_cast<int>(c.size()) - 1 == g.rank);
    }
}
