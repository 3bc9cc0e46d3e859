#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "lexshell/labeling.hpp"
#include "lexshell/rao.hpp"
#include "lexshell/shelling.hpp"

using namespace lexshell;
using lexshell::testing::random_bounded_poset;

// Smaller-scale version of the implication-chain acceptance run, kept in the
// unit suite so regressions show up quickly.
TEST_CASE("EL implies CL implies shellable on random posets", "[corpus][property]") {
    std::mt19937 rng(31337);
    int el_hits = 0, rao_hits = 0;
    for (int trial = 0; trial < 120; ++trial) {
        Poset p = random_bounded_poset(rng, 9);

        std::optional<EdgeLabeling> labeling;
        try {
            labeling = search_el_labeling(p, 3, IncreaseMode::Weak, 300000);
        } catch (const ResourceLimitError&) {
            labeling = std::nullopt;
        }

        std::optional<RaoCertificate> cert;
        try {
            cert = find_rao(p, 2'000'000);
        } catch (const ResourceLimitError&) {
            continue; // no claim possible for this poset
        }

        if (labeling) {
            ++el_hits;
            REQUIRE(verify_el_labeling(p, *labeling, IncreaseMode::Weak).ok);
            // EL-shellable implies CL-shellable.
            REQUIRE(cert.has_value());
            // Theorem check: lex order of maximal chains shells.
            auto lex = lex_order_shelling_check(p, *labeling, IncreaseMode::Weak);
            REQUIRE(lex.labeling_ok);
            REQUIRE(lex.shelling_ok);
        }
        if (cert) {
            ++rao_hits;
            REQUIRE(verify_rao(p, *cert).ok);
            // CL-shellable implies the order complex of the proper part is
            // shellable.
            if (p.size() > 2) {
                auto complex = order_complex(p, true);
                auto shelling = find_shelling(complex, 5'000'000);
                REQUIRE(shelling.has_value());
                REQUIRE(is_shelling(complex, *shelling).ok);
            }
        }
    }
    CHECK(el_hits > 20);
    CHECK(rao_hits > 40);
}
