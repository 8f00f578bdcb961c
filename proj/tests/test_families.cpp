#include "schurlab/families.hpp"

#include <doctest.h>

using namespace schurlab;

TEST_CASE("family id names parse and print")
{
    CHECK(parse_family_id("E1") == family_id::E1);
    CHECK(parse_family_id("T41") == family_id::T41);
    CHECK(std::string(to_string(family_id::M3)) == "M3");
    CHECK_THROWS_AS(parse_family_id("Z9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_id("t1"), std::invalid_argument);
    for (const auto& [id, name] : family_table())
        CHECK(parse_family_id(name) == id);
}

TEST_CASE("pinned family values")
{
    CHECK(family_sum(family_id::E1, 0) == parse_expansion("s[4] + s[3,1]"));
    CHECK(family_sum(family_id::T9, 0) == parse_expansion("s[]"));
    CHECK(family_sum(family_id::N3, 0).empty());
    CHECK(family_sum(family_id::T9, 1) == pieri_mul_e(parse_expansion("s[2,2]"), 0) +
                                              pieri_mul_e(parse_expansion("s[3]"), 1));
}

TEST_CASE("families are plain sums with nonnegative coefficients")
{
    for (const auto& [id, name] : family_table())
        for (long t = 0; t <= 3; ++t) {
            const auto f = family_sum(id, t);
            CHECK(is_schur_positive(f));
        }
}

TEST_CASE("pinned family differences")
{
    for (long t = 0; t <= 5; ++t) {
        CHECK(family_sum(family_id::D6, t) == family_sum(family_id::D4, t));

        // E1 - E4 is the single full-4 column shape
        schur_expansion expect;
        expect.add_term(*shape_from_multiplicities({t + 1, 0, 0, 0}), 1);
        CHECK(family_sum(family_id::E1, t) - family_sum(family_id::E4, t) == expect);

        CHECK(family_sum(family_id::C1, t) - family_sum(family_id::D3, t) ==
              family_sum(family_id::D2, t));
    }
}

TEST_CASE("a and b point terms honor the zero-shape convention")
{
    // shapes with a negative multiplicity contribute nothing
    CHECK(a_term(1, 0, 1, 1, 1).empty());
    CHECK(b_term(1, 0, 0, 0, 0).empty());
    // valid point: e_0 times a plain shape
    CHECK(a_term(1, 1, 0, 0, 0) == parse_expansion("s[1,1,1,1]"));
}
