#include "schurlab/lemmas.hpp"

#include <doctest.h>

using namespace schurlab;

namespace {

void check_all(const std::vector<lemma_report>& reps)
{
    for (const auto& rep : reps) {
        INFO(rep.lemma, " ", rep.parameter, " discrepancy: ", to_string(rep.discrepancy));
        CHECK(rep.passed);
    }
}

} // namespace

TEST_CASE("parity split of L")
{
    for (long t = 0; t <= 3; ++t)
        for (const auto& rep : check_lemma_3_2(t)) {
            INFO(rep.lemma, " ", rep.parameter);
            CHECK(rep.passed);
        }
}

TEST_CASE("pointwise first differences")
{
    for (long t = 0; t <= 3; ++t)
        check_all(check_lemma_3_3(t));
    CHECK(check_lemma_3_3(0).empty());
    CHECK(check_lemma_3_3(1).size() == 4);

    // out-of-range points are not applicable
    CHECK_FALSE(lemma_3_3_point(1, 1, 5, 0, 0).has_value());
    CHECK_FALSE(lemma_3_3_point(3, 1, 1, 0, 0).has_value());
    CHECK(lemma_3_3_point(1, 1, 0, 0, 0).has_value());
    CHECK(lemma_3_3_point(1, 1, 0, 0, 0)->passed);
    CHECK(lemma_3_3_point(4, 2, 1, 0, 0).has_value());
    CHECK(lemma_3_3_point(4, 2, 1, 0, 0)->passed);
}

TEST_CASE("ten-part first difference")
{
    for (long t = 0; t <= 4; ++t) {
        const auto rep = check_lemma_3_4(t);
        INFO("t=", t, " discrepancy: ", to_string(rep.discrepancy));
        CHECK(rep.passed);
    }
}

TEST_CASE("second differences of T1..T8")
{
    for (long t = 0; t <= 3; ++t)
        check_all(check_lemma_3_5(t));
}

TEST_CASE("quadruple to triple reductions")
{
    for (long t = 0; t <= 3; ++t) {
        const auto reps = check_lemma_3_6(t);
        CHECK(reps.size() == 8);
        check_all(reps);
    }
}

TEST_CASE("triple to double reductions")
{
    for (long t = 0; t <= 3; ++t) {
        const auto reps = check_lemma_3_7(t);
        CHECK(reps.size() == 6);
        check_all(reps);
    }
}

TEST_CASE("second differences of T9 and T10")
{
    for (long t = 0; t <= 3; ++t)
        for (const auto& rep : check_lemma_3_8(t)) {
            INFO(rep.lemma, " ", rep.parameter);
            CHECK(rep.passed);
        }
}

TEST_CASE("second differences reach the {3,4} partitions")
{
    for (long t = 0; t <= 2; ++t)
        for (const auto& rep : check_lemma_3_9(t)) {
            INFO(rep.lemma, " ", rep.parameter);
            CHECK(rep.passed);
        }
    // spot value: the odd right side at t=0 is s[4]
    const auto reps = check_lemma_3_9(0);
    CHECK(reps[1].rhs == parse_expansion("s[4]"));
    CHECK(reps[0].lhs == parse_expansion("s[4]"));
}

TEST_CASE("first differences of L and R agree")
{
    for (long t = 0; t <= 4; ++t)
        for (const auto& rep : check_lemma_3_10(t)) {
            INFO(rep.lemma, " ", rep.parameter);
            CHECK(rep.passed);
        }
}
