#include "schurlab/schur.hpp"

#include <doctest.h>

using namespace schurlab;

namespace {

schur_expansion sexp(const char* text) { return parse_expansion(text); }

} // namespace

TEST_CASE("addition and scaling")
{
    const auto a = sexp("s[2] + s[1,1]");
    CHECK(a + schur_expansion{} == a);
    CHECK(sexp("s[2]") + sexp("s[1,1]") == a);
    CHECK((sexp("s[2]") - sexp("s[2]")).empty());
    CHECK(schur_expansion::scale(1, a) == a);
    CHECK(schur_expansion::scale(0, a).empty());
    CHECK(schur_expansion::scale(-2, schur_expansion::single(partition{})) ==
          sexp("-2*s[]"));
}

TEST_CASE("pieri rule")
{
    const auto one = schur_expansion::single(partition{});
    CHECK(pieri_mul_e(one, 3) == sexp("s[1,1,1]"));
    CHECK(pieri_mul_e(sexp("s[2,1]"), 0) == sexp("s[2,1]"));
    CHECK(pieri_mul_e(sexp("s[2,1]"), -1).empty());
    CHECK(pieri_mul_e(pieri_mul_e(one, 1), 1) == sexp("s[2] + s[1,1]"));
}

TEST_CASE("pieri multiplications commute")
{
    for (long w = 0; w <= 6; ++w)
        for (const auto& lam : partitions_of(w)) {
            const auto a = schur_expansion::single(lam);
            for (long j = 0; j <= 4; ++j)
                for (long k = j; k <= 4; ++k)
                    CHECK(pieri_mul_e(pieri_mul_e(a, j), k) ==
                          pieri_mul_e(pieri_mul_e(a, k), j));
        }
}

TEST_CASE("eproduct expansion")
{
    CHECK(expand_eproduct(eproduct({-1, 2})).empty());
    CHECK(expand_eproduct(eproduct({1, 1, 1})) == sexp("s[3] + 2*s[2,1] + s[1,1,1]"));
    CHECK(expand_eproduct(eproduct({2, 2})) == sexp("s[2,2] + s[2,1,1] + s[1,1,1,1]"));
    CHECK(expand_eproduct(eproduct{}) == sexp("s[]"));
    CHECK(expand_eproduct(eproduct({0, 2})) == expand_eproduct(eproduct({2})));

    // homogeneity: every key of a degree-d product has weight d
    for (long d = 0; d <= 7; ++d)
        for (const auto& lam : partitions_of(d)) {
            std::vector<long> idx(lam.parts().begin(), lam.parts().end());
            const auto e = expand_eproduct(eproduct(idx));
            for (long w : e.weights())
                CHECK(w == d);
        }
}

TEST_CASE("delta operator")
{
    const auto a = sexp("s[3] + s[1,1,1]");
    CHECK(delta(a, partition{}) == a);
    CHECK(delta(sexp("s[2]"), partition{1, 1}) == sexp("s[2,1,1]"));
    CHECK(delta(a, partition{2, 2}) == sexp("s[3,2,2] + s[2,2,1,1,1]"));

    // coefficients and term count carry over unchanged
    const auto b = sexp("s[4] + 3*s[2,2] - 2*s[1,1]");
    const auto d = delta(b, partition{2, 1});
    CHECK(d.size() == b.size());
    Int sum_b = 0, sum_d = 0;
    for (const auto& [lam, c] : b.terms())
        sum_b += c;
    for (const auto& [lam, c] : d.terms())
        sum_d += c;
    CHECK(sum_b == sum_d);
}

TEST_CASE("jacobi-trudi determinant terms")
{
    {
        const auto terms = jacobi_trudi_e(partition{1, 1, 1});
        REQUIRE(terms.size() == 1);
        CHECK(terms[0].sign == 1);
        CHECK(terms[0].term == eproduct({3}));
    }
    {
        const auto terms = jacobi_trudi_e(partition{2, 1});
        REQUIRE(terms.size() == 2);
        CHECK(terms[0].sign == 1);
        CHECK(terms[0].term == eproduct({2, 1}));
        CHECK(terms[1].sign == -1);
        CHECK(terms[1].term == eproduct({3}));
    }
    {
        const auto terms = jacobi_trudi_e(partition{2, 2});
        REQUIRE(terms.size() == 2);
        CHECK(terms[0].term == eproduct({2, 2}));
        CHECK(terms[1].term == eproduct({3, 1}));
    }
    CHECK(expand_jacobi_trudi(partition{2, 1}) == sexp("s[2,1]"));
    CHECK(expand_jacobi_trudi(partition{2, 2}) == sexp("s[2,2]"));
    CHECK(expand_jacobi_trudi(partition{}) == sexp("s[]"));
}

TEST_CASE("schur positivity")
{
    CHECK(is_schur_positive(schur_expansion{}));
    CHECK(is_schur_positive(sexp("s[2] + s[1,1]")));
    CHECK_FALSE(is_schur_positive(sexp("s[2] - s[1,1]")));
}

TEST_CASE("expansion text round trip")
{
    CHECK(to_string(schur_expansion{}) == "0");
    CHECK(to_string(sexp("s[4] + s[2,2] + s[1,1,1,1]")) == "s[4] + s[2,2] + s[1,1,1,1]");
    CHECK(to_string(sexp("-s[2] + 3*s[1,1]")) == "-s[2] + 3*s[1,1]");
    CHECK(parse_expansion("0").empty());

    for (long d = 0; d <= 6; ++d)
        for (const auto& lam : partitions_of(d)) {
            std::vector<long> idx(lam.parts().begin(), lam.parts().end());
            const auto e = expand_eproduct(eproduct(idx));
            CHECK(parse_expansion(to_string(e)) == e);
            const auto neg = schur_expansion{} - e;
            CHECK(parse_expansion(to_string(neg)) == neg);
        }
}
