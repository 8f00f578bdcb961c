#include "schurlab/partition.hpp"

#include <doctest.h>

#include <map>
#include <vector>

using namespace schurlab;

namespace {

// independent partition-number oracle: p(n) via the bounded-part recurrence
long partition_count_oracle(long n)
{
    // ways[m] = number of partitions of m with parts <= current bound
    std::vector<long> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (long part = 1; part <= n; ++part)
        for (long m = part; m <= n; ++m)
            ways[static_cast<std::size_t>(m)] += ways[static_cast<std::size_t>(m - part)];
    return ways[static_cast<std::size_t>(n)];
}

} // namespace

TEST_CASE("conjugate examples and involution")
{
    CHECK(conjugate(partition{}) == partition{});
    CHECK(conjugate(partition{1, 1, 1}) == partition{3});
    CHECK(conjugate(partition{3, 2, 2, 1}) == partition{4, 3, 1});
    for (long n = 0; n <= 12; ++n)
        for (const auto& lam : partitions_of(n))
            CHECK(conjugate(conjugate(lam)) == lam);
}

TEST_CASE("union of parts")
{
    CHECK(union_parts(partition{2, 1}, partition{2}) == partition{2, 2, 1});
    CHECK(union_parts(partition{3, 1}, partition{}) == partition{3, 1});
    CHECK(union_parts(partition{1, 1}, partition{1, 1}) == partition{1, 1, 1, 1});

    const auto ps = partitions_of(4);
    for (const auto& a : ps)
        for (const auto& b : ps) {
            CHECK(union_parts(a, b) == union_parts(b, a));
            CHECK(union_parts(a, b).weight() == a.weight() + b.weight());
            for (const auto& c : partitions_of(3))
                CHECK(union_parts(union_parts(a, b), c) == union_parts(a, union_parts(b, c)));
        }
}

TEST_CASE("containment and vertical strips")
{
    CHECK(contains(partition{2, 2}, partition{2, 1}));
    CHECK(contains(partition{2, 1}, partition{}));
    CHECK_FALSE(contains(partition{2, 1}, partition{1, 1, 1}));

    CHECK(is_vertical_strip(partition{2, 1}, partition{1}));
    CHECK_FALSE(is_vertical_strip(partition{3, 1}, partition{1}));
    CHECK(is_vertical_strip(partition{2, 1}, partition{2, 1}));

    // a vertical strip adds exactly one square to each changed row
    for (long wl = 0; wl <= 10; ++wl)
        for (const auto& lam : partitions_of(wl))
            for (long wm = 0; wm <= wl; ++wm)
                for (const auto& mu : partitions_of(wm))
                    if (is_vertical_strip(lam, mu)) {
                        CHECK(contains(lam, mu));
                        long changed = 0;
                        for (long i = 0; i < lam.rows(); ++i)
                            if (lam.parts()[i] > mu.part(i))
                                ++changed;
                        CHECK(changed == lam.weight() - mu.weight());
                    }
}

TEST_CASE("partitions_of: counts and canonical order")
{
    CHECK(partitions_of(0) == std::vector<partition>{partition{}});
    CHECK(partitions_of(4) == std::vector<partition>{partition{4}, partition{3, 1},
                                                     partition{2, 2}, partition{2, 1, 1},
                                                     partition{1, 1, 1, 1}});
    CHECK(partitions_of(8).size() == 22);

    const long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (long n = 0; n <= 10; ++n) {
        CHECK(static_cast<long>(partitions_of(n).size()) == expected[n]);
        CHECK(static_cast<long>(partitions_of(n).size()) == partition_count_oracle(n));
    }

    for (long n = 0; n <= 9; ++n) {
        const auto ps = partitions_of(n);
        for (std::size_t i = 0; i + 1 < ps.size(); ++i)
            CHECK(canonical_compare(ps[i], ps[i + 1]) < 0);
    }
}

TEST_CASE("partitions with parts in {3,4}")
{
    CHECK(partitions_34(0) == std::vector<partition>{partition{}});
    CHECK(partitions_34(5).empty());
    CHECK(partitions_34(12) ==
          std::vector<partition>{partition{4, 4, 4}, partition{3, 3, 3, 3}});
}

TEST_CASE("r_shapes")
{
    CHECK(r_shapes(1) == std::vector<partition>{partition{}});
    {
        const auto s3 = r_shapes(3);
        CHECK(s3 == std::vector<partition>{partition{4}, partition{2, 2},
                                           partition{1, 1, 1, 1}});
    }
    {
        const auto s4 = r_shapes(4);
        CHECK(s4 == std::vector<partition>{partition{4, 1, 1}, partition{3, 3},
                                           partition{2, 2, 1, 1},
                                           partition{1, 1, 1, 1, 1, 1}});
    }
    for (long r = 1; r <= 12; ++r)
        for (const auto& lam : r_shapes(r)) {
            CHECK(lam.weight() == 2 * r - 2);
            std::map<int, int> mult;
            for (int p : lam.parts()) {
                CHECK(p <= 4);
                ++mult[p];
            }
            CHECK(mult[1] % 2 == 0);
            CHECK(mult[2] % 2 == 0);
            CHECK(mult[3] % 2 == 0);
        }
}

TEST_CASE("shape_from_multiplicities")
{
    CHECK(shape_from_multiplicities({0, 0, 0, 0}) == partition{});
    CHECK(shape_from_multiplicities({1, 0, 2, 1}) == partition{4, 2, 2, 1});
    CHECK_FALSE(shape_from_multiplicities({0, -1, 3, 0}).has_value());
}

TEST_CASE("partition text round trip")
{
    CHECK(to_string(partition{4, 2, 2, 1}) == "[4,2,2,1]");
    CHECK(to_string(partition{}) == "[]");
    CHECK(parse_partition("[4,2,2,1]") == partition{4, 2, 2, 1});
    CHECK(parse_partition("[]") == partition{});
    for (long n = 0; n <= 8; ++n)
        for (const auto& lam : partitions_of(n))
            CHECK(parse_partition(to_string(lam)) == lam);
    CHECK_THROWS_AS(parse_partition("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("[0]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,1"), std::invalid_argument);
}
