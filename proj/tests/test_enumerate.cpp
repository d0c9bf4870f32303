#include "q6/enumerate.hpp"

#include "q6/tables.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace q6;

namespace {

Partition parts(std::vector<int> v) { return Partition(std::move(v)); }

} // namespace

TEST_CASE("Partition basics")
{
    Partition p({1, 5, 3, 3});
    CHECK(p.parts() == std::vector<int>{5, 3, 3, 1});
    CHECK(p.weight() == 12);
    CHECK(p.length() == 4);
    CHECK(p.multiplicity(3) == 2);
    CHECK(to_string(p) == "(5,3,3,1)");
    CHECK(to_string(Partition{}) == "()");
    CHECK_THROWS_AS(Partition({0, 2}), Error);
}

TEST_CASE("enumerate fixtures")
{
    SECTION("distinct parts of 14 avoiding +-2 (mod 6)")
    {
        std::vector<Partition> got = enumerate(14, preset_constraint("q2"));
        std::vector<Partition> expected = {parts({13, 1}), parts({11, 3}), parts({9, 5}),
                                           parts({7, 6, 1}), parts({6, 5, 3})};
        CHECK(got == expected);
    }
    SECTION("weight zero leaves only the empty partition")
    {
        for (const char* name : {"p", "b6", "q2", "c", "d", "q61"}) {
            std::vector<Partition> got = enumerate(0, preset_constraint(name));
            REQUIRE(got.size() == 1);
            CHECK(got[0].length() == 0);
        }
    }
    SECTION("the fourteen 6-regular partitions of 7")
    {
        std::vector<Partition> got = enumerate(7, preset_constraint("b6"));
        CHECK(got.size() == 14);
        std::vector<Partition> expected = {
            parts({7}),          parts({5, 2}),          parts({5, 1, 1}),
            parts({4, 3}),       parts({4, 2, 1}),       parts({4, 1, 1, 1}),
            parts({3, 3, 1}),    parts({3, 2, 2}),       parts({3, 2, 1, 1}),
            parts({3, 1, 1, 1, 1}), parts({2, 2, 2, 1}), parts({2, 2, 1, 1, 1}),
            parts({2, 1, 1, 1, 1, 1}), parts({1, 1, 1, 1, 1, 1, 1})};
        std::sort(expected.begin(), expected.end());
        std::reverse(expected.begin(), expected.end());
        CHECK(got == expected);
    }
    SECTION("output is lexicographically decreasing and duplicate-free")
    {
        for (const char* name : {"p", "q2", "q2prime", "b6", "c"}) {
            PartitionConstraint c = preset_constraint(name);
            for (int n : {9, 16, 23}) {
                std::vector<Partition> got = enumerate(n, c);
                for (size_t i = 0; i + 1 < got.size(); ++i)
                    CHECK(got[i + 1] < got[i]);
                for (const Partition& p : got) {
                    CHECK(p.weight() == n);
                    CHECK(c.satisfied_by(p));
                }
            }
        }
    }
    SECTION("contradictory constraint form")
    {
        PartitionConstraint c;
        c.forbidden = {{0, 6}};
        c.allowed = {{1, 2}};
        CHECK_THROWS_AS(enumerate(5, c), Error);
    }
}

TEST_CASE("count agrees with enumerate across a constraint corpus")
{
    for (const char* name :
         {"p", "b6", "b6e", "b6o", "b6ee", "b6eo", "q2", "q2prime", "c", "d", "q61", "div6"}) {
        PartitionConstraint c = preset_constraint(name);
        for (int n = 0; n <= 30; ++n) {
            INFO("constraint " << name << ", n=" << n);
            CHECK(count(n, c) == Int(enumerate(n, c).size()));
        }
    }
}

TEST_CASE("count matches the p table on unconstrained input")
{
    SequenceTable p = p_table(50);
    for (int n = 0; n <= 50; ++n) CHECK(count(n) == p.at(n));
}

TEST_CASE("length/even-count parity presets")
{
    CHECK(count(7, preset_constraint("b6e")) == 6);
    CHECK(count(7, preset_constraint("b6o")) == 8);
    CHECK(count(7, preset_constraint("b6ee")) == 8);
    CHECK(count(7, preset_constraint("b6eo")) == 6);
}

TEST_CASE("mk family by direct definition")
{
    SECTION("M_3(18) = 3 with the known witnesses")
    {
        std::vector<Partition> got = enumerate_mk(3, 18);
        std::vector<Partition> expected = {parts({7, 4, 4, 2, 1}), parts({6, 5, 4, 2, 1}),
                                           parts({5, 5, 5, 2, 1})};
        CHECK(got == expected);
        CHECK(count_mk(3, 18) == 3);
    }
    SECTION("weight zero never qualifies")
    {
        for (int k = 1; k <= 4; ++k) CHECK(count_mk(k, 0) == 0);
    }
}

TEST_CASE("pk family by direct definition")
{
    std::vector<Partition> got = enumerate_pk(2, 17);
    std::vector<Partition> expected = {
        parts({5, 3, 3, 3, 2, 1}),       parts({4, 4, 4, 2, 2, 1}),
        parts({4, 4, 4, 2, 1, 1, 1}),    parts({4, 3, 3, 3, 2, 1, 1}),
        parts({3, 3, 3, 3, 2, 2, 1}),    parts({3, 3, 3, 3, 2, 1, 1, 1}),
        parts({3, 3, 3, 2, 2, 2, 1, 1}), parts({3, 3, 3, 2, 2, 1, 1, 1, 1}),
        parts({3, 3, 3, 2, 1, 1, 1, 1, 1, 1})};
    CHECK(got == expected);
    CHECK(count_pk(2, 17) == 9);
}

TEST_CASE("tables agree with the enumeration oracle to 50")
{
    SequenceTable p = p_table(50);
    SequenceTable b6 = b6_table(50, "recurrence");
    SequenceTable q2 = q2_table(50, "recurrence");
    auto [c, d] = cd_tables(50);
    for (int n = 0; n <= 50; ++n) {
        CHECK(count(n, preset_constraint("p")) == p.at(n));
        CHECK(count(n, preset_constraint("b6")) == b6.at(n));
        CHECK(count(n, preset_constraint("q2")) == q2.at(n));
        CHECK(count(n, preset_constraint("c")) == c.at(n));
        CHECK(count(n, preset_constraint("d")) == d.at(n));
    }
}

TEST_CASE("a part repeated at most five times is the same as avoiding multiples of 6")
{
    PartitionConstraint c;
    c.max_multiplicity = 5;
    SequenceTable b6 = b6_table(50, "recurrence");
    for (int n = 0; n <= 50; ++n) CHECK(count(n, c) == b6.at(n));

    SECTION("enumerate honors the cap")
    {
        for (const Partition& p : enumerate(12, c))
            for (int v : p.parts()) CHECK(p.multiplicity(v) <= 5);
    }
}

TEST_CASE("signed length census triangulates against q2 at small n")
{
    // table route, series route (inside the split), and raw enumeration
    SequenceTable q2 = q2_table(30, "recurrence");
    auto [b6e, b6o] = b6_length_split_tables(30);
    for (int n = 0; n <= 30; ++n) {
        Int by_enum = count(n, preset_constraint("b6e")) - count(n, preset_constraint("b6o"));
        Int by_split = b6e.at(n) - b6o.at(n);
        Int signed_q2 = (n % 2 == 0) ? q2.at(n) : -q2.at(n);
        CHECK(by_enum == signed_q2);
        CHECK(by_split == signed_q2);
    }
}

TEST_CASE("cardinality_q61_w61")
{
    CHECK(cardinality_q61_w61(0) == std::pair<Int, Int>{1, 1});
    CHECK(cardinality_q61_w61(1) == std::pair<Int, Int>{1, 1});
    for (int n = 0; n <= 60; ++n) {
        auto [q, w] = cardinality_q61_w61(n);
        INFO("n=" << n);
        CHECK(q == w);
    }
}
