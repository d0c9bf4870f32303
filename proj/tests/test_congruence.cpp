#include "q6/congruence.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace q6;

TEST_CASE("alpha_p")
{
    CHECK(alpha_p(7) == 3);
    CHECK(alpha_p(5) == 0);
    CHECK_THROWS_AS(alpha_p(4), Error);
    CHECK_THROWS_AS(alpha_p(3), Error);

    SECTION("the three defining formulas agree for all primes 5 <= p <= 10^4")
    {
        // alpha_p throws if its internal cross-check ever fails
        for (long long p = 5; p <= 10000; ++p)
            if (is_prime(p)) CHECK_NOTHROW(alpha_p(p));
    }
}

TEST_CASE("family_index")
{
    PrimeFamilySpec spec{{7}, 1, "b6"};
    CHECK(family_index(spec, 0) == 17);
    CHECK(family_index(spec, 1) == 66);

    SECTION("slope is the squared prime product")
    {
        CHECK(family_index(spec, 5) - family_index(spec, 4) == 49);
        PrimeFamilySpec two{{5, 7}, 3, "b6"};
        CHECK(family_index(two, 1) - family_index(two, 0) == 25 * 49);
    }
    SECTION("numerator divisibility holds for random valid specs")
    {
        std::mt19937 rng(77);
        std::vector<long long> pool = {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
        for (int trial = 0; trial < 1000; ++trial) {
            PrimeFamilySpec s;
            int alpha = static_cast<int>(rng() % 2);
            for (int i = 0; i <= alpha; ++i) s.primes.push_back(pool[rng() % pool.size()]);
            s.j = 1 + static_cast<long long>(rng() % (s.primes.back() - 1));
            s.target = (trial % 2 == 0) ? "b6" : "b3";
            CHECK_NOTHROW(family_index(s, static_cast<long long>(rng() % 100)));
        }
    }
    SECTION("invalid specs are rejected")
    {
        CHECK_THROWS_AS(family_index({{6}, 1, "b6"}, 0), Error);   // not prime
        CHECK_THROWS_AS(family_index({{7}, 7, "b6"}, 0), Error);   // j = 0 mod p
        CHECK_THROWS_AS(family_index({{7}, 1, "b9"}, 0), Error);   // bad target
        CHECK_THROWS_AS(family_index({{3}, 1, "b6"}, 0), Error);   // prime < 5
    }
}

TEST_CASE("verify_family")
{
    SequenceTable b6 = b6_table(20000, "recurrence");

    SECTION("p = 7 (theorem coverage), every nonzero j")
    {
        for (long long j = 1; j <= 6; ++j) {
            CongruenceReport rep = verify_family({{7}, j, "b6"}, b6);
            CHECK(rep.pass());
            CHECK(!rep.exploratory);
            CHECK(rep.checked > 100);
        }
    }
    SECTION("p = 13 (mod-24 family coverage)")
    {
        CongruenceReport rep = verify_family({{13}, 1, "b6"}, b6);
        CHECK(rep.pass());
        CHECK(!rep.exploratory);
        CHECK(family_coverage({{13}, 1, "b6"}) == FamilyCoverage::mod24_family);
    }
    SECTION("p = 5 is exploratory: report only")
    {
        PrimeFamilySpec s{{5}, 1, "b6"};
        CHECK(family_coverage(s) == FamilyCoverage::exploratory);
        CongruenceReport rep = verify_family(s, b6);
        CHECK(rep.exploratory);
        CHECK(rep.checked > 0); // outcome reported either way
    }
    SECTION("alpha = 1 spot check (5,7)")
    {
        CongruenceReport rep = verify_family({{5, 7}, 1, "b6"}, b6);
        CHECK(rep.pass());
        CHECK(rep.checked > 10);
    }
    SECTION("every covered spec over {7,11,19,23,31,43}, alpha in {0,1}, in range")
    {
        std::vector<long long> pool = {7, 11, 19, 23, 31, 43};
        std::vector<PrimeFamilySpec> specs;
        for (long long p : pool) specs.push_back({{p}, 1, "b6"});
        for (long long p1 : pool)
            for (long long p2 : pool) specs.push_back({{p1, p2}, 2, "b6"});
        for (const PrimeFamilySpec& s : specs) {
            if (family_index(s, 0) > b6.limit()) continue; // out of table range
            CongruenceReport rep = verify_family(s, b6);
            INFO(rep.spec);
            CHECK(rep.pass());
        }
    }
    SECTION("empty sweep range is an error")
    {
        SequenceTable tiny = b6_table(10, "recurrence");
        CHECK_THROWS_AS(verify_family({{7}, 1, "b6"}, tiny), Error);
    }
    SECTION("table name must match the target")
    {
        CHECK_THROWS_AS(verify_family({{7}, 1, "b3"}, b6), Error);
    }
}

TEST_CASE("b3 analogue")
{
    SECTION("pentagonal-sum route matches the product route to 500")
    {
        SequenceTable a = b3_table(500, "pentagonal-sum");
        SequenceTable b = b3_table(500, "product");
        CHECK(a.values == b.values);
    }
    SECTION("the mod-3 family holds for p = 7, 11")
    {
        SequenceTable b3 = b3_table(20000, "pentagonal-sum");
        for (long long p : {7LL, 11LL})
            for (long long j : {1LL, 2LL}) {
                CongruenceReport rep = verify_family({{p}, j, "b3"}, b3);
                INFO("p=" << p << " j=" << j);
                CHECK(rep.pass());
            }
    }
}

TEST_CASE("two_squares_witness")
{
    SECTION("m = 0: 5 = 1 + 4")
    {
        auto w = two_squares_witness(0);
        REQUIRE(w.has_value());
        CHECK(*w == std::pair<long long, long long>{1, 1});
    }
    SECTION("m = 17: 413 = 7 * 59 has no representation")
    {
        CHECK(!two_squares_witness(17).has_value());
    }
    SECTION("witnesses satisfy the residue and norm contracts")
    {
        for (long long m = 0; m <= 500; ++m) {
            auto w = two_squares_witness(m);
            if (!w) continue;
            auto [a, b] = *w;
            CHECK(imod(a, 6) == 1);
            CHECK(imod(b, 6) == 1);
            CHECK(a * a + 4 * b * b == 24 * m + 5);
        }
    }
    SECTION("no witness forces a vanishing theta-product coefficient")
    {
        TruncatedSeries f = two_squares_series(800);
        for (long long m = 0; m <= 800; ++m) {
            if (!two_squares_witness(m).has_value()) {
                INFO("m=" << m);
                CHECK(f.coeff(static_cast<int>(m)) == 0);
            }
        }
    }
    SECTION("b6 mod 3 equals the signed theta-product coefficient mod 3")
    {
        TruncatedSeries f = two_squares_series(500);
        SequenceTable b6 = b6_table(500, "recurrence");
        for (int n = 0; n <= 500; ++n) {
            Int lhs = (n % 2 == 0) ? b6.at(n) : -b6.at(n);
            CHECK((lhs - f.coeff(n)) % 3 == 0);
        }
    }
}

TEST_CASE("verify_corollary_p24")
{
    SequenceTable b6 = b6_table(20000, "recurrence");
    for (long long p : {7LL, 11LL, 13LL}) {
        CongruenceReport rep = verify_corollary_p24(p, b6);
        INFO("p=" << p);
        CHECK(rep.pass());
        CHECK(rep.checked > 0);
    }
    SECTION("the excluded offset floor(5p/24) really is excluded")
    {
        // at p=11 the excluded j is 2; the progression there is not all zero
        long long p = 11, ap = alpha_p(p), j = (5 * p) / 24;
        bool some_nonzero = false;
        for (long long n = 0; p * p * n + p * j + ap <= b6.limit(); ++n)
            if (b6.at(p * p * n + p * j + ap) % 3 != 0) some_nonzero = true;
        CHECK(some_nonzero);
    }
    SECTION("uncovered residue classes are rejected")
    {
        CHECK_THROWS_AS(verify_corollary_p24(5, b6), Error);
        CHECK_THROWS_AS(verify_corollary_p24(73, b6), Error); // 73 = 1 (mod 24)
    }
}
