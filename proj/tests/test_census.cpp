#include "horomean/census.hpp"

#include <doctest.h>

#include <numeric>

using namespace horomean;

TEST_SUITE("census") {

TEST_CASE("quotient-divisibility census small cases") {
    PrimeTable t = PrimeTable::build(2, 100);

    CensusResult s1 = sk_census(t, 1, 10);
    CHECK(s1.count == 1);
    REQUIRE(s1.rows.size() == 3);
    CHECK(s1.rows[0].p == 3);
    CHECK(!s1.rows[0].flag);
    CHECK(s1.rows[2].p == 7);
    CHECK(s1.rows[2].t == 2);
    CHECK(s1.rows[2].flag);

    CHECK(sk_census(t, 2, 10).count == 0);

    // k divisible by every quotient in range kills every flag
    std::uint64_t k = 1;
    for (const auto& r : t.records())
        if (r.p <= 100) k = std::lcm(k, r.t);
    CHECK(sk_census(t, k, 100).count == 0);

    CHECK_THROWS_AS(sk_census(t, 0, 10), std::domain_error);
    CHECK_THROWS_AS(sk_census(t, 1, 101), std::out_of_range);
}

TEST_CASE("divisibility monotonicity of the census count") {
    PrimeTable t = PrimeTable::build(2, 10000);
    std::vector<std::uint64_t> counts(13);
    for (std::uint64_t k = 1; k <= 12; ++k) counts[k] = sk_census(t, k, 10000).count;
    for (std::uint64_t k = 1; k <= 12; ++k)
        for (std::uint64_t kk = k; kk <= 12; kk += k)
            CHECK(counts[kk] <= counts[k]);
}

TEST_CASE("large-order census small cases") {
    PrimeTable t = PrimeTable::build(2, 100);
    CensusResult c = large_order_census(t, 10);
    CHECK(c.count == 2); // p=3 (2 > 1.82) and p=5 (4 > 2.49); p=7 has 3 < 3.08
    REQUIRE(c.rows.size() == 3);
    CHECK(c.rows[0].flag);
    CHECK(c.rows[1].flag);
    CHECK(!c.rows[2].flag);

    CHECK(large_order_census(t, 3).count == 1);
    CHECK(large_order_census(t, 2).rows.empty());
}

TEST_CASE("factor-count formula small cases") {
    PrimeTable t = PrimeTable::build(2, 2000);
    CHECK(iq_count(t, 1) == 1);
    CHECK(iq_count(t, 7) == 3);  // 1 + phi(7)/f_2(7) = 1 + 6/3
    CHECK(iq_count(t, 5) == 2);  // 1 + 4/4
    CHECK_THROWS_AS(iq_count(t, 6), std::domain_error);
    CHECK_THROWS_AS(iq_count(t, 0), std::out_of_range);
    CHECK_THROWS_AS(iq_count(t, 2001), std::out_of_range);
}

TEST_CASE("coset orbit counts") {
    CHECK(cyclotomic_coset_count(2, 7) == 3); // {0},{1,2,4},{3,6,5}
    CHECK(cyclotomic_coset_count(2, 1) == 1);
    CHECK(cyclotomic_coset_count(3, 8) == 5); // {0},{1,3},{2,6},{4},{5,7}
    CHECK_THROWS_AS(cyclotomic_coset_count(2, 6), std::domain_error);
    CHECK_THROWS_AS(cyclotomic_coset_count(2, 0), std::domain_error);
}

TEST_CASE("divisor-sum route equals orbit enumeration") {
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL}) {
        PrimeTable t = PrimeTable::build(q, 700);
        for (std::uint64_t m = 1; m <= 700; ++m) {
            if (std::gcd(m, q) != 1) continue;
            CHECK(iq_count(t, m) == cyclotomic_coset_count(q, m));
        }
    }
}

TEST_CASE("census rows cover every non-q prime in range") {
    PrimeTable t = PrimeTable::build(3, 500);
    CensusResult c = large_order_census(t, 500);
    CHECK(c.rows.size() == t.records().size());
    for (const auto& row : c.rows) {
        CHECK(row.f * row.t == row.p - 1);
        CHECK(row.p != 3);
    }
}

} // TEST_SUITE
