#include <numeric>

#include "doctest.h"
#include "msum/prime_power.hpp"
#include "oracles.hpp"

using namespace msum;

TEST_SUITE("prime_power") {

TEST_CASE("ord_factorization") {
    CHECK(ord_factorization(9, 11, 3) == OrderFactorization{1, 5});
    CHECK(ord_factorization(9, 11, 1) == OrderFactorization{0, 5});
    CHECK(ord_factorization(1, 7, 3) == OrderFactorization{0, 1});
    for (Int p : {3, 5, 7, 11, 13}) {
        for (unsigned k = 1; oracle::ipow(p, k) <= 3000; ++k) {
            const Int pk = oracle::ipow(p, k);
            for (Int q = 1; q < pk; ++q) {
                if (q % p == 0) continue;
                const auto f = ord_factorization(q, p, k);
                REQUIRE((p - 1) % f.d == 0);
                REQUIRE(oracle::ipow(p, f.i) * f.d == oracle::order(q, pk));
            }
        }
    }
}

TEST_CASE("check_prop9") {
    CHECK(check_prop9(9, 11, 3));
    CHECK(check_prop9(9, 11, 4));
    CHECK_THROWS_AS(check_prop9(9, 11, 1), DomainError);
    CHECK_THROWS_AS(check_prop9(9, 11, 2), DomainError);  // ord mod 121 is 5
}

TEST_CASE("fixed_base_tower for 9 mod 11^k") {
    const auto t = fixed_base_tower(9, 11, 4);
    CHECK(t.m_values() == std::vector<Int>{3, 5, 5, 5});
    CHECK(t.w == 2);
    CHECK(t.n == 5);
    CHECK_THROWS_AS(fixed_base_tower(1, 11, 3), DomainError);
}

TEST_CASE("fixed_base_tower closed form when q = 1 mod p") {
    for (Int p : {3, 5, 7}) {
        for (Int q = 1 + p; q < 200; q += p) {
            const auto t = fixed_base_tower(q, p, 4);
            for (const auto& row : t.entries) {
                REQUIRE(row.closed_form);
                REQUIRE(row.m == std::gcd(row.modulus, q - 1));
                REQUIRE(row.m == oracle::naive_m(q, row.modulus));
            }
        }
    }
}

TEST_CASE("fixed_base_tower order growth follows w") {
    const auto t = fixed_base_tower(2, 23, 2);
    CHECK(t.entries.at(0).m == 3);
    CHECK(t.w == 1);
    CHECK(t.entries.at(1).ord == 11 * 23);
    for (Int p : {3, 5, 7, 11}) {
        for (Int q = 2; q < 40; ++q) {
            if (q % p == 0) continue;
            const auto tw = fixed_base_tower(q, p, 4);
            for (const auto& row : tw.entries) {
                const Int expect = row.k <= tw.w ? tw.n : tw.n * oracle::ipow(p, row.k - tw.w);
                REQUIRE(row.ord == expect);
                REQUIRE(row.ord == oracle::order(q, row.modulus));
                if (row.modulus <= 2500) REQUIRE(row.m == oracle::naive_m(q, row.modulus));
            }
            const auto ms = tw.m_values();
            for (std::size_t i = 1; i < ms.size(); ++i) {
                REQUIRE(ms[i] >= ms[i - 1]);
                if (i + 1 > tw.w) REQUIRE(ms[i] == ms[i - 1]);
            }
        }
    }
}

TEST_CASE("tower_sequence reproduces listed towers") {
    CHECK(tower_sequence(23, 11, 5).sequence() == std::vector<Int>{3, 5, 9, 9, 11});
    CHECK(tower_sequence(53, 13, 4).sequence() == std::vector<Int>{3, 7, 12, 13});
    CHECK(tower_sequence(239, 119, 4).sequence() == std::vector<Int>{3, 4, 6, 7});
    const auto t = tower_sequence(23, 11, 5);
    CHECK(t.r == 11);
    CHECK(t.k_hit == 5u);
    for (const auto& lv : t.levels) CHECK(mul_order(lv.generator, lv.modulus) == 11);
}

TEST_CASE("tower_sequence stop_at_limit") {
    const auto t = tower_sequence(199, 11, 4, true);
    CHECK(t.sequence() == std::vector<Int>{6, 11});
    CHECK(t.limit <= 11);
}

TEST_CASE("tower_sequence preconditions") {
    CHECK_THROWS_AS(tower_sequence(23, 1, 3), DomainError);
    CHECK_THROWS_AS(tower_sequence(23, 5, 3), DomainError);
    CHECK_THROWS_AS(tower_sequence(21, 5, 3), DomainError);
}

TEST_CASE("prop10_search") {
    CHECK(prop10_search(11, 5, 3).K == 2);
    CHECK(prop10_search(61, 5, 3).K == 2);
    const auto hit = prop10_search(23, 11, 6);
    CHECK(hit.K == 5);
    CHECK(mul_order(hit.Q, oracle::ipow(23, 5)) == 11);
    CHECK_THROWS_AS(prop10_search(23, 11, 3), NotFoundWithinCap);
}

TEST_CASE("order five and seven tables") {
    const auto t5 = prop14_table(200, 6);
    for (const auto& row : t5) {
        CHECK(row.m == row.expected);
        if (row.k == 1 && row.p == 11) CHECK(row.m == 3);
        if (row.k == 1 && row.p == 61) CHECK(row.m == 4);
        if (row.k == 1 && row.p == 31) CHECK(row.m == 5);
        if (row.k == 2 && row.p == 11) CHECK(row.m == 5);
    }
    const auto t7 = prop15_table(600, 6);
    for (const auto& row : t7) {
        CHECK(row.m == row.expected);
        if (row.k == 1 && row.p == 43) CHECK(row.m == 3);
        if (row.k == 1 && row.p == 29) CHECK(row.m == 4);
    }
}

}  // TEST_SUITE
