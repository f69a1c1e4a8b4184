#include <algorithm>
#include <numeric>
#include <thread>

#include "doctest.h"
#include "msum/engine.hpp"
#include "oracles.hpp"

using namespace msum;

namespace {

Int power_sum(Int q, Int e, const std::vector<Int>& exps) {
    Int s = 0;
    for (Int a : exps) s = (s + pow_mod(q, a, e)) % e;
    return s;
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("m on small examples") {
    const auto r = m(4, 7);
    CHECK(r.value == 3);
    CHECK(r.witness == std::vector<Int>{0, 1, 2});
    CHECK(m(9, 11).value == 3);
    CHECK(m(9, 121).value == 5);
    CHECK(m(3, 26).value == 6);
    CHECK(m(9, 26).value == 6);
    CHECK(m(1, 9).value == 9);
    CHECK(m(10, 9).value == 9);
    CHECK(m(5, 1).value == 1);
    CHECK_THROWS_AS(m(6, 9), NotCoprime);
}

TEST_CASE("m_of_subgroup on small examples") {
    CHECK(m_of_subgroup(unit_subgroup(4, 7)).value == 3);
    CHECK(m_of_subgroup(unit_subgroup(1, 12)).value == 12);
    CHECK(m_of_subgroup(unit_subgroup(3, 1)).value == 1);
}

TEST_CASE("engine equals the naive DP for every coprime pair with e <= 200") {
    MSumEngine engine;
    for (Int e = 1; e <= 200; ++e) {
        for (Int q = 0; q < std::max<Int>(e, 1); ++q) {
            if (std::gcd(q, e) != 1) continue;
            const auto r = engine.m(q, e);
            REQUIRE(r.value == oracle::naive_m(q, e));
            REQUIRE(verify_witness(q, e, r));
        }
    }
}

TEST_CASE("the three strategies agree and return valid witnesses") {
    for (Int e = 2; e <= 150; ++e) {
        for (Int q = 1; q < e; ++q) {
            if (std::gcd(q, e) != 1) continue;
            const auto a = unit_subgroup(q, e);
            const auto lv = m_of_subgroup(a, Strategy::level_growth);
            const auto ob = m_of_subgroup(a, Strategy::orbit_growth);
            const auto sp = m_of_subgroup(a, Strategy::split_search);
            REQUIRE(lv.value == ob.value);
            REQUIRE(lv.value == sp.value);
            REQUIRE(lv.level_sizes == ob.level_sizes);
            for (const auto* r : {&lv, &ob, &sp}) {
                REQUIRE(static_cast<Int>(r->witness.size()) == r->value);
                REQUIRE(std::is_sorted(r->witness.begin(), r->witness.end()));
                REQUIRE(power_sum(q, e, r->witness) == 0);
            }
        }
    }
}

TEST_CASE("split search on a large modulus") {
    // 2 has order 11 mod 23^5 = 6436343; the tower value at k = 5 is 11.
    const Int e = 6436343;
    const Int q = element_of_order(23, 5, 11);
    const auto sp = m_of_subgroup(unit_subgroup(q, e), Strategy::split_search);
    const auto ob = m_of_subgroup(unit_subgroup(q, e), Strategy::orbit_growth);
    CHECK(sp.value == 11);
    CHECK(ob.value == 11);
    CHECK(verify_witness(q, e, sp));
}

TEST_CASE("level sets grow by at least n per level before reaching zero") {
    for (Int e = 2; e <= 120; ++e) {
        for (Int q = 1; q < e; ++q) {
            if (std::gcd(q, e) != 1) continue;
            const auto a = unit_subgroup(q, e);
            const auto levels = LevelSets::grow(a);
            REQUIRE(levels.reached_zero());
            REQUIRE(static_cast<Int>(levels.zero_level()) == oracle::naive_m(q, e));
            for (std::size_t t = 1; t < levels.zero_level(); ++t) {
                REQUIRE(levels.size(t) >= static_cast<Int>(t) * a.order);
            }
            for (std::size_t t = 2; t <= levels.depth(); ++t) {
                REQUIRE(levels.size(t) >= levels.size(t - 1));
            }
            const auto parts = levels.decompose(0);
            REQUIRE(parts.size() == levels.zero_level());
            Int s = 0;
            for (Int x : parts) {
                REQUIRE(a.contains(x));
                s = (s + x) % e;
            }
            REQUIRE(s == 0);
        }
    }
}

TEST_CASE("level membership matches a direct sumset") {
    const auto a = unit_subgroup(2, 31);
    const auto levels = LevelSets::grow(a);
    std::vector<char> reach(31, 0);
    for (Int x : a.elements) reach[x] = 1;
    for (std::size_t t = 1; t <= levels.depth(); ++t) {
        for (Int x = 0; x < 31; ++x) REQUIRE(levels.contains(t, x) == static_cast<bool>(reach[x]));
        auto next = reach;
        for (Int x = 0; x < 31; ++x) {
            if (!reach[x]) continue;
            for (Int y : a.elements) next[(x + y) % 31] = 1;
        }
        reach.swap(next);
    }
}

TEST_CASE("subgroup keys identify generators of the same subgroup") {
    CHECK(subgroup_key(4, 7).first == subgroup_key(2, 7).first);
    CHECK(subgroup_key(3, 7).first == subgroup_key(5, 7).first);
    CHECK_FALSE(subgroup_key(2, 7).first == subgroup_key(3, 7).first);
    for (Int e = 2; e <= 100; ++e) {
        for (Int q = 1; q < e; ++q) {
            if (std::gcd(q, e) != 1) continue;
            const auto [key, s] = subgroup_key(q, e);
            REQUIRE(pow_mod(q, s, e) == key.canonical_generator);
            REQUIRE(unit_subgroup(key.canonical_generator, e).elements ==
                    unit_subgroup(q, e).elements);
        }
    }
}

TEST_CASE("cache shares entries across generators and stays correct") {
    MSumEngine engine;
    const auto a = engine.m(2, 7);
    CHECK(engine.cache_size() == 1);
    const auto b = engine.m(4, 7);
    CHECK(engine.cache_size() == 1);
    CHECK(a.value == b.value);
    CHECK(verify_witness(2, 7, a));
    CHECK(verify_witness(4, 7, b));
    engine.m(3, 7);
    CHECK(engine.cache_size() == 2);
    engine.clear();
    CHECK(engine.cache_size() == 0);
}

TEST_CASE("engine is safe under concurrent use") {
    MSumEngine engine;
    std::vector<std::thread> pool;
    std::vector<int> bad(4, 0);
    for (int t = 0; t < 4; ++t) {
        pool.emplace_back([&, t] {
            for (Int e = 2 + t; e <= 300; e += 4) {
                for (Int q = 1; q < e; ++q) {
                    if (std::gcd(q, e) != 1) continue;
                    if (!verify_witness(q, e, engine.m(q, e))) ++bad[t];
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    CHECK(std::accumulate(bad.begin(), bad.end(), 0) == 0);
}

TEST_CASE("ceil_bound") {
    CHECK(ceil_bound(PowerSumInstance::make(4, 7)) == 3);
    CHECK(ceil_bound(PowerSumInstance::make(1, 9)) == 9);
    CHECK(ceil_bound(PowerSumInstance::make(5, 8)) == 4);
}

TEST_CASE("is_m_two") {
    CHECK(is_m_two(PowerSumInstance::make(3, 2)));
    CHECK(is_m_two(PowerSumInstance::make(2, 5)));
    CHECK_FALSE(is_m_two(PowerSumInstance::make(4, 7)));
    for (Int e = 2; e <= 300; ++e) {
        for (Int q = 1; q < e; ++q) {
            if (std::gcd(q, e) != 1) continue;
            REQUIRE(is_m_two(PowerSumInstance::make(q, e)) == (oracle::naive_m(q, e) == 2));
        }
    }
}

TEST_CASE("two_power_m") {
    CHECK(two_power_m(5, 3) == 4);
    CHECK(two_power_m(7, 3) == 2);
    CHECK(two_power_m(3, 3) == 4);
    for (unsigned k = 1; k <= 10; ++k) {
        const Int e = Int{1} << k;
        for (Int q = 1; q < e; q += 2) REQUIRE(two_power_m(q, k) == oracle::naive_m(q, e));
    }
}

TEST_CASE("verify_witness") {
    const std::vector<Int> w{0, 1, 2};
    CHECK(verify_witness(4, 7, w, 3));
    CHECK_FALSE(verify_witness(4, 7, w, 2));
    CHECK(verify_witness(9, 1, std::vector<Int>{0}, 1));
    CHECK(verify_witness(5, 8, std::vector<Int>{0, 0, 0, 1}, 4));
    CHECK_FALSE(verify_witness(5, 8, std::vector<Int>{0, 0, 1}, 3));
}

TEST_CASE("witness_hash is stable and order sensitive") {
    const std::vector<Int> a{0, 1, 2};
    const std::vector<Int> b{0, 2, 1};
    CHECK(witness_hash(a) == witness_hash(a));
    CHECK(witness_hash(a) != witness_hash(b));
}

}  // TEST_SUITE
