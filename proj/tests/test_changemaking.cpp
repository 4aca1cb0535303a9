#include <doctest.h>

#include "asnp/changemaking.hpp"
#include "asnp/padic.hpp"
#include "oracles.hpp"

using namespace asnp;

TEST_SUITE_BEGIN("changemaking");

TEST_CASE("coin set construction") {
    CoinSet c = make_coin_set(5, 2, {26});
    CHECK(c.coins == std::vector<std::uint64_t>{26, 130});
    CHECK(c.nu == 26);
    CHECK(c.nu_unique);
    CHECK(c.q() == 25);

    CoinSet d = make_coin_set(2, 2, {1, 3});
    CHECK(d.coins == std::vector<std::uint64_t>{1, 2, 3, 6});
    CHECK(d.nu == 3);
    CHECK(d.nu_unique);

    CoinSet e = make_coin_set(2, 1, {21, 19, 13, 7, 3});
    CHECK_FALSE(e.nu_unique);

    CHECK_THROWS_AS(make_coin_set(5, 2, {10}), std::invalid_argument);  // p | i
    CHECK_THROWS_AS(make_coin_set(5, 0, {3}), std::invalid_argument);
    CHECK_THROWS_AS(make_coin_set(5, 2, {}), std::invalid_argument);
}

TEST_CASE("solution values against full enumeration: stated examples") {
    CoinSet c26 = make_coin_set(5, 2, {26});
    auto en = oracles::enumerate_all(c26, 312);
    REQUIRE(en.min_size.has_value());
    CHECK(*en.min_size == 4);
    CHECK(solution_value(c26, 312) == en.min_size);
    CHECK(*solution_value(c26, 312) == 4);

    CHECK(solution_value(c26, 0) == 0);

    CoinSet c13 = make_coin_set(2, 2, {1, 3});
    en = oracles::enumerate_all(c13, 7);
    CHECK(*en.min_size == 2);
    CHECK(*solution_value(c13, 7) == 2);

    // infeasible: 0 < n < min coin
    CoinSet c3 = make_coin_set(2, 2, {3});
    CHECK_FALSE(solution_value(c3, 2).has_value());
    CHECK(solve(c3, 2).empty());
}

TEST_CASE("solve returns exactly the optimal representations") {
    CoinSet c26 = make_coin_set(5, 2, {26});
    std::vector<Representation> reps = solve(c26, 312);
    REQUIRE(reps.size() == 1);  // Key Lemma predicts uniqueness here
    CHECK(reps[0].size == 4);
    // t_{26,0} = 2 and t_{26,1} = 2
    REQUIRE(reps[0].coin_multiplicities.size() == 2);
    CHECK(reps[0].coin_multiplicities[0] == std::tuple<std::uint64_t, std::uint32_t, std::uint64_t>{26, 0, 2});
    CHECK(reps[0].coin_multiplicities[1] == std::tuple<std::uint64_t, std::uint32_t, std::uint64_t>{26, 1, 2});

    // single-coin representation for a coin value
    CoinSet c13 = make_coin_set(2, 2, {1, 3});
    reps = solve(c13, 6);
    bool has_singleton = false;
    for (const auto& r : reps) {
        if (r.size == 1) has_singleton = true;
    }
    CHECK(has_singleton);

    // n = 7: only {6, 1} has size 2
    reps = solve(c13, 7);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].size == 2);

    // enumeration agrees on the full multiset level for a small sweep
    for (std::uint64_t n = 0; n <= 40; ++n) {
        auto en = oracles::enumerate_all(c13, n);
        std::vector<std::vector<std::uint64_t>> got;
        for (const auto& r : solve(c13, n)) {
            std::vector<std::uint64_t> coins;
            for (const auto& [i, j, t] : r.coin_multiplicities) {
                std::uint64_t value = i;
                for (std::uint32_t jj = 0; jj < j; ++jj) value *= 2;
                for (std::uint64_t u = 0; u < t; ++u) coins.push_back(value);
            }
            std::sort(coins.begin(), coins.end());
            got.push_back(coins);
        }
        std::sort(got.begin(), got.end());
        CHECK(got == en.optimal);
    }
}

TEST_CASE("weight lower bound") {
    CoinSet c13 = make_coin_set(2, 2, {1, 3});
    CHECK(weight_lower_bound(c13, 7) == mpq_class(3, 2));
    CHECK(weight_lower_bound(c13, 0) == 0);
    CoinSet c26 = make_coin_set(5, 2, {26});
    CHECK(weight_lower_bound(c26, 312) == 4);
    CHECK(*solution_value(c26, 312) >= weight_lower_bound(c26, 312));
}

TEST_CASE("tightness reports") {
    CoinSet c26 = make_coin_set(5, 2, {26});
    TightnessReport t = is_tight(c26, 312);
    CHECK(t.feasible);
    CHECK(t.tight);
    REQUIRE(t.witness.has_value());
    CHECK(*t.witness == 12);  // (22)_5
    CHECK(t.witness_digits == std::vector<std::uint32_t>{2, 2});
    CHECK(t.factorization_carryfree);
    CHECK(is_carryfree_mul(26, 12, 5));

    CoinSet c13 = make_coin_set(2, 2, {1, 3});
    t = is_tight(c13, 7);
    CHECK(t.feasible);
    CHECK_FALSE(t.tight);  // M = 2 > 3/2

    t = is_tight(c26, 26);  // nu itself: w = 1
    CHECK(t.tight);
    CHECK(*t.witness == 1);

    t = is_tight(c26, 0);
    CHECK(t.tight);
    CHECK(*t.witness == 0);

    t = is_tight(c26, 3);  // infeasible
    CHECK_FALSE(t.feasible);
    CHECK_FALSE(t.tight);
}

TEST_CASE("key lemma on a small corpus") {
    // forward: a carry-free factorization nu * w, w < p^a forces tightness;
    // converse under a unique maximum; plus the divisibility consequence.
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        for (std::uint32_t a = 1; a <= 2; ++a) {
            std::vector<std::vector<std::uint64_t>> supports;
            if (p == 2) supports = {{3}, {1, 3}, {3, 5}, {7}, {5, 7}, {1, 5, 7}};
            if (p == 3) supports = {{4}, {2, 4}, {8}, {1, 8}, {5, 7}};
            if (p == 5) supports = {{26}, {4}, {2, 4}, {6, 26}, {3, 26}};
            for (const auto& s : supports) {
                CoinSet c = make_coin_set(p, a, s);
                std::uint64_t pa = c.q();
                std::vector<std::uint32_t> dp = solution_table(c, 160);
                for (std::uint64_t n = 0; n <= 160; ++n) {
                    bool feasible = dp[n] != kNoRepresentation;
                    bool tight = feasible && std::uint64_t(dp[n]) * c.nu_weight() == weight(n, p);
                    bool has_factorization = n % c.nu == 0 && n / c.nu < pa &&
                                             is_carryfree_mul(c.nu, n / c.nu, p);
                    if (n == 0) continue;
                    if (has_factorization) CHECK(tight);
                    if (c.nu_unique) {
                        CHECK(tight == has_factorization);
                        if (tight) CHECK(n % c.nu == 0);
                    }
                }
            }
        }
    }
}

TEST_CASE("dp equals the recursive oracle on random sets") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5}[rng() % 3];
        std::uint32_t a = 1 + rng() % 3;
        std::vector<std::uint64_t> support;
        for (int k = 0; k < 3; ++k) {
            std::uint64_t i = 1 + rng() % 60;
            if (i % p) support.push_back(i);
        }
        if (support.empty()) continue;
        CoinSet c = make_coin_set(p, a, support);
        std::vector<std::uint32_t> dp = solution_table(c, 300);
        for (std::uint64_t n = 0; n <= 300; n += 7) {
            auto rec = oracles::solution_value_recursive(c, n);
            if (dp[n] == kNoRepresentation) {
                CHECK_FALSE(rec.has_value());
            } else {
                CHECK(rec == dp[n]);
            }
        }
    }
}

TEST_SUITE_END();
