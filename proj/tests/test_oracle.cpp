#include <doctest.h>

#include <algorithm>

#include "changecount/oracle.hpp"
#include "oracle_ref.hpp"

using namespace changecount;

TEST_CASE("count_dp pinned values") {
    CHECK(count_dp(make_coin_set({1, 5, 10, 25}), 100) == 242);
    // 13 = 4 + 3 + 1 + 5 split by quarters of the largest coins used;
    // cross-checked against direct enumeration below
    const CoinSet mixed = make_coin_set({1, 2, 4, 5});
    CHECK(count_dp(mixed, 9) == 13);
    CHECK(count_dp(mixed, 9) == testref::enumerate_count(mixed.coins(), 9));
    CHECK(count_dp(make_coin_set({2}), 3) == 0);
    for (const auto& coins : {make_coin_set({1}), make_coin_set({3, 7}),
                              make_coin_set({1, 5, 10, 25})})
        CHECK(count_dp(coins, 0) == 1);
    CHECK_THROWS_AS(count_dp(make_coin_set({1, 5}), -1), NegativeAmountError);
}

TEST_CASE("count_table batches the counts") {
    const CountTable t = count_table(make_coin_set({1, 5}), 10);
    const std::vector<Count> expected{1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3};
    CHECK(t.values == expected);
    for (std::int64_t n = 0; n <= 10; ++n)
        CHECK(t.at(n) == testref::enumerate_count(t.coins.coins(), n));

    CHECK(count_table(make_coin_set({4, 9}), 0).values == std::vector<Count>{1});
    CHECK(count_table(make_coin_set({1, 5, 10, 25}), 100).at(100) == 242);
}

TEST_CASE("count_bounded respects the multiplicity caps") {
    const CoinSet pennies_nickels = make_coin_set({1, 5});
    const std::vector<std::int64_t> caps{4, 1};
    CHECK(count_bounded(pennies_nickels, caps, 9) == 1);  // 4*1 + 1*5 only
    CHECK(count_bounded(pennies_nickels, caps, 0) == 1);

    const std::vector<std::int64_t> one_each{1, 1};
    CHECK(count_bounded(make_coin_set({2, 3}), one_each, 5) == 1);

    CHECK_THROWS_AS(count_bounded(pennies_nickels, one_each, -2), NegativeAmountError);
    const std::vector<std::int64_t> too_few_caps{3};
    CHECK_THROWS_AS(count_bounded(pennies_nickels, too_few_caps, 5), InvalidParamsError);
    const std::vector<std::int64_t> negative_cap{3, -1};
    CHECK_THROWS_AS(count_bounded(pennies_nickels, negative_cap, 5), InvalidParamsError);
}

TEST_CASE("count_bounded with generous caps equals count_dp") {
    for (const auto& coins : {make_coin_set({1, 2, 5}), make_coin_set({3, 4}),
                              make_coin_set({2, 7, 9})}) {
        const std::int64_t upto = 60;
        std::vector<std::int64_t> caps;
        for (std::int64_t coin : coins.coins())
            caps.push_back(upto / coin);
        const BoundedCountTable bounded = bounded_count_table(coins, caps, upto);
        const CountTable unrestricted = count_table(coins, upto);
        CHECK(bounded.values == unrestricted.values);
    }
}

TEST_CASE("count_bounded agrees with direct enumeration") {
    const std::vector<std::vector<std::int64_t>> sets{{1, 4}, {2, 3, 5}, {1, 2, 6}, {3}};
    const std::vector<std::vector<std::int64_t>> all_caps{{2, 3}, {1, 4, 0}, {5, 2, 1}, {7}};
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const CoinSet coins = make_coin_set(sets[i]);
        const CountTable unrestricted = count_table(coins, 25);
        for (std::int64_t n = 0; n <= 25; ++n) {
            const Count bounded = count_bounded(coins, all_caps[i], n);
            CHECK(bounded == testref::enumerate_bounded(sets[i], all_caps[i], n));
            CHECK(bounded <= unrestricted.at(n));
        }
    }
}

TEST_CASE("counts are monotone and positive when the set contains a penny") {
    const CountTable t = count_table(make_coin_set({1, 3, 7}), 200);
    for (std::int64_t n = 0; n <= 200; ++n) {
        CHECK(t.at(n) >= 1);
        if (n > 0)
            CHECK(t.at(n) >= t.at(n - 1));
    }
}

TEST_CASE("pennies alone count one way everywhere") {
    const CountTable t = count_table(make_coin_set({1}), 50);
    CHECK(std::all_of(t.values.begin(), t.values.end(),
                      [](const Count& c) { return c == 1; }));
}

TEST_CASE("the multiset count does not depend on coin order") {
    // run the layer recurrence over explicit coin orders, bypassing the
    // sorted CoinSet
    const auto layered_count = [](const std::vector<std::int64_t>& coins, std::int64_t upto) {
        std::vector<Count> values(static_cast<std::size_t>(upto) + 1, Count(0));
        values[0] = 1;
        for (std::int64_t coin : coins)
            for (std::int64_t n = coin; n <= upto; ++n)
                values[static_cast<std::size_t>(n)] +=
                    values[static_cast<std::size_t>(n - coin)];
        return values;
    };
    std::vector<std::int64_t> coins{2, 5, 9};
    std::sort(coins.begin(), coins.end());
    const std::vector<Count> sorted_order = layered_count(coins, 120);
    CHECK(sorted_order == count_table(make_coin_set(coins), 120).values);
    while (std::next_permutation(coins.begin(), coins.end()))
        CHECK(layered_count(coins, 120) == sorted_order);
}

TEST_CASE("small-instance sweep against direct enumeration") {
    // all coin sets drawn from {1..8} with at most three coins
    std::vector<std::vector<std::int64_t>> sets;
    for (std::int64_t a = 1; a <= 8; ++a) {
        sets.push_back({a});
        for (std::int64_t b = a + 1; b <= 8; ++b) {
            sets.push_back({a, b});
            for (std::int64_t c = b + 1; c <= 8; ++c)
                sets.push_back({a, b, c});
        }
    }
    REQUIRE(sets.size() == 8 + 28 + 56);
    for (const auto& raw : sets) {
        const CoinSet coins = make_coin_set(raw);
        const CountTable t = count_table(coins, 30);
        for (std::int64_t n = 0; n <= 30; ++n)
            CHECK(t.at(n) == testref::enumerate_count(coins.coins(), n));
    }
}
