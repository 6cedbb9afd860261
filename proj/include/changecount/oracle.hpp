#pragma once

#include <span>

#include "changecount/core.hpp"

// Ground-truth dynamic-programming counters. Deliberately the slow,
// trustworthy baseline every faster engine is verified against.

namespace changecount {

// values[n] = number of multisets of coins from `coins` summing to n.
struct CountTable {
    CoinSet coins;
    std::int64_t upto;
    std::vector<Count> values;  // size upto + 1

    const Count& at(std::int64_t n) const { return values[static_cast<std::size_t>(n)]; }
};

// Same, with coin i usable at most caps[i] times.
struct BoundedCountTable {
    CoinSet coins;
    std::vector<std::int64_t> caps;
    std::int64_t upto;
    std::vector<Count> values;

    const Count& at(std::int64_t n) const { return values[static_cast<std::size_t>(n)]; }
};

// Exact number of ways to make change for n. Counts at negative arguments
// are zero inside the recurrence; a negative n at this boundary is a caller
// bug and raises NegativeAmountError.
Count count_dp(const CoinSet& coins, std::int64_t n);

// All counts for 0..upto in one O(v * upto) pass.
CountTable count_table(const CoinSet& coins, std::int64_t upto);

// Number of ways to write n = sum m_i * t_i with 0 <= m_i <= caps[i].
Count count_bounded(const CoinSet& coins, std::span<const std::int64_t> caps, std::int64_t n);

BoundedCountTable bounded_count_table(const CoinSet& coins, std::vector<std::int64_t> caps,
                                      std::int64_t upto);

}  // namespace changecount
