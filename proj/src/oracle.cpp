#include "changecount/oracle.hpp"

namespace changecount {

namespace {

void check_amount(std::int64_t n) {
    if (n < 0)
        throw NegativeAmountError("amount must be >= 0");
}

}  // namespace

CountTable count_table(const CoinSet& coins, std::int64_t upto) {
    check_amount(upto);
    // One layer per coin, updated in place: after processing coin i,
    // values[n] counts multisets drawn from the first i coins.
    std::vector<Count> values(static_cast<std::size_t>(upto) + 1, Count(0));
    values[0] = 1;
    for (std::int64_t coin : coins.coins())
        for (std::int64_t n = coin; n <= upto; ++n)
            values[static_cast<std::size_t>(n)] += values[static_cast<std::size_t>(n - coin)];
    return CountTable{coins, upto, std::move(values)};
}

Count count_dp(const CoinSet& coins, std::int64_t n) {
    check_amount(n);
    return count_table(coins, n).at(n);
}

BoundedCountTable bounded_count_table(const CoinSet& coins, std::vector<std::int64_t> caps,
                                      std::int64_t upto) {
    check_amount(upto);
    if (static_cast<int>(caps.size()) != coins.size())
        throw InvalidParamsError("one multiplicity cap per coin required");
    for (std::int64_t cap : caps)
        if (cap < 0)
            throw InvalidParamsError("multiplicity caps must be >= 0");

    const std::size_t len = static_cast<std::size_t>(upto) + 1;
    std::vector<Count> prev(len, Count(0));
    prev[0] = 1;
    std::vector<Count> next(len, Count(0));
    for (int i = 0; i < coins.size(); ++i) {
        const std::int64_t coin = coins.coin(i);
        const std::int64_t cap = caps[static_cast<std::size_t>(i)];
        // next[n] = sum of prev[n - q*coin] over 0 <= q <= cap; the sliding
        // window makes each layer O(upto) instead of O(upto * cap):
        //   next[n] = next[n - coin] + prev[n] - prev[n - (cap+1)*coin]
        for (std::int64_t n = 0; n <= upto; ++n) {
            Count& out = next[static_cast<std::size_t>(n)];
            out = prev[static_cast<std::size_t>(n)];
            if (n >= coin)
                out += next[static_cast<std::size_t>(n - coin)];
            // cap < n/coin guarantees (cap+1)*coin <= n, so no overflow here.
            if (cap < n / coin)
                out -= prev[static_cast<std::size_t>(n - (cap + 1) * coin)];
        }
        std::swap(prev, next);
    }
    return BoundedCountTable{coins, std::move(caps), upto, std::move(prev)};
}

Count count_bounded(const CoinSet& coins, std::span<const std::int64_t> caps, std::int64_t n) {
    check_amount(n);
    return bounded_count_table(coins, std::vector<std::int64_t>(caps.begin(), caps.end()), n)
        .at(n);
}

}  // namespace changecount
