#include "changecount/core.hpp"

#include <algorithm>
#include <sstream>

namespace changecount {

Count require_count(const Rational& q, const char* what) {
    if (!is_integral(q) || q < 0) {
        std::ostringstream msg;
        msg << what << ": expected a nonnegative integer, got " << q;
        throw NonIntegralResultError(msg.str());
    }
    return q.get_num();
}

Count factorial(std::int64_t n) {
    if (n < 0)
        throw InvalidParamsError("factorial of negative argument");
    Count f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

CoinSet::CoinSet(std::vector<std::int64_t> coins) : coins_(std::move(coins)) {
    if (coins_.empty())
        throw EmptySetError("coin set must be nonempty");
    std::sort(coins_.begin(), coins_.end());
    if (coins_.front() < 1)
        throw NonPositiveCoinError("coin denominations must be >= 1");
    if (std::adjacent_find(coins_.begin(), coins_.end()) != coins_.end())
        throw DuplicateCoinError("coin denominations must be distinct");
}

CoinSet CoinSet::prefix(int layers) const {
    if (layers < 1 || layers > size())
        throw BadLayerError("layer index out of range");
    return CoinSet(std::vector<std::int64_t>(coins_.begin(), coins_.begin() + layers));
}

CoinSet make_coin_set(std::vector<std::int64_t> raw) { return CoinSet(std::move(raw)); }

std::string to_string(const CoinSet& s) {
    std::ostringstream out;
    out << '{';
    for (int i = 0; i < s.size(); ++i) {
        if (i)
            out << ',';
        out << s.coin(i);
    }
    out << '}';
    return out.str();
}

ThreeCoinParams::ThreeCoinParams(std::int64_t s_, std::int64_t k_) : s(s_), k(k_) {
    if (s < 2 || k < 2)
        throw InvalidParamsError("three-coin shape requires s >= 2 and k >= 2");
}

CoinSet ThreeCoinParams::coin_set() const { return make_coin_set({1, s, k * s}); }

FourCoinParams::FourCoinParams(std::int64_t s_, std::int64_t k_, std::int64_t r_)
    : s(s_), k(k_), r(r_) {
    if (s < 2 || k < 2 || r < 2 || r <= k)
        throw InvalidParamsError("four-coin shape requires s,k,r >= 2 and r > k");
}

CoinSet FourCoinParams::coin_set() const { return make_coin_set({1, s, k * s, r * s}); }

CoinSetShape classify_coin_set(const CoinSet& s) {
    const auto coins = s.coins();
    if (coins[0] != 1)
        return General{};
    switch (s.size()) {
    case 1:
        return Pennies{};
    case 2:
        return TwoCoin{coins[1]};
    case 3:
        if (coins[2] % coins[1] == 0)
            return ThreeCoinParams(coins[1], coins[2] / coins[1]);
        return General{};
    case 4:
        if (coins[2] % coins[1] == 0 && coins[3] % coins[1] == 0)
            return FourCoinParams(coins[1], coins[2] / coins[1], coins[3] / coins[1]);
        return General{};
    default:
        return General{};
    }
}

}  // namespace changecount
