#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

// Shared exact-arithmetic value types and coin-set validation.
//
// Everything in the counting path is exact: counts are unbounded
// nonnegative integers, intermediate formula values are reduced
// fractions. No floating point anywhere.

namespace changecount {

// Exact integer of unbounded magnitude. Counting results are always >= 0;
// the operations producing them guarantee it.
using Count = mpz_class;

// Exact fraction, always reduced, denominator > 0 (see make_rational).
using Rational = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptySetError : Error { using Error::Error; };
struct NonPositiveCoinError : Error { using Error::Error; };
struct DuplicateCoinError : Error { using Error::Error; };
struct NegativeAmountError : Error { using Error::Error; };
struct BadLayerError : Error { using Error::Error; };
struct InvalidParamsError : Error { using Error::Error; };
struct NonDivisorError : Error { using Error::Error; };
struct SchemeTooLargeError : Error { using Error::Error; };
// Fired only if a closed form that must produce an integer does not;
// signals an implementation bug, never bad input.
struct NonIntegralResultError : Error { using Error::Error; };

// Reduced fraction with positive denominator.
inline Rational make_rational(Count num, Count den) {
    if (den == 0)
        throw InvalidParamsError("rational with zero denominator");
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Converts an exactly-integral, nonnegative rational to a Count.
Count require_count(const Rational& q, const char* what);

Count factorial(std::int64_t n);

// Strictly increasing sequence of distinct positive coin denominations.
class CoinSet {
public:
    explicit CoinSet(std::vector<std::int64_t> coins);

    std::span<const std::int64_t> coins() const { return coins_; }
    int size() const { return static_cast<int>(coins_.size()); }  // v
    std::int64_t coin(int index) const { return coins_[static_cast<std::size_t>(index)]; }
    std::int64_t largest() const { return coins_.back(); }

    // The first `layers` coins as their own set.
    CoinSet prefix(int layers) const;

    bool operator==(const CoinSet&) const = default;

private:
    std::vector<std::int64_t> coins_;
};

// Validates, sorts and returns the coin set. Errors: EmptySetError,
// NonPositiveCoinError, DuplicateCoinError.
CoinSet make_coin_set(std::vector<std::int64_t> raw);

std::string to_string(const CoinSet& s);

// Parameters of the shape {1, s, k*s}, s >= 2, k >= 2.
struct ThreeCoinParams {
    std::int64_t s;
    std::int64_t k;

    ThreeCoinParams(std::int64_t s, std::int64_t k);
    CoinSet coin_set() const;
};

// Parameters of the shape {1, s, k*s, r*s}, s,k >= 2, r > k.
struct FourCoinParams {
    std::int64_t s;
    std::int64_t k;
    std::int64_t r;

    FourCoinParams(std::int64_t s, std::int64_t k, std::int64_t r);
    CoinSet coin_set() const;
};

struct Pennies {};  // {1}
struct TwoCoin {    // {1, s}, s >= 2
    std::int64_t s;
};
struct General {};  // anything else

using CoinSetShape = std::variant<Pennies, TwoCoin, ThreeCoinParams, FourCoinParams, General>;

// Deterministic shape detection; routes callers to the strongest applicable
// closed form. For the structured shapes the parameters are forced:
// s = t_2, k = t_3/t_2, r = t_4/t_2.
CoinSetShape classify_coin_set(const CoinSet& s);

}  // namespace changecount
