#pragma once

#include <functional>
#include <optional>

#include "changecount/core.hpp"

// Differential-verification harness: every engine applicable to a coin set
// is swept against the dynamic-programming oracle so a disagreement names
// the guilty engine and the first amount where it fails.

namespace changecount {

struct Engine {
    std::string name;
    std::function<Count(std::int64_t n)> eval;
};

struct SchemeLimits;

// All non-oracle engines usable for this coin set: layered always;
// b_closed / closed3 / closed4 / closed4_k2 / us_coins by shape; quasipoly
// and formula when the scheme fits the limits. Engines that precompute
// (tables, schemes) do so for amounts up to max_n.
std::vector<Engine> applicable_engines(const CoinSet& coins, std::int64_t max_n,
                                       const SchemeLimits& limits);

struct Mismatch {
    std::string engine;
    std::int64_t n;
    Count got;
    Count expected;
};

struct VerifyReport {
    std::int64_t points;             // amounts checked: 0..max_n
    std::size_t engines;             // engines compared, oracle included
    std::optional<Mismatch> mismatch;  // first disagreement, if any

    bool ok() const { return !mismatch.has_value(); }
};

// Compares each engine pointwise against count_dp for n in [0, max_n],
// stopping at the first mismatch.
VerifyReport run_verify(const CoinSet& coins, std::int64_t max_n,
                        std::span<const Engine> engines);

}  // namespace changecount
