#include "changecount/verify.hpp"

#include <memory>

#include "changecount/closedform.hpp"
#include "changecount/layered.hpp"
#include "changecount/oracle.hpp"
#include "changecount/quasipoly.hpp"

namespace changecount {

std::vector<Engine> applicable_engines(const CoinSet& coins, std::int64_t max_n,
                                       const SchemeLimits& limits) {
    std::vector<Engine> engines;

    // full-depth layer table, built once through the layered path
    auto layer_table =
        std::make_shared<CountTable>(count_table(coins.prefix(coins.size()), max_n));
    engines.push_back({"layered", [layer_table](std::int64_t n) { return layer_table->at(n); }});

    const CoinSetShape shape = classify_coin_set(coins);
    if (const auto* two = std::get_if<TwoCoin>(&shape)) {
        const std::int64_t s = two->s;
        engines.push_back({"b_closed", [s](std::int64_t n) { return b_closed(s, Count(n)); }});
    }
    if (const auto* three = std::get_if<ThreeCoinParams>(&shape)) {
        const ThreeCoinParams p = *three;
        engines.push_back({"closed3", [p](std::int64_t n) { return c_closed(p, Count(n)); }});
    }
    if (const auto* four = std::get_if<FourCoinParams>(&shape)) {
        const FourCoinParams p = *four;
        engines.push_back({"closed4", [p](std::int64_t n) { return d_closed(p, Count(n)); }});
        if (p.k == 2)
            engines.push_back(
                {"closed4_k2", [p](std::int64_t n) { return d_closed_k2(p, Count(n)); }});
    }
    if (coins == make_coin_set({1, 5, 10, 25}))
        engines.push_back({"us_coins", [](std::int64_t n) { return us_coins_count(Count(n)); }});

    try {
        auto scheme = std::make_shared<DenumerantScheme>(build_scheme(coins, limits));
        engines.push_back(
            {"quasipoly", [scheme](std::int64_t n) { return eval_scheme(*scheme, Count(n)); }});
        auto formula = std::make_shared<QuasiPolynomialFormula>(scheme_to_formula(*scheme));
        engines.push_back(
            {"formula", [formula](std::int64_t n) { return formula_eval(*formula, Count(n)); }});
    } catch (const SchemeTooLargeError&) {
        // precompute would not fit; verify with the remaining engines
    }

    return engines;
}

VerifyReport run_verify(const CoinSet& coins, std::int64_t max_n,
                        std::span<const Engine> engines) {
    if (max_n < 0)
        throw NegativeAmountError("max_n must be >= 0");
    const CountTable oracle = count_table(coins, max_n);
    VerifyReport report{max_n + 1, engines.size() + 1, std::nullopt};
    for (std::int64_t n = 0; n <= max_n; ++n) {
        for (const Engine& engine : engines) {
            Count got = engine.eval(n);
            if (got != oracle.at(n)) {
                report.mismatch = Mismatch{engine.name, n, std::move(got), oracle.at(n)};
                return report;
            }
        }
    }
    return report;
}

}  // namespace changecount
