#pragma once

#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "changecount/oracle.hpp"
#include "changecount/quasipoly.hpp"

// The full property battery a denumerant scheme must survive, shared
// between the unit tests and the acceptance suite.

namespace schemeprops {

using namespace changecount;

struct BatteryStats {
    std::size_t worst_mults = 0;
    std::size_t worst_budget = 0;  // 3v of the set where worst_mults happened
    bool mults_within_budget = true;
};

inline CoinSet random_coin_set(std::mt19937& rng) {
    std::uniform_int_distribution<int> size_dist(1, 4);
    std::uniform_int_distribution<std::int64_t> coin_dist(1, 12);
    const int v = size_dist(rng);
    std::set<std::int64_t> coins;
    while (static_cast<int>(coins.size()) < v)
        coins.insert(coin_dist(rng));
    return make_coin_set({coins.begin(), coins.end()});
}

// Checks one coin set end to end; returns the first failure, if any.
//  - scheme shape: period = lcm, M = sum(t - t_i); a_0/palindrome/sum are
//    asserted by construction
//  - a_j equals the bounded count with caps t/t_i - 1
//  - eval_scheme = formula_eval = count_dp on [0, 3t]
//  - <= 3v big multiplications per evaluation
//  - factor identity (1 - z^t) = (1 - z^{t_i}) f_i for every coin
//  - formula degrees <= v-1; residues with coefficient mass have degree
//    exactly v-1 and share one leading coefficient
inline std::optional<std::string> check_scheme_battery(const CoinSet& coins,
                                                       BatteryStats* stats = nullptr) {
    std::ostringstream err;
    const auto fail = [&](const std::string& msg) {
        return std::optional<std::string>(to_string(coins) + ": " + msg);
    };

    const DenumerantScheme scheme = build_scheme(coins);
    const std::int64_t t = scheme.period();
    const int v = scheme.coin_count();
    if (lcm_of(coins) != t)
        return fail("period is not lcm(S)");
    std::int64_t expected_top = 0;
    for (std::int64_t coin : coins.coins())
        expected_top += t - coin;
    if (scheme.top_index() != expected_top)
        return fail("M != sum(t - t_i)");

    // bounded-count identity for the coefficients
    std::vector<std::int64_t> caps;
    for (std::int64_t coin : coins.coins())
        caps.push_back(t / coin - 1);
    const BoundedCountTable bounded =
        bounded_count_table(coins, caps, scheme.top_index());
    for (std::int64_t j = 0; j <= scheme.top_index(); ++j)
        if (scheme.coefficient(j) != bounded.at(j)) {
            err << "a_" << j << " = " << scheme.coefficient(j) << " but bounded count is "
                << bounded.at(j);
            return fail(err.str());
        }

    // factor identity, checked with signed coefficients
    for (std::int64_t coin : coins.coins()) {
        const IntPolynomial f = factor_poly(t, coin);
        // (1 - z^coin) * f: coefficient at e is f[e] - f[e - coin]
        for (std::int64_t e = 0; e <= t; ++e) {
            Count c = f.coeff(e) - f.coeff(e - coin);
            const Count want = (e == 0) ? 1 : (e == t) ? -1 : 0;
            if (c != want) {
                err << "factor identity fails for coin " << coin << " at degree " << e;
                return fail(err.str());
            }
        }
    }

    const QuasiPolynomialFormula formula = scheme_to_formula(scheme);
    const CountTable oracle = count_table(coins, 3 * t);
    const std::size_t budget = static_cast<std::size_t>(3 * v);
    for (std::int64_t n = 0; n <= 3 * t; ++n) {
        EvalStats eval_stats;
        const Count fast = eval_scheme(scheme, Count(n), &eval_stats);
        if (fast != oracle.at(n)) {
            err << "eval_scheme(" << n << ") = " << fast << ", oracle says " << oracle.at(n);
            return fail(err.str());
        }
        const Count via_formula = formula_eval(formula, Count(n));
        if (via_formula != fast) {
            err << "formula_eval(" << n << ") = " << via_formula << " != " << fast;
            return fail(err.str());
        }
        if (stats && eval_stats.big_multiplications >= stats->worst_mults) {
            stats->worst_mults = eval_stats.big_multiplications;
            stats->worst_budget = budget;
        }
        if (eval_stats.big_multiplications > budget) {
            if (stats)
                stats->mults_within_budget = false;
            err << "eval at n=" << n << " used " << eval_stats.big_multiplications
                << " multiplications, budget " << budget;
            return fail(err.str());
        }
    }

    // per-residue polynomial shape
    std::optional<Rational> shared_leading;
    for (const auto& residue : formula.residues()) {
        const auto degree = static_cast<std::int64_t>(residue.coefficients.size()) - 1;
        if (degree > v - 1) {
            err << "residue " << residue.residue << " has degree " << degree;
            return fail(err.str());
        }
        Count mass(0);
        for (std::int64_t j = residue.residue; j <= scheme.top_index(); j += t)
            mass += scheme.coefficient(j);
        if (mass == 0) {
            if (!residue.coefficients.empty()) {
                err << "residue " << residue.residue << " should be the zero polynomial";
                return fail(err.str());
            }
            continue;
        }
        if (degree != v - 1) {
            err << "nonzero residue " << residue.residue << " has degree " << degree
                << ", expected " << v - 1;
            return fail(err.str());
        }
        const Rational& leading = residue.coefficients.back();
        if (!shared_leading)
            shared_leading = leading;
        else if (*shared_leading != leading) {
            err << "residue " << residue.residue << " leading coefficient " << leading
                << " differs from " << *shared_leading;
            return fail(err.str());
        }
    }
    return std::nullopt;
}

}  // namespace schemeprops
