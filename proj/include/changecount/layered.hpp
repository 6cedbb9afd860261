#pragma once

#include "changecount/core.hpp"

// The per-coin counting layers as first-class operations, plus the
// change-for-a-dollar ledger computed and checked by machine.

namespace changecount {

// Counts for the two-coin set {1, s} in closed form: floor(n/s) + 1.
Count b_closed(std::int64_t s, const Count& n);

// Ways to make change for n using only the first layer_index coins
// (1-based). layer_value(s, v, n) equals count_dp(s, n).
Count layer_value(const CoinSet& coins, int layer_index, std::int64_t n);

// One summand of a ledger line: the value of layer `layer` ('b','c','d')
// at `amount`.
struct WalkthroughTerm {
    char layer;
    std::int64_t amount;
    Count value;
};

// A ledger line: layer value at `amount` decomposed into summands.
struct WalkthroughLine {
    char layer;
    std::int64_t amount;
    std::vector<WalkthroughTerm> terms;
    Count total;
};

struct DollarWalkthrough {
    std::vector<WalkthroughLine> lines;
    Count result;  // ways to change 100 with {1,5,10,25}
};

// The hand computation of the dollar problem for {1,5,10,25}: each c value
// unrolled into its b-term sums and d_100 into its c-term sum. Every term
// and every total is recomputed and cross-checked against layer_value
// before being returned.
DollarWalkthrough dollar_walkthrough();

// Plain-text ledger, one line per decomposition, e.g.
// "c_25 = 6 + 4 + 2 = 12".
std::string render(const DollarWalkthrough& w);

}  // namespace changecount
