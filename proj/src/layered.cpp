#include "changecount/layered.hpp"

#include <sstream>

#include "changecount/oracle.hpp"

namespace changecount {

Count b_closed(std::int64_t s, const Count& n) {
    if (s < 2)
        throw InvalidParamsError("b_closed requires s >= 2");
    if (n < 0)
        throw NegativeAmountError("amount must be >= 0");
    return n / s + 1;
}

Count layer_value(const CoinSet& coins, int layer_index, std::int64_t n) {
    if (n < 0)
        throw NegativeAmountError("amount must be >= 0");
    return count_table(coins.prefix(layer_index), n).at(n);
}

namespace {

int layer_depth(char layer) {
    switch (layer) {
    case 'a': return 1;
    case 'b': return 2;
    case 'c': return 3;
    case 'd': return 4;
    default: throw BadLayerError("unknown layer name");
    }
}

}  // namespace

DollarWalkthrough dollar_walkthrough() {
    const CoinSet us = make_coin_set({1, 5, 10, 25});
    const auto value = [&](char layer, std::int64_t n) {
        return layer_value(us, layer_depth(layer), n);
    };

    DollarWalkthrough w;
    const auto line = [&](char layer, std::int64_t amount,
                          std::vector<std::pair<char, std::int64_t>> parts) {
        WalkthroughLine ln{layer, amount, {}, Count(0)};
        for (auto [part_layer, part_amount] : parts) {
            WalkthroughTerm t{part_layer, part_amount, value(part_layer, part_amount)};
            ln.total += t.value;
            ln.terms.push_back(std::move(t));
        }
        if (ln.total != value(layer, amount))
            throw Error("walkthrough ledger line does not re-sum");
        w.lines.push_back(std::move(ln));
    };

    // c_n = b_n + c_{n-10} unrolled down to amounts below 10 (or to an
    // already-established c line); d_100 = sum of c over quarters used.
    line('c', 0, {{'c', 0}});
    line('c', 25, {{'b', 25}, {'b', 15}, {'b', 5}});
    line('c', 50, {{'b', 50}, {'b', 40}, {'b', 30}, {'b', 20}, {'b', 10}, {'b', 0}});
    line('c', 75, {{'b', 75}, {'b', 65}, {'b', 55}, {'b', 45}, {'b', 35}, {'c', 25}});
    line('c', 100, {{'b', 100}, {'b', 90}, {'b', 80}, {'b', 70}, {'b', 60}, {'c', 50}});
    line('d', 100, {{'c', 0}, {'c', 25}, {'c', 50}, {'c', 75}, {'c', 100}});

    // the b terms also satisfy the two-coin closed form
    for (const auto& ln : w.lines)
        for (const auto& t : ln.terms)
            if (t.layer == 'b' && t.value != b_closed(5, t.amount))
                throw Error("walkthrough b-term disagrees with closed form");

    w.result = w.lines.back().total;
    return w;
}

std::string render(const DollarWalkthrough& w) {
    std::ostringstream out;
    for (const auto& ln : w.lines) {
        out << ln.layer << '_' << ln.amount << " = ";
        if (ln.terms.size() == 1) {
            out << ln.total;
        } else {
            for (std::size_t i = 0; i < ln.terms.size(); ++i) {
                if (i)
                    out << " + ";
                out << ln.terms[i].value;
            }
            out << " = " << ln.total;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace changecount
