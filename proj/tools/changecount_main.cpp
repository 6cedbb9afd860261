#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "changecount/closedform.hpp"
#include "changecount/core.hpp"
#include "changecount/formula_io.hpp"
#include "changecount/layered.hpp"
#include "changecount/oracle.hpp"
#include "changecount/quasipoly.hpp"
#include "changecount/verify.hpp"

using namespace changecount;

namespace {

constexpr std::int64_t kMaxTableAmount = 10'000'000;  // count_dp materializes O(n) entries

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_coin_list(const std::string& text) {
    std::vector<std::int64_t> coins;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            coins.push_back(std::stoll(token, &used));
            if (used != token.size())
                throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw UsageError("bad coin value '" + token + "' in --coins");
        }
    }
    if (coins.empty())
        throw UsageError("--coins must list at least one denomination");
    return coins;
}

Count parse_amount(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("amount '" + text + "' is not a nonnegative decimal integer");
    return Count(text, 10);
}

std::int64_t small_amount(const Count& n, const char* method) {
    if (n > kMaxTableAmount)
        throw UsageError(std::string("amount too large for the ") + method +
                         " method (tables up to " + std::to_string(kMaxTableAmount) + ")");
    return static_cast<std::int64_t>(n.get_si());
}

SchemeLimits scheme_limits_from_env() {
    SchemeLimits limits;
    if (const char* env = std::getenv("CHANGE_SCHEME_BUDGET")) {
        try {
            std::size_t used = 0;
            limits.max_coefficients = std::stoll(env, &used);
            if (used != std::string(env).size() || limits.max_coefficients < 1)
                throw std::invalid_argument(env);
        } catch (const std::exception&) {
            throw UsageError("CHANGE_SCHEME_BUDGET must be a positive decimal integer");
        }
    }
    return limits;
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

int cmd_count(const std::string& coins_arg, const std::string& n_arg,
              const std::string& method) {
    const CoinSet coins = make_coin_set(parse_coin_list(coins_arg));
    const Count n = parse_amount(n_arg);
    const CoinSetShape shape = classify_coin_set(coins);

    Count result;
    if (method == "dp") {
        result = count_dp(coins, small_amount(n, "dp"));
    } else if (method == "layered") {
        result = layer_value(coins, coins.size(), small_amount(n, "layered"));
    } else if (method == "closed3") {
        const auto* p = std::get_if<ThreeCoinParams>(&shape);
        if (!p)
            throw UsageError("closed3 requires a coin set of the shape {1,s,ks}");
        result = c_closed(*p, n);
    } else if (method == "closed4") {
        const auto* p = std::get_if<FourCoinParams>(&shape);
        if (!p)
            throw UsageError("closed4 requires a coin set of the shape {1,s,ks,rs}");
        result = d_closed(*p, n);
    } else if (method == "quasipoly") {
        result = eval_scheme(build_scheme(coins, scheme_limits_from_env()), n);
    } else {  // auto: strongest applicable engine first
        if (const auto* four = std::get_if<FourCoinParams>(&shape)) {
            result = d_closed(*four, n);
        } else if (const auto* three = std::get_if<ThreeCoinParams>(&shape)) {
            result = c_closed(*three, n);
        } else {
            try {
                result = eval_scheme(build_scheme(coins, scheme_limits_from_env()), n);
            } catch (const SchemeTooLargeError&) {
                result = count_dp(coins, small_amount(n, "dp"));
            }
        }
    }
    std::cout << result << "\n";
    return 0;
}

int cmd_table(const std::string& coins_arg, std::int64_t from, std::int64_t to,
              const std::string& format) {
    const CoinSet coins = make_coin_set(parse_coin_list(coins_arg));
    if (from < 0 || from > to)
        throw UsageError("need 0 <= --from <= --to");
    if (to > kMaxTableAmount)
        throw UsageError("--to exceeds the table limit of " + std::to_string(kMaxTableAmount));
    const CountTable table = count_table(coins, to);
    if (format == "csv") {
        std::cout << "n,count\n";
        for (std::int64_t n = from; n <= to; ++n)
            std::cout << n << ',' << table.at(n) << "\n";
    } else {
        nlohmann::json rows = nlohmann::json::array();
        for (std::int64_t n = from; n <= to; ++n)
            rows.push_back({{"n", n}, {"count", table.at(n).get_str()}});
        std::cout << rows.dump() << "\n";
    }
    return 0;
}

int cmd_formula(const std::string& coins_arg, const std::string& format) {
    const CoinSet coins = make_coin_set(parse_coin_list(coins_arg));
    const QuasiPolynomialFormula formula =
        scheme_to_formula(build_scheme(coins, scheme_limits_from_env()));
    if (format == "json")
        std::cout << formula_to_json(formula) << "\n";
    else
        std::cout << formula_to_latex(formula);
    return 0;
}

int cmd_verify(const std::string& coins_arg, std::int64_t max_n) {
    const CoinSet coins = make_coin_set(parse_coin_list(coins_arg));
    if (max_n < 0)
        throw UsageError("--max-n must be >= 0");
    if (max_n > kMaxTableAmount)
        throw UsageError("--max-n exceeds the table limit of " +
                         std::to_string(kMaxTableAmount));
    const std::vector<Engine> engines =
        applicable_engines(coins, max_n, scheme_limits_from_env());
    const VerifyReport report = run_verify(coins, max_n, engines);
    if (report.ok()) {
        std::cout << "OK: " << report.engines << " engines agree on " << report.points
                  << " points\n";
        return 0;
    }
    const Mismatch& m = *report.mismatch;
    std::cout << "MISMATCH: engine " << m.engine << " at n=" << m.n << ": got " << m.got
              << ", oracle says " << m.expected << "\n";
    return 1;
}

int cmd_walkthrough() {
    std::cout << render(dollar_walkthrough());
    return 0;
}

int cmd_bench(const std::string& coins_arg, const std::vector<std::string>& n_args,
              int repetitions) {
    const CoinSet coins = make_coin_set(parse_coin_list(coins_arg));
    if (repetitions < 1)
        throw UsageError("--reps must be >= 1");

    auto start = std::chrono::steady_clock::now();
    const DenumerantScheme scheme = build_scheme(coins, scheme_limits_from_env());
    const double build_ms = ms_since(start);
    std::cout << "scheme: coins=" << to_string(coins) << " period=" << scheme.period()
              << " coefficients=" << scheme.top_index() + 1 << " build_ms=" << build_ms << "\n";

    for (const std::string& n_arg : n_args) {
        const Count n = parse_amount(n_arg);
        EvalStats stats;
        Count value = eval_scheme(scheme, n, &stats);
        start = std::chrono::steady_clock::now();
        for (int rep = 0; rep < repetitions; ++rep)
            eval_scheme(scheme, n);
        const double eval_ms = ms_since(start) / repetitions;

        std::cout << "n=" << n << " count=" << value << " eval_ms=" << eval_ms
                  << " mults=" << stats.big_multiplications;
        if (n <= kMaxTableAmount) {
            start = std::chrono::steady_clock::now();
            const Count check = count_dp(coins, static_cast<std::int64_t>(n.get_si()));
            std::cout << " dp_ms=" << ms_since(start);
            if (check != value)
                std::cout << " dp_disagrees=" << check;
        } else {
            std::cout << " dp_ms=skipped";
        }
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact change-function calculator"};
    app.require_subcommand(1);

    std::string coins_arg;
    std::string n_arg;
    std::string method = "auto";
    auto* count_cmd = app.add_subcommand("count", "count the ways to make change for one amount");
    count_cmd->add_option("--coins", coins_arg, "comma-separated denominations")->required();
    count_cmd->add_option("--n", n_arg, "amount in cents")->required();
    count_cmd->add_option("--method", method, "auto|dp|layered|closed3|closed4|quasipoly")
        ->check(CLI::IsMember({"auto", "dp", "layered", "closed3", "closed4", "quasipoly"}));

    std::int64_t from = 0;
    std::int64_t to = 0;
    std::string table_format = "csv";
    auto* table_cmd = app.add_subcommand("table", "counts for a range of amounts");
    table_cmd->add_option("--coins", coins_arg, "comma-separated denominations")->required();
    table_cmd->add_option("--from", from, "first amount")->required();
    table_cmd->add_option("--to", to, "last amount")->required();
    table_cmd->add_option("--format", table_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    std::string formula_format = "json";
    auto* formula_cmd =
        app.add_subcommand("formula", "per-residue quasi-polynomial of the change function");
    formula_cmd->add_option("--coins", coins_arg, "comma-separated denominations")->required();
    formula_cmd->add_option("--format", formula_format, "json|latex")
        ->check(CLI::IsMember({"json", "latex"}));

    std::int64_t max_n = 0;
    auto* verify_cmd =
        app.add_subcommand("verify", "sweep all applicable engines against the DP oracle");
    verify_cmd->add_option("--coins", coins_arg, "comma-separated denominations")->required();
    verify_cmd->add_option("--max-n", max_n, "verify all amounts in [0, max-n]")->required();

    app.add_subcommand("walkthrough", "the change-for-a-dollar ledger, machine-checked");

    std::vector<std::string> bench_amounts;
    int repetitions = 5;
    auto* bench_cmd = app.add_subcommand("bench", "precompute and per-query timing report");
    bench_cmd->add_option("--coins", coins_arg, "comma-separated denominations")->required();
    bench_cmd->add_option("--n", bench_amounts, "amounts to query")->required();
    bench_cmd->add_option("--reps", repetitions, "repetitions per amount");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand("count"))
            return cmd_count(coins_arg, n_arg, method);
        if (app.got_subcommand("table"))
            return cmd_table(coins_arg, from, to, table_format);
        if (app.got_subcommand("formula"))
            return cmd_formula(coins_arg, formula_format);
        if (app.got_subcommand("verify"))
            return cmd_verify(coins_arg, max_n);
        if (app.got_subcommand("walkthrough"))
            return cmd_walkthrough();
        if (app.got_subcommand("bench"))
            return cmd_bench(coins_arg, bench_amounts, repetitions);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
