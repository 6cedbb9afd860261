#include "changecount/quasipoly.hpp"

#include <algorithm>

namespace changecount {

IntPolynomial::IntPolynomial(std::vector<Count> coefficients)
    : coefficients_(std::move(coefficients)) {
    for (const Count& c : coefficients_)
        if (c < 0)
            throw InvalidParamsError("IntPolynomial coefficients must be >= 0");
    while (!coefficients_.empty() && coefficients_.back() == 0)
        coefficients_.pop_back();
}

const Count& IntPolynomial::coeff(std::int64_t i) const {
    static const Count zero(0);
    if (i < 0 || i > degree())
        return zero;
    return coefficients_[static_cast<std::size_t>(i)];
}

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.degree() < 0 || q.degree() < 0)
        return IntPolynomial{};
    std::vector<Count> out(static_cast<std::size_t>(p.degree() + q.degree()) + 1, Count(0));
    for (std::int64_t i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i) == 0)
            continue;
        for (std::int64_t j = 0; j <= q.degree(); ++j)
            if (q.coeff(j) != 0)
                out[static_cast<std::size_t>(i + j)] += p.coeff(i) * q.coeff(j);
    }
    return IntPolynomial(std::move(out));
}

Count lcm_of(const CoinSet& coins) {
    Count t(1);
    for (std::int64_t coin : coins.coins())
        mpz_lcm_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(coin));
    return t;
}

IntPolynomial factor_poly(std::int64_t t, std::int64_t coin) {
    if (coin < 1 || t < 1 || t % coin != 0)
        throw NonDivisorError("factor_poly requires coin to divide the period");
    std::vector<Count> coeffs(static_cast<std::size_t>(t - coin) + 1, Count(0));
    for (std::int64_t e = 0; e + coin <= t; e += coin)
        coeffs[static_cast<std::size_t>(e)] = 1;
    return IntPolynomial(std::move(coeffs));
}

DenumerantScheme::DenumerantScheme(CoinSet coins, std::int64_t period,
                                   std::vector<Count> coefficients)
    : coins_(std::move(coins)), period_(period), coefficients_(std::move(coefficients)) {
    const std::int64_t m = top_index();
    if (m < 0 || coefficients_[0] != 1)
        throw Error("denumerant scheme must have a_0 = 1");
    for (std::int64_t j = 0; j <= m / 2; ++j)
        if (coefficients_[static_cast<std::size_t>(j)] !=
            coefficients_[static_cast<std::size_t>(m - j)])
            throw Error("denumerant scheme coefficients must be palindromic");
    Count sum(0);
    for (const Count& a : coefficients_)
        sum += a;
    Count expected(1);
    for (std::int64_t coin : coins_.coins())
        expected *= period_ / coin;
    if (sum != expected)
        throw Error("denumerant scheme coefficient sum must be prod(t/t_i)");
}

DenumerantScheme build_scheme(const CoinSet& coins, const SchemeLimits& limits) {
    const Count t_exact = lcm_of(coins);
    Count slots(1);
    for (std::int64_t coin : coins.coins())
        slots += t_exact - coin;
    if (limits.max_coefficients < 1 || slots > limits.max_coefficients)
        throw SchemeTooLargeError("scheme needs " + slots.get_str() +
                                  " coefficient slots, limit is " +
                                  std::to_string(limits.max_coefficients));
    // slots = M+1 fits the limit, and t <= M + t_1, so t fits in int64 too.
    const std::int64_t t = static_cast<std::int64_t>(t_exact.get_si());

    IntPolynomial a = IntPolynomial::one();
    for (std::int64_t coin : coins.coins())
        a = poly_mul(a, factor_poly(t, coin));

    return DenumerantScheme(coins, t,
                            {a.coefficients().begin(), a.coefficients().end()});
}

Count binomial(const Count& top, std::int64_t k) {
    if (k < 0)
        throw InvalidParamsError("binomial requires k >= 0");
    if (top < k)
        return 0;
    Count result(1);
    for (std::int64_t d = 1; d <= k; ++d) {
        result *= top - k + d;
        result /= d;  // product of d consecutive integers is divisible by d!
    }
    return result;
}

Count eval_scheme(const DenumerantScheme& scheme, const Count& n, EvalStats* stats) {
    if (n < 0)
        throw NegativeAmountError("amount must be >= 0");
    const std::int64_t t = scheme.period();
    const std::int64_t v = scheme.coin_count();
    const std::int64_t m_top = scheme.top_index();
    std::size_t mults = 0;

    const std::int64_t rho = static_cast<std::int64_t>(
        mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(t)));
    Count q_max = n / t;  // i for the j = rho term

    // admissible j = rho + step*t with j <= min(m_top, n)
    std::int64_t steps = (m_top >= rho) ? (m_top - rho) / t : -1;
    if (steps < 0)
        return 0;
    if (q_max < steps)
        steps = static_cast<std::int64_t>(q_max.get_si());

    // largest needed binomial: C(q_max + v - 1, v - 1)
    Count binom(1);
    if (v >= 2) {
        binom = q_max + 1;
        for (std::int64_t d = 2; d <= v - 1; ++d) {
            binom *= q_max + d;
            ++mults;
        }
        binom /= factorial(v - 1);
    }

    Count total(0);
    Count i = q_max;
    for (std::int64_t step = 0;; ++step) {
        const Count& a = scheme.coefficient(rho + step * t);
        if (a != 0) {
            total += a * binom;
            ++mults;
        }
        if (step == steps)
            break;
        // C(i-1 + v-1, v-1) = C(i + v-1, v-1) * i / (i + v - 1), exactly
        if (v >= 2) {
            binom *= i;
            ++mults;
            binom /= i + v - 1;
        }
        i -= 1;
    }
    if (stats)
        stats->big_multiplications = mults;
    return total;
}

namespace {

std::vector<Rational> trim(std::vector<Rational> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0)
        coeffs.pop_back();
    return coeffs;
}

}  // namespace

QuasiPolynomialFormula::QuasiPolynomialFormula(CoinSet coins, std::int64_t period,
                                               std::vector<ResiduePolynomial> residues)
    : coins_(std::move(coins)), period_(period), residues_(std::move(residues)) {
    if (period_ < 1 || static_cast<std::int64_t>(residues_.size()) != period_)
        throw InvalidParamsError("formula needs one residue polynomial per residue class");
    const std::int64_t max_degree = coins_.size() - 1;
    for (std::int64_t rho = 0; rho < period_; ++rho) {
        auto& r = residues_[static_cast<std::size_t>(rho)];
        if (r.residue != rho)
            throw InvalidParamsError("residue polynomials must be sorted by residue");
        r.coefficients = trim(std::move(r.coefficients));
        if (static_cast<std::int64_t>(r.coefficients.size()) - 1 > max_degree)
            throw InvalidParamsError("residue polynomial degree exceeds v-1");
    }
}

QuasiPolynomialFormula scheme_to_formula(const DenumerantScheme& scheme) {
    const std::int64_t t = scheme.period();
    const std::int64_t v = scheme.coin_count();
    const std::int64_t m_top = scheme.top_index();
    // a_j * C((n-j)/t + v-1, v-1) = a_j/( (v-1)! t^{v-1} ) * prod_{m=1}^{v-1} (n - j + m t),
    // a polynomial in n of degree v-1. Expand with integer coefficients and
    // divide by the shared denominator at the end.
    Count denom = factorial(v - 1);
    for (std::int64_t d = 1; d <= v - 1; ++d)
        denom *= t;

    std::vector<ResiduePolynomial> residues;
    residues.reserve(static_cast<std::size_t>(t));
    std::vector<Count> acc, term;
    for (std::int64_t rho = 0; rho < t; ++rho) {
        acc.assign(static_cast<std::size_t>(v), Count(0));
        for (std::int64_t j = rho; j <= m_top; j += t) {
            const Count& a = scheme.coefficient(j);
            if (a == 0)
                continue;
            term.assign(1, a);
            for (std::int64_t m = 1; m <= v - 1; ++m) {
                // multiply by (n + (m t - j))
                const Count shift = Count(m) * t - j;
                term.push_back(term.back());
                for (std::size_t d = term.size() - 2; d > 0; --d)
                    term[d] = term[d - 1] + term[d] * shift;
                term[0] *= shift;
            }
            for (std::size_t d = 0; d < term.size(); ++d)
                acc[d] += term[d];
        }
        std::vector<Rational> coeffs;
        coeffs.reserve(acc.size());
        for (Count& c : acc)
            coeffs.push_back(make_rational(std::move(c), denom));
        residues.push_back(ResiduePolynomial{rho, std::move(coeffs)});
    }
    return QuasiPolynomialFormula(scheme.coins(), t, std::move(residues));
}

Count formula_eval(const QuasiPolynomialFormula& formula, const Count& n) {
    if (n < 0)
        throw NegativeAmountError("amount must be >= 0");
    const std::int64_t rho = static_cast<std::int64_t>(
        mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(formula.period())));
    const auto& coeffs = formula.residue(rho).coefficients;
    Rational value(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        value *= n;
        value += *it;
    }
    return require_count(value, "formula_eval");
}

}  // namespace changecount
