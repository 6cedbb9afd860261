#pragma once

#include <cstddef>
#include <span>

#include "changecount/core.hpp"

// Generating-function pipeline for arbitrary coin sets: precompute the
// coefficient array of A(z) = f_1(z)...f_v(z) once, where f_i(z) =
// (1 - z^t)/(1 - z^{t_i}) and t = lcm(S); afterwards every query costs
// O(v) big-integer multiplications. The expanded per-residue polynomial
// view shows the count is a quasi-polynomial with period t.

namespace changecount {

// Dense polynomial with exact nonnegative integer coefficients, ascending
// degree, no trailing zeros (the zero polynomial is the empty one).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Count> coefficients);

    static IntPolynomial one() { return IntPolynomial({Count(1)}); }

    // -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(coefficients_.size()) - 1; }
    const Count& coeff(std::int64_t i) const;
    std::span<const Count> coefficients() const { return coefficients_; }

    bool operator==(const IntPolynomial&) const = default;

private:
    std::vector<Count> coefficients_;
};

// Exact convolution.
IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q);

// Least common multiple of all coins, exact.
Count lcm_of(const CoinSet& coins);

// The factor f with (1 - z^t) = (1 - z^coin) * f(z): all-ones coefficients
// at exponents 0, coin, 2*coin, ..., t - coin. Errors: NonDivisorError.
IntPolynomial factor_poly(std::int64_t t, std::int64_t coin);

// Guard against precomputes that cannot fit: build_scheme refuses schemes
// needing more than max_coefficients slots (a_0..a_M is M+1 slots).
struct SchemeLimits {
    std::int64_t max_coefficients = 10'000'000;
};

// Precomputed (t, v, a_0..a_M) data from which any count is evaluated in
// O(v) big-integer multiplications. Construction asserts a_0 = 1, the
// palindrome a_j = a_{M-j}, and sum a_j = prod(t/t_i).
class DenumerantScheme {
public:
    const CoinSet& coins() const { return coins_; }
    std::int64_t period() const { return period_; }  // t
    int coin_count() const { return coins_.size(); }  // v
    std::int64_t top_index() const {  // M = sum (t - t_i)
        return static_cast<std::int64_t>(coefficients_.size()) - 1;
    }
    std::span<const Count> coefficients() const { return coefficients_; }
    const Count& coefficient(std::int64_t j) const {
        return coefficients_[static_cast<std::size_t>(j)];
    }

private:
    friend DenumerantScheme build_scheme(const CoinSet&, const SchemeLimits&);
    DenumerantScheme(CoinSet coins, std::int64_t period, std::vector<Count> coefficients);

    CoinSet coins_;
    std::int64_t period_;
    std::vector<Count> coefficients_;
};

// Builds the scheme by direct sequential convolution of the v factor
// polynomials. Errors: SchemeTooLargeError when M+1 exceeds the limit.
DenumerantScheme build_scheme(const CoinSet& coins, const SchemeLimits& limits = {});

// Exact binomial coefficient; 0 when top < k.
Count binomial(const Count& top, std::int64_t k);

struct EvalStats {
    std::size_t big_multiplications = 0;
};

// sum over j <= min(M, n), j == n (mod t), of a_j * C((n-j)/t + v-1, v-1).
// Visits only the <= ceil((M+1)/t) <= v admissible j and performs at most
// 3v big-integer multiplications (reported through stats when given): the
// consecutive binomials are obtained from one another by a single
// multiply-and-exact-divide step.
Count eval_scheme(const DenumerantScheme& scheme, const Count& n, EvalStats* stats = nullptr);

// Polynomial in n attached to one residue class mod the period.
// Coefficients ascend by degree with trailing zeros trimmed; an empty
// vector is the zero polynomial (residues no amount can hit).
struct ResiduePolynomial {
    std::int64_t residue;
    std::vector<Rational> coefficients;
};

// Per-residue polynomial view of a scheme: one polynomial of degree
// <= v-1 for each residue mod the period, exact rational coefficients.
class QuasiPolynomialFormula {
public:
    QuasiPolynomialFormula(CoinSet coins, std::int64_t period,
                           std::vector<ResiduePolynomial> residues);

    const CoinSet& coins() const { return coins_; }
    std::int64_t period() const { return period_; }  // B
    std::span<const ResiduePolynomial> residues() const { return residues_; }
    const ResiduePolynomial& residue(std::int64_t rho) const {
        return residues_[static_cast<std::size_t>(rho)];
    }

private:
    CoinSet coins_;
    std::int64_t period_;
    std::vector<ResiduePolynomial> residues_;
};

// Expands the scheme's per-residue sums symbolically. formula_eval of the
// result agrees with eval_scheme at every n >= 0.
QuasiPolynomialFormula scheme_to_formula(const DenumerantScheme& scheme);

// Evaluates the residue-(n mod B) polynomial at n; asserts the result is
// a nonnegative integer.
Count formula_eval(const QuasiPolynomialFormula& formula, const Count& n);

}  // namespace changecount
