#include "changecount/closedform.hpp"

namespace changecount {

namespace {

void check_amount(const Count& n) {
    if (n < 0)
        throw NegativeAmountError("amount must be >= 0");
}

// floor((a - b) / m) + 1 clamped at 0: the number of i in [0, a] with
// i == b (mod m). Requires a >= 0, 0 <= b < m.
Count class_size(const Count& a, std::int64_t b, std::int64_t m) {
    Count diff = a - b + m;
    Count q;
    mpz_fdiv_q_ui(q.get_mpz_t(), diff.get_mpz_t(), static_cast<unsigned long>(m));
    return q;
}

int sign_pow(const Count& e) {  // (-1)^e
    return mpz_even_p(e.get_mpz_t()) ? 1 : -1;
}

int sign_pow(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

CnDecomposition cn_decompose(const ThreeCoinParams& p, const Count& n) {
    check_amount(n);
    CnDecomposition d;
    d.L = n / p.s;
    d.L0 = static_cast<std::int64_t>(
        mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(p.s)));
    d.j = static_cast<std::int64_t>(
        mpz_fdiv_ui(d.L.get_mpz_t(), static_cast<unsigned long>(p.k)));
    return d;
}

DnDecomposition dn_decompose(const FourCoinParams& p, const Count& n) {
    check_amount(n);
    const std::int64_t rs = p.r * p.s;
    DnDecomposition d;
    d.L = n / rs;
    const std::int64_t rem = static_cast<std::int64_t>(
        mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(rs)));
    d.M = rem / p.s;
    d.L0 = rem % p.s;
    return d;
}

Count c_closed(const ThreeCoinParams& p, const Count& n) {
    const auto [L, L0, j] = cn_decompose(p, n);
    const std::int64_t k = p.k;
    Rational main = make_rational(L * L + (k + 2) * L + 2 * k, Count(2 * k));
    Rational correction = make_rational(Count((k - 2) * j - j * j), Count(2 * k));
    return require_count(main + correction, "c_closed");
}

std::pair<Rational, Rational> c_bounds(const ThreeCoinParams& p, const Count& n) {
    check_amount(n);
    const std::int64_t s = p.s;
    const std::int64_t k = p.k;
    const Count n2 = n * n;
    Rational shared = make_rational(n2, Count(2 * k * s * s));
    Rational lower = shared + make_rational(n, Count(2 * s)) - k;
    Rational upper = shared + make_rational((k + 2) * n, Count(2 * k * s)) +
                     make_rational(Count((k - 2) * (k - 2)), Count(8)) + 1;
    return {lower, upper};
}

Count power_sum_mod(const Count& L, std::int64_t M, std::int64_t r, std::int64_t k,
                    std::int64_t a) {
    if (L < 0 || M < 0 || r < 1 || k < 1 || a < 0)
        throw InvalidParamsError("power_sum_mod requires L,M >= 0, r,k >= 1, a >= 0");
    Count total = 0;
    for (std::int64_t j = 0; j < k; ++j) {
        const std::int64_t residue = (r * j + M) % k;
        Count term;
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(residue),
                      static_cast<unsigned long>(a));
        total += term * class_size(L, j, k);
    }
    return total;
}

Rational delta(std::int64_t k, std::int64_t r, const Count& L, std::int64_t M) {
    if (k < 2 || r < 2 || L < 0 || M < 0)
        throw InvalidParamsError("delta requires k,r >= 2 and L,M >= 0");
    Count total = 0;
    for (std::int64_t j = 0; j < k; ++j) {
        const std::int64_t residue = (r * j + M) % k;
        total += Count((k - 2) * residue - residue * residue) * class_size(L, j, k);
    }
    return make_rational(std::move(total), Count(2 * k));
}

Rational delta_k2(Parity r_parity, const Count& L, std::int64_t M) {
    if (L < 0 || M < 0)
        throw InvalidParamsError("delta_k2 requires L,M >= 0");
    const int m_sign = sign_pow(M + 1);  // (-1)^{M+1}
    if (r_parity == Parity::Even)
        return make_rational(-(1 + m_sign) * (L + 1), Count(8));
    const int l_sign = sign_pow(L);
    return make_rational(-(2 * L + (1 + l_sign) * (1 + m_sign) + (1 - l_sign)), Count(16));
}

Count d_closed(const FourCoinParams& p, const Count& n) {
    const auto [L, M, L0] = dn_decompose(p, n);
    const std::int64_t k = p.k;
    const std::int64_t r = p.r;
    Count poly = 2 * r * r * L * L + (r * r + 6 * M * r + 3 * k * r + 6 * r) * L + 6 * M * M +
                 (6 * k + 12) * M + 12 * k;
    Rational main = make_rational((L + 1) * poly, Count(12 * k));
    return require_count(main + delta(k, r, L, M), "d_closed");
}

Count d_closed_k2(const FourCoinParams& p, const Count& n) {
    if (p.k != 2)
        throw InvalidParamsError("d_closed_k2 requires k = 2");
    const auto [L, M, L0] = dn_decompose(p, n);
    const std::int64_t r = p.r;
    Count poly = 2 * r * r * L * L + (r * r + 6 * M * r + 12 * r) * L + 6 * M * M + 24 * M + 24;
    Rational main = make_rational((L + 1) * poly, Count(24));
    const Parity parity = (r % 2 == 0) ? Parity::Even : Parity::Odd;
    return require_count(main + delta_k2(parity, L, M), "d_closed_k2");
}

Count us_coins_count(const Count& n) {
    check_amount(n);
    const Count L = n / 25;
    const std::int64_t M =
        static_cast<std::int64_t>(mpz_fdiv_ui(n.get_mpz_t(), 25ul)) / 5;
    Count poly = 50 * L * L + (85 + 30 * M) * L + 6 * M * M + 24 * M + 24;
    Rational main = make_rational((L + 1) * poly, Count(24));
    return require_count(main + delta_k2(Parity::Odd, L, M), "us_coins_count");
}

Rational asymptotic_leading(const FourCoinParams& p, const Count& n) {
    check_amount(n);
    Count den = Count(6) * p.k * p.r;
    den *= p.s;
    den *= p.s;
    den *= p.s;
    return make_rational(n * n * n, std::move(den));
}

}  // namespace changecount
