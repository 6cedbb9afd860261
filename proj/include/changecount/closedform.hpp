#pragma once

#include <utility>

#include "changecount/core.hpp"

// Closed-form change counts for the structured coin sets {1,s,ks} and
// {1,s,ks,rs}. Everything is evaluated in exact rational arithmetic and
// asserted integral at the end; the assertion firing would mean a
// transcription bug, not bad input.

namespace changecount {

// n = s*L + L0 with 0 <= L0 <= s-1; j = L mod k.
struct CnDecomposition {
    Count L;
    std::int64_t L0;
    std::int64_t j;
};

CnDecomposition cn_decompose(const ThreeCoinParams& p, const Count& n);

// n = s*(r*L + M) + L0 with 0 <= M <= r-1, 0 <= L0 <= s-1.
struct DnDecomposition {
    Count L;
    std::int64_t M;
    std::int64_t L0;
};

DnDecomposition dn_decompose(const FourCoinParams& p, const Count& n);

// Change count for {1, s, ks}:
//   (L^2 + (k+2)L + 2k) / 2k  +  ((k-2)j - j^2) / 2k.
// Valid for every n >= 0, including n < s (where it yields 1).
Count c_closed(const ThreeCoinParams& p, const Count& n);

// Exact rational envelope around c_closed:
//   n^2/(2ks^2) + n/(2s) - k  <=  c_n  <=
//   n^2/(2ks^2) + (k+2)n/(2ks) + (k-2)^2/8 + 1.
std::pair<Rational, Rational> c_bounds(const ThreeCoinParams& p, const Count& n);

// sum_{i=0}^{L} ((r*i + M) mod k)^a, folded over the k residue classes of i:
// the class i == j (mod k) contributes ((r*j + M) mod k)^a times its
// floor((L-j+k)/k) members.
Count power_sum_mod(const Count& L, std::int64_t M, std::int64_t r, std::int64_t k,
                    std::int64_t a);

// The periodic correction
//   delta(L,M) = sum_{i=0}^{L} ((k-2)*rho_i - rho_i^2) / 2k,
//   rho_i = (r*i + M) mod k,
// evaluated by the same residue-class fold. Always <= 0.
Rational delta(std::int64_t k, std::int64_t r, const Count& L, std::int64_t M);

enum class Parity { Even, Odd };

// Closed form of delta for k = 2, split on the parity of r:
//   r even: -(1 + (-1)^{M+1}) (L+1) / 8
//   r odd:  -(2L + (1+(-1)^L)(1+(-1)^{M+1}) + (1+(-1)^{L+1})) / 16
Rational delta_k2(Parity r_parity, const Count& L, std::int64_t M);

// Change count for {1, s, ks, rs}: cubic-in-L main term
//   (L+1) (2r^2 L^2 + (r^2+6Mr+3kr+6r) L + 6M^2 + (6k+12)M + 12k) / 12k
// plus delta(L,M). Valid for every n >= 0.
Count d_closed(const FourCoinParams& p, const Count& n);

// k = 2 specialization of d_closed; must agree with it everywhere.
Count d_closed_k2(const FourCoinParams& p, const Count& n);

// Change count for US coins {1,5,10,25} via the specialized formula
//   (L+1) (50 L^2 + (85+30M) L + 6M^2 + 24M + 24) / 24  +  delta_k2(odd).
Count us_coins_count(const Count& n);

// Leading asymptotic term n^3 / (6 k r s^3), exact.
Rational asymptotic_leading(const FourCoinParams& p, const Count& n);

}  // namespace changecount
