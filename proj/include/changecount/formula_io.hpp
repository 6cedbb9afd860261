#pragma once

#include <string>

#include "changecount/quasipoly.hpp"

namespace changecount {

// {"coins":[...],"period":B,"residues":[{"residue":r,"coefficients":["p/q",...]},...]}
// Coefficients are exact reduced fractions in ascending degree, never
// decimals; the zero polynomial serializes as ["0"].
std::string formula_to_json(const QuasiPolynomialFormula& formula);

// Inverse of formula_to_json; validates shape and re-reduces fractions.
QuasiPolynomialFormula formula_from_json(const std::string& text);

// One p_{rho}(n) = ... line per residue class.
std::string formula_to_latex(const QuasiPolynomialFormula& formula);

}  // namespace changecount
