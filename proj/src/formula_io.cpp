#include "changecount/formula_io.hpp"

#include <json.hpp>

#include <sstream>

namespace changecount {

namespace {

using nlohmann::json;

std::string rational_str(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw InvalidParamsError("bad rational literal: " + text);
    if (q.get_den() <= 0)
        throw InvalidParamsError("rational denominator must be positive: " + text);
    q.canonicalize();
    return q;
}

std::string latex_rational(const Rational& q) {
    std::ostringstream out;
    if (q < 0)
        out << '-';
    Rational a = abs(q);
    if (is_integral(a))
        out << a.get_num().get_str();
    else
        out << "\\frac{" << a.get_num().get_str() << "}{" << a.get_den().get_str() << "}";
    return out.str();
}

}  // namespace

std::string formula_to_json(const QuasiPolynomialFormula& formula) {
    json residues = json::array();
    for (const auto& r : formula.residues()) {
        json coeffs = json::array();
        if (r.coefficients.empty())
            coeffs.push_back("0");
        for (const Rational& c : r.coefficients)
            coeffs.push_back(rational_str(c));
        residues.push_back({{"residue", r.residue}, {"coefficients", std::move(coeffs)}});
    }
    json doc;
    doc["coins"] = json::array();
    for (std::int64_t coin : formula.coins().coins())
        doc["coins"].push_back(coin);
    doc["period"] = formula.period();
    doc["residues"] = std::move(residues);
    return doc.dump();
}

QuasiPolynomialFormula formula_from_json(const std::string& text) {
    json doc = json::parse(text);
    CoinSet coins = make_coin_set(doc.at("coins").get<std::vector<std::int64_t>>());
    const std::int64_t period = doc.at("period").get<std::int64_t>();
    std::vector<ResiduePolynomial> residues;
    for (const json& entry : doc.at("residues")) {
        ResiduePolynomial r;
        r.residue = entry.at("residue").get<std::int64_t>();
        for (const json& c : entry.at("coefficients"))
            r.coefficients.push_back(parse_rational(c.get<std::string>()));
        residues.push_back(std::move(r));
    }
    return QuasiPolynomialFormula(std::move(coins), period, std::move(residues));
}

std::string formula_to_latex(const QuasiPolynomialFormula& formula) {
    std::ostringstream out;
    out << "% change function for " << to_string(formula.coins()) << ", period "
        << formula.period() << "\n";
    for (const auto& r : formula.residues()) {
        out << "p_{" << r.residue << "}(n) = ";
        if (r.coefficients.empty()) {
            out << "0\n";
            continue;
        }
        bool first = true;
        for (std::size_t d = r.coefficients.size(); d-- > 0;) {
            const Rational& c = r.coefficients[d];
            if (c == 0 && r.coefficients.size() > 1)
                continue;
            if (!first)
                out << (c < 0 ? " - " : " + ");
            else if (c < 0)
                out << "-";
            first = false;
            Rational a = abs(c);
            const bool is_one = (a == 1);
            if (d == 0 || !is_one)
                out << latex_rational(a);
            if (d >= 1) {
                if (!is_one)
                    out << " ";
                out << "n";
                if (d >= 2)
                    out << "^{" << d << "}";
            }
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace changecount
