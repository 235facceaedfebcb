#include "radialop/render.hpp"

#include <ostream>
#include <vector>

namespace radialop {

namespace {

std::string render_rational(const Rational& q, RenderStyle style) {
    if (style == RenderStyle::ascii)
        return q.str();
    const std::string sign = q.is_negative() ? "-" : "";
    const BigInt num = boost::multiprecision::abs(q.num());
    if (q.den() == 1)
        return sign + num.str();
    return sign + "\\frac{" + num.str() + "}{" + q.den().str() + "}";
}

std::string n_power(int degree, RenderStyle style) {
    if (degree == 1)
        return "n";
    if (style == RenderStyle::ascii)
        return "n^" + std::to_string(degree);
    return "n^{" + std::to_string(degree) + "}";
}

// Body of a polynomial in n, descending degree, compact separators. The
// leading coefficient is printed without an explicit magnitude when it is
// exactly 1; later terms always carry their magnitude.
std::string dim_poly_body(const DimPoly& p, RenderStyle style) {
    std::string out;
    bool leading = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [degree, coeff] = *it;
        const Rational magnitude = abs(coeff);
        if (leading) {
            if (coeff.is_negative())
                out += "-";
            if (degree == 0)
                out += render_rational(magnitude, style);
            else if (magnitude.is_one())
                out += n_power(degree, style);
            else
                out += render_rational(magnitude, style)
                    + (style == RenderStyle::ascii ? "*" : "") + n_power(degree, style);
            leading = false;
            continue;
        }
        out += coeff.is_negative() ? "-" : "+";
        if (style == RenderStyle::latex && magnitude.is_one() && degree > 0)
            out += n_power(degree, style);  // "+n^{2}", not "+1n^{2}"
        else {
            out += render_rational(magnitude, style);
            if (degree > 0)
                out += (style == RenderStyle::ascii ? "*" : "") + n_power(degree, style);
        }
    }
    return out;
}

// A flattened operator term: coeff * r^exponent * d^order.
struct Piece {
    DimPoly coeff;
    int exponent;
    int order;
};

std::string piece_body(const Piece& piece, RenderStyle style) {
    const bool ascii = style == RenderStyle::ascii;
    std::vector<std::string> parts;

    const DimPoly& c = piece.coeff;
    const bool coeff_is_one = c.is_constant() && c.coeff(0).is_one();
    const bool bare = piece.exponent == 0 && piece.order == 0;
    if (!coeff_is_one || bare) {
        if (c.is_constant())
            parts.push_back(render_rational(c.coeff(0), style));
        else if (c.terms().size() == 1) {
            const auto& [degree, q] = *c.terms().begin();
            if (q.is_one())
                parts.push_back(n_power(degree, style));
            else
                parts.push_back(render_rational(q, style)
                                + (ascii ? "*" : "") + n_power(degree, style));
        } else if (ascii) {
            parts.push_back("(" + dim_poly_body(c, style) + ")");
        } else {
            parts.push_back("\\left(" + dim_poly_body(c, style) + "\\right)");
        }
    }

    if (piece.exponent != 0) {
        if (piece.exponent == 1)
            parts.push_back("r");
        else if (ascii)
            parts.push_back("r^" + std::to_string(piece.exponent));
        else
            parts.push_back("r^{" + std::to_string(piece.exponent) + "}");
    }

    if (piece.order != 0) {
        if (ascii)
            parts.push_back(piece.order == 1 ? "d" : "d^" + std::to_string(piece.order));
        else
            parts.push_back(piece.order == 1
                                ? "\\partial_r"
                                : "\\partial_r^{" + std::to_string(piece.order) + "}");
    }

    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += ascii ? "*" : "\\,";
        out += parts[i];
    }
    return out;
}

}  // namespace

std::string render(const Rational& q, RenderStyle style) {
    return render_rational(q, style);
}

std::string render(const DimPoly& p, RenderStyle style) {
    if (p.is_zero())
        return "0";
    return dim_poly_body(p, style);
}

std::string render(const RadialOperator& op, RenderStyle style) {
    if (op.is_zero())
        return "0";

    std::vector<Piece> pieces;
    for (auto kt = op.terms().rbegin(); kt != op.terms().rend(); ++kt)
        for (auto et = kt->second.terms().rbegin(); et != kt->second.terms().rend(); ++et)
            pieces.push_back({et->second, et->first, kt->first});

    std::string out;
    bool first = true;
    for (auto& piece : pieces) {
        const bool negative = piece.coeff.leading_coeff().is_negative();
        if (negative)
            piece.coeff = -piece.coeff;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += piece_body(piece, style);
        first = false;
    }
    return out;
}

std::optional<std::string> render_factored(const DimPoly& p) {
    if (p.is_zero() || p.is_constant())
        return std::nullopt;

    // Dense coefficients, ascending degree.
    std::vector<Rational> coeffs(static_cast<size_t>(p.degree()) + 1, Rational(0));
    for (const auto& [degree, q] : p.terms())
        coeffs[static_cast<size_t>(degree)] = q;

    // Peel off integer linear factors (n - root) by synthetic division.
    std::vector<BigInt> factors;
    for (const BigInt& root : p.roots_over_integers()) {
        while (coeffs.size() > 1) {
            // quotient of sum c_i n^i by (n - root); remainder must be 0.
            std::vector<Rational> quotient(coeffs.size() - 1, Rational(0));
            Rational carry(0);
            for (size_t i = coeffs.size(); i-- > 1;) {
                carry = coeffs[i] + carry * Rational(root);
                quotient[i - 1] = carry;
            }
            const Rational remainder = coeffs[0] + carry * Rational(root);
            if (!remainder.is_zero())
                break;
            factors.push_back(root);
            coeffs = std::move(quotient);
        }
    }
    if (coeffs.size() != 1)
        return std::nullopt;  // an irreducible (over Z-roots) part remains

    std::string out;
    if (!coeffs[0].is_one())
        out = coeffs[0].str() + "*";
    for (const BigInt& root : factors) {
        if (root == 0)
            out += "n*";
        else if (root > 0)
            out += "(n-" + root.str() + ")*";
        else
            out += "(n+" + BigInt(-root).str() + ")*";
    }
    out.pop_back();  // trailing '*'
    return out;
}

std::ostream& operator<<(std::ostream& os, const DimPoly& p) {
    return os << render(p);
}

std::ostream& operator<<(std::ostream& os, const RadialOperator& op) {
    return os << render(op);
}

}  // namespace radialop
