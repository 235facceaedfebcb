#pragma once

// Deterministic pretty-printing of operators: terms in descending derivative
// order, then descending r-exponent, with DimPoly coefficients in descending
// degree. The ascii form re-parses to an equal operator.

#include "radialop/dim_poly.hpp"
#include "radialop/radial_operator.hpp"
#include "radialop/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace radialop {

enum class RenderStyle { ascii, latex };

std::string render(const Rational& q, RenderStyle style = RenderStyle::ascii);
std::string render(const DimPoly& p, RenderStyle style = RenderStyle::ascii);
std::string render(const RadialOperator& op, RenderStyle style = RenderStyle::ascii);

// "q*(n-a)*(n-b)..." when the polynomial splits into integer linear factors,
// e.g. (n-1)(n-3)/4 -> "1/4*(n-1)*(n-3)"; nullopt otherwise.
std::optional<std::string> render_factored(const DimPoly& p);

std::ostream& operator<<(std::ostream& os, const DimPoly& p);
std::ostream& operator<<(std::ostream& os, const RadialOperator& op);

}  // namespace radialop
