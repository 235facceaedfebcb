#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radialop/derivation.hpp"
#include "radialop/parser.hpp"
#include "radialop/render.hpp"
#include "radialop/rng.hpp"

#include "support/generators.hpp"

#include <string>

using namespace radialop;
using namespace radialop::testgen;

namespace {

RadialOperator eval(const std::string& input) { return lower(parse(input)); }

}  // namespace

TEST_CASE("grammar basics") {
    CHECK(eval("0").is_zero());
    CHECK(eval("1") == RadialOperator::one());
    CHECK(eval("d") == RadialOperator::partial());
    CHECK(eval("d^3") == RadialOperator::partial(3));
    CHECK(eval("r^-1")
          == RadialOperator::multiplication(RadialCoeff::monomial(DimPoly(1), -1)));
    CHECK(eval("n*n")
          == RadialOperator::multiplication(RadialCoeff(DimPoly::monomial(Rational(1), 2))));
    CHECK(eval("n^2") == eval("n*n"));
    CHECK(eval("3/4")
          == RadialOperator::multiplication(RadialCoeff(Rational(3, 4))));
    CHECK(eval("-d") == -RadialOperator::partial());
    CHECK(eval("--d") == RadialOperator::partial());
    CHECK(eval("2^-2") == RadialOperator::multiplication(RadialCoeff(Rational(1, 4))));
    CHECK(eval("(d)^0") == RadialOperator::one());
}

TEST_CASE("precedence: ^ over unary minus over * over +/-") {
    CHECK(eval("-d^2") == -RadialOperator::partial(2));
    CHECK(eval("-2*d") == Rational(-2) * RadialOperator::partial());
    CHECK(eval("1 - 2*d + d^2")
          == RadialOperator::one() - Rational(2) * RadialOperator::partial()
                 + RadialOperator::partial(2));
    // products keep written order: d*r != r*d
    CHECK(eval("d*r") != eval("r*d"));
    CHECK(eval("d*r - r*d") == RadialOperator::one());
}

TEST_CASE("paper expressions lower to the named operators") {
    CHECK(eval("d + (n-1)/2 * r^-1") == build_reduced_momentum());
    CHECK(eval("[d, (n-1)/2 * r^-1]")
          == commutator(RadialOperator::partial(),
                        RadialOperator::multiplication(RadialCoeff::monomial(
                            (DimPoly::variable() - DimPoly(1)) * Rational(1, 2), -1))));
    CHECK(eval("(d + (n-1)/2*r^-1)^2") == build_momentum_squared());
    CHECK(eval("d^2 + (n-1)*r^-1*d") == build_radial_laplacian());
}

TEST_CASE("scalar division binds to atoms and rejects bad divisors") {
    CHECK(eval("(n-1)/2") == eval("1/2*(n-1)"));
    CHECK(eval("(n-1)/2/3") == eval("(n-1)/6"));
    CHECK_THROWS_AS(parse("d/n"), ParseError);
    CHECK_THROWS_AS(parse("d/0"), ParseError);
    CHECK_THROWS_AS(parse("d/(2)"), ParseError);
}

TEST_CASE("parse errors carry positions") {
    try {
        parse("d + * r");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
        const std::string diag = format_parse_error(e, "d + * r");
        CHECK(diag.find("^") != std::string::npos);
        CHECK(diag.find("column 5") != std::string::npos);
    }

    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("q"), ParseError);
    CHECK_THROWS_AS(parse("(d"), ParseError);
    CHECK_THROWS_AS(parse("[d, r"), ParseError);
    CHECK_THROWS_AS(parse("[d r]"), ParseError);
    CHECK_THROWS_AS(parse("d d"), ParseError);
    CHECK_THROWS_AS(parse("d^"), ParseError);
    CHECK_THROWS_AS(parse("d^r"), ParseError);
    CHECK_THROWS_AS(parse("d^-1"), ParseError);    // derivative powers are >= 0
    CHECK_THROWS_AS(parse("(d+r)^-2"), ParseError);
    CHECK_THROWS_AS(parse("n^-1"), ParseError);    // 1/n is outside the coefficient ring
    CHECK_THROWS_AS(parse("(d+r)^9999"), ParseError);  // operator-power cap
    CHECK(eval("(d)^3") == RadialOperator::partial(3)); // parens passthrough keeps d powers
    CHECK_THROWS_AS(parse("0^-1"), ParseError);
}

TEST_CASE("rendering the named operators") {
    CHECK(render(RadialOperator::zero()) == "0");
    CHECK(render(RadialOperator::one()) == "1");
    CHECK(render(build_radial_laplacian()) == "d^2 + (n-1)*r^-1*d");
    CHECK(render(build_reduced_momentum()) == "d + (1/2*n-1/2)*r^-1");
    CHECK(render(build_momentum_squared())
          == "d^2 + (n-1)*r^-1*d + (1/4*n^2-1*n+3/4)*r^-2");
    CHECK(render(compute_discrepancy()) == "-(1/4*n^2-1*n+3/4)*r^-2");
    CHECK(render(substitute_n(build_reduced_momentum(), Rational(3))) == "d + r^-1");
    CHECK(render(substitute_n(build_momentum_squared(), Rational(5)))
          == "d^2 + 4*r^-1*d + 2*r^-2");

    // order: derivative order desc, then r-exponent desc
    const RadialOperator mixed = eval("r^-2 + r^2 + d*r - r*d + 2*n*d^2");
    CHECK(render(mixed) == "2*n*d^2 + r^2 + 1 + r^-2");
}

TEST_CASE("latex rendering carries \\frac coefficients") {
    const std::string latex = render(compute_discrepancy(), RenderStyle::latex);
    CHECK(latex.find("\\frac") != std::string::npos);
    CHECK(latex.find("r^{-2}") != std::string::npos);
    CHECK(render(RadialOperator::partial(2), RenderStyle::latex) == "\\partial_r^{2}");
    CHECK(render(build_radial_laplacian(), RenderStyle::latex)
          == "\\partial_r^{2} + \\left(n-1\\right)\\,r^{-1}\\,\\partial_r");
}

TEST_CASE("factored rendering from integer roots") {
    CHECK(render_factored(correction_coefficient()) == "1/4*(n-1)*(n-3)");
    const DimPoly n = DimPoly::variable();
    CHECK(render_factored((n - DimPoly(1)) * (n - DimPoly(3))) == "(n-1)*(n-3)");
    CHECK(render_factored(n * (n + DimPoly(2))) == "(n+2)*n");  // ascending roots
    CHECK(!render_factored(n * n + DimPoly(1)).has_value());
    CHECK(!render_factored(DimPoly(5)).has_value());
}

TEST_CASE("round trip: parse(render(A)) == A on random operators") {
    Rng rng(0x70ff);
    int nontrivial = 0;
    for (int i = 0; i < 1500; ++i) {
        const RadialOperator a = random_operator(rng);
        const std::string text = render(a);
        CAPTURE(text);
        CHECK(eval(text) == a);
        if (!a.is_zero())
            ++nontrivial;

        // rendering is deterministic
        CHECK(render(a) == text);
    }
    CHECK(nontrivial > 1000);
}
