#pragma once

// Surface syntax for operator expressions:
//
//   Expr   := Term (('+'|'-') Term)*
//   Term   := Factor ('*' Factor)*
//   Factor := Atom ('^' int)? | '-' Factor
//   Atom   := rational | 'n' | 'r' | 'd' | '(' Expr ')' | '[' Expr ',' Expr ']'
//           | Atom '/' rational
//
// Precedence: '^' > unary '-' > '*' > binary '+'/'-'. Products are
// noncommutative and preserve written order; '[A,B]' is the commutator;
// '/' divides by nonzero rational literals only. Every well-formed tree
// lowers to exactly one canonical RadialOperator.

#include "radialop/radial_operator.hpp"
#include "radialop/rational.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace radialop {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, size_t position)
        : std::runtime_error(message), position_(position) {}

    size_t position() const { return position_; }  // byte offset into the input

private:
    size_t position_;
};

struct OperatorExpr {
    enum class Kind {
        rational,     // value
        symbol_n,
        symbol_r,     // power
        generator_d,  // power (>= 0)
        sum,          // children
        product,      // children, noncommutative left-to-right
        bracket,      // children[0], children[1]: commutator
        negate,       // children[0]
        scalar_div,   // children[0] / value
    };

    Kind kind;
    Rational value;
    int power = 1;
    std::vector<OperatorExpr> children;
};

OperatorExpr parse(std::string_view input);

RadialOperator lower(const OperatorExpr& expr);

// Caret diagnostic for a ParseError against its input line.
std::string format_parse_error(const ParseError& error, std::string_view input);

}  // namespace radialop
