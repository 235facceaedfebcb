#include "radialop/parser.hpp"

#include <cctype>
#include <utility>

namespace radialop {

namespace {

// Operator powers expand into repeated composition at parse time; this caps
// the blowup from inputs like (d+r)^9999.
constexpr long long kMaxOperatorPower = 64;
// r and d exponents become map keys and falling factorials; keep them sane.
constexpr long long kMaxAtomPower = 1000000;

enum class Tok { integer, n, r, d, plus, minus, star, slash, caret, lparen, rparen,
                 lbracket, rbracket, comma, end };

struct Token {
    Tok kind;
    BigInt value;  // for integer tokens
    size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view input) : input_(input) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (true) {
            skip_space();
            const size_t pos = pos_;
            if (pos_ >= input_.size()) {
                tokens.push_back({Tok::end, 0, pos});
                return tokens;
            }
            const char c = input_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string digits;
                while (pos_ < input_.size()
                       && std::isdigit(static_cast<unsigned char>(input_[pos_])))
                    digits += input_[pos_++];
                tokens.push_back({Tok::integer, BigInt(digits), pos});
                continue;
            }
            ++pos_;
            switch (c) {
                case 'n': tokens.push_back({Tok::n, 0, pos}); break;
                case 'r': tokens.push_back({Tok::r, 0, pos}); break;
                case 'd': tokens.push_back({Tok::d, 0, pos}); break;
                case '+': tokens.push_back({Tok::plus, 0, pos}); break;
                case '-': tokens.push_back({Tok::minus, 0, pos}); break;
                case '*': tokens.push_back({Tok::star, 0, pos}); break;
                case '/': tokens.push_back({Tok::slash, 0, pos}); break;
                case '^': tokens.push_back({Tok::caret, 0, pos}); break;
                case '(': tokens.push_back({Tok::lparen, 0, pos}); break;
                case ')': tokens.push_back({Tok::rparen, 0, pos}); break;
                case '[': tokens.push_back({Tok::lbracket, 0, pos}); break;
                case ']': tokens.push_back({Tok::rbracket, 0, pos}); break;
                case ',': tokens.push_back({Tok::comma, 0, pos}); break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", pos);
            }
        }
    }

private:
    void skip_space() {
        while (pos_ < input_.size()
               && std::isspace(static_cast<unsigned char>(input_[pos_])))
            ++pos_;
    }

    std::string_view input_;
    size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    OperatorExpr run() {
        OperatorExpr e = parse_expr();
        expect(Tok::end, "end of input");
        return e;
    }

private:
    const Token& peek() const { return tokens_[index_]; }

    Token advance() { return tokens_[index_++]; }

    bool accept(Tok kind) {
        if (peek().kind != kind)
            return false;
        ++index_;
        return true;
    }

    void expect(Tok kind, const std::string& what) {
        if (!accept(kind))
            throw ParseError("expected " + what, peek().pos);
    }

    OperatorExpr parse_expr() {
        std::vector<OperatorExpr> children;
        children.push_back(parse_term());
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const bool minus = advance().kind == Tok::minus;
            OperatorExpr term = parse_term();
            if (minus) {
                OperatorExpr neg{OperatorExpr::Kind::negate, Rational(0), 1, {}};
                neg.children.push_back(std::move(term));
                term = std::move(neg);
            }
            children.push_back(std::move(term));
        }
        if (children.size() == 1)
            return std::move(children.front());
        return {OperatorExpr::Kind::sum, Rational(0), 1, std::move(children)};
    }

    OperatorExpr parse_term() {
        std::vector<OperatorExpr> children;
        children.push_back(parse_factor());
        while (accept(Tok::star))
            children.push_back(parse_factor());
        if (children.size() == 1)
            return std::move(children.front());
        return {OperatorExpr::Kind::product, Rational(0), 1, std::move(children)};
    }

    OperatorExpr parse_factor() {
        if (accept(Tok::minus)) {
            OperatorExpr neg{OperatorExpr::Kind::negate, Rational(0), 1, {}};
            neg.children.push_back(parse_factor());
            return neg;
        }
        OperatorExpr atom = parse_postfix_atom();
        if (peek().kind == Tok::caret) {
            const size_t caret_pos = advance().pos;
            return apply_power(std::move(atom), parse_power_literal(), caret_pos);
        }
        return atom;
    }

    long long parse_power_literal() {
        int sign = 1;
        if (accept(Tok::minus))
            sign = -1;
        else
            accept(Tok::plus);
        if (peek().kind != Tok::integer)
            throw ParseError("expected integer exponent after '^'", peek().pos);
        const Token tok = advance();
        if (tok.value > kMaxAtomPower)
            throw ParseError("exponent too large", tok.pos);
        return sign * tok.value.convert_to<long long>();
    }

    OperatorExpr apply_power(OperatorExpr base, long long k, size_t pos) {
        switch (base.kind) {
            case OperatorExpr::Kind::symbol_r:
                base.power = static_cast<int>(k);
                return base;
            case OperatorExpr::Kind::rational:
                if (k < 0 && base.value.is_zero())
                    throw ParseError("negative power of zero", pos);
                base.value = base.value.pow(k);
                return base;
            case OperatorExpr::Kind::generator_d:
                if (k < 0)
                    throw ParseError("the derivative cannot carry a negative power", pos);
                base.power = static_cast<int>(k);
                return base;
            default: {
                // General subexpressions (and the symbol n) expand into a
                // product of k copies, composed left to right when lowered.
                if (k < 0)
                    throw ParseError("negative operator power", pos);
                if (k > kMaxOperatorPower)
                    throw ParseError("operator power too large", pos);
                if (k == 0)
                    return {OperatorExpr::Kind::rational, Rational(1), 1, {}};
                if (k == 1)
                    return base;
                OperatorExpr product{OperatorExpr::Kind::product, Rational(0), 1, {}};
                for (long long i = 0; i < k; ++i)
                    product.children.push_back(base);
                return product;
            }
        }
    }

    OperatorExpr parse_postfix_atom() {
        OperatorExpr atom = parse_atom();
        while (peek().kind == Tok::slash) {
            advance();
            if (peek().kind != Tok::integer)
                throw ParseError("'/' divides by rational literals only", peek().pos);
            const Token tok = advance();
            if (tok.value == 0)
                throw ParseError("division by zero", tok.pos);
            OperatorExpr div{OperatorExpr::Kind::scalar_div, Rational(tok.value), 1, {}};
            div.children.push_back(std::move(atom));
            atom = std::move(div);
        }
        return atom;
    }

    OperatorExpr parse_atom() {
        const Token tok = advance();
        switch (tok.kind) {
            case Tok::integer:
                return {OperatorExpr::Kind::rational, Rational(tok.value), 1, {}};
            case Tok::n:
                return {OperatorExpr::Kind::symbol_n, Rational(0), 1, {}};
            case Tok::r:
                return {OperatorExpr::Kind::symbol_r, Rational(0), 1, {}};
            case Tok::d:
                return {OperatorExpr::Kind::generator_d, Rational(0), 1, {}};
            case Tok::lparen: {
                OperatorExpr inner = parse_expr();
                expect(Tok::rparen, "')'");
                return inner;
            }
            case Tok::lbracket: {
                OperatorExpr bracket{OperatorExpr::Kind::bracket, Rational(0), 1, {}};
                bracket.children.push_back(parse_expr());
                expect(Tok::comma, "',' in commutator");
                bracket.children.push_back(parse_expr());
                expect(Tok::rbracket, "']'");
                return bracket;
            }
            default:
                throw ParseError("expected an atom (rational, n, r, d, '(' or '[')", tok.pos);
        }
    }

    std::vector<Token> tokens_;
    size_t index_ = 0;
};

}  // namespace

OperatorExpr parse(std::string_view input) {
    return Parser(Lexer(input).run()).run();
}

RadialOperator lower(const OperatorExpr& expr) {
    using Kind = OperatorExpr::Kind;
    switch (expr.kind) {
        case Kind::rational:
            return RadialOperator::multiplication(RadialCoeff(expr.value));
        case Kind::symbol_n:
            return RadialOperator::multiplication(RadialCoeff(DimPoly::variable()));
        case Kind::symbol_r:
            return RadialOperator::multiplication(
                RadialCoeff::monomial(DimPoly(1), expr.power));
        case Kind::generator_d:
            return RadialOperator::partial(expr.power);
        case Kind::sum: {
            RadialOperator sum;
            for (const auto& child : expr.children)
                sum += lower(child);
            return sum;
        }
        case Kind::product: {
            RadialOperator product = lower(expr.children.front());
            for (size_t i = 1; i < expr.children.size(); ++i)
                product = product * lower(expr.children[i]);
            return product;
        }
        case Kind::bracket:
            return commutator(lower(expr.children[0]), lower(expr.children[1]));
        case Kind::negate:
            return Rational(-1) * lower(expr.children[0]);
        case Kind::scalar_div:
            return (Rational(1) / expr.value) * lower(expr.children[0]);
    }
    throw std::logic_error("lower: unreachable");
}

std::string format_parse_error(const ParseError& error, std::string_view input) {
    std::string out = "parse error at column " + std::to_string(error.position() + 1) + ": "
        + error.what() + "\n  " + std::string(input) + "\n  "
        + std::string(error.position(), ' ') + "^";
    return out;
}

}  // namespace radialop
