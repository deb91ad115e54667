#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "speccurve/errors.hpp"
#include "speccurve/laurent.hpp"
#include "speccurve/rational.hpp"
#include "speccurve/weyl.hpp"

namespace speccurve {

// Operator expressions over the symbols D (= d/ds), s and L (= lambda).
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' unary) | juxtaposed unary)*
//   unary  := '-' unary | postfix
//   postfix:= primary ('^' '-'? integer)?
//   primary:= rational | 'D' | 's' | 'L' | '(' expr ')'
//
// Rational literals are "a" or "a/b" with no interior spaces. Implicit
// multiplication is allowed for a literal followed by a symbol ("2s") and
// for two symbols separated by whitespace ("s D"); glued symbols ("sD")
// are rejected. '^' binds tighter than unary minus; negative exponents
// are only valid on L.
struct Expr {
    enum class Kind { number, symbol, neg, add, sub, mul, pow };

    Kind kind;
    Rational value;                   // number
    char symbol = 0;                  // 'D', 's', 'L'
    std::shared_ptr<const Expr> lhs;  // neg/pow operand, binary left
    std::shared_ptr<const Expr> rhs;  // binary right
    int exponent = 0;                 // pow
};

using ExprPtr = std::shared_ptr<const Expr>;

namespace parser_detail {

struct Token {
    enum class Kind { number, symbol, plus, minus, star, caret, lparen, rparen, end };
    Kind kind;
    Rational value;
    char symbol = 0;
    std::size_t begin = 0, end = 0;
};

inline std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto push = [&out](Token::Kind k, std::size_t b, std::size_t e) {
        out.push_back({k, Rational(0), 0, b, e});
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t b = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j < text.size() && text[j] == '/') {
                std::size_t k = j + 1;
                if (k >= text.size() || !std::isdigit(static_cast<unsigned char>(text[k])))
                    throw ParseError("expected digits after '/' in rational literal", j + 1);
                while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
                j = k;
            }
            Rational v;
            try {
                v = rat_from_string(text.substr(i, j - i));
            } catch (const ValidationError& err) {
                throw ParseError(err.what(), b);
            }
            out.push_back({Token::Kind::number, std::move(v), 0, b, j});
            i = j;
            continue;
        }
        switch (c) {
            case 'D':
            case 's':
            case 'L': {
                Token t{Token::Kind::symbol, Rational(0), c, b, b + 1};
                out.push_back(t);
                ++i;
                break;
            }
            case '+': push(Token::Kind::plus, b, b + 1); ++i; break;
            case '-': push(Token::Kind::minus, b, b + 1); ++i; break;
            case '*': push(Token::Kind::star, b, b + 1); ++i; break;
            case '^': push(Token::Kind::caret, b, b + 1); ++i; break;
            case '(': push(Token::Kind::lparen, b, b + 1); ++i; break;
            case ')': push(Token::Kind::rparen, b, b + 1); ++i; break;
            case '/': throw ParseError("'/' is only valid inside a rational literal", b);
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", b);
        }
    }
    push(Token::Kind::end, text.size(), text.size());
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    ExprPtr parse() {
        ExprPtr e = parse_expr();
        expect(Token::Kind::end, "unexpected trailing input");
        return e;
    }

private:
    static ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

    const Token& peek() const { return toks_[pos_]; }
    const Token& prev() const { return toks_[pos_ - 1]; }
    Token take() { return toks_[pos_++]; }

    void expect(Token::Kind k, const char* msg) {
        if (peek().kind != k) throw ParseError(msg, peek().begin);
        ++pos_;
    }

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        while (peek().kind == Token::Kind::plus || peek().kind == Token::Kind::minus) {
            const bool add = take().kind == Token::Kind::plus;
            ExprPtr rhs = parse_term();
            Expr e;
            e.kind = add ? Expr::Kind::add : Expr::Kind::sub;
            e.lhs = lhs;
            e.rhs = rhs;
            lhs = make(std::move(e));
        }
        return lhs;
    }

    static bool starts_factor(Token::Kind k) {
        return k == Token::Kind::number || k == Token::Kind::symbol || k == Token::Kind::lparen;
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_unary();
        while (true) {
            if (peek().kind == Token::Kind::star) {
                take();
                lhs = mul(lhs, parse_unary());
                continue;
            }
            if (!starts_factor(peek().kind)) break;
            // Implicit multiplication: literal-then-symbol at any spacing,
            // or symbol-then-symbol with whitespace between.
            const Token& before = prev();
            const Token& next = peek();
            const bool lit_sym =
                before.kind == Token::Kind::number && next.kind == Token::Kind::symbol;
            const bool sym_sym = before.kind == Token::Kind::symbol &&
                                 next.kind == Token::Kind::symbol && next.begin > before.end;
            if (before.kind == Token::Kind::symbol && next.kind == Token::Kind::symbol &&
                next.begin == before.end)
                throw ParseError("adjacent symbols need '*' or whitespace", next.begin);
            if (!lit_sym && !sym_sym)
                throw ParseError("missing '*' between factors", next.begin);
            lhs = mul(lhs, parse_unary());
        }
        return lhs;
    }

    static ExprPtr mul(ExprPtr l, ExprPtr r) {
        Expr e;
        e.kind = Expr::Kind::mul;
        e.lhs = std::move(l);
        e.rhs = std::move(r);
        return make(std::move(e));
    }

    ExprPtr parse_unary() {
        if (peek().kind == Token::Kind::minus) {
            take();
            Expr e;
            e.kind = Expr::Kind::neg;
            e.lhs = parse_unary();
            return make(std::move(e));
        }
        return parse_postfix();
    }

    ExprPtr parse_postfix() {
        ExprPtr base = parse_primary();
        if (peek().kind != Token::Kind::caret) return base;
        take();
        int sign = 1;
        if (peek().kind == Token::Kind::minus) {
            take();
            sign = -1;
        }
        if (peek().kind != Token::Kind::number)
            throw ParseError("expected integer exponent after '^'", peek().begin);
        const Token t = take();
        if (!is_integer(t.value)) throw ParseError("exponent must be an integer", t.begin);
        if (t.value > 64) throw ParseError("exponent too large", t.begin);
        const int mag = int(t.value.get_num().get_si());
        if (sign < 0 && !(base->kind == Expr::Kind::symbol && base->symbol == 'L'))
            throw ParseError("negative exponents are only permitted on L", t.begin);
        Expr e;
        e.kind = Expr::Kind::pow;
        e.lhs = std::move(base);
        e.exponent = sign * mag;
        return make(std::move(e));
    }

    ExprPtr parse_primary() {
        const Token t = take();
        switch (t.kind) {
            case Token::Kind::number: {
                Expr e;
                e.kind = Expr::Kind::number;
                e.value = t.value;
                return make(std::move(e));
            }
            case Token::Kind::symbol: {
                Expr e;
                e.kind = Expr::Kind::symbol;
                e.symbol = t.symbol;
                return make(std::move(e));
            }
            case Token::Kind::lparen: {
                ExprPtr inner = parse_expr();
                if (peek().kind != Token::Kind::rparen)
                    throw ParseError("expected ')'", peek().begin);
                take();
                return inner;
            }
            default:
                throw ParseError("expected a literal, symbol or '('", t.begin);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace parser_detail

inline ExprPtr parse_operator(std::string_view text) {
    return parser_detail::Parser(text).parse();
}

inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Expr::Kind::number: return a->value == b->value;
        case Expr::Kind::symbol: return a->symbol == b->symbol;
        case Expr::Kind::neg: return expr_equal(a->lhs, b->lhs);
        case Expr::Kind::pow: return a->exponent == b->exponent && expr_equal(a->lhs, b->lhs);
        default: return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
    }
}

// Grammar-conforming rendering; parsing it back yields an equal AST.
inline std::string print_expr(const ExprPtr& e) {
    auto wrap = [](const std::string& s) { return "(" + s + ")"; };
    switch (e->kind) {
        case Expr::Kind::number:
            return rat_str(e->value);
        case Expr::Kind::symbol:
            return std::string(1, e->symbol);
        case Expr::Kind::neg: {
            std::string inner = print_expr(e->lhs);
            const auto k = e->lhs->kind;
            if (k == Expr::Kind::add || k == Expr::Kind::sub || k == Expr::Kind::mul ||
                k == Expr::Kind::neg || (k == Expr::Kind::number && e->lhs->value < 0))
                inner = wrap(inner);
            return "-" + inner;
        }
        case Expr::Kind::pow: {
            std::string base = print_expr(e->lhs);
            if (e->lhs->kind != Expr::Kind::symbol &&
                !(e->lhs->kind == Expr::Kind::number && e->lhs->value >= 0))
                base = wrap(base);
            return base + "^" + std::to_string(e->exponent);
        }
        case Expr::Kind::mul: {
            std::string l = print_expr(e->lhs);
            if (e->lhs->kind == Expr::Kind::add || e->lhs->kind == Expr::Kind::sub)
                l = wrap(l);
            std::string r = print_expr(e->rhs);
            if (e->rhs->kind == Expr::Kind::add || e->rhs->kind == Expr::Kind::sub ||
                e->rhs->kind == Expr::Kind::mul || e->rhs->kind == Expr::Kind::neg)
                r = wrap(r);
            return l + "*" + r;
        }
        case Expr::Kind::add:
        case Expr::Kind::sub: {
            std::string l = print_expr(e->lhs);
            std::string r = print_expr(e->rhs);
            const auto rk = e->rhs->kind;
            if (rk == Expr::Kind::add || rk == Expr::Kind::sub || rk == Expr::Kind::neg)
                r = wrap(r);
            return l + (e->kind == Expr::Kind::add ? " + " : " - ") + r;
        }
    }
    return "";
}

enum class Carrier { weyl, laurent };

namespace parser_detail {

inline void scan_symbols(const ExprPtr& e, bool& has_ds, bool& has_l) {
    switch (e->kind) {
        case Expr::Kind::symbol:
            if (e->symbol == 'L') has_l = true;
            else has_ds = true;
            return;
        case Expr::Kind::number: return;
        case Expr::Kind::neg:
        case Expr::Kind::pow: scan_symbols(e->lhs, has_ds, has_l); return;
        default:
            scan_symbols(e->lhs, has_ds, has_l);
            scan_symbols(e->rhs, has_ds, has_l);
            return;
    }
}

} // namespace parser_detail

// Carrier implied by the symbols used; scalars default to the Weyl side.
// Mixing L with D or s is a type error.
inline Carrier infer_carrier(const ExprPtr& e) {
    bool has_ds = false, has_l = false;
    parser_detail::scan_symbols(e, has_ds, has_l);
    if (has_ds && has_l)
        throw ValidationError("expression mixes L with D/s; operators live on one carrier");
    return has_l ? Carrier::laurent : Carrier::weyl;
}

inline WeylOp elaborate_weyl(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::number: return WeylOp::constant(e->value);
        case Expr::Kind::symbol:
            if (e->symbol == 'D') return WeylOp::d();
            if (e->symbol == 's') return WeylOp::s();
            throw ValidationError("L is not a Weyl-side symbol");
        case Expr::Kind::neg: return -elaborate_weyl(e->lhs);
        case Expr::Kind::add: return elaborate_weyl(e->lhs) + elaborate_weyl(e->rhs);
        case Expr::Kind::sub: return elaborate_weyl(e->lhs) - elaborate_weyl(e->rhs);
        case Expr::Kind::mul: return elaborate_weyl(e->lhs) * elaborate_weyl(e->rhs);
        case Expr::Kind::pow: return pow(elaborate_weyl(e->lhs), e->exponent);
    }
    throw ValidationError("malformed expression");
}

inline LaurentPoly elaborate_laurent(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::number: return LaurentPoly(e->value);
        case Expr::Kind::symbol:
            if (e->symbol == 'L') return LaurentPoly::monomial(1, 1);
            throw ValidationError("D/s are not Laurent-side symbols");
        case Expr::Kind::neg: return -elaborate_laurent(e->lhs);
        case Expr::Kind::add: return elaborate_laurent(e->lhs) + elaborate_laurent(e->rhs);
        case Expr::Kind::sub: return elaborate_laurent(e->lhs) - elaborate_laurent(e->rhs);
        case Expr::Kind::mul: return elaborate_laurent(e->lhs) * elaborate_laurent(e->rhs);
        case Expr::Kind::pow: return pow(elaborate_laurent(e->lhs), e->exponent);
    }
    throw ValidationError("malformed expression");
}

} // namespace speccurve
