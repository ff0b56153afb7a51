#include "hk/expr.hpp"

#include <cctype>

namespace hk::expr {

Expr Expr::number(const Rational& q) {
    if (q.sign() < 0) raise(ErrorCode::InvalidArgument, "number literals are nonnegative");
    Expr e;
    e.kind = Kind::Number;
    e.value = q;
    return e;
}

Expr Expr::variable(const std::string& name) {
    Expr e;
    e.kind = Kind::Variable;
    e.name = name;
    return e;
}

Expr Expr::neg(Expr a) {
    Expr e;
    e.kind = Kind::Neg;
    e.args.push_back(std::move(a));
    return e;
}

Expr Expr::binary(Kind kind, Expr a, Expr b) {
    Expr e;
    e.kind = kind;
    e.args.push_back(std::move(a));
    e.args.push_back(std::move(b));
    return e;
}

Expr Expr::pow(Expr base, long exponent) {
    Expr e;
    e.kind = Kind::Pow;
    e.exponent = exponent;
    e.args.push_back(std::move(base));
    return e;
}

bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.value == b.value && a.name == b.name && a.exponent == b.exponent && a.args == b.args;
}

std::string canonical_variable(const std::string& ident) {
    if (ident == "X") return "X1";
    if (ident == "T" || ident == "t") return ident;
    if (ident.size() == 2 && ident[0] == 'X' && ident[1] >= '1' && ident[1] <= '9') return ident;
    return {};
}

int x_index(const std::string& name) {
    if (name.size() == 2 && name[0] == 'X' && name[1] >= '1' && name[1] <= '9') return name[1] - '1';
    return -1;
}

namespace {

struct Token {
    enum class Kind { Int, Ident, Symbol, End } kind;
    std::string text;
    int column;
};

class Parser {
   public:
    Parser(const std::string& text, int line) : text_(text), line_(line) { lex(); }

    Expr parse_all() {
        Expr e = parse_expr();
        if (peek().kind != Token::Kind::End) fail(peek(), "unexpected '" + peek().text + "'");
        return e;
    }

   private:
    [[noreturn]] void fail(const Token& at, const std::string& what, ErrorCode code = ErrorCode::SyntaxError) const {
        throw ParseError(code, line_, at.column, what);
    }

    void lex() {
        size_t i = 0;
        while (i < text_.size()) {
            const char c = text_[i];
            const int col = static_cast<int>(i) + 1;
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t j = i;
                while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
                tokens_.push_back({Token::Kind::Int, text_.substr(i, j - i), col});
                i = j;
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                size_t j = i;
                while (j < text_.size() && std::isalnum(static_cast<unsigned char>(text_[j]))) ++j;
                tokens_.push_back({Token::Kind::Ident, text_.substr(i, j - i), col});
                i = j;
            } else if (std::string("+-*/^()").find(c) != std::string::npos) {
                tokens_.push_back({Token::Kind::Symbol, std::string(1, c), col});
                ++i;
            } else {
                throw ParseError(ErrorCode::SyntaxError, line_, col, std::string("unexpected character '") + c + "'");
            }
        }
        tokens_.push_back({Token::Kind::End, "end of input", static_cast<int>(text_.size()) + 1});
    }

    const Token& peek() const { return tokens_[pos_]; }
    bool at_symbol(char c) const { return peek().kind == Token::Kind::Symbol && peek().text[0] == c; }
    Token take() { return tokens_[pos_++]; }

    Expr parse_expr() {
        Expr e = parse_term();
        while (at_symbol('+') || at_symbol('-')) {
            const auto kind = take().text == "+" ? Expr::Kind::Add : Expr::Kind::Sub;
            e = Expr::binary(kind, std::move(e), parse_term());
        }
        return e;
    }

    Expr parse_term() {
        Expr e = parse_unary();
        while (at_symbol('*')) {
            take();
            e = Expr::binary(Expr::Kind::Mul, std::move(e), parse_unary());
        }
        if (peek().kind == Token::Kind::Int || peek().kind == Token::Kind::Ident || at_symbol('('))
            fail(peek(), "missing operator before '" + peek().text + "'");
        return e;
    }

    Expr parse_unary() {
        if (at_symbol('-')) {
            take();
            return Expr::neg(parse_unary());
        }
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_atom();
        if (!at_symbol('^')) return base;
        const Token caret = take();
        bool paren = false;
        if (at_symbol('(')) {
            take();
            paren = true;
        }
        bool negative = false;
        if (at_symbol('-')) {
            take();
            negative = true;
        }
        if (peek().kind != Token::Kind::Int) fail(peek(), "expected an integer exponent");
        const Token digits = take();
        if (digits.text.size() > 9) fail(digits, "exponent too large");
        long k = std::stol(digits.text);
        if (negative) k = -k;
        if (paren) {
            if (!at_symbol(')')) fail(peek(), "expected ')'");
            take();
        }
        if (k < 0 && !(base.kind == Expr::Kind::Variable && base.name == "t"))
            fail(caret, "negative exponents are only allowed on t");
        if (at_symbol('^')) fail(peek(), "chained powers need parentheses");
        return Expr::pow(std::move(base), k);
    }

    Expr parse_atom() {
        const Token tok = peek();
        if (tok.kind == Token::Kind::Int) {
            take();
            mpz_class num(tok.text);
            if (at_symbol('/')) {
                take();
                if (peek().kind != Token::Kind::Int) fail(peek(), "'/' must be followed by an integer");
                const Token den = take();
                mpz_class d(den.text);
                if (d == 0) fail(den, "zero denominator");
                return Expr::number(Rational(mpq_class(num, d)));
            }
            return Expr::number(Rational(num));
        }
        if (tok.kind == Token::Kind::Ident) {
            take();
            const std::string name = canonical_variable(tok.text);
            if (name.empty()) fail(tok, "unknown variable '" + tok.text + "'", ErrorCode::UnknownVariable);
            return Expr::variable(name);
        }
        if (at_symbol('(')) {
            take();
            Expr e = parse_expr();
            if (!at_symbol(')')) fail(peek(), "expected ')'");
            take();
            return e;
        }
        if (tok.kind == Token::Kind::End) fail(tok, "unexpected end of input");
        fail(tok, "unexpected '" + tok.text + "'");
    }

    const std::string& text_;
    int line_;
    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

int precedence(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub:
            return 1;
        case Expr::Kind::Mul:
            return 2;
        case Expr::Kind::Neg:
            return 3;
        case Expr::Kind::Pow:
            return 4;
        case Expr::Kind::Number:
            return e.value.is_integer() ? 5 : 4;
        case Expr::Kind::Variable:
            return 5;
    }
    return 0;
}

std::string print_at(const Expr& e, int min_prec) {
    std::string s;
    switch (e.kind) {
        case Expr::Kind::Number:
            s = e.value.to_string();
            break;
        case Expr::Kind::Variable:
            s = e.name;
            break;
        case Expr::Kind::Neg:
            s = "-" + print_at(e.args[0], 3);
            break;
        case Expr::Kind::Add:
        case Expr::Kind::Sub:
            s = print_at(e.args[0], 1) + (e.kind == Expr::Kind::Add ? " + " : " - ") + print_at(e.args[1], 2);
            break;
        case Expr::Kind::Mul:
            s = print_at(e.args[0], 2) + "*" + print_at(e.args[1], 3);
            break;
        case Expr::Kind::Pow:
            s = print_at(e.args[0], 5) + "^" + std::to_string(e.exponent);
            break;
    }
    return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

Expr parse(const std::string& text, int line) { return Parser(text, line).parse_all(); }

std::string print(const Expr& e) { return print_at(e, 0); }

MultiSeries<LaurentSeries> to_polynomial(const Expr& e, const std::vector<std::string>& vars) {
    using P = MultiSeries<LaurentSeries>;
    const int n = static_cast<int>(vars.size());
    switch (e.kind) {
        case Expr::Kind::Number:
            return P::constant(n, LaurentSeries(e.value));
        case Expr::Kind::Variable: {
            if (e.name == "t") return P::constant(n, LaurentSeries::monomial(Rational(1), 1));
            for (int i = 0; i < n; ++i)
                if (vars[static_cast<size_t>(i)] == e.name) return P::variable(n, i);
            raise(ErrorCode::UnknownVariable, "variable " + e.name + " is not declared");
        }
        case Expr::Kind::Neg:
            return -to_polynomial(e.args[0], vars);
        case Expr::Kind::Add:
            return to_polynomial(e.args[0], vars) + to_polynomial(e.args[1], vars);
        case Expr::Kind::Sub:
            return to_polynomial(e.args[0], vars) - to_polynomial(e.args[1], vars);
        case Expr::Kind::Mul:
            return to_polynomial(e.args[0], vars) * to_polynomial(e.args[1], vars);
        case Expr::Kind::Pow: {
            if (e.exponent < 0) {
                // only t^-k parses
                return P::constant(n, LaurentSeries::monomial(Rational(1), static_cast<int>(e.exponent)));
            }
            if (e.exponent > 1000) raise(ErrorCode::InvalidArgument, "exponent too large");
            const P base = to_polynomial(e.args[0], vars);
            P out = P::constant(n, LaurentSeries(1));
            for (long k = 0; k < e.exponent; ++k) out *= base;
            return out;
        }
    }
    raise(ErrorCode::InvalidArgument, "malformed expression");
}

MultiSeries<Rational> to_rational_polynomial(const Expr& e, const std::vector<std::string>& vars) {
    return to_polynomial(e, vars).map_coefficients([](const LaurentSeries& c) {
        if (!c.terms().empty() && (c.terms().size() > 1 || c.terms().begin()->first != 0))
            raise(ErrorCode::InvalidArgument, "coefficient " + c.to_string() + " is not a rational constant");
        return c.coefficient(0);
    });
}

LaurentSeries to_laurent(const Expr& e) { return to_polynomial(e, {}).constant_term(); }

int max_x_index(const Expr& e) {
    int best = e.kind == Expr::Kind::Variable ? x_index(e.name) : -1;
    for (const auto& a : e.args) best = std::max(best, max_x_index(a));
    return best;
}

bool mentions(const Expr& e, const std::string& name) {
    if (e.kind == Expr::Kind::Variable && e.name == name) return true;
    for (const auto& a : e.args)
        if (mentions(a, name)) return true;
    return false;
}

}  // namespace hk::expr
