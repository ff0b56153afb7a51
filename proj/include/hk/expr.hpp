#pragma once

// Expression language for problem files.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' exponent)?
//   atom   := INT ('/' INT)? | VAR | '(' expr ')'
//   exponent := '-'? INT | '(' '-'? INT ')'
//
// VAR is X1..X9, X (same as X1), T, or t. Negative exponents only on t.

#include <string>
#include <vector>

#include "hk/error.hpp"
#include "hk/laurent.hpp"
#include "hk/rational.hpp"
#include "hk/series.hpp"

namespace hk::expr {

/// SyntaxError or UnknownVariable with a 1-based source location.
class ParseError : public MathError {
   public:
    ParseError(ErrorCode code, int line, int column, const std::string& what)
        : MathError(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

   private:
    int line_, column_;
};

struct Expr {
    enum class Kind { Number, Variable, Neg, Add, Sub, Mul, Pow };

    Kind kind = Kind::Number;
    Rational value;          // Number, never negative
    std::string name;        // Variable, canonical spelling
    long exponent = 0;       // Pow
    std::vector<Expr> args;  // operands

    static Expr number(const Rational& q);
    static Expr variable(const std::string& name);
    static Expr neg(Expr a);
    static Expr binary(Kind kind, Expr a, Expr b);
    static Expr pow(Expr base, long exponent);

    friend bool operator==(const Expr& a, const Expr& b);
};

/// Parses one expression; `line` is used for error locations only.
Expr parse(const std::string& text, int line = 1);

/// Prints with the fewest parentheses that parse back to the same tree.
std::string print(const Expr& e);

/// Canonical name for an identifier, or empty if it is not a variable.
std::string canonical_variable(const std::string& ident);

/// Index of X1..X9 (0-based), or -1.
int x_index(const std::string& name);

/// Expands e as a polynomial in `vars` with coefficients in Q((t)).
/// Variables not in `vars` raise UnknownVariable.
MultiSeries<LaurentSeries> to_polynomial(const Expr& e, const std::vector<std::string>& vars);

/// Same, requiring every coefficient to be a rational constant.
MultiSeries<Rational> to_rational_polynomial(const Expr& e, const std::vector<std::string>& vars);

/// An expression free of X's and T as an element of Q((t)).
LaurentSeries to_laurent(const Expr& e);

/// Largest i such that Xi occurs, and whether T occurs.
int max_x_index(const Expr& e);
bool mentions(const Expr& e, const std::string& name);

}  // namespace hk::expr
