#pragma once

// Arithmetic expressions in the grid variable n, used for potentials and
// forcing sequences ("1/sqrt(n)", "1/(n+1)", "2/n - 6/n^2").
//
// Grammar (whitespace is ignored between tokens):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?          right-associative
//   primary := number | 'n' | func '(' expr ')' | '(' expr ')'
//   func    := sqrt | sin | cos | exp | log
//   number  := digits ['.' digits] [('e' | 'E') ['+' | '-'] digits]
//
// Unary minus binds looser than '^', so "-n^2" is -(n^2).

#include "dcalc/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace dcalc {

class PotentialExpr {
public:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    /// Throws SyntaxError carrying the byte offset and the expected tokens.
    static PotentialExpr parse(std::string_view text);

    /// Real evaluation; throws EvalError outside the real domain
    /// (division by zero, sqrt or log of a negative, non-finite result).
    double evaluate(double n) const;
    double operator()(long n) const { return evaluate(static_cast<double>(n)); }

    /// Exact value when the expression only uses + - * / and integer powers;
    /// nullopt otherwise. Throws EvalError on division by zero.
    std::optional<Rational> evaluate_exact(long n) const;

    /// Canonical text with the minimal parentheses; parses back to an equal tree.
    std::string to_string() const;
    const std::string& source() const noexcept { return source_; }

    friend bool operator==(const PotentialExpr& a, const PotentialExpr& b);

private:
    PotentialExpr(NodePtr root, std::string source);

    NodePtr root_;
    std::string source_;
};

}  // namespace dcalc
