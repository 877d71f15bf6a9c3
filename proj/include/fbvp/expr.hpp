#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fbvp::expr {

enum class Function : std::uint8_t { Sin, Cos, Tan, Exp, Log, Sqrt, Abs, Sinh, Cosh, Tanh, Atan };

/// Parsed right-hand side f(t, y).
///
/// Grammar (whitespace ignored, no implicit multiplication):
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/') unary)*
///     unary   := '-' unary | power
///     power   := primary ('^' unary)?
///     primary := number | 't' | 'y' | 'pi' | func '(' expr ')' | '(' expr ')'
///
/// '^' is right-associative and binds tighter than unary minus: -t^2 = -(t^2),
/// 2^3^2 = 2^9, 2^-1 = 0.5.
class Expression {
public:
    /// Throws ParseError with the byte offset of the problem.
    static Expression parse(std::string_view source);

    /// Throws EvalError (division by zero, log/sqrt of a negative, non-finite
    /// result) naming the offending subexpression.
    double evaluate(double t, double y) const;

    /// Fully parenthesized form; parses back to a structurally equal tree.
    std::string to_string() const;

    const std::string& source() const noexcept { return source_; }

    /// Structural equality (ignores source positions).
    friend bool operator==(const Expression& a, const Expression& b);

    enum class Kind : std::uint8_t { Number, T, Y, Pi, Neg, Add, Sub, Mul, Div, Pow, Call };

    struct Node {
        Kind kind;
        Function func = Function::Sin;
        double value = 0.0;
        std::int32_t lhs = -1;
        std::int32_t rhs = -1;
        std::uint32_t begin = 0;  // source span, for diagnostics
        std::uint32_t end = 0;
    };

private:
    friend class Parser;

    double eval(std::int32_t node, double t, double y) const;
    void print(std::int32_t node, std::string& out) const;
    bool same(std::int32_t a, const Expression& other, std::int32_t b) const;
    [[noreturn]] void fail(std::int32_t node, const char* what) const;

    std::string source_;
    std::vector<Node> nodes_;
    std::int32_t root_ = -1;
};

}  // namespace fbvp::expr
