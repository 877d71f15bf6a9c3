#include "fbvp/expr.hpp"

#include "fbvp/error.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace fbvp::expr {

namespace {

struct FunctionName {
    std::string_view name;
    Function func;
};

constexpr std::array<FunctionName, 11> kFunctions{{
    {"sin", Function::Sin},   {"cos", Function::Cos},   {"tan", Function::Tan},
    {"exp", Function::Exp},   {"log", Function::Log},   {"sqrt", Function::Sqrt},
    {"abs", Function::Abs},   {"sinh", Function::Sinh}, {"cosh", Function::Cosh},
    {"tanh", Function::Tanh}, {"atan", Function::Atan},
}};

std::string_view function_name(Function f) {
    for (const auto& entry : kFunctions) {
        if (entry.func == f) return entry.name;
    }
    return "?";
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

class Parser {
public:
    explicit Parser(Expression& e) : e_(e), src_(e.source_) {}

    void run() {
        skip();
        if (pos_ == src_.size()) {
            throw ParseError("empty expression", 0, "an expression");
        }
        e_.root_ = expr();
        skip();
        if (pos_ != src_.size()) {
            if (src_[pos_] == ')') {
                error("unbalanced ')'", "an operator or end of input");
            }
            error("unexpected token", "an operator or end of input");
        }
    }

private:
    using Kind = Expression::Kind;

    std::int32_t expr() {
        std::int32_t lhs = term();
        for (;;) {
            skip();
            if (accept('+')) {
                lhs = binary(Kind::Add, lhs, term());
            } else if (accept_minus()) {
                lhs = binary(Kind::Sub, lhs, term());
            } else {
                return lhs;
            }
        }
    }

    std::int32_t term() {
        std::int32_t lhs = unary();
        for (;;) {
            skip();
            if (accept('*')) {
                lhs = binary(Kind::Mul, lhs, unary());
            } else if (accept('/')) {
                lhs = binary(Kind::Div, lhs, unary());
            } else {
                return lhs;
            }
        }
    }

    std::int32_t unary() {
        skip();
        const auto begin = pos_;
        if (accept_minus()) {
            const std::int32_t operand = unary();
            return add({Kind::Neg, Function::Sin, 0.0, operand, -1, static_cast<std::uint32_t>(begin),
                        e_.nodes_[static_cast<std::size_t>(operand)].end});
        }
        return power();
    }

    std::int32_t power() {
        const std::int32_t base = primary();
        skip();
        if (accept('^')) {
            return binary(Kind::Pow, base, unary());
        }
        return base;
    }

    std::int32_t primary() {
        skip();
        if (pos_ == src_.size()) {
            error("unexpected end of input", "a number, variable, function or '('");
        }
        const auto begin = static_cast<std::uint32_t>(pos_);
        const char c = src_[pos_];
        if (is_digit(c) || (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
            return number();
        }
        if (c == '(') {
            ++pos_;
            const std::int32_t inner = expr();
            skip();
            if (!accept(')')) {
                error("unbalanced '('", "')'");
            }
            // parentheses do not create nodes; widen the span for diagnostics
            return inner;
        }
        if (is_ident_start(c)) {
            std::size_t end = pos_;
            while (end < src_.size() && is_ident_char(src_[end])) ++end;
            const std::string_view name(src_.data() + pos_, end - pos_);
            const auto name_pos = pos_;
            pos_ = end;
            if (name == "t") return add({Kind::T, Function::Sin, 0.0, -1, -1, begin, span_end()});
            if (name == "y") return add({Kind::Y, Function::Sin, 0.0, -1, -1, begin, span_end()});
            if (name == "pi") return add({Kind::Pi, Function::Sin, 0.0, -1, -1, begin, span_end()});
            for (const auto& f : kFunctions) {
                if (f.name == name) {
                    skip();
                    if (!accept('(')) {
                        error("expected '(' after function name", "'('");
                    }
                    const std::int32_t arg = expr();
                    skip();
                    if (!accept(')')) {
                        error("unbalanced '('", "')'");
                    }
                    return add({Kind::Call, f.func, 0.0, arg, -1, begin, span_end()});
                }
            }
            pos_ = name_pos;
            std::ostringstream os;
            os << "unknown identifier '" << name << "'";
            error(os.str(), "t, y, pi or one of sin cos tan exp log sqrt abs sinh cosh tanh atan");
        }
        if (c == ')') {
            error("unbalanced ')'", "a number, variable, function or '('");
        }
        error("unexpected token", "a number, variable, function or '('");
    }

    std::int32_t number() {
        const auto begin = pos_;
        std::size_t end = pos_;
        while (end < src_.size() && is_digit(src_[end])) ++end;
        if (end < src_.size() && src_[end] == '.') {
            ++end;
            while (end < src_.size() && is_digit(src_[end])) ++end;
        }
        if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
            std::size_t exp_end = end + 1;
            if (exp_end < src_.size() && (src_[exp_end] == '+' || src_[exp_end] == '-')) ++exp_end;
            if (exp_end < src_.size() && is_digit(src_[exp_end])) {
                while (exp_end < src_.size() && is_digit(src_[exp_end])) ++exp_end;
                end = exp_end;
            } else {
                pos_ = exp_end;
                error("malformed exponent", "digits");
            }
        }
        double value = 0.0;
        const auto res = std::from_chars(src_.data() + begin, src_.data() + end, value);
        if (res.ec != std::errc() || res.ptr != src_.data() + end) {
            error("malformed number", "a decimal number");
        }
        pos_ = end;
        if (end < src_.size() && is_ident_start(src_[end])) {
            error("implicit multiplication is not supported", "an operator");
        }
        return add({Kind::Number, Function::Sin, value, -1, -1, static_cast<std::uint32_t>(begin),
                    static_cast<std::uint32_t>(end)});
    }

    std::int32_t binary(Kind kind, std::int32_t lhs, std::int32_t rhs) {
        const auto& l = e_.nodes_[static_cast<std::size_t>(lhs)];
        const auto& r = e_.nodes_[static_cast<std::size_t>(rhs)];
        return add({kind, Function::Sin, 0.0, lhs, rhs, l.begin, r.end});
    }

    std::int32_t add(Expression::Node node) {
        e_.nodes_.push_back(node);
        return static_cast<std::int32_t>(e_.nodes_.size() - 1);
    }

    std::uint32_t span_end() const { return static_cast<std::uint32_t>(pos_); }

    void skip() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    // ASCII '-' or U+2212 MINUS SIGN
    bool accept_minus() {
        if (accept('-')) return true;
        if (src_.compare(pos_, 3, "\xE2\x88\x92") == 0) {
            pos_ += 3;
            return true;
        }
        return false;
    }

    [[noreturn]] void error(const std::string& what, const std::string& expected) const {
        std::ostringstream os;
        os << what << " at offset " << pos_ << " (expected " << expected << ")";
        throw ParseError(os.str(), pos_, expected);
    }

    Expression& e_;
    const std::string& src_;
    std::size_t pos_ = 0;
};

Expression Expression::parse(std::string_view source) {
    Expression e;
    e.source_ = std::string(source);
    Parser(e).run();
    return e;
}

double Expression::evaluate(double t, double y) const { return eval(root_, t, y); }

void Expression::fail(std::int32_t node, const char* what) const {
    const auto& n = nodes_[static_cast<std::size_t>(node)];
    const std::string sub = source_.substr(n.begin, n.end - n.begin);
    throw EvalError(std::string(what) + " in '" + sub + "'", sub);
}

double Expression::eval(std::int32_t index, double t, double y) const {
    const Node& n = nodes_[static_cast<std::size_t>(index)];
    double v = 0.0;
    switch (n.kind) {
        case Kind::Number: return n.value;
        case Kind::T: return t;
        case Kind::Y: return y;
        case Kind::Pi: return std::numbers::pi;
        case Kind::Neg: return -eval(n.lhs, t, y);
        case Kind::Add: v = eval(n.lhs, t, y) + eval(n.rhs, t, y); break;
        case Kind::Sub: v = eval(n.lhs, t, y) - eval(n.rhs, t, y); break;
        case Kind::Mul: v = eval(n.lhs, t, y) * eval(n.rhs, t, y); break;
        case Kind::Div: {
            const double num = eval(n.lhs, t, y);
            const double den = eval(n.rhs, t, y);
            if (den == 0.0) fail(index, "division by zero");
            v = num / den;
            break;
        }
        case Kind::Pow: v = std::pow(eval(n.lhs, t, y), eval(n.rhs, t, y)); break;
        case Kind::Call: {
            const double a = eval(n.lhs, t, y);
            switch (n.func) {
                case Function::Sin: v = std::sin(a); break;
                case Function::Cos: v = std::cos(a); break;
                case Function::Tan: v = std::tan(a); break;
                case Function::Exp: v = std::exp(a); break;
                case Function::Log:
                    if (!(a > 0.0)) fail(index, "logarithm of a non-positive value");
                    v = std::log(a);
                    break;
                case Function::Sqrt:
                    if (a < 0.0) fail(index, "square root of a negative value");
                    v = std::sqrt(a);
                    break;
                case Function::Abs: v = std::abs(a); break;
                case Function::Sinh: v = std::sinh(a); break;
                case Function::Cosh: v = std::cosh(a); break;
                case Function::Tanh: v = std::tanh(a); break;
                case Function::Atan: v = std::atan(a); break;
            }
            break;
        }
    }
    if (!std::isfinite(v)) fail(index, "non-finite result");
    return v;
}

std::string Expression::to_string() const {
    std::string out;
    print(root_, out);
    return out;
}

void Expression::print(std::int32_t index, std::string& out) const {
    const Node& n = nodes_[static_cast<std::size_t>(index)];
    auto binary = [&](const char* op) {
        out += '(';
        print(n.lhs, out);
        out += op;
        print(n.rhs, out);
        out += ')';
    };
    switch (n.kind) {
        case Kind::Number: {
            char buf[32];
            const auto res = std::to_chars(buf, buf + sizeof buf, n.value);
            out.append(buf, res.ptr);
            break;
        }
        case Kind::T: out += 't'; break;
        case Kind::Y: out += 'y'; break;
        case Kind::Pi: out += "pi"; break;
        case Kind::Neg:
            out += "(-";
            print(n.lhs, out);
            out += ')';
            break;
        case Kind::Add: binary(" + "); break;
        case Kind::Sub: binary(" - "); break;
        case Kind::Mul: binary(" * "); break;
        case Kind::Div: binary(" / "); break;
        case Kind::Pow: binary(" ^ "); break;
        case Kind::Call:
            out += function_name(n.func);
            out += '(';
            print(n.lhs, out);
            out += ')';
            break;
    }
}

bool Expression::same(std::int32_t a, const Expression& other, std::int32_t b) const {
    const Node& x = nodes_[static_cast<std::size_t>(a)];
    const Node& z = other.nodes_[static_cast<std::size_t>(b)];
    if (x.kind != z.kind) return false;
    switch (x.kind) {
        case Kind::Number: return x.value == z.value;
        case Kind::T:
        case Kind::Y:
        case Kind::Pi: return true;
        case Kind::Neg: return same(x.lhs, other, z.lhs);
        case Kind::Call: return x.func == z.func && same(x.lhs, other, z.lhs);
        default: return same(x.lhs, other, z.lhs) && same(x.rhs, other, z.rhs);
    }
}

bool operator==(const Expression& a, const Expression& b) {
    if (a.root_ < 0 || b.root_ < 0) return a.root_ == b.root_;
    return a.same(a.root_, b, b.root_);
}

}  // namespace fbvp::expr
