/*
 * expr   := term (("+"|"-") term)*
 * term   := factor (("*"|"/") factor)*
 * factor := "-" factor | power
 * power  := atom ("^" factor)?
 * atom   := number | "x" | "pi" | "e" | func "(" expr ")" | "(" expr ")"
 * func   := exp | log | sqrt | sin | cos | abs
 *
 * "^" is right-associative and binds tighter than unary minus, so "-x^2"
 * reads as -(x^2), and "2^-3" is accepted because the exponent is a factor.
 */
#include "mtc/expr.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace mtc {

namespace {

constexpr int kMaxParseDepth = 256;

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_ident_char(char c) { return is_alpha(c) || is_digit(c) || c == '_'; }

constexpr const char* kAtomExpected = "a number, 'x', 'pi', 'e', a function name, '(' or '-'";

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int precedence(NodeOp op) {
    switch (op) {
    case NodeOp::Add:
    case NodeOp::Sub:
        return 1;
    case NodeOp::Mul:
    case NodeOp::Div:
        return 2;
    case NodeOp::Neg:
        return 3;
    case NodeOp::Pow:
        return 4;
    default:
        return 5;
    }
}

const char* func_name(NodeOp op) {
    switch (op) {
    case NodeOp::Exp:
        return "exp";
    case NodeOp::Log:
        return "log";
    case NodeOp::Sqrt:
        return "sqrt";
    case NodeOp::Sin:
        return "sin";
    case NodeOp::Cos:
        return "cos";
    case NodeOp::Abs:
        return "abs";
    default:
        return "?";
    }
}

bool is_unary_func(NodeOp op) {
    switch (op) {
    case NodeOp::Exp:
    case NodeOp::Log:
    case NodeOp::Sqrt:
    case NodeOp::Sin:
    case NodeOp::Cos:
    case NodeOp::Abs:
        return true;
    default:
        return false;
    }
}

} // namespace

ParseError::ParseError(Kind kind, std::size_t offset, std::string expected, const std::string& what)
    : std::runtime_error(what), kind_(kind), offset_(offset), expected_(std::move(expected)) {}

class ExprParser {
public:
    explicit ExprParser(std::string_view src) : src_(src) {}

    Expr run() {
        skip_ws();
        if (pos_ == src_.size()) syntax_error("an expression");
        Expr e;
        e.root_ = parse_expr(e, 0);
        skip_ws();
        if (pos_ != src_.size()) syntax_error("an operator or end of input");
        e.stack_need_ = stack_need(e);
        return e;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    [[noreturn]] void syntax_error(const std::string& expected) const {
        throw ParseError(ParseError::Kind::syntax, pos_, expected,
                         "syntax error at offset " + std::to_string(pos_) + ": expected " + expected);
    }

    void skip_ws() {
        while (pos_ < src_.size() &&
               (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' || src_[pos_] == '\r'))
            ++pos_;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void check_depth(int depth) const {
        if (depth > kMaxParseDepth)
            throw ParseError(ParseError::Kind::syntax, pos_, "a flatter expression",
                             "syntax error at offset " + std::to_string(pos_) +
                                 ": expression nested too deeply");
    }

    std::int32_t push(Expr& e, ExprNode node) {
        e.nodes_.push_back(node);
        return static_cast<std::int32_t>(e.nodes_.size() - 1);
    }

    std::int32_t parse_expr(Expr& e, int depth) {
        check_depth(depth);
        std::int32_t lhs = parse_term(e, depth + 1);
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            std::int32_t rhs = parse_term(e, depth + 1);
            lhs = push(e, {c == '+' ? NodeOp::Add : NodeOp::Sub, 0.0, lhs, rhs});
        }
        return lhs;
    }

    std::int32_t parse_term(Expr& e, int depth) {
        check_depth(depth);
        std::int32_t lhs = parse_factor(e, depth + 1);
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '*' && c != '/') break;
            ++pos_;
            std::int32_t rhs = parse_factor(e, depth + 1);
            lhs = push(e, {c == '*' ? NodeOp::Mul : NodeOp::Div, 0.0, lhs, rhs});
        }
        return lhs;
    }

    std::int32_t parse_factor(Expr& e, int depth) {
        check_depth(depth);
        skip_ws();
        if (accept('-')) {
            std::int32_t child = parse_factor(e, depth + 1);
            return push(e, {NodeOp::Neg, 0.0, child, -1});
        }
        return parse_power(e, depth + 1);
    }

    std::int32_t parse_power(Expr& e, int depth) {
        check_depth(depth);
        std::int32_t base = parse_atom(e, depth + 1);
        skip_ws();
        if (accept('^')) {
            std::int32_t exponent = parse_factor(e, depth + 1);
            return push(e, {NodeOp::Pow, 0.0, base, exponent});
        }
        return base;
    }

    std::int32_t parse_atom(Expr& e, int depth) {
        check_depth(depth);
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            std::int32_t inner = parse_expr(e, depth + 1);
            skip_ws();
            if (!accept(')')) syntax_error("')'");
            return inner;
        }
        if (is_digit(c)) return parse_number(e);
        if (is_alpha(c) || c == '_') return parse_identifier(e, depth);
        syntax_error(kAtomExpected);
    }

    std::int32_t parse_number(Expr& e) {
        const std::size_t start = pos_;
        while (is_digit(peek())) ++pos_;
        if (peek() == '.') {
            ++pos_;
            if (!is_digit(peek())) syntax_error("a digit after '.'");
            while (is_digit(peek())) ++pos_;
        }
        if (peek() == 'e' || peek() == 'E') {
            std::size_t mark = pos_;
            ++pos_;
            if (peek() == '+' || peek() == '-') ++pos_;
            if (is_digit(peek())) {
                while (is_digit(peek())) ++pos_;
            } else {
                pos_ = mark; // not an exponent, leave the 'e' for the caller
            }
        }
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
        (void)ptr;
        if (ec == std::errc::result_out_of_range || !std::isfinite(value))
            throw ParseError(ParseError::Kind::syntax, start, "a representable number",
                             "syntax error at offset " + std::to_string(start) +
                                 ": number literal out of range");
        return push(e, {NodeOp::Constant, value, -1, -1});
    }

    std::int32_t parse_identifier(Expr& e, int depth) {
        const std::size_t start = pos_;
        while (is_ident_char(peek())) ++pos_;
        std::string_view name = src_.substr(start, pos_ - start);

        if (name == "x") return push(e, {NodeOp::VarX, 0.0, -1, -1});
        if (name == "pi") return push(e, {NodeOp::ConstPi, 0.0, -1, -1});
        if (name == "e") return push(e, {NodeOp::ConstE, 0.0, -1, -1});

        NodeOp op;
        if (name == "exp")
            op = NodeOp::Exp;
        else if (name == "log")
            op = NodeOp::Log;
        else if (name == "sqrt")
            op = NodeOp::Sqrt;
        else if (name == "sin")
            op = NodeOp::Sin;
        else if (name == "cos")
            op = NodeOp::Cos;
        else if (name == "abs")
            op = NodeOp::Abs;
        else
            throw ParseError(ParseError::Kind::unknown_identifier, start, "",
                             "unknown identifier '" + std::string(name) + "' at offset " +
                                 std::to_string(start));

        skip_ws();
        if (!accept('(')) syntax_error("'(' after function name");
        std::int32_t arg = parse_expr(e, depth + 1);
        skip_ws();
        if (!accept(')')) syntax_error("')'");
        return push(e, {op, 0.0, arg, -1});
    }

    static std::int32_t stack_need(const Expr& e) {
        std::int32_t cur = 0, max = 0;
        for (const ExprNode& n : e.nodes_) {
            if (n.lhs < 0)
                ++cur; // leaf
            else if (n.rhs >= 0)
                --cur; // binary: pop two, push one
            if (cur > max) max = cur;
        }
        return max;
    }
};

Expr Expr::parse(std::string_view source) { return ExprParser(source).run(); }

double Expr::eval_raw(double x) const {
    std::array<double, 64> fixed;
    std::vector<double> heap;
    double* stack = fixed.data();
    if (stack_need_ > static_cast<std::int32_t>(fixed.size())) {
        heap.resize(static_cast<std::size_t>(stack_need_));
        stack = heap.data();
    }

    std::size_t top = 0;
    for (const ExprNode& n : nodes_) {
        double v;
        switch (n.op) {
        case NodeOp::Constant: v = n.value; break;
        case NodeOp::VarX: v = x; break;
        case NodeOp::ConstPi: v = std::numbers::pi; break;
        case NodeOp::ConstE: v = std::numbers::e; break;
        case NodeOp::Neg: v = -stack[--top]; break;
        case NodeOp::Exp: v = std::exp(stack[--top]); break;
        case NodeOp::Log: v = std::log(stack[--top]); break;
        case NodeOp::Sqrt: v = std::sqrt(stack[--top]); break;
        case NodeOp::Sin: v = std::sin(stack[--top]); break;
        case NodeOp::Cos: v = std::cos(stack[--top]); break;
        case NodeOp::Abs: v = std::fabs(stack[--top]); break;
        case NodeOp::Add: {
            const double b = stack[--top], a = stack[--top];
            v = a + b;
            break;
        }
        case NodeOp::Sub: {
            const double b = stack[--top], a = stack[--top];
            v = a - b;
            break;
        }
        case NodeOp::Mul: {
            const double b = stack[--top], a = stack[--top];
            v = a * b;
            break;
        }
        case NodeOp::Div: {
            const double b = stack[--top], a = stack[--top];
            v = a / b;
            break;
        }
        case NodeOp::Pow: {
            const double b = stack[--top], a = stack[--top];
            v = std::pow(a, b);
            break;
        }
        }
        if (!std::isfinite(v)) return std::numeric_limits<double>::quiet_NaN();
        stack[top++] = v;
    }
    return stack[0];
}

std::optional<double> Expr::eval(double x) const {
    const double v = eval_raw(x);
    if (std::isnan(v)) return std::nullopt;
    return v;
}

std::vector<std::optional<double>> Expr::eval_batch(std::span<const double> xs) const {
    std::vector<std::optional<double>> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back(eval(x));
    return out;
}

namespace {

void print_rec(const std::vector<ExprNode>& nodes, std::int32_t idx, std::string& out) {
    const ExprNode& n = nodes[static_cast<std::size_t>(idx)];
    auto child = [&](std::int32_t c, bool parens) {
        if (parens) out += '(';
        print_rec(nodes, c, out);
        if (parens) out += ')';
    };
    switch (n.op) {
    case NodeOp::Constant: out += format_number(n.value); return;
    case NodeOp::VarX: out += 'x'; return;
    case NodeOp::ConstPi: out += "pi"; return;
    case NodeOp::ConstE: out += 'e'; return;
    case NodeOp::Neg:
        out += '-';
        child(n.lhs, precedence(nodes[static_cast<std::size_t>(n.lhs)].op) < 3);
        return;
    case NodeOp::Add:
    case NodeOp::Sub:
    case NodeOp::Mul:
    case NodeOp::Div: {
        const int p = precedence(n.op);
        child(n.lhs, precedence(nodes[static_cast<std::size_t>(n.lhs)].op) < p);
        switch (n.op) {
        case NodeOp::Add: out += '+'; break;
        case NodeOp::Sub: out += '-'; break;
        case NodeOp::Mul: out += '*'; break;
        default: out += '/'; break;
        }
        // same-precedence right operands need parens to survive the
        // left-associative reparse: a-(b-c), a/(b*c)
        child(n.rhs, precedence(nodes[static_cast<std::size_t>(n.rhs)].op) <= p);
        return;
    }
    case NodeOp::Pow:
        child(n.lhs, precedence(nodes[static_cast<std::size_t>(n.lhs)].op) < 5); // base must be an atom
        out += '^';
        child(n.rhs, precedence(nodes[static_cast<std::size_t>(n.rhs)].op) < 3); // exponent is a factor
        return;
    default:
        out += func_name(n.op);
        out += '(';
        print_rec(nodes, n.lhs, out);
        out += ')';
        return;
    }
}

bool equal_rec(const std::vector<ExprNode>& an, std::int32_t ai, const std::vector<ExprNode>& bn,
               std::int32_t bi) {
    if ((ai < 0) != (bi < 0)) return false;
    if (ai < 0) return true;
    const ExprNode& a = an[static_cast<std::size_t>(ai)];
    const ExprNode& b = bn[static_cast<std::size_t>(bi)];
    if (a.op != b.op) return false;
    if (a.op == NodeOp::Constant && a.value != b.value) return false;
    return equal_rec(an, a.lhs, bn, b.lhs) && equal_rec(an, a.rhs, bn, b.rhs);
}

} // namespace

std::string Expr::str() const {
    std::string out;
    print_rec(nodes_, root_, out);
    return out;
}

bool Expr::operator==(const Expr& other) const { return equal_rec(nodes_, root_, other.nodes_, other.root_); }

Interval::Interval(double a_, double b_) : a(a_), b(b_) {
    if (!(std::isfinite(a) && std::isfinite(b) && a < b))
        throw std::invalid_argument("interval requires finite endpoints with a < b, got [" +
                                    format_number(a) + ", " + format_number(b) + "]");
}

FunctionSpec::FunctionSpec(Expr expr, Interval domain)
    : expr_(std::move(expr)), domain_(domain), source_(expr_.str()) {
    for (double endpoint : {domain_.a, domain_.b}) {
        if (std::isnan(expr_.eval_raw(endpoint)))
            throw std::invalid_argument("function '" + source_ + "' is undefined at x = " +
                                        format_number(endpoint));
    }
}

FunctionSpec FunctionSpec::parse(std::string_view source, Interval domain) {
    return FunctionSpec(Expr::parse(source), domain);
}

} // namespace mtc
