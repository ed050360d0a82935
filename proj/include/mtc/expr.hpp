#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mtc {

enum class NodeOp : std::uint8_t {
    Constant,
    VarX,
    ConstPi,
    ConstE,
    Neg,
    Exp,
    Log,
    Sqrt,
    Sin,
    Cos,
    Abs,
    Add,
    Sub,
    Mul,
    Div,
    Pow,
};

struct ExprNode {
    NodeOp op;
    double value = 0.0;     // Constant payload
    std::int32_t lhs = -1;  // child slots into the node pool
    std::int32_t rhs = -1;
};

/// Thrown by Expr::parse. `offset` is the byte position in the source text;
/// for syntax errors `expected` describes the token set accepted there.
class ParseError : public std::runtime_error {
public:
    enum class Kind { syntax, unknown_identifier };

    ParseError(Kind kind, std::size_t offset, std::string expected, const std::string& what);

    Kind kind() const { return kind_; }
    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    Kind kind_;
    std::size_t offset_;
    std::string expected_;
};

/// Immutable expression tree for real functions of one variable `x`.
///
/// Nodes live in a postorder pool (children before parents, root last), so
/// evaluation is one forward sweep with a value stack, and instances can be
/// shared across threads without synchronization.
class Expr {
public:
    static Expr parse(std::string_view source);

    /// Canonical text form; Expr::parse(str()) rebuilds this exact tree.
    std::string str() const;

    /// std::nullopt when the evaluation leaves the reals: sqrt of a negative,
    /// log of a non-positive, division by zero, non-integer power of a
    /// negative base, or overflow past the finite range.
    std::optional<double> eval(double x) const;

    /// Same contract with NaN as the "undefined" sentinel; the hot path used
    /// by the scan kernels.
    double eval_raw(double x) const;

    std::vector<std::optional<double>> eval_batch(std::span<const double> xs) const;

    bool operator==(const Expr& other) const;

    std::size_t node_count() const { return nodes_.size(); }

private:
    friend class ExprParser;

    std::vector<ExprNode> nodes_;
    std::int32_t root_ = -1;
    std::int32_t stack_need_ = 0;
};

/// Closed bounded interval [a, b] with finite a < b.
struct Interval {
    double a;
    double b;

    Interval(double a_, double b_);

    double width() const { return b - a; }
    double midpoint() const { return a + 0.5 * (b - a); }

    bool operator==(const Interval&) const = default;
};

/// An expression together with the interval it is studied on. Construction
/// rejects functions that are undefined at either endpoint.
class FunctionSpec {
public:
    FunctionSpec(Expr expr, Interval domain);

    static FunctionSpec parse(std::string_view source, Interval domain);

    const Expr& expr() const { return expr_; }
    const Interval& domain() const { return domain_; }
    const std::string& source() const { return source_; }

    /// NaN-sentinel evaluation, same as expr().eval_raw(x).
    double operator()(double x) const { return expr_.eval_raw(x); }

private:
    Expr expr_;
    Interval domain_;
    std::string source_;
};

} // namespace mtc
