// Small arithmetic expression grammar used by scenario files:
//   +, -, *, /, ^, sin, cos, exp, log, tanh, named variables, numeric literals.
// Expressions are parsed once into a flat postfix program and evaluated on a
// fixed-size stack, so evaluation is allocation-free and thread-safe.

#ifndef NHG_EXPR_HPP
#define NHG_EXPR_HPP

#include <span>
#include <string>
#include <vector>

namespace nhg {

class Expr {
public:
    /// Value of the expression with `vars[i]` bound to the i-th declared name.
    double eval(std::span<const double> vars) const;

    const std::string& source() const { return source_; }
    bool is_constant() const;

private:
    friend Expr parse_expression(const std::string&, std::span<const std::string>);

    enum class Op : int8_t {
        PushConst,
        PushVar,
        Add,
        Sub,
        Mul,
        Div,
        Pow,
        Neg,
        Sin,
        Cos,
        Exp,
        Log,
        Tanh,
    };
    struct Instr {
        Op op;
        int arg = 0;  // constant pool or variable slot
    };

    std::vector<Instr> program_;
    std::vector<double> constants_;
    std::string source_;
    int stack_need_ = 0;
};

/// Parses `text` with the given variable names bound to slots 0..n-1.
/// Throws ConfigError with a position on malformed input or unknown names.
Expr parse_expression(const std::string& text, std::span<const std::string> var_names);

}  // namespace nhg

#endif
