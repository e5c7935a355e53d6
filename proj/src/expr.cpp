#include "nhg/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "nhg/types.hpp"

namespace nhg {

namespace {

constexpr int kMaxStack = 64;

struct Parser {
    const std::string& text;
    std::span<const std::string> vars;
    size_t pos = 0;

    std::vector<Expr::Instr>* program;
    std::vector<double>* constants;

    [[noreturn]] void fail(const std::string& what) const {
        throw ConfigError("expression parse error at position " + std::to_string(pos) + " in \"" +
                          text + "\": " + what);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    void emit(Expr::Op op, int arg = 0) { program->push_back({op, arg}); }

    void emit_const(double v) {
        constants->push_back(v);
        emit(Expr::Op::PushConst, static_cast<int>(constants->size()) - 1);
    }

    // expr := term (('+' | '-') term)*
    void parse_expr() {
        parse_term();
        for (;;) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                parse_term();
                emit(c == '+' ? Expr::Op::Add : Expr::Op::Sub);
            } else {
                return;
            }
        }
    }

    // term := unary (('*' | '/') unary)*
    void parse_term() {
        parse_unary();
        for (;;) {
            char c = peek();
            if (c == '*' || c == '/') {
                ++pos;
                parse_unary();
                emit(c == '*' ? Expr::Op::Mul : Expr::Op::Div);
            } else {
                return;
            }
        }
    }

    // unary := ('-' | '+') unary | power        (so -x^2 parses as -(x^2))
    void parse_unary() {
        char c = peek();
        if (c == '-') {
            ++pos;
            parse_unary();
            emit(Expr::Op::Neg);
        } else if (c == '+') {
            ++pos;
            parse_unary();
        } else {
            parse_power();
        }
    }

    // power := primary ('^' unary)?             (right associative, x^-2 allowed)
    void parse_power() {
        parse_primary();
        if (peek() == '^') {
            ++pos;
            parse_unary();
            emit(Expr::Op::Pow);
        }
    }

    void parse_primary() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of expression");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            parse_expr();
            if (!consume(')')) fail("expected ')'");
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = text.c_str() + pos;
            char* end = nullptr;
            double v = std::strtod(begin, &end);
            if (end == begin) fail("malformed number");
            pos += static_cast<size_t>(end - begin);
            emit_const(v);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            if (consume('(')) {
                parse_expr();
                if (!consume(')')) fail("expected ')' after argument of " + name);
                if (name == "sin")
                    emit(Expr::Op::Sin);
                else if (name == "cos")
                    emit(Expr::Op::Cos);
                else if (name == "exp")
                    emit(Expr::Op::Exp);
                else if (name == "log")
                    emit(Expr::Op::Log);
                else if (name == "tanh")
                    emit(Expr::Op::Tanh);
                else
                    fail("unknown function '" + name + "'");
                return;
            }
            for (size_t i = 0; i < vars.size(); ++i) {
                if (vars[i] == name) {
                    emit(Expr::Op::PushVar, static_cast<int>(i));
                    return;
                }
            }
            fail("unknown variable '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Expr parse_expression(const std::string& text, std::span<const std::string> var_names) {
    Expr e;
    e.source_ = text;
    Parser p{text, var_names, 0, &e.program_, &e.constants_};
    p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");

    // static stack-depth check so eval can use a fixed buffer
    int depth = 0, peak = 0;
    for (const auto& in : e.program_) {
        switch (in.op) {
            case Expr::Op::PushConst:
            case Expr::Op::PushVar:
                ++depth;
                break;
            case Expr::Op::Add:
            case Expr::Op::Sub:
            case Expr::Op::Mul:
            case Expr::Op::Div:
            case Expr::Op::Pow:
                --depth;
                break;
            default:
                break;  // unary ops keep depth
        }
        peak = std::max(peak, depth);
    }
    if (peak > kMaxStack) throw ConfigError("expression too deeply nested: " + text);
    e.stack_need_ = peak;
    return e;
}

bool Expr::is_constant() const {
    for (const auto& in : program_)
        if (in.op == Op::PushVar) return false;
    return true;
}

double Expr::eval(std::span<const double> vars) const {
    double stack[kMaxStack];
    int top = -1;
    for (const auto& in : program_) {
        switch (in.op) {
            case Op::PushConst:
                stack[++top] = constants_[static_cast<size_t>(in.arg)];
                break;
            case Op::PushVar:
                stack[++top] = vars[static_cast<size_t>(in.arg)];
                break;
            case Op::Add:
                stack[top - 1] += stack[top];
                --top;
                break;
            case Op::Sub:
                stack[top - 1] -= stack[top];
                --top;
                break;
            case Op::Mul:
                stack[top - 1] *= stack[top];
                --top;
                break;
            case Op::Div:
                stack[top - 1] /= stack[top];
                --top;
                break;
            case Op::Pow:
                stack[top - 1] = std::pow(stack[top - 1], stack[top]);
                --top;
                break;
            case Op::Neg:
                stack[top] = -stack[top];
                break;
            case Op::Sin:
                stack[top] = std::sin(stack[top]);
                break;
            case Op::Cos:
                stack[top] = std::cos(stack[top]);
                break;
            case Op::Exp:
                stack[top] = std::exp(stack[top]);
                break;
            case Op::Log:
                stack[top] = std::log(stack[top]);
                break;
            case Op::Tanh:
                stack[top] = std::tanh(stack[top]);
                break;
        }
    }
    return stack[0];
}

}  // namespace nhg
