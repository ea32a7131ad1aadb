#ifndef STARKRANKIN_EXPR_HPP
#define STARKRANKIN_EXPR_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "starkrankin/cyclotomic.hpp"

namespace starkrankin {

// Thrown when an evaluation hits a pole (division by zero).
struct PoleError : std::runtime_error {
    PoleError() : std::runtime_error("evaluation hit a pole") {}
};

// Immutable symbolic rational expression tree.
class Expr;
using ExprP = std::shared_ptr<const Expr>;

class Expr {
  public:
    enum class Op { Const, Var, Add, Sub, Mul, Div, Neg, Pow };

    static ExprP constant(const Rat &v);
    static ExprP constant(long v) { return constant(Rat(v)); }
    static ExprP variable(const std::string &name);
    static ExprP make(Op op, ExprP a, ExprP b);
    static ExprP power(ExprP a, long n);

    Op op() const { return op_; }
    const Rat &value() const { return value_; }
    const std::string &name() const { return name_; }
    const ExprP &left() const { return a_; }
    const ExprP &right() const { return b_; }
    long exponent() const { return n_; }

    // Evaluate over any field type T constructible from Rat with the usual
    // operators; T must throw PoleError on division by zero via safe_div.
    template <class T> T eval(const std::map<std::string, T> &env) const;

  private:
    Expr() = default;
    Op op_ = Op::Const;
    Rat value_;
    std::string name_;
    ExprP a_, b_;
    long n_ = 0;
};

inline ExprP operator+(ExprP a, ExprP b) { return Expr::make(Expr::Op::Add, std::move(a), std::move(b)); }
inline ExprP operator-(ExprP a, ExprP b) { return Expr::make(Expr::Op::Sub, std::move(a), std::move(b)); }
inline ExprP operator*(ExprP a, ExprP b) { return Expr::make(Expr::Op::Mul, std::move(a), std::move(b)); }
inline ExprP operator/(ExprP a, ExprP b) { return Expr::make(Expr::Op::Div, std::move(a), std::move(b)); }
inline ExprP operator-(ExprP a) { return Expr::make(Expr::Op::Neg, std::move(a), nullptr); }

// Division helpers that signal poles instead of aborting.
inline Rat safe_div(const Rat &a, const Rat &b)
{
    if (b == 0)
        throw PoleError{};
    return a / b;
}

inline Cyc safe_div(const Cyc &a, const Cyc &b)
{
    if (b.is_zero())
        throw PoleError{};
    return a / b;
}

template <class T> T Expr::eval(const std::map<std::string, T> &env) const
{
    switch (op_) {
    case Op::Const:
        return T(value_);
    case Op::Var: {
        auto it = env.find(name_);
        if (it == env.end())
            throw std::domain_error("eval: unbound variable " + name_);
        return it->second;
    }
    case Op::Add:
        return a_->eval(env) + b_->eval(env);
    case Op::Sub:
        return a_->eval(env) - b_->eval(env);
    case Op::Mul:
        return a_->eval(env) * b_->eval(env);
    case Op::Div:
        return safe_div(a_->eval(env), b_->eval(env));
    case Op::Neg:
        return T(Rat(0)) - a_->eval(env);
    case Op::Pow: {
        T base = a_->eval(env);
        long n = n_;
        if (n < 0) {
            base = safe_div(T(Rat(1)), base);
            n = -n;
        }
        T r = T(Rat(1));
        while (n) {
            if (n & 1)
                r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }
    }
    throw std::logic_error("eval: corrupt expression node");
}

// Proves/refutes equality of two rational-function expressions by exact
// evaluation at (degree_bound + 1)^{#vars} deterministic pseudo-random
// rational points (poles are resampled, at most 16 times per point).
bool verify_rational_identity(const ExprP &lhs, const ExprP &rhs,
                              const std::vector<std::string> &vars, long degree_bound,
                              unsigned long seed = 1);

} // namespace starkrankin

#endif
