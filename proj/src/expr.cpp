#include "starkrankin/expr.hpp"

#include <random>
#include <set>

namespace starkrankin {

ExprP Expr::constant(const Rat &v)
{
    auto e = std::shared_ptr<Expr>(new Expr());
    e->op_ = Op::Const;
    e->value_ = v;
    return e;
}

ExprP Expr::variable(const std::string &name)
{
    auto e = std::shared_ptr<Expr>(new Expr());
    e->op_ = Op::Var;
    e->name_ = name;
    return e;
}

ExprP Expr::make(Op op, ExprP a, ExprP b)
{
    auto e = std::shared_ptr<Expr>(new Expr());
    e->op_ = op;
    e->a_ = std::move(a);
    e->b_ = std::move(b);
    return e;
}

ExprP Expr::power(ExprP a, long n)
{
    auto e = std::shared_ptr<Expr>(new Expr());
    e->op_ = Op::Pow;
    e->a_ = std::move(a);
    e->n_ = n;
    return e;
}

bool verify_rational_identity(const ExprP &lhs, const ExprP &rhs,
                              const std::vector<std::string> &vars, long degree_bound,
                              unsigned long seed)
{
    if (degree_bound < 0)
        throw std::domain_error("verify_rational_identity: negative degree bound");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num_dist(-1000000, 1000000);
    std::uniform_int_distribution<long> den_dist(1, 997);

    unsigned long points = 1;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        points *= static_cast<unsigned long>(degree_bound + 1);
        if (points > 2000000)
            throw std::domain_error("verify_rational_identity: sample count too large");
    }

    std::set<std::string> seen;
    auto draw_point = [&](std::map<std::string, Rat> &env) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            std::string key;
            env.clear();
            for (const std::string &v : vars) {
                Rat x = make_rat(num_dist(rng), den_dist(rng));
                env[v] = x;
                key += x.get_str() + ";";
            }
            if (seen.insert(key).second)
                return;
        }
        throw std::runtime_error("verify_rational_identity: could not draw a fresh sample point");
    };

    for (unsigned long i = 0; i < points; ++i) {
        std::map<std::string, Rat> env;
        bool evaluated = false;
        Rat l, r;
        for (int retry = 0; retry < 16 && !evaluated; ++retry) {
            draw_point(env);
            try {
                l = lhs->eval<Rat>(env);
                r = rhs->eval<Rat>(env);
                evaluated = true;
            } catch (const PoleError &) {
                // resample
            }
        }
        if (!evaluated)
            throw std::runtime_error("verify_rational_identity: resampling exhausted (16 pole hits)");
        if (l != r)
            return false;
    }
    return true;
}

} // namespace starkrankin
