#ifndef STARKRANKIN_QEXP_HPP
#define STARKRANKIN_QEXP_HPP

#include <optional>
#include <vector>

#include "starkrankin/dirichlet.hpp"

namespace starkrankin {

// Guard rails for truncation bookkeeping: operations that would produce a
// series shorter than the configured minimum fail loudly instead of silently
// losing precision; v_operator caps its output length at the maximum.
long qexp_min_truncation();
void set_qexp_min_truncation(long q);
long qexp_max_truncation();
void set_qexp_max_truncation(long q);

// Truncated series a_0 + a_1 q + ... + a_Q q^Q over an exact coefficient ring.
template <class R> struct QExpansion {
    std::vector<R> coeffs; // size Q + 1
    long weight = 0;
    long level = 1;
    std::optional<DirichletCharacter> character;

    QExpansion() = default;
    explicit QExpansion(long Q, long weight_ = 0, long level_ = 1)
        : coeffs(static_cast<std::size_t>(Q) + 1, R(Rat(0))), weight(weight_), level(level_)
    {
        if (Q < 0)
            throw std::domain_error("QExpansion: negative truncation");
    }

    long truncation() const { return static_cast<long>(coeffs.size()) - 1; }
    const R &operator[](long n) const { return coeffs.at(static_cast<std::size_t>(n)); }
    R &operator[](long n) { return coeffs.at(static_cast<std::size_t>(n)); }

    bool is_zero() const
    {
        for (const auto &a : coeffs)
            if (!(a == R(Rat(0))))
                return false;
        return true;
    }
};

namespace detail {
inline void check_truncation(long q)
{
    if (q < qexp_min_truncation())
        throw std::runtime_error("QExpansion: output truncation " + std::to_string(q) +
                                 " fell below the configured minimum " +
                                 std::to_string(qexp_min_truncation()));
}
} // namespace detail

template <class R> QExpansion<R> operator+(const QExpansion<R> &f, const QExpansion<R> &g)
{
    long q = std::min(f.truncation(), g.truncation());
    detail::check_truncation(q);
    QExpansion<R> r(q, f.weight, lcm_ll(f.level, g.level));
    if (f.weight == g.weight && f.character && g.character)
        r.character = f.character;
    for (long n = 0; n <= q; ++n)
        r[n] = f[n] + g[n];
    return r;
}

template <class R> QExpansion<R> operator-(const QExpansion<R> &f, const QExpansion<R> &g)
{
    long q = std::min(f.truncation(), g.truncation());
    detail::check_truncation(q);
    QExpansion<R> r(q, f.weight, lcm_ll(f.level, g.level));
    if (f.weight == g.weight && f.character && g.character)
        r.character = f.character;
    for (long n = 0; n <= q; ++n)
        r[n] = f[n] - g[n];
    return r;
}

template <class R> QExpansion<R> operator*(const QExpansion<R> &f, const QExpansion<R> &g)
{
    long q = std::min(f.truncation(), g.truncation());
    detail::check_truncation(q);
    QExpansion<R> r(q, f.weight + g.weight, lcm_ll(f.level, g.level));
    for (long n = 0; n <= q; ++n) {
        R acc(Rat(0));
        for (long i = 0; i <= n; ++i)
            acc = acc + f[i] * g[n - i];
        r[n] = acc;
    }
    return r;
}

template <class R> QExpansion<R> scale(const QExpansion<R> &f, const R &c)
{
    QExpansion<R> r = f;
    for (auto &a : r.coeffs)
        a = a * c;
    return r;
}

// d = q d/dq
template <class R> QExpansion<R> serre_d(const QExpansion<R> &f)
{
    QExpansion<R> r = f;
    r.weight = f.weight + 2;
    for (long n = 0; n <= r.truncation(); ++n)
        r[n] = r[n] * R(Rat(n));
    return r;
}

// inverse of d on series supported away from multiples of p (and from 0)
template <class R> QExpansion<R> serre_d_inverse(const QExpansion<R> &f, long p)
{
    QExpansion<R> r = f;
    r.weight = f.weight - 2;
    for (long n = 0; n <= r.truncation(); ++n) {
        if (n % p == 0) {
            if (!(f[n] == R(Rat(0))))
                throw std::domain_error("serre_d_inverse: series is not depleted at " +
                                        std::to_string(n));
            continue;
        }
        r[n] = r[n] * R(make_rat(1, n));
    }
    return r;
}

template <class R> QExpansion<R> u_operator(const QExpansion<R> &f, long p)
{
    long q = f.truncation() / p;
    detail::check_truncation(q);
    QExpansion<R> r(q, f.weight, f.level);
    r.character = f.character;
    for (long n = 0; n <= q; ++n)
        r[n] = f[n * p];
    return r;
}

template <class R> QExpansion<R> v_operator(const QExpansion<R> &f, long p)
{
    long q = std::min(f.truncation() * p, qexp_max_truncation());
    detail::check_truncation(q);
    QExpansion<R> r(q, f.weight, f.level * p);
    r.character = f.character;
    for (long n = 0; n <= f.truncation() && n * p <= q; ++n)
        r[n * p] = f[n];
    return r;
}

// (1 - VU): zero every coefficient with p | n (including n = 0)
template <class R> QExpansion<R> deplete(const QExpansion<R> &f, long p)
{
    QExpansion<R> r = f;
    for (long n = 0; n <= r.truncation(); n += p)
        r[n] = R(Rat(0));
    return r;
}

// g(q) - beta g(q^p); alpha, beta must solve X^2 - a_p X + chi(p) p^{k-1} = 0
template <class R>
QExpansion<R> stabilize(const QExpansion<R> &g, const R &alpha, const R &beta, long p)
{
    if (g.truncation() < p)
        throw std::domain_error("stabilize: truncation smaller than p");
    R ap = g[p];
    if (!(alpha + beta == ap))
        throw std::domain_error("stabilize: alpha + beta differs from the p-th coefficient");
    if (g.character) {
        R cp = R(Rat(0));
        Cyc chival = (*g.character)(p);
        // chi(p) p^{k-1} must be expressible in R; Cyc covers all our rings
        if constexpr (std::is_same_v<R, Cyc>)
            cp = chival * Cyc(rat_pow(Rat(p), g.weight - 1));
        else
            cp = R(chival.to_rational() * rat_pow(Rat(p), g.weight - 1));
        if (!(alpha * beta == cp))
            throw std::domain_error("stabilize: alpha * beta differs from chi(p) p^{k-1}");
    }
    QExpansion<R> r = g;
    for (long n = g.truncation() / p; n >= 1; --n)
        r[n * p] = r[n * p] - beta * g[n];
    return r;
}

// a_n -> a_{n l} + chi(l) l^{k-1} a_{n/l}, using the series' weight/character
inline QExpansion<Cyc> hecke_Tl(const QExpansion<Cyc> &f, long ell)
{
    if (!is_prime(ell))
        throw std::domain_error("hecke_Tl: index must be prime");
    long q = f.truncation() / ell;
    detail::check_truncation(q);
    QExpansion<Cyc> r(q, f.weight, f.level);
    r.character = f.character;
    Cyc chil = f.character ? (*f.character)(ell) : Cyc(1);
    Cyc mult = chil * Cyc(rat_pow(Rat(ell), f.weight - 1));
    for (long n = 0; n <= q; ++n) {
        Cyc v = f[n * ell];
        if (n % ell == 0)
            v = v + mult * f[n / ell];
        r[n] = v.simplified();
    }
    return r;
}

// checks T_ell f = a_ell(f) f through the common truncation (requires a_1 = 1)
inline bool is_hecke_eigenform_at(const QExpansion<Cyc> &f, long ell)
{
    if (!(f[1] == Cyc(1)))
        throw std::domain_error("is_hecke_eigenform_at: series is not normalized");
    QExpansion<Cyc> t = hecke_Tl(f, ell);
    Cyc eig = f[ell];
    for (long n = 0; n <= t.truncation(); ++n)
        if (!(t[n] == (eig * f[n]).simplified()))
            return false;
    return true;
}

// E_{k,chi} at level N (N a multiple of the conductor of chi): constant term
// L(chi,1-k)/2 times the Euler factors at the extra primes, and higher
// coefficients given by the divisor sums of the character induced to level N.
QExpansion<Cyc> eisenstein_series(long k, const DirichletCharacter &chi, long N, long Q);

} // namespace starkrankin

#endif
