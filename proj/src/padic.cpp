#include "starkrankin/padic.hpp"

#include <sstream>

namespace starkrankin {

namespace {

Int ppow(long p, long e) { return int_pow(Int(p), e); }

Int inv_mod(const Int &a, const Int &m)
{
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("p-adic arithmetic: non-invertible residue");
    return r;
}

void check_same(const PadicNumber &a, const PadicNumber &b)
{
    if (a.p != b.p)
        throw std::domain_error("PadicNumber: mixed primes");
}

void check_prime(long p)
{
    if (p < 3 || !is_prime(p))
        throw std::domain_error("PadicNumber: p must be an odd prime");
}

} // namespace

PadicNumber PadicNumber::zero(long p, long abs_prec)
{
    check_prime(p);
    PadicNumber z;
    z.p = p;
    z.val = abs_prec;
    z.rel = 0;
    z.unit = 0;
    return z;
}

PadicNumber PadicNumber::from_approx(long p, long v, const Int &mant, long abs_prec)
{
    check_prime(p);
    long r = abs_prec - v;
    if (r <= 0)
        return zero(p, abs_prec);
    Int pr = ppow(p, r);
    Int m = mant % pr;
    if (m < 0)
        m += pr;
    if (m == 0)
        return zero(p, abs_prec);
    long w = 0;
    while (m % p == 0) {
        m /= p;
        ++w;
    }
    PadicNumber out;
    out.p = p;
    out.val = v + w;
    out.rel = r - w;
    out.unit = m;
    return out;
}

PadicNumber PadicNumber::from_rational(const Rat &x, long p, long abs_prec)
{
    check_prime(p);
    if (x == 0)
        return zero(p, abs_prec);
    Int num = x.get_num(), den = x.get_den();
    long v = 0;
    while (num % p == 0) {
        num /= p;
        ++v;
    }
    while (den % p == 0) {
        den /= p;
        --v;
    }
    long r = abs_prec - v;
    if (r <= 0)
        return zero(p, abs_prec);
    Int pr = ppow(p, r);
    Int m = num % pr;
    if (m < 0)
        m += pr;
    m = m * inv_mod(den % pr + (den % pr < 0 ? pr : Int(0)), pr) % pr;
    return from_approx(p, v, m, abs_prec);
}

PadicNumber PadicNumber::operator+(const PadicNumber &o) const
{
    check_same(*this, o);
    long minN = std::min(abs_prec(), o.abs_prec());
    long v0 = std::min(val, o.val);
    Int s = unit * ppow(p, val - v0) + o.unit * ppow(p, o.val - v0);
    return from_approx(p, v0, s, minN);
}

PadicNumber PadicNumber::operator-() const
{
    if (is_zero())
        return *this;
    PadicNumber out = *this;
    out.unit = ppow(p, rel) - unit;
    return out;
}

PadicNumber PadicNumber::operator-(const PadicNumber &o) const { return *this + (-o); }

PadicNumber PadicNumber::operator*(const PadicNumber &o) const
{
    check_same(*this, o);
    long v = val + o.val;
    long r = std::min(rel, o.rel);
    if (r == 0)
        return zero(p, v);
    PadicNumber out;
    out.p = p;
    out.val = v;
    out.rel = r;
    out.unit = unit * o.unit % ppow(p, r);
    return out;
}

PadicNumber PadicNumber::inverse() const
{
    if (is_zero())
        throw std::domain_error("PadicNumber: inverse of zero");
    PadicNumber out;
    out.p = p;
    out.val = -val;
    out.rel = rel;
    out.unit = inv_mod(unit, ppow(p, rel));
    return out;
}

PadicNumber PadicNumber::operator/(const PadicNumber &o) const
{
    check_same(*this, o);
    if (o.is_zero())
        throw std::domain_error("PadicNumber: division by zero");
    if (is_zero())
        return zero(p, val - o.val);
    long r = std::min(rel, o.rel);
    PadicNumber out;
    out.p = p;
    out.val = val - o.val;
    out.rel = r;
    Int pr = ppow(p, r);
    out.unit = unit % pr * inv_mod(o.unit % pr, pr) % pr;
    return out;
}

PadicNumber PadicNumber::pow(long n) const
{
    if (n < 0)
        return inverse().pow(-n);
    if (is_zero()) {
        if (n == 0)
            throw std::domain_error("PadicNumber: 0^0");
        return zero(p, val * n);
    }
    PadicNumber acc;
    acc.p = p;
    acc.val = 0;
    acc.rel = rel;
    acc.unit = 1;
    PadicNumber base = *this;
    while (n > 0) {
        if (n & 1)
            acc = acc * base;
        n >>= 1;
        if (n)
            base = base * base;
    }
    return acc;
}

PadicNumber PadicNumber::truncated(long N) const
{
    if (N >= abs_prec())
        return *this;
    if (is_zero())
        return zero(p, std::min(N, val));
    if (N <= val)
        return zero(p, N);
    PadicNumber out;
    out.p = p;
    out.val = val;
    out.rel = N - val;
    out.unit = unit % ppow(p, out.rel);
    return out;
}

bool PadicNumber::congruent(const PadicNumber &o) const { return (*this - o).is_zero(); }

std::vector<long> PadicNumber::digit_vector() const
{
    std::vector<long> d;
    Int m = unit;
    for (long i = 0; i < rel; ++i) {
        d.push_back(Int(m % p).get_si());
        m /= p;
    }
    return d;
}

std::string PadicNumber::to_string() const
{
    std::ostringstream os;
    if (is_zero()) {
        os << "O(" << p << "^" << val << ")";
        return os.str();
    }
    auto d = digit_vector();
    bool first = true;
    for (long i = 0; i < rel; ++i) {
        if (d[static_cast<std::size_t>(i)] == 0)
            continue;
        if (!first)
            os << " + ";
        os << d[static_cast<std::size_t>(i)];
        long e = val + i;
        if (e == 1)
            os << "*" << p;
        else if (e != 0)
            os << "*" << p << "^" << e;
        first = false;
    }
    os << " + O(" << p << "^" << abs_prec() << ")";
    return os.str();
}

PadicNumber teichmuller(const PadicNumber &x)
{
    if (x.is_zero())
        throw std::domain_error("teichmuller: zero input");
    Int pr = ppow(x.p, x.rel);
    Int z = x.unit;
    Int pe(x.p);
    for (long i = 0; i <= x.rel; ++i)
        mpz_powm(z.get_mpz_t(), z.get_mpz_t(), pe.get_mpz_t(), pr.get_mpz_t());
    PadicNumber out;
    out.p = x.p;
    out.val = 0;
    out.rel = x.rel;
    out.unit = z;
    return out;
}

PadicNumber padic_log(const PadicNumber &x)
{
    if (x.is_zero())
        throw std::domain_error("padic_log: zero input");
    PadicNumber u;
    u.p = x.p;
    u.val = 0;
    u.rel = x.rel;
    u.unit = x.unit;
    PadicNumber one = PadicNumber::from_approx(x.p, 0, Int(1), x.rel);
    PadicNumber t = u / teichmuller(u) - one;
    long N = x.rel;
    if (t.is_zero())
        return PadicNumber::zero(x.p, N);
    PadicNumber acc = PadicNumber::zero(x.p, N);
    PadicNumber tp = t;
    for (long n = 1; n * t.val <= N + 64; ++n) {
        PadicNumber term = tp / PadicNumber::from_rational(Rat(n), x.p, N + 64);
        acc = (n % 2 == 1) ? acc + term : acc - term;
        tp = tp * t;
    }
    return acc;
}

PadicNumber padic_exp(const PadicNumber &x)
{
    if (x.is_zero())
        return PadicNumber::from_approx(x.p, 0, Int(1), x.val);
    if (x.val < 1)
        throw std::domain_error("padic_exp: argument valuation must be positive");
    long N = x.abs_prec();
    PadicNumber acc = PadicNumber::from_approx(x.p, 0, Int(1), N);
    PadicNumber cur = acc;
    // every term x^n/n! with n > 2N+4 has valuation at least N (v >= 1, p >= 3)
    for (long n = 1; n <= 2 * N + 4; ++n) {
        cur = cur * x / PadicNumber::from_rational(Rat(n), x.p, N + 64);
        if (cur.is_zero())
            break;
        acc = acc + cur;
    }
    return acc;
}

std::pair<PadicNumber, PadicNumber> padic_sqrt(const PadicNumber &x)
{
    if (x.is_zero()) {
        auto z = PadicNumber::zero(x.p, (x.val + 1) / 2);
        return {z, z};
    }
    if (x.val % 2 != 0)
        throw std::domain_error("padic_sqrt: no p-adic square root (odd valuation)");
    long p = x.p;
    long u0 = Int(x.unit % p).get_si();
    if (kronecker_symbol(u0, p) != 1)
        throw std::domain_error("padic_sqrt: no p-adic square root (non-residue unit)");
    long r = x.rel;
    Int s(sqrt_mod_prime(u0, p));
    long k = 1;
    while (k < r) {
        k = std::min(2 * k, r);
        Int pk = ppow(p, k);
        Int uk = x.unit % pk;
        s = (s + uk * inv_mod(s % pk, pk)) % pk * inv_mod(Int(2), pk) % pk;
    }
    if (Int(s % p).get_si() > p / 2)
        s = ppow(p, r) - s;
    PadicNumber root;
    root.p = p;
    root.val = x.val / 2;
    root.rel = r;
    root.unit = s;
    return {root, -root};
}

PadicNumber embed_sqrt_minus_d(const ImagQuadField &K, long p, long abs_prec, bool conjugate)
{
    check_prime(p);
    PrimeSplitting sp = prime_splitting(K, 1, p);
    if (sp.kind != SplitKind::split)
        throw std::domain_error("embed_sqrt_minus_d: p must split in K");
    Int b = sp.prime.b % p;
    if (b < 0)
        b += p;
    if (conjugate)
        b = (p - b) % p;
    if ((b * b + K.D_K) % p != 0)
        throw std::logic_error("embed_sqrt_minus_d: inconsistent splitting data");
    long r = abs_prec;
    Int s = b;
    long k = 1;
    while (k < r) {
        k = std::min(2 * k, r);
        Int pk = ppow(p, k);
        // Newton step for X^2 + D = 0
        Int f = (s * s + K.D_K) % pk;
        s = (s - f * inv_mod(2 * s % pk, pk)) % pk;
        if (s < 0)
            s += pk;
    }
    return PadicNumber::from_approx(p, 0, s, abs_prec);
}

PadicNumber embed_K(const ImagQuadField &K, long p, const QuadRat &g, long abs_prec,
                    bool conjugate)
{
    if (g.D != K.D_K)
        throw std::domain_error("embed_K: element does not live in K");
    PadicNumber root = embed_sqrt_minus_d(K, p, abs_prec + 2, conjugate);
    return (PadicNumber::from_rational(g.x, p, abs_prec) +
            PadicNumber::from_rational(g.y, p, abs_prec) * root)
        .truncated(abs_prec);
}

PadicNumber elliptic_unit_log(const ImagQuadField &K, long p, long abs_prec)
{
    ClassGroup cg(Int(-K.D_K));
    if (cg.h() != 1)
        throw std::domain_error("elliptic_unit_log: only class number one is supported");
    PrimeSplitting sp = prime_splitting(K, 1, p);
    if (sp.kind != SplitKind::split)
        throw std::domain_error("elliptic_unit_log: p must split in K");
    QuadRat gamma = principal_generator(K, 1, sp.prime, 1);
    return padic_log(embed_K(K, p, gamma, abs_prec + 2)).truncated(abs_prec);
}

FormalGroupContext::FormalGroupContext(const WeierstrassModel &curve, long prime,
                                       long t_precision)
    : E(curve), p(prime), tprec(t_precision)
{
    check_prime(p);
    if (E.disc % p == 0)
        throw std::domain_error("FormalGroupContext: p must be a prime of good reduction");
    if (tprec < 5)
        throw std::domain_error("FormalGroupContext: t-precision too small");
    m = count_points(E, p);

    Rat a1(E.a1), a2(E.a2), a3(E.a3), a4(E.a4), a6(E.a6);
    std::size_t T = static_cast<std::size_t>(tprec);
    // w(t) = sum_{n >= 3} A_n t^n solving the dehomogenized curve equation
    // w = t^3 + a1 t w + a2 t^2 w + a3 w^2 + a4 t w^2 + a6 w^3
    std::vector<Rat> w(T + 1), w2(T + 1), w3(T + 1);
    for (std::size_t n = 3; n <= T; ++n) {
        for (std::size_t i = 3; i + 3 <= n; ++i)
            w2[n] += w[i] * w[n - i];
        for (std::size_t i = 6; i + 3 <= n; ++i)
            w3[n] += w2[i] * w[n - i];
        w[n] = (n == 3 ? Rat(1) : Rat(0)) + a1 * w[n - 1] + a2 * w[n - 2] + a3 * w2[n] +
               a4 * w2[n - 1] + a6 * w3[n];
        // keep the product arrays consistent with the newly found coefficient
        // (not needed at this index again, but w2[n] is read at later steps)
    }
    // recompute w2 completely now that w is final (w2[n] above only needed
    // indices < n, which were already final)
    for (std::size_t n = 0; n <= T; ++n) {
        w2[n] = Rat(0);
        for (std::size_t i = 3; i + 3 <= n; ++i)
            w2[n] += w[i] * w[n - i];
    }

    // S(t) = t^3 / w(t): the series with x = S/t^2, y = -S/t^3
    std::vector<Rat> wt(T + 1); // w(t)/t^3
    for (std::size_t n = 0; n <= T; ++n)
        wt[n] = (n + 3 <= T) ? w[n + 3] : Rat(0);
    xser.assign(T + 1, Rat(0));
    xser[0] = Rat(1);
    for (std::size_t n = 1; n <= T; ++n) {
        Rat acc(0);
        for (std::size_t i = 1; i <= n; ++i)
            acc += wt[i] * xser[n - i];
        xser[n] = -acc;
    }

    // invariant differential: omega = (t^3 dx/dt) / (t^3 (2y + a1 x + a3))
    std::vector<Rat> num(T + 1), den(T + 1);
    for (std::size_t n = 0; n <= T; ++n)
        num[n] = Rat(static_cast<long>(n) - 2) * xser[n];
    for (std::size_t n = 0; n <= T; ++n) {
        den[n] = Rat(-2) * xser[n];
        if (n >= 1)
            den[n] += a1 * xser[n - 1];
        if (n == 3)
            den[n] += a3;
    }
    std::vector<Rat> omega(T + 1);
    for (std::size_t n = 0; n <= T; ++n) {
        Rat acc = num[n];
        for (std::size_t i = 1; i <= n; ++i)
            acc -= den[i] * omega[n - i];
        omega[n] = acc / den[0];
    }
    if (omega[0] != 1)
        throw std::logic_error("FormalGroupContext: differential not normalized");

    logf.assign(T + 1, Rat(0));
    for (std::size_t n = 1; n <= T; ++n)
        logf[n] = omega[n - 1] / Rat(static_cast<long>(n));

    // exp_F: functional inverse of log_F, order by order
    expf.assign(T + 1, Rat(0));
    expf[1] = Rat(1);
    auto mul_mod = [](const std::vector<Rat> &A, const std::vector<Rat> &B, std::size_t deg) {
        std::vector<Rat> C(deg + 1);
        for (std::size_t i = 0; i <= deg; ++i) {
            if (A[i] == 0)
                continue;
            for (std::size_t j = 0; i + j <= deg; ++j)
                if (B[j] != 0)
                    C[i + j] += A[i] * B[j];
        }
        return C;
    };
    for (std::size_t n = 2; n <= T; ++n) {
        // coefficient of t^n in sum_{k>=2} logf[k] * expf(t)^k must cancel expf[n]
        std::vector<Rat> P(n + 1);
        for (std::size_t k = n; k >= 2; --k) {
            P[0] += logf[k];
            if (k > 2)
                P = mul_mod(P, expf, n);
        }
        P = mul_mod(P, expf, n);
        P = mul_mod(P, expf, n);
        expf[n] = -P[n];
    }
}

PadicNumber formal_log_series(const FormalGroupContext &ctx, const PadicNumber &t)
{
    if (t.is_zero())
        return PadicNumber::zero(ctx.p, t.val);
    if (t.val < 1)
        throw std::domain_error("formal_log_series: parameter must lie in the formal group");
    long N = t.abs_prec();
    if (ctx.tprec * t.val < N + 10)
        throw std::runtime_error("formal_log_series: t-precision too small for the target");
    PadicNumber acc = PadicNumber::zero(ctx.p, N);
    PadicNumber tp = t;
    for (long n = 1; n <= ctx.tprec && (n - 64) * t.val <= N; ++n) {
        if (ctx.logf[static_cast<std::size_t>(n)] != 0)
            acc = acc +
                  PadicNumber::from_rational(ctx.logf[static_cast<std::size_t>(n)], ctx.p,
                                             N + 64) *
                      tp;
        tp = tp * t;
    }
    return acc;
}

FormalLogResult formal_log(const FormalGroupContext &ctx, const CurvePoint<Rat> &P,
                           long abs_prec)
{
    FormalLogResult out;
    if (P.infinity) {
        out.value = PadicNumber::zero(ctx.p, abs_prec);
        out.torsion = false;
        return out;
    }
    auto C = curve_over_q(ctx.E);
    auto mP = point_mul(C, P, ctx.m);
    if (mP.infinity) {
        out.value = PadicNumber::zero(ctx.p, abs_prec);
        out.torsion = true;
        return out;
    }
    Rat t = -mP.x / mP.y;
    PadicNumber tp = PadicNumber::from_rational(t, ctx.p, abs_prec + 12);
    if (tp.is_zero() || tp.val < 1)
        throw std::logic_error("formal_log: m P does not reduce to the identity");
    out.value = (formal_log_series(ctx, tp) /
                 PadicNumber::from_rational(Rat(ctx.m), ctx.p, abs_prec + 12))
                    .truncated(abs_prec);
    return out;
}

FormalPoint formal_exp(const FormalGroupContext &ctx, const PadicNumber &X)
{
    FormalPoint out;
    if (X.is_zero())
        return out; // the identity of the formal group
    if (X.val < 1)
        throw std::runtime_error("formal_exp: argument outside the convergence region");
    long N = X.abs_prec();
    if (ctx.tprec * X.val < N + 10)
        throw std::runtime_error("formal_exp: t-precision too small for the target");
    PadicNumber t = PadicNumber::zero(ctx.p, N);
    PadicNumber xp = X;
    for (long n = 1; n <= ctx.tprec && (n - 64) * X.val <= N; ++n) {
        if (ctx.expf[static_cast<std::size_t>(n)] != 0)
            t = t +
                PadicNumber::from_rational(ctx.expf[static_cast<std::size_t>(n)], ctx.p,
                                           N + 64) *
                    xp;
        xp = xp * X;
    }
    PadicNumber S = PadicNumber::zero(ctx.p, N);
    PadicNumber tp = PadicNumber::from_approx(ctx.p, 0, Int(1), N);
    for (long n = 0; n <= ctx.tprec && (n - 64) * t.val <= N; ++n) {
        if (ctx.xser[static_cast<std::size_t>(n)] != 0)
            S = S +
                PadicNumber::from_rational(ctx.xser[static_cast<std::size_t>(n)], ctx.p,
                                           N + 64) *
                    tp;
        tp = tp * t;
    }
    out.infinity = false;
    out.t = t;
    out.x = S / (t * t);
    out.y = -(S / (t * t * t));
    return out;
}

std::pair<FormalPoint, FormalPoint> recover_point(const FormalGroupContext &ctx,
                                                  const PadicNumber &integral_value,
                                                  const PadicNumber &log_u,
                                                  const PadicNumber &lambda)
{
    if (lambda.is_zero())
        throw std::domain_error("recover_point: lambda must be nonzero");
    if (log_u.is_zero())
        throw std::domain_error("recover_point: unit logarithm must be nonzero");
    if (integral_value.is_zero())
        return {FormalPoint{}, FormalPoint{}};
    PadicNumber X2 = log_u / lambda * integral_value;
    auto roots = padic_sqrt(X2); // throws "no p-adic square root" on bad input
    if (roots.first.val < 1)
        throw std::runtime_error("recover_point: square root outside the convergence region");
    return {formal_exp(ctx, roots.first), formal_exp(ctx, roots.second)};
}

} // namespace starkrankin
