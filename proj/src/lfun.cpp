#include "starkrankin/lfun.hpp"

#include <cmath>

#include "starkrankin/dirichlet.hpp"

namespace starkrankin {

namespace {

// exact Gauss sum of the quadratic character mod m as a cyclotomic element
Cyc exact_quadratic_gauss_sum(long disc)
{
    auto chi = DirichletCharacter::kronecker(disc);
    long m = chi.modulus();
    Cyc acc(0);
    for (long a = 1; a < m; ++a) {
        Cyc v = chi(a);
        if (v.is_zero())
            continue;
        acc = acc + v * Cyc::zeta(m, a % m);
    }
    return acc;
}

Cyc sqrt_of_prime(long p)
{
    if (p == 2)
        return Cyc::zeta(8) + Cyc::zeta(8, 7); // 2 cos(pi/4) * sqrt(2)/... = sqrt(2)
    if (p % 4 == 1)
        return exact_quadratic_gauss_sum(p); // real Gauss sum equals sqrt(p)
    // p = 3 (mod 4): the Gauss sum of the odd character mod p is i sqrt(p)
    return exact_quadratic_gauss_sum(-p) * Cyc::zeta(4, 3);
}

} // namespace

Cyc cyclotomic_sqrt(const Rat &r)
{
    if (r == 0)
        return Cyc(0);
    Rat a = r;
    Cyc unit(1);
    if (a < 0) {
        unit = Cyc::zeta(4);
        a = -a;
    }
    Int n = a.get_num() * a.get_den();
    if (!n.fits_slong_p())
        throw std::domain_error("cyclotomic_sqrt: operand too large");
    Int square_part = 1;
    Cyc irr(1);
    for (auto [p, e] : factorize(n.get_si())) {
        square_part *= int_pow(Int(p), e / 2);
        if (e % 2)
            irr = irr * sqrt_of_prime(p);
    }
    Rat rational_part = make_rat(square_part, a.get_den());
    return (Cyc(rational_part) * irr * unit).simplified();
}

void LocalFactor::absorb_root(const Cyc &r)
{
    if (r.is_zero())
        return;
    std::vector<Cyc> out(coeffs.size() + 1, Cyc(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        out[i] = out[i] + coeffs[i];
        out[i + 1] = out[i + 1] - r * coeffs[i];
    }
    for (auto &c : out)
        c = c.simplified();
    coeffs = std::move(out);
}

Cyc LocalFactor::eval(const Rat &x) const
{
    Cyc acc(0);
    for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = acc * Cyc(x) + coeffs[i];
    return acc.simplified();
}

std::vector<Cyc> LocalFactor::inverse_coefficients(long jmax) const
{
    // 1 / (1 + c_1 X + ...) = sum b_j X^j with b_0 = 1
    std::vector<Cyc> b(static_cast<std::size_t>(jmax) + 1, Cyc(0));
    b[0] = Cyc(1);
    for (long j = 1; j <= jmax; ++j) {
        Cyc acc(0);
        for (long i = 1; i <= std::min<long>(j, degree()); ++i)
            acc = acc - coeffs[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j - i)];
        b[static_cast<std::size_t>(j)] = acc.simplified();
    }
    return b;
}

HeckeRoots hecke_roots(const Cyc &a_q, const Cyc &chi_q, long q, long k, bool bad_prime)
{
    HeckeRoots r;
    r.q = q;
    r.weight = k;
    r.bad = bad_prime || chi_q.is_zero();
    long bits = BigFloat::default_precision;
    if (r.bad) {
        r.exact = true;
        r.alpha = a_q;
        r.beta = Cyc(0);
        r.alpha_c = r.alpha.to_complex(bits);
        r.beta_c = BigComplex(bits);
        return r;
    }
    Cyc b = (chi_q * Cyc(rat_pow(Rat(q), k - 1))).simplified();
    Cyc disc = (a_q * a_q - Cyc(4) * b).simplified();
    if (disc.is_zero()) {
        r.exact = true;
        r.alpha = r.beta = (a_q * Cyc(make_rat(1, 2))).simplified();
        r.alpha_c = r.beta_c = r.alpha.to_complex(bits);
        return r;
    }
    Cyc half(make_rat(1, 2));
    if (disc.is_rational()) {
        r.exact = true;
        Cyc sd = cyclotomic_sqrt(disc.to_rational());
        r.alpha = ((a_q + sd) * half).simplified();
        r.beta = ((a_q - sd) * half).simplified();
    } else {
        r.exact = false;
        BigComplex ac = a_q.to_complex(bits), dc = disc.to_complex(bits);
        // complex square root via polar form
        double th = dc.arg() / 2.0;
        BigFloat mod = dc.abs().sqrt();
        BigComplex sd(mod * BigFloat::from_double(std::cos(th)),
                      mod * BigFloat::from_double(std::sin(th)));
        BigComplex two = BigComplex::from_rat(Rat(2));
        r.alpha_c = (ac + sd) / two;
        r.beta_c = (ac - sd) / two;
        return r;
    }
    r.alpha_c = r.alpha.to_complex(bits);
    r.beta_c = r.beta.to_complex(bits);

    auto swap_roots = [&] {
        std::swap(r.alpha, r.beta);
        std::swap(r.alpha_c, r.beta_c);
    };
    if (k >= 2 && r.alpha.is_rational() && r.beta.is_rational()) {
        // order by q-adic valuation (infinite valuation for 0 sorts last)
        auto val = [&](const Rat &x) {
            if (x == 0)
                return 1000000L;
            long v = 0;
            Rat y = x;
            while (y.get_num() % q == 0) {
                y = y / q;
                ++v;
            }
            while (y.get_den() % q == 0) {
                y = y * q;
                --v;
            }
            return v;
        };
        if (val(r.alpha.to_rational()) > val(r.beta.to_rational()))
            swap_roots();
    } else {
        // weight-1 style tie-break: alpha has argument in [0, pi)
        const double eps = 1e-40;
        double aa = r.alpha_c.arg(), ba = r.beta_c.arg();
        if (aa < -eps)
            aa += 2 * M_PI;
        if (ba < -eps)
            ba += 2 * M_PI;
        bool a_in = aa < M_PI - eps && aa > -eps;
        bool b_in = ba < M_PI - eps && ba > -eps;
        if (!a_in && b_in)
            swap_roots();
        else if (a_in == b_in) {
            // exact lexicographic tie-break
            Cyc x = r.alpha.promoted(lcm_ll(r.alpha.order(), r.beta.order()));
            Cyc y = r.beta.promoted(lcm_ll(r.alpha.order(), r.beta.order()));
            if (y.coeffs() > x.coeffs())
                swap_roots();
        }
    }
    return r;
}

LocalFactor rankin_local_factor(const HeckeRoots &roots_g, const HeckeRoots &roots_f)
{
    if (!roots_g.exact || !roots_f.exact)
        throw std::domain_error("rankin_local_factor: roots must be exact");
    if (roots_g.q != roots_f.q)
        throw std::domain_error("rankin_local_factor: mismatched primes");
    LocalFactor L;
    L.q = roots_g.q;
    for (const Cyc &rho : {roots_g.alpha, roots_g.beta})
        for (const Cyc &sigma : {roots_f.alpha, roots_f.beta})
            L.absorb_root((rho * sigma).simplified());
    return L;
}

EulerRatio euler_ratio_bad(const EulerRatioInput &in, long s)
{
    Rat qs; // q^{-s}, set per prime
    Cyc num(1);
    for (long q : prime_divisors(in.N_E)) {
        qs = rat_pow(Rat(q), -s);
        auto it = in.aq_f.find(q);
        if (it == in.aq_f.end())
            throw std::domain_error("euler_ratio_bad: missing a_q(f) at a bad prime");
        const Cyc &aqf = it->second;
        if (in.D_K % q == 0) {
            auto ig = in.aq_g.find(q);
            if (ig == in.aq_g.end())
                throw std::domain_error("euler_ratio_bad: missing a_q(g) at a ramified prime");
            num = num * (Cyc(1) - aqf * ig->second * Cyc(qs));
        } else {
            Cyc t = Cyc(1) - aqf * Cyc(qs);
            num = num * t * t;
        }
    }
    for (long q : prime_divisors(in.D_K * in.c * in.c)) {
        if (in.N_E % q == 0)
            continue;
        qs = rat_pow(Rat(q), -s);
        auto ig = in.aq_g.find(q);
        auto it = in.aq_f.find(q);
        if (ig == in.aq_g.end() || it == in.aq_f.end())
            throw std::domain_error("euler_ratio_bad: missing coefficient at a prime of D_K c^2");
        num = num * (Cyc(1) - it->second * ig->second * Cyc(qs) + Cyc(rat_pow(Rat(q), 1 - 2 * s)));
    }
    Cyc den(1);
    for (long q : prime_divisors(in.N)) {
        qs = rat_pow(Rat(q), -s);
        auto fa = in.alpha_f.find(q);
        auto ga = in.alpha_g.find(q);
        if (fa == in.alpha_f.end() || ga == in.alpha_g.end())
            throw std::domain_error("euler_ratio_bad: missing U_q eigenvalue at q | N");
        den = den * (Cyc(1) - fa->second * ga->second * Cyc(qs));
    }

    EulerRatio out;
    if (den.is_zero()) {
        out.denominator_vanished = true;
        out.nonvanishing = false;
        out.value = Cyc(0);
        out.numeric = BigComplex(BigFloat::default_precision);
        return out;
    }
    out.value = (num / den).simplified();
    out.numeric = out.value.to_complex();
    out.nonvanishing = !out.value.is_zero();
    return out;
}

BigComplex dirichlet_partial_sum(const std::vector<Cyc> &coeffs, double s, long terms,
                                 long precision_bits)
{
    if (s <= 1.0)
        throw std::domain_error("dirichlet_partial_sum: s must lie in the convergence region");
    BigComplex acc(precision_bits);
    long nmax = std::min<long>(terms, static_cast<long>(coeffs.size()) - 1);
    BigFloat sf = BigFloat::from_double(s, precision_bits);
    for (long n = 1; n <= nmax; ++n) {
        if (coeffs[static_cast<std::size_t>(n)].is_zero())
            continue;
        BigFloat nf = BigFloat::from_long(n, precision_bits);
        BigFloat npow(precision_bits);
        mpfr_pow(npow.raw(), nf.raw(), sf.raw(), MPFR_RNDN);
        BigFloat inv = BigFloat::from_long(1, precision_bits) / npow;
        BigComplex term = coeffs[static_cast<std::size_t>(n)].to_complex(precision_bits);
        acc = acc + BigComplex(term.real() * inv, term.imag() * inv);
    }
    return acc;
}

} // namespace starkrankin
