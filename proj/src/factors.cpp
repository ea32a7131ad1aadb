#include "starkrankin/factors.hpp"

#include <algorithm>
#include <sstream>

namespace starkrankin {

namespace {

long floor_div2(long e)
{
    return e >= 0 ? e / 2 : -((-e + 1) / 2);
}

long omega_gcd(long a, long b)
{
    return static_cast<long>(prime_divisors(gcd_ll(a, b)).size());
}

ExprP pconst(long p, long e)
{
    return Expr::constant(rat_pow(Rat(p), e));
}

} // namespace

// ---------------------------------------------------------------- scenarios

FactorScenario FactorScenario::build(const WeierstrassModel &curve, long conductor,
                                     const ImagQuadField &field, long ring_conductor,
                                     const RingClassCharacter &character, long prime)
{
    if (field.D_K < 7)
        throw std::domain_error("FactorScenario: discriminant below the supported range "
                                "(need D_K >= 7)");
    if (ring_conductor < 1)
        throw std::domain_error("FactorScenario: ring conductor must be positive");
    if (character.field().D_K != field.D_K || character.conductor() != ring_conductor)
        throw std::domain_error("FactorScenario: character does not live on the given order");
    validate_conductor(curve, conductor);
    if (gcd_ll(ring_conductor, conductor) != 1)
        throw std::domain_error("FactorScenario: ring conductor must be coprime to the level");

    auto cyclic = heegner_ideal(field, conductor);
    if (!cyclic)
        throw std::domain_error("FactorScenario: no cyclic ideal of norm N_E (Heegner "
                                "hypothesis fails)");

    if (prime < 3 || !is_prime(prime))
        throw std::domain_error("FactorScenario: p must be an odd prime");
    if (conductor % prime == 0 || ring_conductor % prime == 0 || field.D_K % prime == 0)
        throw std::domain_error("FactorScenario: p must be coprime to the level, the ring "
                                "conductor and the discriminant");
    PrimeSplitting sp = prime_splitting(field, ring_conductor, prime);
    if (sp.kind != SplitKind::split)
        throw std::domain_error("FactorScenario: p must split in K");

    FactorScenario s{curve,
                     conductor,
                     field,
                     ring_conductor,
                     character,
                     prime,
                     *cyclic,
                     0,
                     0,
                     0,
                     0,
                     0,
                     0,
                     Cyc(0),
                     Cyc(0),
                     Cyc(0),
                     sp};
    s.N = lcm_ll(field.D_K * ring_conductor * ring_conductor, conductor);
    ClassGroup cl_max(Int(-field.D_K));
    s.h_K = cl_max.h();
    s.g_K = cl_max.genus_number();
    s.h_c = character.class_group().h();
    s.w_c = ring_conductor == 1 ? field.w_K : 2;
    s.a_p = trace_ap(curve, prime);
    FrobeniusData fr = frobenius_data(character, prime);
    s.psi_pbar = fr.beta;
    s.psi2_pbar = (fr.beta * fr.beta).simplified();
    s.psi_heegner = character.evaluate(*cyclic);
    return s;
}

LevelData level_data(const FactorScenario &s)
{
    return {s.K.D_K, s.N_E, s.c, s.N, s.h_c, s.w_c};
}

// ------------------------------------------------------- Euler-type factors

ExprP e_HR(long l, long p)
{
    if (l < -1)
        throw std::domain_error("e_HR: l must be at least -1");
    ExprP A = Expr::variable("A");
    ExprP ap = Expr::variable("ap");
    ExprP one = Expr::constant(1);
    // x = psi(conj prime) p^{-(l+2)} = p^l / A
    ExprP x = pconst(p, l) / A;
    ExprP big = Expr::power(one - ap * x + Expr::constant(p) * x * x, 2);
    ExprP Ainv2 = Expr::power(A, -2);
    ExprP e0 = one - pconst(p, 2 * l + 2) * Ainv2;
    ExprP e1 = one - pconst(p, 2 * l + 1) * Ainv2;
    return big / (e0 * e1);
}

ExprP e_K(long l, long p)
{
    if (l < -1)
        throw std::domain_error("e_K: l must be at least -1");
    ExprP A = Expr::variable("A");
    ExprP one = Expr::constant(1);
    ExprP B = pconst(p, 2 * l + 2) / A;
    ExprP left = one - pconst(p, 2 * l + 2) * Expr::power(A, -2);
    ExprP right = one - B * B * pconst(p, -(2 * l + 3));
    return left * right;
}

ExprP e_BDP(long l, long p)
{
    if (l < -1)
        throw std::domain_error("e_BDP: l must be at least -1");
    ExprP A = Expr::variable("A");
    ExprP ap = Expr::variable("ap");
    ExprP one = Expr::constant(1);
    ExprP B = pconst(p, 2 * l + 2) / A;
    return Expr::power(one - ap * B * pconst(p, -(l + 2)) + B * B * pconst(p, -(2 * l + 3)), 2);
}

IdentityReport verify_euler_identity(long l_min, long l_max, long p, unsigned long seed)
{
    if (l_min > l_max)
        throw std::domain_error("verify_euler_identity: empty range");
    if (p < 3 || !is_prime(p))
        throw std::domain_error("verify_euler_identity: p must be an odd prime");
    IdentityReport rep;
    for (long l = l_min; l <= l_max; ++l) {
        ExprP lhs = e_HR(l, p) * e_K(l, p);
        bool ok = verify_rational_identity(lhs, e_BDP(l, p), {"A", "ap"}, 16,
                                           seed + static_cast<unsigned long>(l - l_min));
        rep.checks.push_back({l, ok});
        rep.all_pass = rep.all_pass && ok;
    }
    return rep;
}

// ------------------------------------------------- archimedean monomials

FormalMonomial FormalMonomial::make(const Rat &coeff, long pi_exp, long sqrt_exp, long W_exp,
                                    long disc)
{
    if (disc <= 0)
        throw std::domain_error("FormalMonomial: disc must be positive");
    FormalMonomial m;
    long k = floor_div2(sqrt_exp);
    m.coeff = coeff * rat_pow(Rat(disc), k);
    m.pi_exp = pi_exp;
    m.sqrt_exp = static_cast<int>(sqrt_exp - 2 * k);
    m.W_exp = W_exp;
    m.disc = disc;
    return m;
}

FormalMonomial FormalMonomial::operator*(const FormalMonomial &o) const
{
    if (disc != o.disc)
        throw std::domain_error("FormalMonomial: mixed discriminants");
    return make(coeff * o.coeff, pi_exp + o.pi_exp, sqrt_exp + o.sqrt_exp, W_exp + o.W_exp,
                disc);
}

FormalMonomial FormalMonomial::operator/(const FormalMonomial &o) const
{
    if (disc != o.disc)
        throw std::domain_error("FormalMonomial: mixed discriminants");
    if (o.coeff == 0)
        throw std::domain_error("FormalMonomial: division by zero");
    return make(coeff / o.coeff, pi_exp - o.pi_exp, sqrt_exp - o.sqrt_exp, W_exp - o.W_exp,
                disc);
}

bool FormalMonomial::operator==(const FormalMonomial &o) const
{
    return disc == o.disc && coeff == o.coeff && pi_exp == o.pi_exp &&
           sqrt_exp == o.sqrt_exp && W_exp == o.W_exp;
}

std::string FormalMonomial::to_string() const
{
    std::ostringstream os;
    os << coeff;
    if (pi_exp != 0)
        os << " * pi^" << pi_exp;
    if (sqrt_exp != 0)
        os << " * sqrt(" << disc << ")";
    if (W_exp != 0)
        os << " * W^" << W_exp;
    return os.str();
}

namespace {

void check_level(long l, const LevelData &L, const char *who)
{
    if (l < 0)
        throw std::domain_error(std::string(who) + ": l must be non-negative");
    if (L.D_K <= 0 || L.N_E <= 0 || L.c <= 0 || L.N <= 0 || L.h_c <= 0 || L.w_c <= 0)
        throw std::domain_error(std::string(who) + ": incomplete level data");
}

} // namespace

FormalMonomial f_HR(long l, const LevelData &L)
{
    check_level(l, L, "f_HR");
    Rat sign = l % 2 ? Rat(-1) : Rat(1);
    Rat coeff = sign * Rat(factorial(l) * factorial(l + 1) * L.N) /
                Rat(int_pow(Int(2), static_cast<unsigned long>(4 * l + 5)));
    return FormalMonomial::make(coeff, -(2 * l + 3), -1, 0, L.D_K);
}

FormalMonomial f_K(long l, const LevelData &L)
{
    check_level(l, L, "f_K");
    Rat coeff(int_pow(Int(2), static_cast<unsigned long>(2 * l + 1)) * factorial(2 * l + 2));
    return FormalMonomial::make(coeff, 2 * l + 1, -(2 * l + 1), 0, L.D_K);
}

FormalMonomial f_BDP(long l, const LevelData &L)
{
    check_level(l, L, "f_BDP");
    long sg = omega_gcd(L.D_K, L.N_E);
    Rat coeff = rat_pow(make_rat(2, L.c), 2 * l + 1) * Rat(factorial(l) * factorial(l + 1)) *
                Rat(int_pow(Int(2), static_cast<unsigned long>(sg))) *
                rat_pow(Rat(-L.N), l + 1);
    return FormalMonomial::make(coeff, 2 * l + 1, -(2 * l + 1), -1, L.D_K);
}

FormalMonomial f_Pet(long l, const LevelData &L)
{
    check_level(l, L, "f_Pet");
    Rat coeff = psi_index(L.N) / psi_index(L.D_K * L.c * L.c) * Rat(factorial(2 * l + 2)) /
                Rat(int_pow(Int(2), static_cast<unsigned long>(4 * l + 4))) *
                make_rat(L.h_c * L.c, L.w_c);
    return FormalMonomial::make(coeff, -(2 * l + 3), 1, 0, L.D_K);
}

FormalMonomial f_infty_closed(long l, const LevelData &L)
{
    check_level(std::max(l, 0L), L, "f_infty_closed");
    if (l < -1)
        throw std::domain_error("f_infty_closed: l must be at least -1");
    long sg = omega_gcd(L.D_K, L.N_E);
    Rat coeff = -psi_index(L.D_K * L.c * L.c) / psi_index(L.N) * Rat(L.N) /
                Rat(int_pow(Int(2), static_cast<unsigned long>(sg))) * make_rat(1, L.h_c * L.D_K) *
                rat_pow(Rat(L.c), 2 * l) / rat_pow(Rat(L.N), l + 1);
    return FormalMonomial::make(coeff, 0, 0, 1, L.D_K);
}

FormalMonomial f_infty_assembled(long l, const LevelData &L)
{
    return f_HR(l, L) * f_K(l, L) / (f_BDP(l, L) * f_Pet(l, L));
}

IdentityReport verify_assembly(long l_min, long l_max, const LevelData &L, const Rat &pet_scale)
{
    if (l_min > l_max || l_min < 0)
        throw std::domain_error("verify_assembly: range must lie in l >= 0");
    if (L.w_c != 2)
        throw std::domain_error("verify_assembly: only orders with two roots of unity are "
                                "supported (w_c = 2)");
    IdentityReport rep;
    for (long l = l_min; l <= l_max; ++l) {
        FormalMonomial pet = f_Pet(l, L);
        pet.coeff *= pet_scale;
        FormalMonomial q = f_HR(l, L) * f_K(l, L) / (f_BDP(l, L) * pet);
        bool ok = q == f_infty_closed(l, L) && q.pi_exp == 0 && q.sqrt_exp == 0;
        rep.checks.push_back({l, ok});
        rep.all_pass = rep.all_pass && ok;
    }
    return rep;
}

// --------------------------------------------------- fudges and lambda

KatzFudge katz_fudge(const RingClassCharacter &chi, long p)
{
    if (p < 3 || !is_prime(p))
        throw std::domain_error("katz_fudge: p must be an odd prime");
    KatzFudge out;
    if (chi.is_trivial()) {
        out.value = Cyc(make_rat(1 - p, 2 * p)); // (1/p - 1) / 2
        return out;
    }
    Cyc v = frobenius_data(chi, p).beta;
    if (v == Cyc(1)) {
        out.degenerate = true;
        out.value = Cyc(0);
        return out;
    }
    Cyc scale(make_rat(-1, 24 * chi.conductor()));
    out.value = (scale * (Cyc(1) - v) * (Cyc(1) - v * Cyc(make_rat(1, p)))).simplified();
    return out;
}

Cyc bdp_fudge(const Cyc &psi_pbar, const Cyc &psi2_pbar, long a_p, long p)
{
    Cyc inner = Cyc(1) - make_rat(a_p, p) * psi_pbar + make_rat(1, p) * psi2_pbar;
    return inner.pow(2).simplified();
}

Cyc bdp_fudge(const FactorScenario &s)
{
    return bdp_fudge(s.psi_pbar, s.psi2_pbar, s.a_p, s.p);
}

LambdaResult lambda_general(const FactorScenario &s)
{
    LambdaResult r;

    // ratio of bad Euler factors at s = 1, corrected by the conductor primes
    EulerRatioInput in;
    in.N_E = s.N_E;
    in.D_K = s.K.D_K;
    in.c = s.c;
    in.N = s.N;
    long dcc = s.K.D_K * s.c * s.c;
    for (long q : prime_divisors(s.N_E)) {
        Cyc af(bad_prime_aq(s.E, q));
        in.aq_f[q] = af;
        in.alpha_f[q] = af;
        if (dcc % q == 0) {
            in.aq_g[q] = theta_coefficient(s.psi, q);
            in.alpha_g[q] = in.aq_g[q];
        } else {
            HeckeRoots rg = hecke_roots(theta_coefficient(s.psi, q),
                                        Cyc(kronecker_symbol(-s.K.D_K, q)), q, 1, false);
            if (!rg.exact)
                throw std::runtime_error("lambda_general: inexact theta eigenvalue at q | N_E");
            in.alpha_g[q] = rg.alpha;
        }
    }
    for (long q : prime_divisors(dcc)) {
        if (s.N_E % q == 0)
            continue;
        if (s.c % q == 0 && s.K.D_K % q != 0) {
            in.aq_g[q] = Cyc(0);
            in.alpha_g[q] = Cyc(0);
        } else {
            in.aq_g[q] = theta_coefficient(s.psi, q);
            in.alpha_g[q] = in.aq_g[q];
        }
        Cyc af(trace_ap(s.E, q));
        in.aq_f[q] = af;
        HeckeRoots rf = hecke_roots(af, Cyc(1), q, 2, false);
        if (!rf.exact)
            throw std::runtime_error("lambda_general: inexact weight-2 eigenvalue at q | D_K c^2");
        in.alpha_f[q] = rf.alpha;
    }
    EulerRatio er = euler_ratio_bad(in, 1);
    if (er.denominator_vanished)
        throw DegenerateFactorError("lambda_general: vanishing bad Euler denominator");
    Cyc ec(1);
    for (long q : prime_divisors(s.c))
        ec = ec * Cyc(make_rat(q - kronecker_symbol(-s.K.D_K, q), q - 1));
    r.euler_ratio = (er.value / ec).simplified();

    // archimedean constant at l = -1, with W resolved to psi of the level ideal
    FormalMonomial m = f_infty_closed(-1, level_data(s));
    if (m.pi_exp != 0 || m.sqrt_exp != 0)
        throw std::logic_error("lambda_general: transcendental residue in the closed form");
    r.f_infty = (Cyc(m.coeff) * s.psi_heegner.pow(m.W_exp)).simplified();

    r.bdp = bdp_fudge(s);
    KatzFudge kz = katz_fudge(s.psi.pow(2).conjugate_character(), s.p);
    if (kz.degenerate || kz.value.is_zero())
        throw DegenerateFactorError("lambda_general: degenerate Katz factor (psi^{-2} is 1 at "
                                    "the conjugate prime above p)");
    r.katz = kz.value;

    r.value = (r.euler_ratio * r.f_infty * r.bdp / r.katz).simplified();
    return r;
}

Cyc lambda_theorem(const FactorScenario &s)
{
    if (s.K.D_K != s.N_E || s.c != 1)
        throw std::domain_error("lambda_theorem: requires level equal to the discriminant and "
                                "trivial ring conductor");
    Cyc num = (Cyc(Rat(s.p)) - Rat(s.a_p) * s.psi_pbar + s.psi2_pbar).pow(2) *
              Cyc(make_rat(1, s.p));
    Cyc lam0;
    if (s.psi.pow(2).is_trivial()) {
        lam0 = Cyc(make_rat(1, s.p - 1));
    } else {
        Cyc ipb = s.psi2_pbar.inverse();
        lam0 = Cyc(12) / (Cyc(Rat(s.p)) - Rat(s.p + 1) * ipb + ipb * ipb);
    }
    return (num * lam0 * Cyc(make_rat(1, s.h_K * s.g_K))).simplified();
}

Cyc lambda_christmas(const FactorScenario &s)
{
    if (!s.psi.is_trivial())
        throw std::domain_error("lambda_christmas: requires the trivial character");
    if (!is_prime(s.N_E) || s.c != 1 || s.K.D_K != s.N_E)
        throw std::domain_error("lambda_christmas: requires prime level equal to the "
                                "discriminant and trivial ring conductor");
    Int m(count_points(s.E, s.p));
    return Cyc(make_rat(m * m, Int(s.p) * (s.p - 1) * s.h_K));
}

// ------------------------------------------------------- p-adic interface

PadicNumber embed_cyclotomic(const Cyc &v, long p, long abs_prec)
{
    if (v.is_rational())
        return PadicNumber::from_rational(v.to_rational(), p, abs_prec);
    long m = v.order();
    if ((p - 1) % m != 0)
        throw std::domain_error("embed_cyclotomic: root-of-unity order does not divide p - 1");
    long g = primitive_root(p);
    long base = powmod(g, (p - 1) / m, p);
    PadicNumber z = teichmuller(PadicNumber::from_approx(p, 0, Int(base), abs_prec));
    PadicNumber acc = PadicNumber::zero(p, abs_prec);
    PadicNumber zk = PadicNumber::from_rational(Rat(1), p, abs_prec);
    for (std::size_t k = 0; k < v.coeffs().size(); ++k) {
        if (v.coeffs()[k] != 0)
            acc = acc + PadicNumber::from_rational(v.coeffs()[k], p, abs_prec) * zk;
        zk = zk * z;
    }
    return acc;
}

PredictedIntegral predicted_integral(const FormalGroupContext &ctx, const CurvePoint<Rat> &P,
                                     const PadicNumber &log_u, const Cyc &lambda, long abs_prec)
{
    PredictedIntegral out;
    FormalLogResult lg = formal_log(ctx, P, abs_prec);
    if (lg.torsion) {
        out.value = PadicNumber::zero(ctx.p, abs_prec);
        out.torsion = true;
        return out;
    }
    if (log_u.is_zero())
        throw std::domain_error("predicted_integral: vanishing unit logarithm");
    PadicNumber lam = embed_cyclotomic(lambda, ctx.p, abs_prec);
    if (lam.is_zero())
        throw DegenerateFactorError("predicted_integral: lambda vanishes p-adically");
    out.value = lam * lg.value * lg.value / log_u;
    return out;
}

} // namespace starkrankin
