#include "starkrankin/elliptic.hpp"

namespace starkrankin {

WeierstrassModel::WeierstrassModel(const Int &A1, const Int &A2, const Int &A3, const Int &A4,
                                   const Int &A6)
    : a1(A1), a2(A2), a3(A3), a4(A4), a6(A6)
{
    b2 = a1 * a1 + 4 * a2;
    b4 = 2 * a4 + a1 * a3;
    b6 = a3 * a3 + 4 * a6;
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    c4 = b2 * b2 - 24 * b4;
    c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
    disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
    if (disc == 0)
        throw std::domain_error("WeierstrassModel: singular model (discriminant zero)");
}

WeierstrassModel WeierstrassModel::from_list(const std::vector<long> &a)
{
    if (a.size() != 5)
        throw std::domain_error("WeierstrassModel: expected [a1,a2,a3,a4,a6]");
    return WeierstrassModel(Int(a[0]), Int(a[1]), Int(a[2]), Int(a[3]), Int(a[4]));
}

void validate_conductor(const WeierstrassModel &E, long N_E)
{
    if (N_E <= 0)
        throw std::domain_error("validate_conductor: conductor must be positive");
    for (long q : prime_divisors(N_E))
        if (E.disc % q != 0)
            throw std::domain_error("validate_conductor: conductor prime does not divide the "
                                    "discriminant");
    Int d = abs(E.disc);
    if (!d.fits_slong_p())
        throw std::runtime_error("validate_conductor: discriminant too large to factor");
    for (auto [q, e] : factorize(d.get_si())) {
        if (e >= 12) {
            long vc4 = 0;
            Int c = E.c4;
            while (c != 0 && c % q == 0) {
                c /= q;
                ++vc4;
            }
            if (E.c4 == 0 || vc4 >= 4)
                throw std::domain_error("validate_conductor: model is not minimal");
        }
    }
}

Fp::Fp(const Int &value, long prime) : p(prime)
{
    if (prime <= 0)
        throw std::domain_error("Fp: modulus must be positive");
    Int r = value % prime;
    if (r < 0)
        r += prime;
    v = r.get_si();
}

Fp::Fp(long value, long prime) : Fp(Int(value), prime) {}

Fp Fp::operator+(const Fp &o) const { return Fp(Int(v) + o.v, p); }
Fp Fp::operator-(const Fp &o) const { return Fp(Int(v) - o.v, p); }
Fp Fp::operator-() const { return Fp(Int(-v), p); }
Fp Fp::operator*(const Fp &o) const { return Fp(Int(v) * o.v, p); }

Fp Fp::operator/(const Fp &o) const
{
    if (o.v == 0)
        throw std::domain_error("Fp: division by zero");
    return *this * Fp(powmod(o.v, p - 2, p), p);
}

CurveOver<Rat> curve_over_q(const WeierstrassModel &E)
{
    return {Rat(E.a1), Rat(E.a2), Rat(E.a3), Rat(E.a4), Rat(E.a6)};
}

CurveOver<Fp> curve_over_fp(const WeierstrassModel &E, long p)
{
    return {Fp(E.a1, p), Fp(E.a2, p), Fp(E.a3, p), Fp(E.a4, p), Fp(E.a6, p)};
}

namespace {

void check_counting_prime(const WeierstrassModel &E, long p)
{
    if (p < 2 || !is_prime(p))
        throw std::domain_error("count_points: p must be prime");
    if (E.disc % p == 0)
        throw std::domain_error("count_points: p divides the discriminant");
    if (p > 100000)
        throw std::runtime_error("count_points: p exceeds the enumeration cap");
}

// value of the right-hand cubic and the linear y-coefficient at x, mod p
struct FiberData {
    long rhs;  // x^3 + a2 x^2 + a4 x + a6
    long lin;  // a1 x + a3
};

FiberData fiber_at(const CurveOver<Fp> &C, long x, long p)
{
    Fp xf(x, p);
    Fp rhs = xf * xf * xf + C.a2 * xf * xf + C.a4 * xf + C.a6;
    Fp lin = C.a1 * xf + C.a3;
    return {rhs.v, lin.v};
}

} // namespace

long count_points(const WeierstrassModel &E, long p)
{
    check_counting_prime(E, p);
    auto C = curve_over_fp(E, p);
    long count = 1; // point at infinity
    if (p == 2) {
        for (long x = 0; x < 2; ++x)
            for (long y = 0; y < 2; ++y) {
                Fp xf(x, 2), yf(y, 2);
                if (yf * yf + C.a1 * xf * yf + C.a3 * yf ==
                    xf * xf * xf + C.a2 * xf * xf + C.a4 * xf + C.a6)
                    ++count;
            }
        return count;
    }
    // complete the square: solutions in y correspond to roots of
    // (2y + lin)^2 = lin^2 + 4 rhs, so the fiber size is 1 + kronecker(d, p)
    for (long x = 0; x < p; ++x) {
        auto f = fiber_at(C, x, p);
        long d = Int(Int(f.lin) * f.lin + Int(4) * f.rhs).get_si() % p;
        count += 1 + kronecker_symbol(d, p);
    }
    return count;
}

long trace_ap(const WeierstrassModel &E, long p)
{
    long a = p + 1 - count_points(E, p);
    if (Int(a) * a > 4 * Int(p))
        throw std::logic_error("trace_ap: Hasse bound violated");
    return a;
}

int bad_prime_aq(const WeierstrassModel &E, long q)
{
    if (q < 2 || !is_prime(q))
        throw std::domain_error("bad_prime_aq: q must be prime");
    if (E.disc % q != 0)
        throw std::domain_error("bad_prime_aq: q is a prime of good reduction");
    if (q > 100000)
        throw std::runtime_error("bad_prime_aq: q exceeds the enumeration cap");
    if (E.c4 % q == 0)
        return 0; // additive
    // multiplicative: locate the node over F_q and test whether the tangent
    // cone y^2 + a1 xy - (3 x0 + a2) x^2 splits over F_q
    auto C = curve_over_fp(E, q);
    for (long x = 0; x < q; ++x)
        for (long y = 0; y < q; ++y) {
            Fp xf(x, q), yf(y, q);
            bool on = yf * yf + C.a1 * xf * yf + C.a3 * yf ==
                      xf * xf * xf + C.a2 * xf * xf + C.a4 * xf + C.a6;
            if (!on)
                continue;
            Fp dy = yf + yf + C.a1 * xf + C.a3;
            Fp dx = C.a1 * yf - (Fp(3, q) * xf * xf + Fp(2, q) * C.a2 * xf + C.a4);
            if (!dy.is_zero() || !dx.is_zero())
                continue;
            Fp d = C.a1 * C.a1 + Fp(4, q) * (Fp(3, q) * xf + C.a2);
            if (d.is_zero())
                throw std::logic_error("bad_prime_aq: cusp found where a node was expected");
            return kronecker_symbol(d.v, q) == 1 ? 1 : -1;
        }
    throw std::logic_error("bad_prime_aq: no singular point found on a bad fiber");
}

CurvePoint<Fp> some_fp_point(const WeierstrassModel &E, long p, long x_start)
{
    if (p < 3 || !is_prime(p))
        throw std::domain_error("some_fp_point: p must be an odd prime");
    auto C = curve_over_fp(E, p);
    for (long i = 0; i < p; ++i) {
        long x = (x_start + i) % p;
        auto f = fiber_at(C, x, p);
        long d = Int(Int(f.lin) * f.lin + Int(4) * f.rhs).get_si() % p;
        if (d < 0)
            d += p;
        if (kronecker_symbol(d, p) == -1)
            continue;
        long s = d == 0 ? 0 : sqrt_mod_prime(d, p);
        // y = (s - lin) / 2
        Fp y = (Fp(s, p) - Fp(f.lin, p)) / Fp(2, p);
        return CurvePoint<Fp>::affine(Fp(x, p), y);
    }
    throw std::logic_error("some_fp_point: no affine point found");
}

} // namespace starkrankin
