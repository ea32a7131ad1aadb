#ifndef STARKRANKIN_ELLIPTIC_HPP
#define STARKRANKIN_ELLIPTIC_HPP

#include <stdexcept>
#include <vector>

#include "starkrankin/numutil.hpp"

namespace starkrankin {

// Integral Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
// with the standard derived quantities.
struct WeierstrassModel {
    Int a1, a2, a3, a4, a6;
    Int b2, b4, b6, b8, c4, c6, disc;

    WeierstrassModel(const Int &A1, const Int &A2, const Int &A3, const Int &A4, const Int &A6);
    static WeierstrassModel from_list(const std::vector<long> &a);
};

// Checks that the primes of the stated conductor all divide the discriminant
// and that the model is minimal at every prime of the discriminant
// (rejects v_q(disc) >= 12 with v_q(c4) >= 4).
void validate_conductor(const WeierstrassModel &E, long N_E);

// Prime-field element with arithmetic mod a fixed prime.
struct Fp {
    long v = 0;
    long p = 0;

    Fp() = default;
    Fp(const Int &value, long prime);
    Fp(long value, long prime);

    bool is_zero() const { return v == 0; }
    Fp operator+(const Fp &o) const;
    Fp operator-(const Fp &o) const;
    Fp operator-() const;
    Fp operator*(const Fp &o) const;
    Fp operator/(const Fp &o) const;
    bool operator==(const Fp &o) const { return v == o.v && p == o.p; }
    bool operator!=(const Fp &o) const { return !(*this == o); }
};

// Affine point or the point at infinity, coordinates in a declared ring R.
template <class R>
struct CurvePoint {
    bool infinity = true;
    R x{}, y{};

    static CurvePoint at_infinity() { return CurvePoint{}; }
    static CurvePoint affine(const R &x, const R &y) { return CurvePoint{false, x, y}; }
    bool operator==(const CurvePoint &o) const
    {
        if (infinity || o.infinity)
            return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
};

// The model's coefficients pushed into a coordinate ring R.
template <class R>
struct CurveOver {
    R a1, a2, a3, a4, a6;
};

CurveOver<Rat> curve_over_q(const WeierstrassModel &E);
CurveOver<Fp> curve_over_fp(const WeierstrassModel &E, long p);

inline bool ring_is_zero(const Rat &x) { return x == 0; }
inline bool ring_is_zero(const Fp &x) { return x.v == 0; }

template <class R>
bool on_curve(const CurveOver<R> &E, const CurvePoint<R> &P)
{
    if (P.infinity)
        return true;
    R lhs = P.y * P.y + E.a1 * P.x * P.y + E.a3 * P.y;
    R rhs = P.x * P.x * P.x + E.a2 * P.x * P.x + E.a4 * P.x + E.a6;
    return lhs == rhs;
}

template <class R>
CurvePoint<R> point_negate(const CurveOver<R> &E, const CurvePoint<R> &P)
{
    if (P.infinity)
        return P;
    return CurvePoint<R>::affine(P.x, -P.y - E.a1 * P.x - E.a3);
}

template <class R>
CurvePoint<R> point_add(const CurveOver<R> &E, const CurvePoint<R> &P, const CurvePoint<R> &Q)
{
    if (!on_curve(E, P) || !on_curve(E, Q))
        throw std::domain_error("point_add: point not on the curve");
    if (P.infinity)
        return Q;
    if (Q.infinity)
        return P;
    R lam;
    if (P.x == Q.x) {
        R vanish = P.y + Q.y + E.a1 * Q.x + E.a3;
        if (ring_is_zero(vanish) || P.y != Q.y)
            return CurvePoint<R>::at_infinity();
        R xx = P.x * P.x;
        R num = xx + xx + xx + E.a2 * P.x + E.a2 * P.x + E.a4 - E.a1 * P.y;
        R den = P.y + P.y + E.a1 * P.x + E.a3;
        lam = num / den;
    } else {
        lam = (Q.y - P.y) / (Q.x - P.x);
    }
    R nu = P.y - lam * P.x;
    R x3 = lam * lam + E.a1 * lam - E.a2 - P.x - Q.x;
    R y3 = -(lam + E.a1) * x3 - nu - E.a3;
    return CurvePoint<R>::affine(x3, y3);
}

template <class R>
CurvePoint<R> point_mul(const CurveOver<R> &E, const CurvePoint<R> &P, long n)
{
    if (!on_curve(E, P))
        throw std::domain_error("point_mul: point not on the curve");
    CurvePoint<R> base = P;
    if (n < 0) {
        base = point_negate(E, base);
        n = -n;
    }
    CurvePoint<R> acc = CurvePoint<R>::at_infinity();
    while (n > 0) {
        if (n & 1)
            acc = point_add(E, acc, base);
        n >>= 1;
        if (n)
            base = point_add(E, base, base);
    }
    return acc;
}

// |E(F_p)| by direct enumeration over x; p must be good and p <= 1e5.
long count_points(const WeierstrassModel &E, long p);

// a_p = p + 1 - |E(F_p)| with the Hasse bound asserted.
long trace_ap(const WeierstrassModel &E, long p);

// For q | disc of a minimal model: +1 split multiplicative, -1 nonsplit
// multiplicative, 0 additive.
int bad_prime_aq(const WeierstrassModel &E, long q);

// Some F_p-point of the curve (smallest x with a solution); used by sampling tests.
CurvePoint<Fp> some_fp_point(const WeierstrassModel &E, long p, long x_start = 0);

} // namespace starkrankin

#endif
