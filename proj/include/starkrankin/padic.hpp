#ifndef STARKRANKIN_PADIC_HPP
#define STARKRANKIN_PADIC_HPP

#include <string>
#include <utility>
#include <vector>

#include "starkrankin/elliptic.hpp"
#include "starkrankin/numutil.hpp"
#include "starkrankin/quadfield.hpp"

namespace starkrankin {

// Element of Q_p for odd p, stored as p^val * unit with the unit known
// modulo p^rel (absolute precision val + rel).  rel == 0 encodes the tracked
// zero O(p^val).  Arithmetic is exact on approximants and propagates
// precision pessimistically:
//   add: absolute precisions meet (min), then renormalize;
//   mul/div: valuations add/subtract, relative precisions meet.
struct PadicNumber {
    long p = 0;
    long val = 0;
    long rel = 0;
    Int unit; // in [0, p^rel), not divisible by p when rel > 0

    PadicNumber() = default;

    static PadicNumber zero(long p, long abs_prec);
    static PadicNumber from_rational(const Rat &x, long p, long abs_prec);
    // value p^v * mant known modulo p^{abs_prec}; normalizes mant
    static PadicNumber from_approx(long p, long v, const Int &mant, long abs_prec);

    long abs_prec() const { return val + rel; }
    bool is_zero() const { return rel == 0; }

    PadicNumber operator+(const PadicNumber &o) const;
    PadicNumber operator-(const PadicNumber &o) const;
    PadicNumber operator-() const;
    PadicNumber operator*(const PadicNumber &o) const;
    PadicNumber operator/(const PadicNumber &o) const;
    PadicNumber inverse() const;
    PadicNumber pow(long n) const;

    // reduce to absolute precision N (no-op if already coarser)
    PadicNumber truncated(long N) const;
    // equal as far as the common precision can tell
    bool congruent(const PadicNumber &o) const;

    // base-p digits of the unit part (length rel)
    std::vector<long> digit_vector() const;
    std::string to_string() const;
};

// Teichmueller representative of the unit part of x (a (p-1)-st root of unity).
PadicNumber teichmuller(const PadicNumber &x);

// Iwasawa branch: log(p) = 0, log vanishes on roots of unity, and on
// principal units it is the usual alternating series.
PadicNumber padic_log(const PadicNumber &x);

// Exponential series; requires val(x) >= 1 (convergent region for odd p).
PadicNumber padic_exp(const PadicNumber &x);

// Both square roots, Hensel-lifted; first entry has its leading digit in
// [1, (p-1)/2].  Requires even valuation and a quadratic-residue unit.
std::pair<PadicNumber, PadicNumber> padic_sqrt(const PadicNumber &x);

// The image of sqrt(-D_K) in Q_p under the embedding determined by the
// distinguished prime above p: the Hensel root of X^2 + D_K whose residue is
// +b mod p for the splitting data (p, b, *); conjugate = true gives the
// other root.
PadicNumber embed_sqrt_minus_d(const ImagQuadField &K, long p, long abs_prec,
                               bool conjugate = false);

// x + y sqrt(-D) pushed into Q_p through embed_sqrt_minus_d.
PadicNumber embed_K(const ImagQuadField &K, long p, const QuadRat &g, long abs_prec,
                    bool conjugate = false);

// log_p of a generator of the distinguished prime above p, in the class
// number one case (the elliptic-unit logarithm for trivial ring class psi).
PadicNumber elliptic_unit_log(const ImagQuadField &K, long p, long abs_prec);

// Formal group of E at p on the parameter t = -x/y: the w-series, the
// expansions x = X(t)/t^2, y = -X(t)/t^3, the logarithm log_F (normalized
// log_F'(0) = 1) and its inverse exp_F, all to t-degree tprec.
struct FormalGroupContext {
    WeierstrassModel E;
    long p;
    long m;                 // |E(F_p)|
    long tprec;
    std::vector<Rat> xser;  // X(t) = t^3 / w(t), constant term 1
    std::vector<Rat> logf;  // logf[1] = 1
    std::vector<Rat> expf;

    FormalGroupContext(const WeierstrassModel &curve, long prime, long t_precision);
};

// log_F evaluated at a p-adic parameter with val(t) >= 1.
PadicNumber formal_log_series(const FormalGroupContext &ctx, const PadicNumber &t);

struct FormalPoint {
    bool infinity = true;
    PadicNumber t, x, y;
};

// exp_F at X with val(X) >= 1, returned with its (x, y) coordinate lifts.
FormalPoint formal_exp(const FormalGroupContext &ctx, const PadicNumber &X);

struct FormalLogResult {
    PadicNumber value;
    bool torsion = false; // m P = O: the log is exactly 0
};

// log_{E,p}(P) = log_F(t(mP)) / m for a rational point P of good reduction.
FormalLogResult formal_log(const FormalGroupContext &ctx, const CurvePoint<Rat> &P,
                           long abs_prec);

// X = sqrt(log_u / lambda * integral); returns exp_F(X) and exp_F(-X).
std::pair<FormalPoint, FormalPoint> recover_point(const FormalGroupContext &ctx,
                                                  const PadicNumber &integral_value,
                                                  const PadicNumber &log_u,
                                                  const PadicNumber &lambda);

} // namespace starkrankin

#endif
