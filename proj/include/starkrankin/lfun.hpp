#ifndef STARKRANKIN_LFUN_HPP
#define STARKRANKIN_LFUN_HPP

#include <map>

#include "starkrankin/bigcomplex.hpp"
#include "starkrankin/cyclotomic.hpp"

namespace starkrankin {

// Exact square root of a rational number inside a cyclotomic field
// (quadratic irrationalities always embed in some Q(zeta_m)).
Cyc cyclotomic_sqrt(const Rat &r);

// Polynomial 1 + c_1 X + ... + c_d X^d in X = q^{-s} attached to a prime q.
struct LocalFactor {
    long q = 0;
    std::vector<Cyc> coeffs{Cyc(1)};

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    // multiply by (1 - r X)
    void absorb_root(const Cyc &r);
    // exact evaluation at X = x
    Cyc eval(const Rat &x) const;
    // Dirichlet coefficients b_{q^j}, j = 0..jmax, of the inverse of this factor
    std::vector<Cyc> inverse_coefficients(long jmax) const;
};

// Roots of X^2 - a_q X + chi(q) q^{k-1}, labeled: bad primes give (a_q, 0);
// weight >= 2 orders rational roots by q-adic valuation; weight 1 picks alpha
// as the root whose complex image has argument in [0, pi), exact ties by
// lexicographic coordinates.
struct HeckeRoots {
    long q = 0;
    long weight = 1;
    bool bad = false;
    bool exact = false;
    Cyc alpha, beta;
    BigComplex alpha_c, beta_c;
};

HeckeRoots hecke_roots(const Cyc &a_q, const Cyc &chi_q, long q, long k, bool bad_prime);

// prod over root pairs (rho, sigma) of (1 - rho sigma X): the local factor of
// the convolution of two eigenforms at a common good prime.
LocalFactor rankin_local_factor(const HeckeRoots &roots_g, const HeckeRoots &roots_f);

// Data for the ratio of bad local factors between the convolution L-series
// and the twisted L-series it is compared with.
struct EulerRatioInput {
    long N_E = 1;
    long D_K = 1;
    long c = 1;
    long N = 1;                  // common level; every q | N_E D_K c^2 divides N
    std::map<long, Cyc> aq_f;    // a_q(f) for q | N_E
    std::map<long, Cyc> aq_g;    // a_q(g) for q | D_K c^2
    std::map<long, Cyc> alpha_f; // chosen U_q eigenvalue of the level-N form from f
    std::map<long, Cyc> alpha_g; // chosen U_q eigenvalue of the level-N form from g
};

struct EulerRatio {
    Cyc value;
    BigComplex numeric;
    bool nonvanishing = false;
    bool denominator_vanished = false;
};

// Ratio of bad Euler factors at s: numerator has the factor
// (1 - a_q(f) a_q(g) q^{-s}) at q | (N_E, D_K), (1 - a_q(f) q^{-s})^2 at
// q || N_E coprime to D_K, and (1 - a_q(f)a_q(g)q^{-s} + q^{1-2s}) at
// q | D_K coprime to N_E; denominator is prod_{q | N} (1 - alpha_f alpha_g q^{-s}).
EulerRatio euler_ratio_bad(const EulerRatioInput &in, long s = 1);

// Truncated Dirichlet series sum_{n >= 1} a_n n^{-s} (real s > 1 region).
BigComplex dirichlet_partial_sum(const std::vector<Cyc> &coeffs, double s, long terms,
                                 long precision_bits = BigFloat::default_precision);

} // namespace starkrankin

#endif
