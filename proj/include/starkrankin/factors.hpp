#ifndef STARKRANKIN_FACTORS_HPP
#define STARKRANKIN_FACTORS_HPP

#include "starkrankin/elliptic.hpp"
#include "starkrankin/expr.hpp"
#include "starkrankin/heckechar.hpp"
#include "starkrankin/lfun.hpp"
#include "starkrankin/padic.hpp"

namespace starkrankin {

// A curve/field/character/prime configuration with all derived constants the
// interpolation-factor algebra needs.
struct FactorScenario {
    WeierstrassModel E;
    long N_E;
    ImagQuadField K;
    long c;
    RingClassCharacter psi;
    long p;
    FactoredIdeal heegner;
    long N;   // lcm(D_K c^2, N_E)
    long h_K, g_K, h_c, w_c;
    long a_p;
    Cyc psi_pbar;     // psi of the conjugate prime above p
    Cyc psi2_pbar;    // psi^2 of the conjugate prime above p
    Cyc psi_heegner;  // psi of the cyclic ideal of norm N_E
    PrimeSplitting sp;

    static FactorScenario build(const WeierstrassModel &curve, long conductor,
                                const ImagQuadField &field, long ring_conductor,
                                const RingClassCharacter &character, long prime);
};

// ---- Euler-type factors, as exact rational functions in the indeterminate
// A (the Frobenius value at the distinguished prime), with B = p^{2l+2}/A
// substituted for the conjugate value, and a_p symbolic as "ap".

ExprP e_HR(long l, long p);   // vars: A, ap
ExprP e_K(long l, long p);    // var:  A
ExprP e_BDP(long l, long p);  // vars: A, ap

struct IdentityCheck {
    long l = 0;
    bool pass = false;
};
struct IdentityReport {
    bool all_pass = true;
    std::vector<IdentityCheck> checks;
};

// e_HR(l) * e_K(l) = e_BDP(l) as rational functions in A, ap.
IdentityReport verify_euler_identity(long l_min, long l_max, long p, unsigned long seed = 1);

// ---- Archimedean/volume factors.  Each one is a single monomial
// coeff * pi^a * sqrt(D_K)^b * W^c, where W stands for the Frobenius-type
// value at the cyclic level ideal; sqrt(D_K)^2 reduces into the coefficient.
struct FormalMonomial {
    Rat coeff;
    long pi_exp = 0;
    int sqrt_exp = 0;  // 0 or 1 after reduction
    long W_exp = 0;
    long disc = 0;     // the D_K whose square root the symbol denotes

    static FormalMonomial make(const Rat &coeff, long pi_exp, long sqrt_exp, long W_exp,
                               long disc);
    FormalMonomial operator*(const FormalMonomial &o) const;
    FormalMonomial operator/(const FormalMonomial &o) const;
    bool operator==(const FormalMonomial &o) const;
    std::string to_string() const;
};

// level/class constants entering the archimedean factors
struct LevelData {
    long D_K = 0;
    long N_E = 0;
    long c = 1;
    long N = 0;    // lcm(D_K c^2, N_E)
    long h_c = 1;  // class number of the order of conductor c
    long w_c = 2;  // roots of unity in that order
};

LevelData level_data(const FactorScenario &s);

FormalMonomial f_HR(long l, const LevelData &L);   // l >= 0
FormalMonomial f_K(long l, const LevelData &L);    // l >= 0
FormalMonomial f_BDP(long l, const LevelData &L);  // l >= 0
FormalMonomial f_Pet(long l, const LevelData &L);  // l >= 0
// closed form, valid down to l = -1
FormalMonomial f_infty_closed(long l, const LevelData &L);
// the quotient f_HR f_K / (f_BDP f_Pet), l >= 0
FormalMonomial f_infty_assembled(long l, const LevelData &L);

// assembled quotient equals the closed form (and has pi-degree 0) for each l;
// pet_scale is a test hook multiplying f_Pet (pass 2 to force a failure).
IdentityReport verify_assembly(long l_min, long l_max, const LevelData &L,
                               const Rat &pet_scale = Rat(1));

// ---- Exact scalar fudges and the lambda formulas.

// Thrown when an interpolation factor degenerates to zero, making the
// lambda constant undefined.
struct DegenerateFactorError : std::runtime_error {
    explicit DegenerateFactorError(const std::string &what) : std::runtime_error(what) {}
};

struct KatzFudge {
    Cyc value;
    bool degenerate = false; // the (1 - chi(conj prime)) factor vanished
};

// 1/2 (1/p - 1) for the trivial character, else
// -1/(24c) (1 - chi(conj prime)) (1 - chi(conj prime)/p).
KatzFudge katz_fudge(const RingClassCharacter &chi, long p);

// (1 - psi(conj prime) a_p / p + psi^2(conj prime) / p)^2
Cyc bdp_fudge(const Cyc &psi_pbar, const Cyc &psi2_pbar, long a_p, long p);
Cyc bdp_fudge(const FactorScenario &s);

struct LambdaResult {
    Cyc value;
    Cyc euler_ratio; // ratio of bad Euler factors at s = 1
    Cyc f_infty;     // closed form at l = -1 with W resolved to psi of the level ideal
    Cyc bdp;
    Cyc katz;        // Katz fudge of psi^{-2}
};

LambdaResult lambda_general(const FactorScenario &s);
// requires D_K = N_E and c = 1
Cyc lambda_theorem(const FactorScenario &s);
// requires trivial psi and prime N_E: |E(F_p)|^2 / (p (p-1) h_K)
Cyc lambda_christmas(const FactorScenario &s);

// exact cyclotomic scalar into Q_p (requires order(v) | p - 1)
PadicNumber embed_cyclotomic(const Cyc &v, long p, long abs_prec);

struct PredictedIntegral {
    PadicNumber value;
    bool torsion = false;
};

// lambda * log_{E,p}(P)^2 / log_u
PredictedIntegral predicted_integral(const FormalGroupContext &ctx, const CurvePoint<Rat> &P,
                                     const PadicNumber &log_u, const Cyc &lambda,
                                     long abs_prec);

} // namespace starkrankin

#endif
